#include <doctest.h>

#include "cli.hpp"

#include "bellcone/cone_io.hpp"
#include "bellcone/fixtures.hpp"
#include "bellcone/lifting.hpp"
#include "bellcone/tensor_io.hpp"

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

using namespace bellcone;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string golden(const std::string& name) {
  std::ifstream in(std::string(BELLCONE_GOLDEN_DIR) + "/" + name);
  REQUIRE(in);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::string golden_path(const std::string& name) { return std::string(BELLCONE_GOLDEN_DIR) + "/" + name; }

struct TempDir {
  fs::path path;
  TempDir() : path(fs::temp_directory_path() / ("bellcone-cli-" + std::to_string(::getpid()))) { fs::create_directories(path); }
  ~TempDir() { fs::remove_all(path); }
  std::string file(const std::string& name) const { return (path / name).string(); }
};

}  // namespace

TEST_CASE("fixtures and dualize match golden files") {
  CHECK(run({"fixtures", "pr"}).out == golden("pr.tensor"));
  CHECK(run({"fixtures", "gyni"}).out == golden("gyni.tensor"));
  const auto r = run({"dualize", golden_path("pr.tensor")});
  CHECK(r.code == 0);
  CHECK(r.out == golden("chsh.tensor"));
  CHECK(run({"dualize", golden_path("chsh.tensor")}).out == golden("pr.tensor"));
  CHECK(run({"mk", "-n", "2"}).out == golden("chsh.tensor"));
  CHECK(run({"mk", "-n", "3"}).out == golden("mk3.tensor"));
}

TEST_CASE("counts") {
  const auto r = run({"counts", "-n", "3", "-k", "3", "-l", "2"});
  CHECK(r.code == 0);
  CHECK(r.out == "vertices=512 facets=216 duality=false\n");
  CHECK(run({"counts", "-n", "2"}).out == "vertices=16 facets=16 duality=true\n");
  const auto j = nlohmann::json::parse(run({"--json", "counts", "-n", "2"}).out);
  CHECK(j["duality"] == true);
}

TEST_CASE("scenario and enumerate") {
  CHECK(run({"scenario", "ns-cone", "-n", "2"}).out == golden("ns2.cone"));
  const auto r = run({"enumerate", "--scenario", "ns", "-n", "2"});
  CHECK(r.code == 0);
  CHECK(r.out == golden("ns2-rays.cone"));
  CHECK(r.err == "orbits=2 sizes=16,8\n");
  // The same rays from a cone file.
  CHECK(run({"enumerate", golden_path("ns2.cone")}).out == golden("ns2-rays.cone"));
  const auto facets = run({"enumerate", "--scenario", "bell", "-n", "2"});
  CHECK(facets.code == 0);
  CHECK(std::get<ConeHRep>(parse_cone_string(facets.out)).size() == 24);

  const auto guarded = run({"enumerate", "--scenario", "ns", "-n", "3"});
  CHECK(guarded.code == cli::kExitError);
  CHECK(guarded.err.find("--allow-long") != std::string::npos);

  const auto j = nlohmann::json::parse(run({"--json", "enumerate", "--scenario", "ns", "-n", "2"}).out);
  CHECK(j["cone"]["vectors"].size() == 24);
  CHECK(j["orbits"].size() == 2);
}

TEST_CASE("classify and dual") {
  CHECK(run({"classify", golden_path("ns2-rays.cone")}).out == golden("ns2-orbits.txt"));
  const auto dual = run({"dual", golden_path("ns2.cone")});
  CHECK(dual.code == 0);
  CHECK(std::get<ConeVRep>(parse_cone_string(dual.out)).size() == 16);
}

TEST_CASE("membership, extreme, pair and probabilities") {
  const auto bell = run({"membership", "--scenario", "bell", golden_path("pr.tensor")});
  CHECK(bell.code == 0);
  CHECK(bell.out == "member=false\ncertificate=-1 0 -1 0 2 0 -1 0 1\n");
  CHECK(run({"membership", "--scenario", "ns", golden_path("pr.tensor")}).out == "member=true\n");
  CHECK(run({"membership", "--cone", golden_path("ns2.cone"), golden_path("pr.tensor")}).out == "member=true\n");
  CHECK(run({"extreme", golden_path("gyni.tensor")}).out == "extreme=true tight_rank=26 rank=27\n");
  CHECK(run({"pair", golden_path("chsh.tensor"), golden_path("pr.tensor")}).out == "value=3\n");
  const auto probs = run({"probabilities", golden_path("pr.tensor")});
  CHECK(std::count(probs.out.begin(), probs.out.end(), '\n') == 16);
  CHECK(probs.out.rfind("s=-1,-1 t=-1,-1 p=1/2\n", 0) == 0);
}

TEST_CASE("lifting commands") {
  TempDir tmp;
  const auto lifted = run({"lift", "ineq", "--iota", "swap(*)", "--kappa", "flip(3)", golden_path("mk3.tensor")});
  CHECK(lifted.code == 0);
  CHECK(std::get<FunctionalTensor>(parse_tensor_string(lifted.out)) == mermin_klyshko(4));

  const auto fail = run({"lift", "box", "--iota", "swap(*)", "--kappa", "flip(*)", golden_path("pr.tensor")});
  CHECK(fail.code == cli::kExitViolation);
  CHECK(fail.out.rfind("failed=noeigen\ncertificate=", 0) == 0);

  // x = 2 * noise, y = PR, iota = identity.
  write_text_file(tmp.file("x.tensor"), "bellcone-tensor v1; n=2; variance=upper\n0,0 2\n");
  const auto box = run({"-o", tmp.file("z.tensor"), "lift", "box", "--iota", "id", tmp.file("x.tensor"), golden_path("pr.tensor")});
  CHECK(box.code == 0);
  const auto z = read_correlation_file(tmp.file("z.tensor"));
  CHECK(check_extension(z));
  const auto rec = run({"lift", "recognize", "--iota", "id", tmp.file("z.tensor")});
  CHECK(rec.out.rfind("recognized=true\n", 0) == 0);
  const auto gyni = run({"lift", "recognize", "--iota", "swap(*)", "--kappa", "flip(2)", golden_path("gyni.tensor")});
  CHECK(gyni.out.rfind("recognized=false failed=", 0) == 0);
  CHECK(run({"lift", "recognize", "--search", "--two", golden_path("gyni.tensor")}).out == "matches=0\n");
}

TEST_CASE("ww-test") {
  const auto r = run({"ww-test", golden_path("pr.tensor")});
  CHECK(r.out == "local=false value=2 threshold=1\n");
  const auto j = nlohmann::json::parse(run({"--json", "ww-test", "--inequality", golden_path("pr.tensor")}).out);
  CHECK(j["local"] == false);
  CHECK(j["inequality"]["variance"] == "lower");
  CHECK(run({"ww-test", golden_path("gyni.tensor")}).code == cli::kExitError);
}

TEST_CASE("emitted files re-parse to equal values") {
  TempDir tmp;
  for (const std::string name : {"pr", "gyni", "chsh", "sliwa17", "sliwa17-box", "isotropic:7/3", "all-ones:3", "positivity:2", "mk:4"}) {
    const auto path = tmp.file("f.tensor");
    REQUIRE(run({"-o", path, "fixtures", name}).code == 0);
    const auto text = run({"fixtures", name}).out;
    CHECK(std::visit([](const auto& t) { return format_tensor(t); }, read_tensor_file(path)) == text);
  }
}

TEST_CASE("usage and input errors exit with code 2") {
  CHECK(run({}).code == cli::kExitError);
  CHECK(run({"frobnicate"}).code == cli::kExitError);
  CHECK(run({"counts"}).code == cli::kExitError);
  CHECK(run({"fixtures", "nonsense"}).code == cli::kExitError);
  CHECK(run({"dualize", "/nonexistent.tensor"}).code == cli::kExitError);
  TempDir tmp;
  write_text_file(tmp.file("bad.tensor"), "bellcone-tensor v1; n=2; variance=upper\n0,0 1/0\n");
  const auto bad = run({"dualize", tmp.file("bad.tensor")});
  CHECK(bad.code == cli::kExitError);
  CHECK(bad.err.rfind("error: ", 0) == 0);
  CHECK(run({"lift", "ineq", "--iota", "swap(9)", "--kappa", "id", golden_path("chsh.tensor")}).code == cli::kExitError);
  CHECK(run({"--help"}).code == 0);
}
