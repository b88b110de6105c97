#include "cli.hpp"

#include "bellcone/cone_io.hpp"
#include "bellcone/fixtures.hpp"
#include "bellcone/full_correlation.hpp"
#include "bellcone/lifting.hpp"
#include "bellcone/scenario.hpp"
#include "bellcone/symmetry.hpp"
#include "bellcone/tensor_io.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

namespace bellcone::cli {

namespace {

using nlohmann::json;

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

json to_json(const Rational& r) { return r.to_string(); }

json to_json(const Vector& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(x.to_string());
  return a;
}

template <Variance V>
json to_json(const Tensor<V>& t) {
  json entries = json::object();
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (!t[i].is_zero()) entries[SettingWord::from_index(t.parties(), i).to_string()] = t[i].to_string();
  }
  return {{"n", t.parties()}, {"variance", V == Variance::upper ? "upper" : "lower"}, {"entries", entries}};
}

json to_json(const Matrix& m) {
  json a = json::array();
  for (const auto& v : m) a.push_back(to_json(v));
  return a;
}

json to_json(const ConeVRep& c) { return {{"dim", c.dim()}, {"rep", "V"}, {"vectors", to_json(c.generators())}}; }
json to_json(const ConeHRep& c) { return {{"dim", c.dim()}, {"rep", "H"}, {"vectors", to_json(c.functionals())}}; }

std::string text(const CorrelationTensor& t) { return format_tensor(t); }
std::string text(const FunctionalTensor& t) { return format_tensor(t); }

std::string yes_no(bool b) { return b ? "true" : "false"; }

int parties_from_dim(std::size_t dim) {
  std::size_t size = 1;
  for (int n = 0; n <= kMaxParties; ++n) {
    if (size == dim) return n;
    size *= 3;
  }
  return -1;
}

struct Context {
  std::ostream& out;
  std::ostream& err;
  bool json_output = false;
  std::string output_path;

  /// Main result: the -o file if given, stdout otherwise.
  void emit(const std::string& body) const {
    if (output_path.empty()) {
      out << body;
    } else {
      write_text_file(output_path, body);
    }
  }
  void emit(const json& j) const { emit(j.dump(2) + "\n"); }
};

template <class F>
auto visit_tensor(const AnyTensor& t, F&& f) {
  return std::visit(std::forward<F>(f), t);
}

ConeHRep require_hrep(const AnyCone& c, const std::string& what) {
  if (const auto* h = std::get_if<ConeHRep>(&c)) return *h;
  throw UsageError(what + " needs an H-representation");
}

std::string vector_text(const Vector& v) { return to_string(v); }

// Involutions act on the first `n` parties.
Involution involution(const std::string& spec, int n) { return Involution::parse(spec, n); }

void guard_long(bool allow_long, std::size_t dim) {
  if (dim >= 27 && !allow_long) {
    throw UsageError("enumeration in dimension " + std::to_string(dim) + " is long-running; pass --allow-long");
  }
}

DoubleDescriptionOptions progress_options(std::ostream& err, bool enabled) {
  DoubleDescriptionOptions options;
  if (enabled) {
    options.progress = [&err](std::size_t inserted, std::size_t total, std::size_t rays) {
      err << "inserted " << inserted << "/" << total << " rays " << rays << '\n' << std::flush;
    };
  }
  return options;
}

std::string orbit_summary(const std::vector<Orbit>& orbits) {
  std::string sizes;
  for (std::size_t i = 0; i < orbits.size(); ++i) {
    if (i) sizes += ',';
    sizes += std::to_string(orbits[i].size);
  }
  return "orbits=" + std::to_string(orbits.size()) + " sizes=" + sizes + "\n";
}

json orbits_json(const std::vector<Orbit>& orbits) {
  json a = json::array();
  for (const auto& o : orbits) a.push_back({{"size", o.size}, {"representative", to_json(o.representative)}});
  return a;
}

CorrelationTensor parse_fixture_box(const std::string& name) {
  const auto colon = name.find(':');
  const auto head = name.substr(0, colon);
  const auto arg = colon == std::string::npos ? std::string() : name.substr(colon + 1);
  if (head == "gyni") return gyni_box();
  if (head == "pr") return pr_box();
  if (head == "sliwa17-box") return sliwa17_box();
  if (head == "isotropic") {
    if (arg.empty()) throw UsageError("isotropic needs a parameter, e.g. isotropic:2");
    return isotropic_box(Rational::parse(arg));
  }
  if (head == "all-ones") {
    if (arg.empty()) throw UsageError("all-ones needs a party count, e.g. all-ones:2");
    return all_ones_box(std::stoi(arg));
  }
  throw UsageError("unknown fixture '" + name + "'");
}

AnyTensor fixture(const std::string& name) {
  if (name == "chsh") return chsh_functional();
  if (name == "sliwa17") return sliwa17_functional();
  if (name.rfind("positivity:", 0) == 0) return positivity_functional(std::stoi(name.substr(11)));
  if (name.rfind("mk:", 0) == 0) return mermin_klyshko(std::stoi(name.substr(3)));
  return parse_fixture_box(name);
}

void emit_tensor(const Context& ctx, const AnyTensor& t) {
  visit_tensor(t, [&](const auto& x) {
    if (ctx.json_output) {
      ctx.emit(to_json(x));
    } else {
      ctx.emit(text(x));
    }
  });
}

template <class C>
void emit_cone(const Context& ctx, const C& c) {
  if (ctx.json_output) {
    ctx.emit(to_json(c));
  } else {
    ctx.emit(format_cone(c));
  }
}

std::string recognition_text(const Recognition& r) {
  if (!r.recognized) return "recognized=false failed=" + r.failed_condition + "\n";
  std::string s = "recognized=true\n";
  if (r.w) s += "# w\n" + text(*r.w);
  if (r.x) s += "# x\n" + text(*r.x);
  if (r.y) s += "# y\n" + text(*r.y);
  return s;
}

json recognition_json(const Recognition& r) {
  json j{{"recognized", r.recognized}};
  if (!r.recognized) j["failed"] = r.failed_condition;
  if (r.w) j["w"] = to_json(*r.w);
  if (r.x) j["x"] = to_json(*r.x);
  if (r.y) j["y"] = to_json(*r.y);
  return j;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact cone computations for two-setting two-outcome Bell scenarios", "bellcone"};
  app.require_subcommand(1);
  app.fallthrough();

  Context ctx{out, err, false, {}};
  app.add_flag("--json", ctx.json_output, "Emit a single JSON document");
  app.add_option("-o,--output", ctx.output_path, "Write the main result to this file");

  std::function<int()> action;

  // scenario
  auto* scenario = app.add_subcommand("scenario", "Emit B_n (V-rep), NS_n (H-rep) or the one-party square cone");
  std::string scenario_kind;
  int scenario_n = 1;
  std::string square_rep = "V";
  scenario->add_option("kind", scenario_kind)->required()->check(CLI::IsMember({"bell-cone", "ns-cone", "square"}));
  scenario->add_option("-n", scenario_n, "Party count")->check(CLI::Range(1, kMaxParties));
  scenario->add_option("--rep", square_rep, "Representation of the square cone")->check(CLI::IsMember({"V", "H"}));
  scenario->callback([&] {
    action = [&] {
      if (scenario_kind == "bell-cone") {
        emit_cone(ctx, bell_cone(scenario_n));
      } else if (scenario_kind == "ns-cone") {
        emit_cone(ctx, ns_cone(scenario_n));
      } else {
        const auto sq = square_cone();
        if (square_rep == "V") {
          emit_cone(ctx, sq.vrep);
        } else {
          emit_cone(ctx, sq.hrep);
        }
      }
      return kExitOk;
    };
  });

  // dualize
  auto* dualize_cmd = app.add_subcommand("dualize", "Lower a box to its functional or raise a functional to its box");
  std::string dualize_file;
  dualize_cmd->add_option("tensor", dualize_file)->required();
  dualize_cmd->callback([&] {
    action = [&] {
      const auto t = read_tensor_file(dualize_file);
      visit_tensor(t, [&](const auto& x) { emit_tensor(ctx, AnyTensor(dualize(x))); });
      return kExitOk;
    };
  });

  // pair
  auto* pair_cmd = app.add_subcommand("pair", "Evaluate a functional on a box");
  std::string pair_f, pair_x;
  pair_cmd->add_option("functional", pair_f)->required();
  pair_cmd->add_option("box", pair_x)->required();
  pair_cmd->callback([&] {
    action = [&] {
      const auto value = pair(read_functional_file(pair_f), read_correlation_file(pair_x));
      if (ctx.json_output) {
        ctx.emit(json{{"value", to_json(value)}});
      } else {
        ctx.emit("value=" + value.to_string() + "\n");
      }
      return kExitOk;
    };
  });

  // probabilities
  auto* prob_cmd = app.add_subcommand("probabilities", "Outcome probabilities P(t|s) of a box");
  std::string prob_file;
  prob_cmd->add_option("box", prob_file)->required();
  prob_cmd->callback([&] {
    action = [&] {
      const auto rows = probabilities(read_correlation_file(prob_file));
      json j = json::array();
      std::ostringstream s;
      for (const auto& row : rows) {
        std::string outcomes;
        for (std::size_t k = 0; k < row.outcomes.size(); ++k) {
          if (k) outcomes += ',';
          outcomes += row.outcomes[k] > 0 ? "+1" : "-1";
        }
        const auto settings = SettingWord(row.settings).to_string();
        s << "s=" << settings << " t=" << outcomes << " p=" << row.probability.to_string() << '\n';
        j.push_back({{"settings", settings}, {"outcomes", outcomes}, {"p", to_json(row.probability)}});
      }
      if (ctx.json_output) {
        ctx.emit(j);
      } else {
        ctx.emit(s.str());
      }
      return kExitOk;
    };
  });

  // membership
  auto* member_cmd = app.add_subcommand("membership", "Decide membership of a box in B_n, NS_n or a cone file");
  std::string member_scenario, member_cone, member_file;
  auto* member_scenario_opt =
      member_cmd->add_option("--scenario", member_scenario)->check(CLI::IsMember({"bell", "ns"}));
  member_cmd->add_option("--cone", member_cone, "Cone file")->excludes(member_scenario_opt);
  member_cmd->add_option("tensor", member_file)->required();
  member_cmd->callback([&] {
    action = [&] {
      const auto t = read_tensor_file(member_file);
      const Vector v = visit_tensor(t, [](const auto& x) { return x.entries(); });
      const int n = visit_tensor(t, [](const auto& x) { return x.parties(); });
      Membership m;
      if (!member_cone.empty()) {
        m = std::visit([&](const auto& c) { return membership(c, v); }, read_cone_file(member_cone));
      } else if (member_scenario == "bell") {
        m = membership(bell_cone(n), v);
      } else if (member_scenario == "ns") {
        m = membership(ns_cone(n), v);
      } else {
        throw UsageError("membership needs --scenario or --cone");
      }
      if (ctx.json_output) {
        json j{{"member", m.member}};
        if (m.certificate) j["certificate"] = to_json(*m.certificate);
        if (m.coefficients) j["coefficients"] = to_json(*m.coefficients);
        ctx.emit(j);
      } else {
        std::string s = "member=" + yes_no(m.member) + "\n";
        if (m.certificate) s += "certificate=" + vector_text(*m.certificate) + "\n";
        if (m.coefficients) s += "coefficients=" + vector_text(*m.coefficients) + "\n";
        ctx.emit(s);
      }
      return kExitOk;
    };
  });

  // extreme
  auto* extreme_cmd = app.add_subcommand("extreme", "Decide whether a box spans an extreme ray of NS_n or an H-rep cone");
  std::string extreme_cone, extreme_file;
  extreme_cmd->add_option("--cone", extreme_cone, "H-rep cone file (default: NS_n)");
  extreme_cmd->add_option("tensor", extreme_file)->required();
  extreme_cmd->callback([&] {
    action = [&] {
      const auto t = read_tensor_file(extreme_file);
      const Vector v = visit_tensor(t, [](const auto& x) { return x.entries(); });
      const int n = visit_tensor(t, [](const auto& x) { return x.parties(); });
      const auto cone = extreme_cone.empty() ? ns_cone(n) : require_hrep(read_cone_file(extreme_cone), "extreme");
      const bool extreme = is_extreme_ray(cone, v);
      const auto tight = tight_rank(cone, v);
      const auto rank = constraint_rank(cone);
      if (ctx.json_output) {
        ctx.emit(json{{"extreme", extreme}, {"tight_rank", tight}, {"rank", rank}});
      } else {
        ctx.emit("extreme=" + yes_no(extreme) + " tight_rank=" + std::to_string(tight) + " rank=" + std::to_string(rank) + "\n");
      }
      return kExitOk;
    };
  });

  // enumerate
  auto* enum_cmd = app.add_subcommand("enumerate", "Double description: rays of an H-rep or facets of a V-rep");
  std::string enum_scenario, enum_file;
  int enum_n = 0;
  bool allow_long = false;
  bool no_orbits = false;
  auto* enum_scenario_opt = enum_cmd->add_option("--scenario", enum_scenario)->check(CLI::IsMember({"bell", "ns"}));
  enum_cmd->add_option("-n", enum_n, "Party count")->check(CLI::Range(1, kMaxParties));
  enum_cmd->add_option("cone", enum_file, "Cone file")->excludes(enum_scenario_opt);
  enum_cmd->add_flag("--allow-long", allow_long, "Permit enumerations in dimension 27 and above");
  enum_cmd->add_flag("--no-orbits", no_orbits, "Skip the orbit summary");
  enum_cmd->callback([&] {
    action = [&] {
      AnyCone input;
      if (!enum_file.empty()) {
        input = read_cone_file(enum_file);
      } else if (!enum_scenario.empty()) {
        if (enum_n < 1) throw UsageError("enumerate --scenario needs -n");
        if (enum_scenario == "ns") {
          input = ns_cone(enum_n);
        } else {
          input = bell_cone(enum_n);
        }
      } else {
        throw UsageError("enumerate needs --scenario or a cone file");
      }
      const std::size_t dim = std::visit([](const auto& c) { return c.dim(); }, input);
      guard_long(allow_long, dim);
      const auto options = progress_options(err, dim >= 27);
      AnyCone result = std::visit(
          [&](const auto& c) -> AnyCone {
            if constexpr (std::is_same_v<std::decay_t<decltype(c)>, ConeHRep>) {
              return extreme_rays(c, options);
            } else {
              return facets(c, options);
            }
          },
          input);
      const Matrix& vectors = std::visit(
          [](const auto& c) -> const Matrix& {
            if constexpr (std::is_same_v<std::decay_t<decltype(c)>, ConeHRep>) {
              return c.functionals();
            } else {
              return c.generators();
            }
          },
          result);
      std::optional<std::vector<Orbit>> orbits;
      const int n = parties_from_dim(dim);
      if (!no_orbits && n >= 1) orbits = classify_orbits(vectors, SymmetryGroup::full(n));
      if (ctx.json_output) {
        json j{{"cone", std::visit([](const auto& c) { return to_json(c); }, result)}};
        if (orbits) j["orbits"] = orbits_json(*orbits);
        ctx.emit(j);
      } else {
        ctx.emit(std::visit([](const auto& c) { return format_cone(c); }, result));
        if (orbits) (ctx.output_path.empty() ? err : out) << orbit_summary(*orbits);
      }
      return kExitOk;
    };
  });

  // dual
  auto* dual_cmd = app.add_subcommand("dual", "Dual cone: swaps the roles of generators and functionals");
  std::string dual_file;
  dual_cmd->add_option("cone", dual_file)->required();
  dual_cmd->callback([&] {
    action = [&] {
      std::visit(
          [&](const auto& c) {
            if constexpr (std::is_same_v<std::decay_t<decltype(c)>, ConeHRep>) {
              emit_cone(ctx, dual_hrep_to_vrep(c));
            } else {
              emit_cone(ctx, dual_vrep_to_hrep(c));
            }
          },
          read_cone_file(dual_file));
      return kExitOk;
    };
  });

  // classify
  auto* classify_cmd = app.add_subcommand("classify", "Partition the vectors of a cone file into symmetry orbits");
  std::string classify_file;
  int classify_n = 0;
  bool classify_restricted = false;
  classify_cmd->add_option("cone", classify_file)->required();
  classify_cmd->add_option("-n", classify_n, "Party count (default: inferred from the dimension)");
  classify_cmd->add_flag("--no-party-permutations", classify_restricted, "Use only setting swaps and outcome flips");
  classify_cmd->callback([&] {
    action = [&] {
      const auto cone = read_cone_file(classify_file);
      const auto dim = std::visit([](const auto& c) { return c.dim(); }, cone);
      const int n = classify_n > 0 ? classify_n : parties_from_dim(dim);
      if (n < 1 || tensor_size(n) != dim) throw UsageError("cone dimension is not 3^n");
      const bool is_h = std::holds_alternative<ConeHRep>(cone);
      const Matrix& vectors = is_h ? std::get<ConeHRep>(cone).functionals() : std::get<ConeVRep>(cone).generators();
      const auto group = classify_restricted ? SymmetryGroup::without_party_permutations(n) : SymmetryGroup::full(n);
      const auto orbits = classify_orbits(vectors, group);
      if (ctx.json_output) {
        ctx.emit(json{{"group_order", group.order()}, {"orbits", orbits_json(orbits)}});
        return kExitOk;
      }
      std::string s = "group_order=" + std::to_string(group.order()) + " " + orbit_summary(orbits);
      for (std::size_t i = 0; i < orbits.size(); ++i) {
        s += "# orbit " + std::to_string(i + 1) + " size=" + std::to_string(orbits[i].size) +
             " stabilizer=" + std::to_string(group.order() / orbits[i].full_size) + "\n";
        s += is_h ? text(FunctionalTensor(n, orbits[i].representative)) : text(CorrelationTensor(n, orbits[i].representative));
      }
      ctx.emit(s);
      return kExitOk;
    };
  });

  // lift
  auto* lift_cmd = app.add_subcommand("lift", "Extend boxes or Bell inequalities by one party");
  lift_cmd->require_subcommand(1);
  std::string iota_spec, kappa_spec;
  std::vector<std::string> lift_files;
  bool search = false, search_two = false, search_full = false;

  auto* lift_box = lift_cmd->add_subcommand("box", "extend_box (x y --iota) or extend_box2 (w --iota --kappa)");
  lift_box->add_option("--iota", iota_spec)->required();
  lift_box->add_option("--kappa", kappa_spec);
  lift_box->add_option("tensors", lift_files)->required()->expected(1, 2);
  lift_box->callback([&] {
    action = [&] {
      CorrelationTensor z;
      if (kappa_spec.empty()) {
        if (lift_files.size() != 2) throw UsageError("lift box without --kappa needs the files x and y");
        const auto x = read_correlation_file(lift_files[0]);
        z = extend_box(x, read_correlation_file(lift_files[1]), involution(iota_spec, x.parties()));
      } else {
        if (lift_files.size() != 1) throw UsageError("lift box with --kappa needs the single file w");
        const auto w = read_correlation_file(lift_files[0]);
        z = extend_box2(w, involution(iota_spec, w.parties()), involution(kappa_spec, w.parties()));
      }
      emit_tensor(ctx, z);
      return kExitOk;
    };
  });

  auto* lift_ineq = lift_cmd->add_subcommand("ineq", "Extend a Bell inequality with two commuting involutions");
  std::string ineq_file;
  lift_ineq->add_option("--iota", iota_spec)->required();
  lift_ineq->add_option("--kappa", kappa_spec)->required();
  lift_ineq->add_option("functional", ineq_file)->required();
  lift_ineq->callback([&] {
    action = [&] {
      const auto f = read_functional_file(ineq_file);
      emit_tensor(ctx, extend_inequality(f, involution(iota_spec, f.parties()), involution(kappa_spec, f.parties())));
      return kExitOk;
    };
  });

  auto* lift_recognize = lift_cmd->add_subcommand("recognize", "Recognize a box as an extension of one party fewer");
  std::string recognize_file;
  lift_recognize->add_option("--iota", iota_spec);
  lift_recognize->add_option("--kappa", kappa_spec);
  lift_recognize->add_flag("--search", search, "Sweep all involutions instead of --iota/--kappa");
  lift_recognize->add_flag("--two", search_two, "With --search: sweep commuting pairs (iota, kappa)");
  lift_recognize->add_flag("--full-group", search_full, "With --search: include party permutations");
  lift_recognize->add_option("box", recognize_file)->required();
  lift_recognize->callback([&] {
    action = [&] {
      const auto z = read_correlation_file(recognize_file);
      const int n = z.parties() - 1;
      if (search) {
        const auto matches = find_extensions(z, search_two, search_full);
        json j = json::array();
        std::string s = "matches=" + std::to_string(matches.size()) + "\n";
        for (const auto& m : matches) {
          s += "iota=" + m.iota.to_string();
          if (m.kappa) s += " kappa=" + m.kappa->to_string();
          s += "\n";
          json e{{"iota", m.iota.to_string()}};
          if (m.kappa) e["kappa"] = m.kappa->to_string();
          j.push_back(e);
        }
        if (ctx.json_output) {
          ctx.emit(json{{"matches", j}});
        } else {
          ctx.emit(s);
        }
        return kExitOk;
      }
      if (iota_spec.empty()) throw UsageError("lift recognize needs --iota or --search");
      const auto r = kappa_spec.empty() ? recognize_extension(z, involution(iota_spec, n))
                                        : recognize_extension(z, involution(iota_spec, n), involution(kappa_spec, n));
      if (ctx.json_output) {
        ctx.emit(recognition_json(r));
      } else {
        ctx.emit(recognition_text(r));
      }
      return kExitOk;
    };
  });

  // mk
  auto* mk_cmd = app.add_subcommand("mk", "MK inequality in >=0 form");
  int mk_n = 2;
  mk_cmd->add_option("-n", mk_n)->required()->check(CLI::Range(1, kMaxParties));
  mk_cmd->callback([&] {
    action = [&] {
      emit_tensor(ctx, mermin_klyshko(mk_n));
      return kExitOk;
    };
  });

  // ww-test
  auto* ww_cmd = app.add_subcommand("ww-test", "Locality test for boxes with only full correlators");
  std::string ww_file;
  bool ww_inequality = false;
  ww_cmd->add_option("box", ww_file)->required();
  ww_cmd->add_flag("--inequality", ww_inequality, "Also print the binding full-correlation inequality");
  ww_cmd->callback([&] {
    action = [&] {
      const auto r = ww_zb_analysis(read_correlation_file(ww_file));
      if (ctx.json_output) {
        json j{{"local", r.local}, {"value", to_json(r.value)}, {"threshold", to_json(r.threshold)}};
        if (ww_inequality) j["inequality"] = to_json(r.inequality);
        ctx.emit(j);
      } else {
        std::string s = "local=" + yes_no(r.local) + " value=" + r.value.to_string() + " threshold=" + r.threshold.to_string() + "\n";
        if (ww_inequality) s += text(r.inequality);
        ctx.emit(s);
      }
      return kExitOk;
    };
  });

  // fixtures
  auto* fixtures_cmd = app.add_subcommand("fixtures", "Built-in boxes and functionals");
  std::string fixture_name;
  fixtures_cmd
      ->add_option("name", fixture_name,
                   "gyni | pr | chsh | sliwa17 | sliwa17-box | isotropic:<c> | all-ones:<n> | positivity:<n> | mk:<n>")
      ->required();
  fixtures_cmd->callback([&] {
    action = [&] {
      emit_tensor(ctx, fixture(fixture_name));
      return kExitOk;
    };
  });

  // counts
  auto* counts_cmd = app.add_subcommand("counts", "Vertex and facet counts of the (n,k,l) local polytope");
  std::uint64_t cn = 0, ck = 2, cl = 2;
  counts_cmd->add_option("-n", cn)->required();
  counts_cmd->add_option("-k", ck, "Settings per party");
  counts_cmd->add_option("-l", cl, "Outcomes per setting");
  counts_cmd->callback([&] {
    action = [&] {
      const auto c = duality_count_obstruction(cn, ck, cl);
      if (ctx.json_output) {
        ctx.emit(json{{"vertices", c.vertices}, {"facets", c.facets}, {"duality", c.duality_possible}});
      } else {
        ctx.emit("vertices=" + std::to_string(c.vertices) + " facets=" + std::to_string(c.facets) +
                 " duality=" + yes_no(c.duality_possible) + "\n");
      }
      return kExitOk;
    };
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }

  try {
    return action();
  } catch (const PreconditionFailure& e) {
    err << "precondition failed: " << e.what() << '\n';
    if (ctx.json_output) {
      out << json{{"status", "violation"}, {"condition", e.condition()}, {"certificate", to_json(e.certificate())}}.dump(2)
          << '\n';
    } else {
      out << "failed=" << e.condition() << '\n';
      if (!e.certificate().empty()) out << "certificate=" << vector_text(e.certificate()) << '\n';
    }
    return kExitViolation;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
}

}  // namespace bellcone::cli
