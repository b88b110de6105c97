#include "bellcone/cone_io.hpp"

#include <fstream>
#include <sstream>

namespace bellcone {

namespace {

std::string format(std::size_t dim, char rep, const Matrix& vectors) {
  std::ostringstream os;
  os << "bellcone-cone v1; dim=" << dim << "; rep=" << rep << "; count=" << vectors.size() << '\n';
  for (const auto& v : vectors) os << to_string(v) << '\n';
  return os.str();
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::size_t parse_count(const std::string& field, const std::string& key) {
  if (field.rfind(key, 0) != 0) throw std::invalid_argument("cone header lacks " + key);
  try {
    std::size_t used = 0;
    const auto v = std::stoul(field.substr(key.size()), &used);
    if (used != field.size() - key.size()) throw std::invalid_argument("");
    return v;
  } catch (const std::exception&) {
    throw std::invalid_argument("cone header has malformed " + key);
  }
}

}  // namespace

std::string format_cone(const ConeVRep& c) { return format(c.dim(), 'V', c.generators()); }
std::string format_cone(const ConeHRep& c) { return format(c.dim(), 'H', c.functionals()); }

AnyCone parse_cone(std::istream& in) {
  std::string line;
  while (std::getline(in, line) && trim(line).empty()) {
  }
  std::vector<std::string> fields;
  {
    std::stringstream ss(trim(line));
    std::string f;
    while (std::getline(ss, f, ';')) fields.push_back(trim(f));
  }
  if (fields.size() != 4 || fields[0] != "bellcone-cone v1") {
    throw std::invalid_argument("not a bellcone-cone v1 header: '" + line + "'");
  }
  const std::size_t dim = parse_count(fields[1], "dim=");
  const std::string rep = fields[2];
  if (rep != "rep=V" && rep != "rep=H") throw std::invalid_argument("cone header has unknown rep");
  const std::size_t count = parse_count(fields[3], "count=");

  Matrix vectors;
  while (std::getline(in, line)) {
    const auto body = trim(line);
    if (body.empty() || body.front() == '#') continue;
    std::istringstream ls(body);
    Vector v;
    std::string token;
    while (ls >> token) v.push_back(Rational::parse(token));
    if (v.size() != dim) throw std::invalid_argument("cone vector has " + std::to_string(v.size()) + " entries, expected " + std::to_string(dim));
    vectors.push_back(std::move(v));
  }
  if (vectors.size() != count) {
    throw std::invalid_argument("cone file declares " + std::to_string(count) + " vectors but holds " +
                                std::to_string(vectors.size()));
  }
  if (rep == "rep=V") return ConeVRep(dim, std::move(vectors));
  return ConeHRep(dim, std::move(vectors));
}

AnyCone parse_cone_string(const std::string& text) {
  std::istringstream in(text);
  return parse_cone(in);
}

AnyCone read_cone_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open cone file '" + path + "'");
  return parse_cone(in);
}

}  // namespace bellcone
