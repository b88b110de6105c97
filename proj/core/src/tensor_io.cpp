#include "bellcone/tensor_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace bellcone {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

struct Header {
  int n = 0;
  Variance variance = Variance::upper;
};

Header parse_header(std::string_view line) {
  // bellcone-tensor v1; n=<int>; variance=<upper|lower>
  Header h;
  std::vector<std::string_view> fields;
  std::size_t pos = 0;
  while (true) {
    const auto semi = line.find(';', pos);
    fields.push_back(trim(line.substr(pos, semi == std::string_view::npos ? std::string_view::npos : semi - pos)));
    if (semi == std::string_view::npos) break;
    pos = semi + 1;
  }
  if (fields.size() != 3 || fields[0] != "bellcone-tensor v1") {
    throw std::invalid_argument("not a bellcone-tensor v1 header: '" + std::string(line) + "'");
  }
  if (fields[1].substr(0, 2) != "n=") throw std::invalid_argument("tensor header lacks n=");
  try {
    h.n = std::stoi(std::string(fields[1].substr(2)));
  } catch (const std::exception&) {
    throw std::invalid_argument("tensor header has malformed n");
  }
  if (fields[2] == "variance=upper") {
    h.variance = Variance::upper;
  } else if (fields[2] == "variance=lower") {
    h.variance = Variance::lower;
  } else {
    throw std::invalid_argument("tensor header has unknown variance");
  }
  tensor_size(h.n);
  return h;
}

template <Variance V>
Tensor<V> read_body(std::istream& in, int n) {
  Tensor<V> t(n);
  std::vector<bool> seen(t.size(), false);
  std::string line;
  while (std::getline(in, line)) {
    const auto body = trim(line);
    if (body.empty() || body.front() == '#') continue;
    const auto space = body.find_first_of(" \t");
    if (space == std::string_view::npos) throw std::invalid_argument("tensor line lacks a value: '" + line + "'");
    const auto word = SettingWord::parse(body.substr(0, space));
    if (word.parties() != n) throw std::invalid_argument("tensor word has wrong length: '" + line + "'");
    const auto index = word.index();
    if (seen[index]) throw std::invalid_argument("duplicate tensor word: '" + line + "'");
    seen[index] = true;
    t[index] = Rational::parse(trim(body.substr(space + 1)));
  }
  return t;
}

}  // namespace

template <Variance V>
std::string format_tensor(const Tensor<V>& t) {
  std::ostringstream os;
  os << "bellcone-tensor v1; n=" << t.parties() << "; variance=" << (V == Variance::upper ? "upper" : "lower")
     << '\n';
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t[i].is_zero()) continue;
    os << SettingWord::from_index(t.parties(), i).to_string() << ' ' << t[i] << '\n';
  }
  return os.str();
}

template std::string format_tensor(const CorrelationTensor&);
template std::string format_tensor(const FunctionalTensor&);

AnyTensor parse_tensor(std::istream& in) {
  std::string line;
  while (std::getline(in, line)) {
    if (!trim(line).empty()) break;
  }
  const Header h = parse_header(trim(line));
  if (h.variance == Variance::upper) return read_body<Variance::upper>(in, h.n);
  return read_body<Variance::lower>(in, h.n);
}

AnyTensor parse_tensor_string(const std::string& text) {
  std::istringstream in(text);
  return parse_tensor(in);
}

AnyTensor read_tensor_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open tensor file '" + path + "'");
  return parse_tensor(in);
}

CorrelationTensor read_correlation_file(const std::string& path) {
  auto t = read_tensor_file(path);
  if (auto* x = std::get_if<CorrelationTensor>(&t)) return std::move(*x);
  throw std::invalid_argument("'" + path + "' holds a lower-variance tensor; expected a box");
}

FunctionalTensor read_functional_file(const std::string& path) {
  auto t = read_tensor_file(path);
  if (auto* f = std::get_if<FunctionalTensor>(&t)) return std::move(*f);
  throw std::invalid_argument("'" + path + "' holds an upper-variance tensor; expected a functional");
}

void write_text_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << contents;
}

}  // namespace bellcone
