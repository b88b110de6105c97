#include "bellcone/symmetry.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace bellcone {

namespace {

std::size_t flip_slot(Setting s) { return s == Setting::minus ? 0 : 1; }

Setting swapped(Setting s, bool swap) {
  if (!swap) return s;
  return static_cast<Setting>(-value(s));
}

void check_party(int n, int party) {
  if (party < 1 || party > n) throw std::invalid_argument("party index out of range: " + std::to_string(party));
}

}  // namespace

Vector SignedPermutation::apply(const Vector& v) const {
  if (v.size() != target.size()) throw std::invalid_argument("signed permutation: dimension mismatch");
  Vector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[target[i]] = sign[i] < 0 ? -v[i] : v[i];
  return out;
}

SymmetryElement::SymmetryElement(std::vector<int> perm, std::vector<bool> swap, std::vector<std::array<bool, 2>> flip)
    : perm_(std::move(perm)), swap_(std::move(swap)), flip_(std::move(flip)) {
  const auto n = perm_.size();
  if (n == 0 || swap_.size() != n || flip_.size() != n) throw std::invalid_argument("symmetry element: inconsistent sizes");
  std::vector<bool> hit(n, false);
  for (int p : perm_) {
    if (p < 0 || static_cast<std::size_t>(p) >= n || hit[static_cast<std::size_t>(p)]) {
      throw std::invalid_argument("symmetry element: not a permutation");
    }
    hit[static_cast<std::size_t>(p)] = true;
  }
}

SymmetryElement SymmetryElement::identity(int n) {
  tensor_size(n);
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  return SymmetryElement(std::move(perm), std::vector<bool>(static_cast<std::size_t>(n), false),
                         std::vector<std::array<bool, 2>>(static_cast<std::size_t>(n), {false, false}));
}

SymmetryElement SymmetryElement::party_transposition(int n, int i, int j) {
  check_party(n, i);
  check_party(n, j);
  auto e = identity(n);
  std::swap(e.perm_[static_cast<std::size_t>(i - 1)], e.perm_[static_cast<std::size_t>(j - 1)]);
  return e;
}

SymmetryElement SymmetryElement::setting_swap(int n, int party) {
  check_party(n, party);
  auto e = identity(n);
  e.swap_[static_cast<std::size_t>(party - 1)] = true;
  return e;
}

SymmetryElement SymmetryElement::outcome_flip(int n, int party, Setting observable) {
  check_party(n, party);
  if (observable == Setting::none) throw std::invalid_argument("outcome_flip: the letter 0 has no outcome");
  auto e = identity(n);
  e.flip_[static_cast<std::size_t>(party - 1)][flip_slot(observable)] = true;
  return e;
}

SymmetryElement SymmetryElement::global_setting_swap(int n) {
  auto e = identity(n);
  std::fill(e.swap_.begin(), e.swap_.end(), true);
  return e;
}

SymmetryElement SymmetryElement::global_outcome_flip(int n) {
  auto e = identity(n);
  for (auto& f : e.flip_) f = {true, true};
  return e;
}

bool SymmetryElement::is_identity() const { return *this == identity(parties()); }

bool SymmetryElement::has_party_permutation() const {
  for (std::size_t j = 0; j < perm_.size(); ++j) {
    if (perm_[j] != static_cast<int>(j)) return true;
  }
  return false;
}

SignedPermutation SymmetryElement::table() const {
  const int n = parties();
  const std::size_t size = tensor_size(n);
  SignedPermutation t;
  t.target.resize(size);
  t.sign.resize(size);
  std::vector<Setting> out(static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < size; ++i) {
    const auto w = SettingWord::from_index(n, i);
    int sign = 1;
    for (std::size_t j = 0; j < static_cast<std::size_t>(n); ++j) {
      const Setting s = swapped(w[j], swap_[j]);
      if (s != Setting::none && flip_[j][flip_slot(s)]) sign = -sign;
      out[static_cast<std::size_t>(perm_[j])] = s;
    }
    t.target[i] = static_cast<std::uint32_t>(word_index(out));
    t.sign[i] = static_cast<std::int8_t>(sign);
  }
  return t;
}

std::string SymmetryElement::to_string() const {
  std::vector<std::string> atoms;
  // Normal form order: swap, flip, then the party move.
  for (std::size_t j = 0; j < perm_.size(); ++j) {
    if (swap_[j]) atoms.push_back("swap(" + std::to_string(j + 1) + ")");
  }
  for (std::size_t j = 0; j < perm_.size(); ++j) {
    if (flip_[j][0]) atoms.push_back("flip(" + std::to_string(j + 1) + ",-1)");
    if (flip_[j][1]) atoms.push_back("flip(" + std::to_string(j + 1) + ",+1)");
  }
  // Decompose the party permutation into transpositions acting after the local part.
  std::vector<int> p = perm_;
  std::vector<std::string> moves;
  for (std::size_t j = 0; j < p.size(); ++j) {
    while (p[j] != static_cast<int>(j)) {
      const auto k = static_cast<std::size_t>(p[j]);
      moves.push_back("perm(" + std::to_string(j + 1) + "," + std::to_string(k + 1) + ")");
      std::swap(p[j], p[k]);
    }
  }
  // perm = t_m o ... o t_1 with t_1 found first, so reading order is discovery order.
  atoms.insert(atoms.end(), moves.begin(), moves.end());
  if (atoms.empty()) return "id";
  std::string out;
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    if (i) out += ',';
    out += atoms[i];
  }
  return out;
}

SymmetryElement compose(const SymmetryElement& a, const SymmetryElement& b) {
  if (a.parties() != b.parties()) throw std::invalid_argument("compose: party counts differ");
  const auto n = static_cast<std::size_t>(a.parties());
  std::vector<int> perm(n);
  std::vector<bool> swap(n);
  std::vector<std::array<bool, 2>> flip(n);
  for (std::size_t j = 0; j < n; ++j) {
    const auto p = static_cast<std::size_t>(b.perm()[j]);
    perm[j] = a.perm()[p];
    swap[j] = b.swap()[j] != a.swap()[p];
    for (Setting final_letter : kMeasured) {
      // Letter after b's swap, before a's swap.
      const Setting mid = swapped(final_letter, a.swap()[p]);
      flip[j][flip_slot(final_letter)] = a.flip()[p][flip_slot(final_letter)] != b.flip()[j][flip_slot(mid)];
    }
  }
  return SymmetryElement(std::move(perm), std::move(swap), std::move(flip));
}

SymmetryElement inverse(const SymmetryElement& a) {
  // The group is finite; walk the cyclic subgroup.
  SymmetryElement prev = SymmetryElement::identity(a.parties());
  SymmetryElement cur = a;
  while (!cur.is_identity()) {
    prev = cur;
    cur = compose(a, cur);
  }
  return prev;
}

namespace {

using Local = std::array<std::array<Rational, 3>, 3>;

Local local_matrix(bool swap, std::array<bool, 2> flip) {
  Local m{};
  for (Setting s : kSettings) {
    const Setting t = swapped(s, swap);
    int sign = 1;
    if (t != Setting::none && flip[flip_slot(t)]) sign = -1;
    m[digit(t)][digit(s)] = sign;
  }
  return m;
}

Local multiply(const Local& a, const Local& b) {
  Local m{};
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      for (std::size_t k = 0; k < 3; ++k) m[i][j] += a[i][k] * b[k][j];
    }
  }
  return m;
}

}  // namespace

SymmetryElement induced_on_functionals(const SymmetryElement& g) {
  const auto& f = f_tensor();
  const auto n = static_cast<std::size_t>(g.parties());
  std::vector<bool> swap(n);
  std::vector<std::array<bool, 2>> flip(n);
  for (std::size_t j = 0; j < n; ++j) {
    const Local conj = multiply(f.lowered, multiply(local_matrix(g.swap()[j], g.flip()[j]), f.raised));
    bool found = false;
    for (int code = 0; code < 8 && !found; ++code) {
      const bool sw = code & 4;
      const std::array<bool, 2> fl{static_cast<bool>(code & 2), static_cast<bool>(code & 1)};
      if (local_matrix(sw, fl) == conj) {
        swap[j] = sw;
        flip[j] = fl;
        found = true;
      }
    }
    if (!found) throw std::logic_error("induced_on_functionals: conjugate is not a local symmetry");
  }
  return SymmetryElement(g.perm(), std::move(swap), std::move(flip));
}

namespace {

std::vector<std::string_view> split_atoms(std::string_view text) {
  std::vector<std::string_view> atoms;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || (text[i] == ',' && depth == 0)) {
      auto atom = text.substr(start, i - start);
      while (!atom.empty() && atom.front() == ' ') atom.remove_prefix(1);
      while (!atom.empty() && atom.back() == ' ') atom.remove_suffix(1);
      if (atom.empty()) throw std::invalid_argument("empty symmetry atom in '" + std::string(text) + "'");
      atoms.push_back(atom);
      start = i + 1;
    } else if (text[i] == '(') {
      ++depth;
    } else if (text[i] == ')') {
      --depth;
    }
  }
  if (depth != 0) throw std::invalid_argument("unbalanced parentheses in '" + std::string(text) + "'");
  return atoms;
}

std::vector<int> parse_parties(std::string_view token, int n) {
  if (token == "*") {
    std::vector<int> all(static_cast<std::size_t>(n));
    std::iota(all.begin(), all.end(), 1);
    return all;
  }
  int p = 0;
  for (char c : token) {
    if (c < '0' || c > '9') throw std::invalid_argument("malformed party index '" + std::string(token) + "'");
    p = p * 10 + (c - '0');
  }
  if (token.empty()) throw std::invalid_argument("missing party index");
  check_party(n, p);
  return {p};
}

}  // namespace

SymmetryElement parse_symmetry(std::string_view text, int n) {
  SymmetryElement g = SymmetryElement::identity(n);
  for (auto atom : split_atoms(text)) {
    if (atom == "id") continue;
    const auto open = atom.find('(');
    if (open == std::string_view::npos || atom.back() != ')') {
      throw std::invalid_argument("malformed symmetry atom '" + std::string(atom) + "'");
    }
    const auto name = atom.substr(0, open);
    const auto args_text = atom.substr(open + 1, atom.size() - open - 2);
    std::vector<std::string_view> args;
    std::size_t pos = 0;
    while (true) {
      const auto comma = args_text.find(',', pos);
      args.push_back(args_text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos));
      if (comma == std::string_view::npos) break;
      pos = comma + 1;
    }
    std::vector<SymmetryElement> step;
    if (name == "swap" && args.size() == 1) {
      for (int p : parse_parties(args[0], n)) step.push_back(SymmetryElement::setting_swap(n, p));
    } else if (name == "flip" && (args.size() == 1 || args.size() == 2)) {
      std::vector<Setting> observables{Setting::minus, Setting::plus};
      if (args.size() == 2) {
        if (args[1] == "-1") {
          observables = {Setting::minus};
        } else if (args[1] == "+1" || args[1] == "1") {
          observables = {Setting::plus};
        } else {
          throw std::invalid_argument("flip observable must be -1 or +1 in '" + std::string(atom) + "'");
        }
      }
      for (int p : parse_parties(args[0], n)) {
        for (Setting s : observables) step.push_back(SymmetryElement::outcome_flip(n, p, s));
      }
    } else if (name == "perm" && args.size() == 2) {
      const auto a = parse_parties(args[0], n);
      const auto b = parse_parties(args[1], n);
      if (a.size() != 1 || b.size() != 1) throw std::invalid_argument("perm takes two explicit parties");
      step.push_back(SymmetryElement::party_transposition(n, a[0], b[0]));
    } else {
      throw std::invalid_argument("unknown symmetry atom '" + std::string(atom) + "'");
    }
    for (const auto& s : step) g = compose(s, g);
  }
  return g;
}

Involution::Involution(SymmetryElement g) : g_(std::move(g)) {
  if (!compose(g_, g_).is_identity()) throw std::invalid_argument("not an involution: " + g_.to_string());
}

SymmetryGroup SymmetryGroup::full(int n) { return SymmetryGroup(n, true); }

SymmetryGroup SymmetryGroup::without_party_permutations(int n) { return SymmetryGroup(n, false); }

SymmetryGroup::SymmetryGroup(int n, bool with_perms) : n_(n) {
  tensor_size(n);
  const auto un = static_cast<std::size_t>(n);
  std::vector<int> perm(un);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    for (std::size_t code = 0; code < (std::size_t{1} << (3 * un)); ++code) {
      std::vector<bool> swap(un);
      std::vector<std::array<bool, 2>> flip(un);
      for (std::size_t j = 0; j < un; ++j) {
        const std::size_t bits = (code >> (3 * (un - 1 - j))) & 7;
        swap[j] = bits & 4;
        flip[j] = {static_cast<bool>(bits & 2), static_cast<bool>(bits & 1)};
      }
      elements_.emplace_back(perm, std::move(swap), std::move(flip));
    }
  } while (with_perms && std::next_permutation(perm.begin(), perm.end()));
  tables_.reserve(elements_.size());
  for (const auto& e : elements_) tables_.push_back(e.table());
}

OrbitForm orbit_canonical_form(const Vector& v, const SymmetryGroup& group) {
  if (is_zero(v)) throw std::invalid_argument("orbit_canonical_form: zero tensor has no orbit");
  if (v.size() != tensor_size(group.parties())) throw std::invalid_argument("orbit_canonical_form: dimension mismatch");
  const Vector base = canonical_ray(v);
  OrbitForm form;
  bool first = true;
  for (const auto& t : group.tables()) {
    // Signed permutations keep primitive vectors primitive.
    Vector image = t.apply(base);
    if (image == base) ++form.stabilizer_order;
    if (first || compare_vectors(image, form.canonical) < 0) {
      form.canonical = std::move(image);
      first = false;
    }
  }
  return form;
}

std::vector<Orbit> classify_orbits(const Matrix& rays, const SymmetryGroup& group) {
  Matrix canon;
  canon.reserve(rays.size());
  std::unordered_map<Vector, std::size_t, VectorHash> index;
  for (std::size_t i = 0; i < rays.size(); ++i) {
    if (rays[i].size() != tensor_size(group.parties())) throw std::invalid_argument("classify_orbits: dimension mismatch");
    if (is_zero(rays[i])) throw std::invalid_argument("classify_orbits: zero ray");
    canon.push_back(canonical_ray(rays[i]));
    index.emplace(canon.back(), i);
  }
  std::vector<bool> visited(rays.size(), false);
  std::vector<Orbit> orbits;
  for (std::size_t i = 0; i < rays.size(); ++i) {
    if (visited[i]) continue;
    Orbit orbit;
    std::unordered_set<Vector, VectorHash> images;
    for (const auto& t : group.tables()) {
      Vector image = t.apply(canon[i]);
      if (!images.insert(image).second) continue;
      if (auto it = index.find(image); it != index.end() && !visited[it->second]) {
        visited[it->second] = true;
        orbit.members.push_back(it->second);
      }
      if (orbit.representative.empty() || compare_vectors(image, orbit.representative) < 0) orbit.representative = image;
    }
    // Duplicated input rays map onto one index; sweep for the rest.
    if (!visited[i]) {
      visited[i] = true;
      orbit.members.push_back(i);
    }
    for (std::size_t k = i + 1; k < rays.size(); ++k) {
      if (!visited[k] && images.count(canon[k])) {
        visited[k] = true;
        orbit.members.push_back(k);
      }
    }
    std::sort(orbit.members.begin(), orbit.members.end());
    orbit.size = orbit.members.size();
    orbit.full_size = images.size();
    orbits.push_back(std::move(orbit));
  }
  std::sort(orbits.begin(), orbits.end(),
            [](const Orbit& a, const Orbit& b) { return compare_vectors(a.representative, b.representative) < 0; });
  return orbits;
}

std::vector<Orbit> classify_orbits(const ConeVRep& rays, const SymmetryGroup& group) {
  return classify_orbits(rays.generators(), group);
}

}  // namespace bellcone
