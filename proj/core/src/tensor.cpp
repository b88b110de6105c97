#include "bellcone/tensor.hpp"

#include <stdexcept>

namespace bellcone {

Setting setting_from_int(int v) {
  if (v < -1 || v > 1) throw std::invalid_argument("setting letter out of range: " + std::to_string(v));
  return static_cast<Setting>(v);
}

std::size_t tensor_size(int n) {
  if (n < 1 || n > kMaxParties) throw std::invalid_argument("party count out of range: " + std::to_string(n));
  std::size_t size = 1;
  for (int i = 0; i < n; ++i) size *= 3;
  return size;
}

SettingWord::SettingWord(std::vector<Setting> letters) : letters_(std::move(letters)) {
  if (letters_.empty()) throw std::invalid_argument("empty setting word");
}

SettingWord SettingWord::from_index(int n, std::size_t index) {
  if (index >= tensor_size(n)) throw std::out_of_range("word index out of range");
  std::vector<Setting> letters(static_cast<std::size_t>(n));
  for (int j = n - 1; j >= 0; --j) {
    letters[static_cast<std::size_t>(j)] = static_cast<Setting>(static_cast<int>(index % 3) - 1);
    index /= 3;
  }
  return SettingWord(std::move(letters));
}

std::size_t word_index(std::span<const Setting> letters) {
  std::size_t index = 0;
  for (Setting s : letters) index = index * 3 + digit(s);
  return index;
}

std::size_t SettingWord::index() const { return word_index(letters_); }

bool SettingWord::is_full() const {
  for (Setting s : letters_) {
    if (s == Setting::none) return false;
  }
  return true;
}

std::string SettingWord::to_string() const {
  std::string out;
  for (std::size_t j = 0; j < letters_.size(); ++j) {
    if (j) out += ',';
    switch (letters_[j]) {
      case Setting::minus: out += "-1"; break;
      case Setting::none: out += "0"; break;
      case Setting::plus: out += "+1"; break;
    }
  }
  return out;
}

SettingWord SettingWord::parse(std::string_view text) {
  std::vector<Setting> letters;
  std::size_t pos = 0;
  while (true) {
    const auto comma = text.find(',', pos);
    const auto token = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    if (token == "-1") {
      letters.push_back(Setting::minus);
    } else if (token == "0") {
      letters.push_back(Setting::none);
    } else if (token == "+1" || token == "1") {
      letters.push_back(Setting::plus);
    } else {
      throw std::invalid_argument("malformed setting word '" + std::string(text) + "'");
    }
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return SettingWord(std::move(letters));
}

template <Variance V>
Tensor<V>::Tensor(int n, Vector entries) : n_(n), entries_(std::move(entries)) {
  if (entries_.size() != tensor_size(n)) throw std::invalid_argument("tensor entry count does not match 3^n");
}

template <Variance V>
std::size_t Tensor<V>::zero_index() const {
  return (entries_.size() - 1) / 2;
}

template <Variance V>
const Rational& Tensor<V>::at(const SettingWord& w) const {
  if (w.parties() != n_) throw std::invalid_argument("word length does not match party count");
  return entries_[w.index()];
}

template <Variance V>
Rational& Tensor<V>::at(const SettingWord& w) {
  if (w.parties() != n_) throw std::invalid_argument("word length does not match party count");
  return entries_[w.index()];
}

namespace {

std::size_t index_of(std::initializer_list<int> letters, int n) {
  if (static_cast<int>(letters.size()) != n) throw std::invalid_argument("word length does not match party count");
  std::size_t index = 0;
  for (int v : letters) index = index * 3 + digit(setting_from_int(v));
  return index;
}

}  // namespace

template <Variance V>
const Rational& Tensor<V>::at(std::initializer_list<int> letters) const {
  return entries_[index_of(letters, n_)];
}

template <Variance V>
Rational& Tensor<V>::at(std::initializer_list<int> letters) {
  return entries_[index_of(letters, n_)];
}

template <Variance V>
void Tensor<V>::check_same_shape(const Tensor& o) const {
  if (n_ != o.n_) throw std::invalid_argument("tensor party counts differ");
}

template <Variance V>
Tensor<V>& Tensor<V>::operator+=(const Tensor& o) {
  check_same_shape(o);
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += o.entries_[i];
  return *this;
}

template <Variance V>
Tensor<V>& Tensor<V>::operator-=(const Tensor& o) {
  check_same_shape(o);
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= o.entries_[i];
  return *this;
}

template <Variance V>
Tensor<V>& Tensor<V>::operator*=(const Rational& c) {
  for (auto& e : entries_) e *= c;
  return *this;
}

template class Tensor<Variance::upper>;
template class Tensor<Variance::lower>;

const FTensor& f_tensor() {
  static const FTensor f = [] {
    const Rational h(1, 2);
    FTensor t{};
    t.raised = {{{1, 0, 1}, {0, 1, 0}, {1, 0, -1}}};
    t.lowered = {{{h, 0, h}, {0, 1, 0}, {h, 0, -h}}};
    return t;
  }();
  return f;
}

Vector apply_local(const Vector& entries, int n, const std::array<std::array<Rational, 3>, 3>& m) {
  Vector cur = entries;
  Vector next(cur.size());
  // Mode j has stride 3^(n-1-j).
  std::size_t stride = cur.size() / 3;
  for (int j = 0; j < n; ++j) {
    for (std::size_t base = 0; base < cur.size(); ++base) {
      const std::size_t d = (base / stride) % 3;
      if (d != 0) continue;
      for (std::size_t s = 0; s < 3; ++s) {
        Rational acc;
        for (std::size_t t = 0; t < 3; ++t) {
          if (m[s][t].is_zero()) continue;
          const auto& in = cur[base + t * stride];
          if (!in.is_zero()) acc += m[s][t] * in;
        }
        next[base + s * stride] = std::move(acc);
      }
    }
    std::swap(cur, next);
    stride /= 3;
  }
  return cur;
}

FunctionalTensor lower(const CorrelationTensor& x) {
  return FunctionalTensor(x.parties(), apply_local(x.entries(), x.parties(), f_tensor().lowered));
}

CorrelationTensor raise(const FunctionalTensor& f) {
  return CorrelationTensor(f.parties(), apply_local(f.entries(), f.parties(), f_tensor().raised));
}

Rational pair(const FunctionalTensor& f, const CorrelationTensor& x) {
  if (f.parties() != x.parties()) throw std::invalid_argument("pair: party counts differ");
  return dot(f.entries(), x.entries());
}

template <Variance V>
Tensor<V> tensor_product(const Tensor<V>& a, const Tensor<V>& b) {
  Tensor<V> out(a.parties() + b.parties());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t k = 0; k < b.size(); ++k) out[i * b.size() + k] = a[i] * b[k];
  }
  return out;
}

template <Variance V>
Tensor<V> slice_last(const Tensor<V>& t, Setting last) {
  if (t.parties() < 2) throw std::invalid_argument("slice_last needs at least two parties");
  Tensor<V> out(t.parties() - 1);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = t[i * 3 + digit(last)];
  return out;
}

template <Variance V>
Tensor<V> append_party(const Tensor<V>& minus, const Tensor<V>& none, const Tensor<V>& plus) {
  if (minus.parties() != none.parties() || none.parties() != plus.parties()) {
    throw std::invalid_argument("append_party: slices have different party counts");
  }
  Tensor<V> out(none.parties() + 1);
  for (std::size_t i = 0; i < none.size(); ++i) {
    out[i * 3 + 0] = minus[i];
    out[i * 3 + 1] = none[i];
    out[i * 3 + 2] = plus[i];
  }
  return out;
}

template CorrelationTensor tensor_product(const CorrelationTensor&, const CorrelationTensor&);
template FunctionalTensor tensor_product(const FunctionalTensor&, const FunctionalTensor&);
template CorrelationTensor slice_last(const CorrelationTensor&, Setting);
template FunctionalTensor slice_last(const FunctionalTensor&, Setting);
template CorrelationTensor append_party(const CorrelationTensor&, const CorrelationTensor&, const CorrelationTensor&);
template FunctionalTensor append_party(const FunctionalTensor&, const FunctionalTensor&, const FunctionalTensor&);

}  // namespace bellcone
