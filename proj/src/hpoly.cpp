#include "hvector/hpoly.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "hvector/checked.hpp"
#include "hvector/error.hpp"

namespace hvector {

HPoly::HPoly(int degree) {
  if (degree < 0) throw DomainError("polynomial degree must be non-negative");
  coeffs_.assign(static_cast<std::size_t>(degree) + 1, 0);
}

HPoly::HPoly(std::vector<std::int64_t> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw DomainError("a homogeneous polynomial needs at least one coefficient");
}

HPoly HPoly::monomial(int x_power, int y_power, std::int64_t c) {
  HPoly p(x_power + y_power);
  p.coeffs_[static_cast<std::size_t>(x_power)] = c;
  return p;
}

HPoly HPoly::x_minus_y_power(int n) {
  HPoly p = one();
  const HPoly step(std::vector<std::int64_t>{-1, 1});
  for (int k = 0; k < n; ++k) p = p * step;
  return p;
}

bool HPoly::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](std::int64_t c) { return c == 0; });
}

bool HPoly::is_palindromic() const { return std::equal(coeffs_.begin(), coeffs_.end(), coeffs_.rbegin()); }

HPoly HPoly::operator+(const HPoly& other) const {
  if (degree() != other.degree()) {
    throw DimensionMismatch("adding polynomials of degree " + std::to_string(degree()) + " and " +
                            std::to_string(other.degree()));
  }
  HPoly out = *this;
  for (std::size_t m = 0; m < coeffs_.size(); ++m) {
    out.coeffs_[m] = checked_add(coeffs_[m], other.coeffs_[m]);
  }
  return out;
}

HPoly HPoly::operator-(const HPoly& other) const { return *this + other.scaled(-1); }

HPoly HPoly::operator*(const HPoly& other) const {
  HPoly out(degree() + other.degree());
  for (std::size_t a = 0; a < coeffs_.size(); ++a) {
    if (coeffs_[a] == 0) continue;
    for (std::size_t b = 0; b < other.coeffs_.size(); ++b) {
      checked_fma(out.coeffs_[a + b], coeffs_[a], other.coeffs_[b]);
    }
  }
  return out;
}

HPoly HPoly::scaled(std::int64_t c) const {
  HPoly out = *this;
  for (auto& v : out.coeffs_) v = checked_mul(v, c);
  return out;
}

HPoly HPoly::times_x() const {
  std::vector<std::int64_t> c(coeffs_.size() + 1, 0);
  std::copy(coeffs_.begin(), coeffs_.end(), c.begin() + 1);
  return HPoly(std::move(c));
}

HPoly HPoly::times_y() const {
  std::vector<std::int64_t> c = coeffs_;
  c.push_back(0);
  return HPoly(std::move(c));
}

std::string HPoly::to_string() const {
  std::string out = "[";
  for (std::size_t m = 0; m < coeffs_.size(); ++m) {
    if (m) out += ',';
    out += std::to_string(coeffs_[m]);
  }
  return out + "]";
}

HPoly angle(int i, int j) {
  if (i < 0 || j < 0) throw DomainError("angle(i, j) needs i, j >= 0");
  std::vector<std::int64_t> c(static_cast<std::size_t>(2 * i + j) + 1, 0);
  for (int m = i; m <= i + j; ++m) c[static_cast<std::size_t>(m)] = 1;
  return HPoly(std::move(c));
}

std::vector<AngleTerm> palindromic_decompose(const HPoly& p) {
  if (!p.is_palindromic()) {
    throw ConsistencyError("polynomial " + p.to_string() + " is not palindromic");
  }
  const int n = p.degree();
  std::vector<std::int64_t> rest = p.coeffs();
  std::vector<AngleTerm> out;
  for (int i = 0; 2 * i <= n; ++i) {
    const std::int64_t lambda = rest[static_cast<std::size_t>(i)];
    if (lambda == 0) continue;
    for (int m = i; m <= n - i; ++m) {
      rest[static_cast<std::size_t>(m)] = checked_sub(rest[static_cast<std::size_t>(m)], lambda);
    }
    out.push_back({i, n - 2 * i, lambda});
  }
  return out;
}

Key::Key(std::vector<int> ds, std::vector<int> cs) : ds_(std::move(ds)), cs_(std::move(cs)) {
  if (ds_.size() != cs_.size()) throw DomainError("key halves must have equal length");
  auto negative = [](int v) { return v < 0; };
  if (std::any_of(ds_.begin(), ds_.end(), negative) ||
      std::any_of(cs_.begin(), cs_.end(), negative)) {
    throw DomainError("key entries must be non-negative");
  }
}

int Key::degree() const {
  return 2 * std::accumulate(ds_.begin(), ds_.end(), 0) +
         std::accumulate(cs_.begin(), cs_.end(), 0) + 3 * static_cast<int>(ds_.size());
}

std::string Key::to_string() const {
  if (is_empty()) return "e";
  const bool wide = std::any_of(ds_.begin(), ds_.end(), [](int v) { return v > 9; }) ||
                    std::any_of(cs_.begin(), cs_.end(), [](int v) { return v > 9; });
  auto half = [wide](const std::vector<int>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (wide && i) s += ',';
      s += std::to_string(v[i]);
    }
    // A lone wide entry needs a comma too, or "12;34" would read as two digits per half.
    if (wide && v.size() == 1) s += ',';
    return s;
  };
  return half(ds_) + ";" + half(cs_);
}

Key Key::parse(std::string_view text) {
  if (text == "e") return Key();
  const auto semi = text.find(';');
  if (semi == std::string_view::npos) throw ParseError("key needs ';'", text.size());
  const bool wide = text.find(',') != std::string_view::npos;
  auto half = [&](std::size_t begin, std::size_t stop) {
    std::vector<int> out;
    std::size_t pos = begin;
    while (pos < stop) {
      std::size_t end = wide ? std::min(text.find(',', pos), stop) : pos + 1;
      int v = 0;
      auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + end, v);
      if (ec != std::errc() || ptr != text.data() + end || v < 0) {
        throw ParseError("bad key entry", pos);
      }
      out.push_back(v);
      pos = wide ? end + 1 : end;
    }
    return out;
  };
  std::vector<int> ds = half(0, semi);
  std::vector<int> cs = half(semi + 1, text.size());
  if (ds.size() != cs.size()) throw ParseError("key halves must have equal length", semi);
  return Key(std::move(ds), std::move(cs));
}

std::strong_ordering operator<=>(const Key& a, const Key& b) {
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  if (auto c = a.ds_ <=> b.ds_; c != 0) return c;
  return a.cs_ <=> b.cs_;
}

Key key_prime(int i, int j, const Key& k) {
  if (i < 0 || j < 0) throw DomainError("key_prime needs i, j >= 0");
  std::vector<int> ds{i};
  std::vector<int> cs{j};
  ds.insert(ds.end(), k.ds().begin(), k.ds().end());
  cs.insert(cs.end(), k.cs().begin(), k.cs().end());
  return Key(std::move(ds), std::move(cs));
}

KeyedPoly KeyedPoly::one() { return plain(HPoly::one()); }

KeyedPoly KeyedPoly::plain(const HPoly& p) {
  KeyedPoly out(p.degree());
  out.add(Key(), p);
  return out;
}

HPoly KeyedPoly::component(const Key& k) const {
  auto it = terms_.find(k);
  if (it != terms_.end()) return it->second;
  const int deg = dim_ - k.degree();
  if (deg < 0) throw DomainError("key " + k.to_string() + " too large for dimension " + std::to_string(dim_));
  return HPoly(deg);
}

bool KeyedPoly::has_only_empty_key() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_empty());
}

bool KeyedPoly::is_palindromic() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const auto& kv) { return kv.second.is_palindromic(); });
}

void KeyedPoly::add(const Key& k, const HPoly& p) {
  if (p.degree() + k.degree() != dim_) {
    throw DimensionMismatch("component of degree " + std::to_string(p.degree()) + " with key " +
                            k.to_string() + " does not fit dimension " + std::to_string(dim_));
  }
  auto it = terms_.find(k);
  if (it == terms_.end()) {
    if (!p.is_zero()) terms_.emplace(k, p);
    return;
  }
  it->second = it->second + p;
  if (it->second.is_zero()) terms_.erase(it);
}

KeyedPoly KeyedPoly::operator+(const KeyedPoly& other) const {
  if (dim_ != other.dim_) throw DimensionMismatch("adding keyed polynomials of different dimension");
  KeyedPoly out = *this;
  for (const auto& [k, p] : other.terms_) out.add(k, p);
  return out;
}

KeyedPoly KeyedPoly::operator-(const KeyedPoly& other) const { return *this + other.scaled(-1); }

KeyedPoly KeyedPoly::scaled(std::int64_t c) const {
  KeyedPoly out(dim_);
  for (const auto& [k, p] : terms_) out.add(k, p.scaled(c));
  return out;
}

KeyedPoly KeyedPoly::times(const HPoly& q) const {
  KeyedPoly out(dim_ + q.degree());
  for (const auto& [k, p] : terms_) out.add(k, p * q);
  return out;
}

KeyedPoly KeyedPoly::operator*(const KeyedPoly& other) const {
  if (has_only_empty_key()) return other.times(component(Key()));
  if (other.has_only_empty_key()) return times(other.component(Key()));
  throw DomainError("keyed product needs one factor with key e only");
}

std::string KeyedPoly::to_string() const {
  std::string out = "e: " + component(Key()).to_string();
  for (const auto& [k, p] : terms_) {
    if (k.is_empty()) continue;
    out += "  " + k.to_string() + ": " + p.to_string();
  }
  return out;
}

}  // namespace hvector
