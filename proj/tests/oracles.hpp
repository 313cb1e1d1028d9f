// Test-only reference computations, independent of the library's
// CD-word machinery and elimination code.
#ifndef HVECTOR_TESTS_ORACLES_HPP
#define HVECTOR_TESTS_ORACLES_HPP

#include <map>
#include <optional>
#include <random>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "hvector/cd.hpp"
#include "hvector/flag.hpp"
#include "hvector/hpoly.hpp"
#include "hvector/lattice.hpp"
#include "hvector/linalg.hpp"

namespace oracle {

using Rational = boost::multiprecision::cpp_rational;

// Toric h-vector straight from the face lattice: for each face a the
// link [a, top] has h = sum over faces b > a of (x - y)^(dim b - dim a - 1)
// g(link of b), where g of an empty link is 1 and otherwise
// g(L) = sum_{i <= m/2} (a_i - a_{i-1}) x^i y^(m+1-i) for h(L) = sum a_i x^i y^(m-i).
inline hvector::HPoly toric_h_from_lattice(const hvector::FaceLattice& lattice) {
  using hvector::HPoly;
  const std::size_t n = lattice.size();
  // Strict upper sets, including the top.
  std::vector<std::vector<std::size_t>> above(n);
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return lattice.face(a).dim > lattice.face(b).dim;
  });
  for (std::size_t a : order) {
    std::vector<bool> seen(n, false);
    for (std::size_t b : lattice.face(a).up) {
      if (!seen[b]) { seen[b] = true; above[a].push_back(b); }
      for (std::size_t c : above[b]) {
        if (!seen[c]) { seen[c] = true; above[a].push_back(c); }
      }
    }
  }
  std::vector<std::optional<HPoly>> h(n), g(n);
  for (std::size_t a : order) {
    const int m = lattice.dim() - lattice.face(a).dim - 1;
    if (a == lattice.top()) {
      h[a] = HPoly::one();  // placeholder, never used as a link h
      g[a] = HPoly::one();
      continue;
    }
    HPoly sum(m);
    for (std::size_t b : above[a]) {
      const int k = lattice.face(b).dim - lattice.face(a).dim - 1;
      sum = sum + HPoly::x_minus_y_power(k) * *g[b];
    }
    h[a] = sum;
    std::vector<std::int64_t> gc(static_cast<std::size_t>(m) + 2, 0);
    for (int i = 0; 2 * i <= m; ++i) {
      gc[static_cast<std::size_t>(i)] = sum.coeff(i) - (i > 0 ? sum.coeff(i - 1) : 0);
    }
    g[a] = HPoly(gc);
  }
  return *h[lattice.bottom()];
}

// Solves x * A = b over the rationals by plain Gauss-Jordan; nullopt if
// inconsistent.  A must have full row rank.
inline std::optional<std::vector<Rational>> solve_left_rational(const hvector::IntMatrix& a,
                                                                const std::vector<std::int64_t>& b) {
  const std::size_t n = a.rows(), m = a.cols();
  // Equations: for each column c, sum_r x_r a(r, c) = b[c].
  std::vector<std::vector<Rational>> eq(m, std::vector<Rational>(n + 1));
  for (std::size_t c = 0; c < m; ++c) {
    for (std::size_t r = 0; r < n; ++r) eq[c][r] = a(r, c);
    eq[c][n] = b[c];
  }
  std::size_t row = 0;
  std::vector<std::size_t> pivot_row(n, m);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = row;
    while (p < m && eq[p][col] == 0) ++p;
    if (p == m) return std::nullopt;
    std::swap(eq[p], eq[row]);
    const Rational piv = eq[row][col];
    for (auto& v : eq[row]) v /= piv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == row || eq[i][col] == 0) continue;
      const Rational factor = eq[i][col];
      for (std::size_t j = 0; j <= n; ++j) eq[i][j] -= factor * eq[row][j];
    }
    pivot_row[col] = row++;
  }
  for (std::size_t i = row; i < m; ++i) {
    if (eq[i][n] != 0) return std::nullopt;
  }
  std::vector<Rational> x(n);
  for (std::size_t col = 0; col < n; ++col) x[col] = eq[pivot_row[col]][n];
  return x;
}

// Keyed g/h recursion written directly from its defining rules.  With
// flip_bracket set, the D rule uses (xy)^(i+1) x^(j+1) in place of
// (xy)^(i+1) y^(j+1), which reads the bracket from the wrong end.
class KeyedRecursion {
 public:
  explicit KeyedRecursion(bool flip_bracket = false) : flip_(flip_bracket) {}

  hvector::KeyedPoly h(const std::string& w) {
    using hvector::HPoly;
    using hvector::KeyedPoly;
    if (auto it = h_memo_.find(w); it != h_memo_.end()) return it->second;
    KeyedPoly out = KeyedPoly::one();
    if (!w.empty()) {
      const std::string rest = w.substr(1);
      if (w[0] == 'C') {
        out = g(rest) + h(rest).times(HPoly::x());
      } else {
        out = h(rest).times(hvector::angle(1, 0));
      }
    }
    h_memo_.emplace(w, out);
    return out;
  }

  hvector::KeyedPoly g(const std::string& w) {
    using hvector::HPoly;
    using hvector::KeyedPoly;
    if (auto it = g_memo_.find(w); it != g_memo_.end()) return it->second;
    KeyedPoly out = KeyedPoly::plain(HPoly::y());
    if (!w.empty()) {
      const std::string rest = w.substr(1);
      if (w[0] == 'C') {
        out = g(rest).times(HPoly::y());
      } else {
        const KeyedPoly hv = h(rest);
        out = KeyedPoly(hv.dim() + 3);
        for (const auto& [k, p] : hv.terms()) {
          for (const auto& t : hvector::palindromic_decompose(p)) {
            const HPoly tail = flip_ ? HPoly::monomial(t.j + 1, 0) : HPoly::monomial(0, t.j + 1);
            KeyedPoly part(out.dim());
            part.add(k, (hvector::angle(t.i + 1, 0) * tail).scaled(t.coeff));
            part.add(hvector::key_prime(t.i, t.j, k), HPoly::one().scaled(t.coeff));
            out = out + part;
          }
        }
      }
    }
    g_memo_.emplace(w, out);
    return out;
  }

  hvector::KeyedPoly h(const hvector::CDVector& v) {
    hvector::KeyedPoly out(v.degree());
    for (const auto& [w, c] : v.coeffs()) out = out + h(w.letters()).scaled(c);
    return out;
  }

 private:
  bool flip_;
  std::map<std::string, hvector::KeyedPoly> g_memo_, h_memo_;
};

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(20091130);
  return gen;
}

inline std::int64_t random_int(std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng());
}

}  // namespace oracle

#endif  // HVECTOR_TESTS_ORACLES_HPP
