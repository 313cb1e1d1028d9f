#include "hvector/hcalc.hpp"

#include <algorithm>
#include <memory>

#include "hvector/error.hpp"
#include "memo.hpp"

namespace hvector {

namespace {

using detail::MemoTable;

MemoTable<KeyedPoly>& g_memo() {
  static MemoTable<KeyedPoly> memo;
  return memo;
}

MemoTable<KeyedPoly>& h_memo() {
  static MemoTable<KeyedPoly> memo;
  return memo;
}

MemoTable<HPoly>& toric_g_memo() {
  static MemoTable<HPoly> memo;
  return memo;
}

MemoTable<HPoly>& toric_h_memo() {
  static MemoTable<HPoly> memo;
  return memo;
}

// g(D v) from h(v): each <i,j> w_k becomes (xy)^(i+1) y^(j+1) w_k + w_k'.
KeyedPoly g_of_d_applied(const KeyedPoly& h) {
  KeyedPoly out(h.dim() + 3);
  for (const auto& [k, p] : h.terms()) {
    for (const AngleTerm& t : palindromic_decompose(p)) {
      out.add(k, HPoly::monomial(t.i + 1, t.i + t.j + 2, t.coeff));
      out.add(key_prime(t.i, t.j, k), HPoly::monomial(0, 0, t.coeff));
    }
  }
  return out;
}

}  // namespace

KeyedPoly g_of_word(const CDWord& w) {
  return g_memo().get(w.letters(), [&] {
    if (w.empty()) return KeyedPoly::plain(HPoly::y());
    if (w.first() == 'C') return g_of_word(w.rest()).times(HPoly::y());
    return g_of_d_applied(h_of_word(w.rest()));
  });
}

KeyedPoly h_of_word(const CDWord& w) {
  return h_memo().get(w.letters(), [&] {
    if (w.empty()) return KeyedPoly::one();
    const CDWord rest = w.rest();
    KeyedPoly h = w.first() == 'C'
                      ? g_of_word(rest) + h_of_word(rest).times(HPoly::x())
                      : h_of_word(rest).times(HPoly::monomial(1, 1));
    if (!h.is_palindromic()) {
      throw ConsistencyError("h(" + w.applied_to_point() + ") = " + h.to_string() +
                             " is not palindromic");
    }
    return h;
  });
}

KeyedPoly g_of_vector(const CDVector& v) {
  KeyedPoly out(v.degree() + 1);
  for (const auto& [w, c] : v.coeffs()) out = out + g_of_word(w).scaled(c);
  return out;
}

KeyedPoly h_of_vector(const CDVector& v) {
  KeyedPoly out(v.degree());
  for (const auto& [w, c] : v.coeffs()) out = out + h_of_word(w).scaled(c);
  return out;
}

HPoly toric_g_of_word(const CDWord& w) {
  return toric_g_memo().get(w.letters(), [&] {
    if (w.empty()) return HPoly::y();
    if (w.first() == 'C') return toric_g_of_word(w.rest()).times_y();
    return toric_g_of_word(w.rest()) * HPoly::monomial(1, 1);
  });
}

HPoly toric_h_of_word(const CDWord& w) {
  return toric_h_memo().get(w.letters(), [&] {
    if (w.empty()) return HPoly::one();
    const CDWord rest = w.rest();
    if (w.first() == 'C') return toric_g_of_word(rest) + toric_h_of_word(rest).times_x();
    return toric_h_of_word(rest) * HPoly::monomial(1, 1);
  });
}

HPoly toric_h_of_vector(const CDVector& v) {
  HPoly out(v.degree());
  for (const auto& [w, c] : v.coeffs()) out = out + toric_h_of_word(w).scaled(c);
  return out;
}

KeyedPoly h_of_flag(const FlagVector& f) { return h_of_vector(to_cd_basis(f)); }

HPoly toric_h_of_flag(const FlagVector& f) { return toric_h_of_vector(to_cd_basis(f)); }

KeyedPoly h_of_polytope(const Expr& e, const LatticeLimits& limits) {
  return h_of_flag(chain_count_flag(build_lattice(e, limits), limits));
}

KeyedPoly h_via_links(const Expr& e, const LatticeLimits& limits) {
  const FaceLattice lattice = build_lattice(e, limits);
  const int d = lattice.dim();
  // Faces of one dimension share the factor (x - y)^dim, so by linearity
  // of g their links can be summed first: that sum is the total link
  // vector component of grade d - 1 - dim.
  const GradedFlagVector ell = total_link_vector(lattice, limits);
  KeyedPoly h = KeyedPoly::plain(HPoly::x_minus_y_power(d).scaled(ell.at(-1).get(DimSet{})));
  for (const auto& [grade, links] : ell.components()) {
    if (grade < 0) continue;
    const KeyedPoly g = g_of_vector(to_cd_basis(links));
    h = h + g.times(HPoly::x_minus_y_power(d - 1 - grade));
  }
  return h;
}

KeyedPoly h_of_expr(const Expr& e, const LatticeLimits& limits) {
  if (auto word = e.as_word()) return h_of_vector(apply_letters(*word));
  return h_of_flag(evaluate_flag(e, limits));
}

HPoly toric_h_of_expr(const Expr& e, const LatticeLimits& limits) {
  if (auto word = e.as_word()) return toric_h_of_vector(apply_letters(*word));
  return toric_h_of_flag(evaluate_flag(e, limits));
}

HPoly simple_h(const FlagVector& f) {
  const int d = f.dim();
  if (d < 0) throw DomainError("simple_h needs a nonempty polytope");
  HPoly h = HPoly::x_minus_y_power(d);  // the polytope itself
  HPoly y_power = HPoly::one();
  for (int i = d - 1; i >= 0; --i) {
    y_power = y_power.times_y();
    h = h + (HPoly::x_minus_y_power(i) * y_power).scaled(f.get(DimSet{i}));
  }
  return h;
}

namespace {

void collect_keys(int max_degree, const Key& k, std::vector<Key>& out) {
  out.push_back(k);
  for (int i = 0; k.degree() + 2 * i + 3 <= max_degree; ++i) {
    for (int j = 0; k.degree() + 2 * i + j + 3 <= max_degree; ++j) {
      collect_keys(max_degree, key_prime(i, j, k), out);
    }
  }
}

MemoTable<std::shared_ptr<const std::vector<HCoordinate>>>& basis_memo() {
  static MemoTable<std::shared_ptr<const std::vector<HCoordinate>>> memo;
  return memo;
}

MemoTable<std::shared_ptr<const LeftSolver>>& h_solver_memo() {
  static MemoTable<std::shared_ptr<const LeftSolver>> memo;
  return memo;
}

std::size_t coordinate_index(const std::vector<HCoordinate>& basis, const HCoordinate& c) {
  // Sorted by (key, i).
  auto it = std::lower_bound(basis.begin(), basis.end(), c, [](const HCoordinate& a, const HCoordinate& b) {
    if (a.key != b.key) return a.key < b.key;
    return a.i < b.i;
  });
  if (it == basis.end() || !(*it == c)) throw DomainError("coordinate outside the basis");
  return static_cast<std::size_t>(it - basis.begin());
}

}  // namespace

std::vector<HCoordinate> h_coordinate_basis(int d) {
  if (d < 0) throw DomainError("h_coordinate_basis needs d >= 0");
  return *basis_memo().get(std::to_string(d), [d] {
    std::vector<Key> keys;
    collect_keys(d, Key(), keys);
    std::sort(keys.begin(), keys.end());
    auto basis = std::make_shared<std::vector<HCoordinate>>();
    for (const Key& k : keys) {
      const int rest = d - k.degree();
      for (int i = 0; 2 * i <= rest; ++i) basis->push_back({i, rest - 2 * i, k});
    }
    return std::shared_ptr<const std::vector<HCoordinate>>(std::move(basis));
  });
}

std::vector<std::int64_t> h_coordinates(const KeyedPoly& kp) {
  const auto basis = h_coordinate_basis(kp.dim());
  std::vector<std::int64_t> lambda(basis.size(), 0);
  for (const auto& [k, p] : kp.terms()) {
    for (const AngleTerm& t : palindromic_decompose(p)) {
      lambda[coordinate_index(basis, {t.i, t.j, k})] = t.coeff;
    }
  }
  return lambda;
}

KeyedPoly from_h_coordinates(int d, const std::vector<std::int64_t>& lambda) {
  const auto basis = h_coordinate_basis(d);
  if (lambda.size() != basis.size()) throw DimensionMismatch("wrong number of h coordinates");
  KeyedPoly out(d);
  for (std::size_t n = 0; n < basis.size(); ++n) {
    if (lambda[n] != 0) out.add(basis[n].key, angle(basis[n].i, basis[n].j).scaled(lambda[n]));
  }
  return out;
}

IntMatrix h_matrix(int d) {
  const auto words = cd_words(d);
  const auto basis = h_coordinate_basis(d);
  if (words.size() != basis.size()) {
    throw ConsistencyError("degree " + std::to_string(d) + " has " + std::to_string(words.size()) +
                           " CD-words but " + std::to_string(basis.size()) + " h coordinates");
  }
  IntMatrix m(words.size(), basis.size());
  for (std::size_t r = 0; r < words.size(); ++r) {
    const auto row = h_coordinates(h_of_word(words[r]));
    for (std::size_t c = 0; c < row.size(); ++c) m(r, c) = row[c];
  }
  return m;
}

CDVector cd_from_h(const KeyedPoly& kp) {
  const int d = kp.dim();
  if (d < 0) throw SpanError("no h-value has negative dimension");
  if (!kp.is_palindromic()) throw SpanError("not an h-value: " + kp.to_string() + " is not palindromic");
  auto solver = h_solver_memo().get(std::to_string(d), [d] {
    return std::make_shared<const LeftSolver>(h_matrix(d));
  });
  const auto x = solver->solve(h_coordinates(kp));
  if (!x) throw SpanError("not an h-value: " + kp.to_string());
  const auto words = cd_words(d);
  CDVector out(d);
  for (std::size_t i = 0; i < words.size(); ++i) out.add(words[i], (*x)[i]);
  return out;
}

FlagVector flag_from_h(const KeyedPoly& kp) { return vector_flag(cd_from_h(kp)); }

}  // namespace hvector
