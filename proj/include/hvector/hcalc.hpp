#ifndef HVECTOR_HCALC_HPP
#define HVECTOR_HCALC_HPP

#include <cstdint>
#include <vector>

#include "hvector/cd.hpp"
#include "hvector/expr.hpp"
#include "hvector/hpoly.hpp"
#include "hvector/lattice.hpp"
#include "hvector/linalg.hpp"

namespace hvector {

// The complete keyed h-vector and its g companion on CD-words.
//
//   h(pt) = 1                     g(pt) = y
//   h(C w) = g(w) + x h(w)        g(C w) = y g(w)
//   h(D w) = xy h(w)              g(D w) = sum over <i,j> w_k in h(w) of
//                                          (xy)^(i+1) y^(j+1) w_k + w_k'
//
// with k' = key_prime(i, j, k).  g of a degree-d word has dimension d + 1.
// Results are memoised per word for the life of the process.
KeyedPoly g_of_word(const CDWord& w);
KeyedPoly h_of_word(const CDWord& w);

KeyedPoly g_of_vector(const CDVector& v);
KeyedPoly h_of_vector(const CDVector& v);

// Toric h-vector: the same recursion with g(D w) = xy g(w) and no keys.
HPoly toric_g_of_word(const CDWord& w);
HPoly toric_h_of_word(const CDWord& w);
HPoly toric_h_of_vector(const CDVector& v);

// h of any flag vector in the CD span (dim >= 0).
KeyedPoly h_of_flag(const FlagVector& f);
HPoly toric_h_of_flag(const FlagVector& f);

// Chain-counted flag vector, CD coordinates, then h by linearity.
KeyedPoly h_of_polytope(const Expr& e, const LatticeLimits& limits = {});

// Sum over nonempty faces of (x - y)^dim(face) g(link).  The polytope
// itself contributes (x - y)^d.
KeyedPoly h_via_links(const Expr& e, const LatticeLimits& limits = {});

// Any expression: words over {C, D, I} are expanded symbolically, others
// go through evaluate_flag.
KeyedPoly h_of_expr(const Expr& e, const LatticeLimits& limits = {});
HPoly toric_h_of_expr(const Expr& e, const LatticeLimits& limits = {});

// Sum over 0 <= i <= d of f_i (x - y)^i y^(d-i), with f_d = 1 for the
// polytope itself.  Agrees with h on simple polytopes.
HPoly simple_h(const FlagVector& f);

// Coordinate (i, j, k) of the basis element <i,j> w_k.
struct HCoordinate {
  int i;
  int j;
  Key key;
  friend bool operator==(const HCoordinate&, const HCoordinate&) = default;
};

// All (i, j, k) with 2i + j + deg k = d, ordered by key (canonical key
// order, which starts with degree) and then i ascending.
std::vector<HCoordinate> h_coordinate_basis(int d);

// lambda_{ijk} of a palindromic keyed polynomial over h_coordinate_basis.
std::vector<std::int64_t> h_coordinates(const KeyedPoly& kp);

// Inverse of h_coordinates.
KeyedPoly from_h_coordinates(int d, const std::vector<std::int64_t>& lambda);

// Rows: h_coordinates(h_of_word(W)) for the degree-d words in canonical
// order.  Square, determinant +-1.
IntMatrix h_matrix(int d);

// Recovers the flag vector from an h-value.  Throws SpanError when kp is
// not h of any integer combination of CD-words.
FlagVector flag_from_h(const KeyedPoly& kp);
// CD coordinates of an h-value.
CDVector cd_from_h(const KeyedPoly& kp);

}  // namespace hvector

#endif  // HVECTOR_HCALC_HPP
