#ifndef HVECTOR_HPOLY_HPP
#define HVECTOR_HPOLY_HPP

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace hvector {

// Homogeneous polynomial in x and y with integer coefficients.
//
// coeffs()[m] is the coefficient of x^m y^(n-m).  Printed as a bracket
// list read from pure y to pure x: [a,b,c] is a y^2 + b xy + c x^2.
class HPoly {
 public:
  // Zero polynomial of the given degree.
  explicit HPoly(int degree = 0);
  // Degree is coeffs.size() - 1.
  explicit HPoly(std::vector<std::int64_t> coeffs);

  static HPoly one() { return HPoly(std::vector<std::int64_t>{1}); }
  static HPoly x() { return HPoly(std::vector<std::int64_t>{0, 1}); }
  static HPoly y() { return HPoly(std::vector<std::int64_t>{1, 0}); }
  static HPoly monomial(int x_power, int y_power, std::int64_t c = 1);
  // (x - y)^n
  static HPoly x_minus_y_power(int n);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<std::int64_t>& coeffs() const { return coeffs_; }
  std::int64_t coeff(int x_power) const { return coeffs_.at(static_cast<std::size_t>(x_power)); }
  bool is_zero() const;
  bool is_palindromic() const;

  HPoly operator+(const HPoly& other) const;
  HPoly operator-(const HPoly& other) const;
  HPoly operator*(const HPoly& other) const;
  HPoly scaled(std::int64_t c) const;
  HPoly times_x() const;
  HPoly times_y() const;

  std::string to_string() const;

  friend bool operator==(const HPoly&, const HPoly&) = default;

 private:
  std::vector<std::int64_t> coeffs_;
};

// (xy)^i (x^j + x^(j-1) y + ... + y^j); degree 2i + j.
HPoly angle(int i, int j);

struct AngleTerm {
  int i;
  int j;
  std::int64_t coeff;
  friend bool operator==(const AngleTerm&, const AngleTerm&) = default;
};

// Unique expansion p = sum coeff * angle(i, degree - 2i); nonzero terms
// only, i ascending.  Throws ConsistencyError if p is not palindromic.
std::vector<AngleTerm> palindromic_decompose(const HPoly& p);

// Key ((d_1..d_r), (c_1..c_r)) indexing the symbol w_k.
// Degree 2 sum(d) + sum(c) + 3r; the empty key e has degree 0, w_e = 1.
class Key {
 public:
  Key() = default;
  Key(std::vector<int> ds, std::vector<int> cs);

  // Inverse of to_string(): "e", "132;021", "10,3;0,2".
  static Key parse(std::string_view text);

  const std::vector<int>& ds() const { return ds_; }
  const std::vector<int>& cs() const { return cs_; }
  std::size_t length() const { return ds_.size(); }
  bool is_empty() const { return ds_.empty(); }
  int degree() const;

  // "e" for the empty key, else digits of ds, ';', digits of cs.  When an
  // entry exceeds 9 both halves are comma-separated.
  std::string to_string() const;

  // Canonical order: degree, then ds, then cs.
  friend std::strong_ordering operator<=>(const Key& a, const Key& b);
  friend bool operator==(const Key&, const Key&) = default;

 private:
  std::vector<int> ds_;
  std::vector<int> cs_;
};

// k' = ((i, d_1..d_r), (j, c_1..c_r)); degree(k) + 2i + j + 3.
Key key_prime(int i, int j, const Key& k);

// Finite sum of h_k w_k with deg h_k + deg k = dim for every key.
class KeyedPoly {
 public:
  explicit KeyedPoly(int dim) : dim_(dim) {}
  // dim 0, value 1 = w_e.
  static KeyedPoly one();
  static KeyedPoly plain(const HPoly& p);

  int dim() const { return dim_; }
  const std::map<Key, HPoly>& terms() const { return terms_; }
  // Component h_k; zero of degree dim - deg k when absent.
  HPoly component(const Key& k) const;
  bool has_only_empty_key() const;
  bool is_palindromic() const;

  void add(const Key& k, const HPoly& p);
  KeyedPoly operator+(const KeyedPoly& other) const;
  KeyedPoly operator-(const KeyedPoly& other) const;
  KeyedPoly scaled(std::int64_t c) const;
  // Multiplies every component by a plain polynomial.
  KeyedPoly times(const HPoly& p) const;
  // Defined only when one factor has key e exclusively; DomainError
  // otherwise.
  KeyedPoly operator*(const KeyedPoly& other) const;

  // "e: [1,2,1]  0;0: [1]".  The e component is always shown.
  std::string to_string() const;

  friend bool operator==(const KeyedPoly&, const KeyedPoly&) = default;

 private:
  int dim_;
  std::map<Key, HPoly> terms_;  // zero components never stored
};

}  // namespace hvector

#endif  // HVECTOR_HPOLY_HPP
