#ifndef HVECTOR_CD_HPP
#define HVECTOR_CD_HPP

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "hvector/flag.hpp"
#include "hvector/linalg.hpp"

namespace hvector {

// Word over {C, D}, read as operators applied right to left to a point:
// "CD" is C(D(pt)).  Degree counts C as 1 and D as 2.
class CDWord {
 public:
  CDWord() = default;
  explicit CDWord(std::string letters);

  const std::string& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }
  int degree() const;
  char first() const { return letters_.front(); }
  // The word with its outermost letter removed.
  CDWord rest() const { return CDWord(letters_.substr(1), 0); }
  CDWord prepend(char letter) const;

  // "pt" for the empty word, otherwise e.g. "CDC(pt)".
  std::string applied_to_point() const;

  // Lexicographic with C < D.
  friend auto operator<=>(const CDWord&, const CDWord&) = default;

 private:
  CDWord(std::string letters, int) : letters_(std::move(letters)) {}
  std::string letters_;
};

// Number of CD-words of degree d: 1, 1, 2, 3, 5, 8, ...
std::uint64_t cd_word_count(int d);
// All words of degree d in canonical order.
std::vector<CDWord> cd_words(int d);

// Integer combination of CD-words of one degree.  Zero coefficients are
// dropped on construction.
class CDVector {
 public:
  explicit CDVector(int degree) : degree_(degree) {}
  CDVector(int degree, std::map<CDWord, std::int64_t> coeffs);
  static CDVector unit(const CDWord& w);

  int degree() const { return degree_; }
  const std::map<CDWord, std::int64_t>& coeffs() const { return coeffs_; }
  std::int64_t coeff(const CDWord& w) const;
  bool is_zero() const { return coeffs_.empty(); }

  void add(const CDWord& w, std::int64_t c);
  CDVector operator+(const CDVector& other) const;
  CDVector operator-(const CDVector& other) const;
  CDVector scaled(std::int64_t c) const;
  // Applies C or D on the left of every word.
  CDVector prepend(char letter) const;

  // "CCD - CDC", "2*DC + CCC", "0".
  std::string to_string() const;

  friend bool operator==(const CDVector&, const CDVector&) = default;

 private:
  int degree_;
  std::map<CDWord, std::int64_t> coeffs_;
};

FlagVector word_flag(const CDWord& w);
FlagVector vector_flag(const CDVector& v);

// I applied to v, rewritten in CD-words: I(Cw) = CCw + Dw,
// I(Dw) = D I(w), I(pt) = C.
CDVector expand_I(const CDVector& v);

// CD-vector for a word over {C, D, I} applied to a point.
CDVector apply_letters(std::string_view letters);

// Rows: word_flag of each degree-d word in canonical order.
// Columns: every subset of {0..d-1} in canonical DimSet order.
IntMatrix basis_matrix(int d);

// Exact coordinates of f in the CD basis of its degree.  Throws SpanError
// when f is not an integer combination of CD-word flag vectors.
CDVector to_cd_basis(const FlagVector& f);

}  // namespace hvector

#endif  // HVECTOR_CD_HPP
