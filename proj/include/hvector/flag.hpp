#ifndef HVECTOR_FLAG_HPP
#define HVECTOR_FLAG_HPP

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace hvector {

// Largest dimension for which a flag vector may be materialised.  Dense
// operations enumerate all 2^d dimension sets.
inline constexpr int kMaxFlagDim = 30;

// A set of face dimensions {s_1 < ... < s_m}, stored as a bitmask.
//
// Canonical order: by size, then lexicographically on the sorted elements,
// so that f_{}, f_{0}, f_{1}, ..., f_{01}, f_{02}, ... come out in the
// usual order.
class DimSet {
 public:
  DimSet() = default;
  DimSet(std::initializer_list<int> elems);

  static DimSet from_mask(std::uint64_t mask) { return DimSet(mask, 0); }
  static DimSet from_elements(std::span<const int> elems);

  std::uint64_t mask() const { return mask_; }
  bool empty() const { return mask_ == 0; }
  std::size_t size() const;
  bool contains(int s) const;
  // Largest element; the set must be nonempty.
  int max() const;
  std::vector<int> elements() const;

  std::string to_string() const;

  friend bool operator==(DimSet a, DimSet b) { return a.mask_ == b.mask_; }
  friend std::strong_ordering operator<=>(DimSet a, DimSet b);

 private:
  DimSet(std::uint64_t mask, int) : mask_(mask) {}
  std::uint64_t mask_ = 0;
};

// All subsets of {0, ..., d-1} in canonical order.
std::vector<DimSet> all_dimsets(int d);

// Flag vector of a (possibly virtual) polytope of dimension d >= -1.
//
// Entry f_S counts chains of proper nonempty faces whose dimensions are
// exactly S.  Storage is sparse; absent entries are zero.  Nothing here
// claims the values come from a real polytope: D applied to a point has
// f_{} = 0.
class FlagVector {
 public:
  using Entries = std::map<DimSet, std::int64_t>;

  // Zero vector of the given dimension.
  explicit FlagVector(int dim);
  FlagVector(int dim, Entries entries);

  // f(empty polytope): dim -1, f_{} = 1.
  static FlagVector empty_polytope();
  static FlagVector point();

  int dim() const { return dim_; }
  std::int64_t get(DimSet s) const;
  std::int64_t get(std::initializer_list<int> elems) const { return get(DimSet(elems)); }
  const Entries& entries() const { return entries_; }
  bool is_zero() const { return entries_.empty(); }

  FlagVector operator+(const FlagVector& other) const;
  FlagVector operator-(const FlagVector& other) const;
  FlagVector scaled(std::int64_t c) const;

  // "{}: 1\n{0}: 2\n..." over every dimension set, zeros included.
  std::string to_string() const;

  friend bool operator==(const FlagVector&, const FlagVector&) = default;

 private:
  int dim_;
  Entries entries_;
};

// Lookup under the extended convention: S may contain -1 (the empty face)
// and dim (the polytope itself).  Both are deleted before lookup, since
// every chain extends uniquely by them.  Duplicates collapse.
std::int64_t extended_get(const FlagVector& f, std::span<const int> elems);
inline std::int64_t extended_get(const FlagVector& f, std::initializer_list<int> elems) {
  return extended_get(f, std::span<const int>(elems.begin(), elems.size()));
}

struct FlagTerm {
  std::int64_t coeff;
  FlagVector flag;
};

// Entrywise integer combination.  All terms must share one dimension.
FlagVector linear_combine(std::span<const FlagTerm> terms);

// Pyramid C, prism I, D = IC - CC and polar duality, extended linearly to
// virtual flag vectors.
FlagVector pyramid_flag(const FlagVector& f);
FlagVector prism_flag(const FlagVector& f);
FlagVector d_flag(const FlagVector& f);
FlagVector dual_flag(const FlagVector& f);

// Flag vectors indexed by grade; the component at grade i has dim i.
// Used for the total link vector, which has a grade -1 component.
class GradedFlagVector {
 public:
  GradedFlagVector() = default;

  // Adds f into the component at grade f.dim().
  void add(const FlagVector& f);
  // Component at grade i (zero of dim i when absent).
  FlagVector at(int grade) const;
  const std::map<int, FlagVector>& components() const { return components_; }

  GradedFlagVector operator+(const GradedFlagVector& other) const;
  GradedFlagVector scaled(std::int64_t c) const;

  friend bool operator==(const GradedFlagVector&, const GradedFlagVector&) = default;

 private:
  std::map<int, FlagVector> components_;  // zero components never stored
};

// Pyramid applied componentwise; grade i moves to grade i+1.
GradedFlagVector c_on_graded(const GradedFlagVector& l);

}  // namespace hvector

#endif  // HVECTOR_FLAG_HPP
