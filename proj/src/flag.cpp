#include "hvector/flag.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "hvector/checked.hpp"
#include "hvector/error.hpp"

namespace hvector {

namespace {

constexpr std::uint64_t low_bits(int n) {
  return n <= 0 ? 0 : (n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
}

void check_dim(int dim) {
  if (dim < -1 || dim > kMaxFlagDim) {
    throw DomainError("flag vector dimension " + std::to_string(dim) + " out of range");
  }
}

void accumulate(FlagVector::Entries& entries, DimSet s, std::int64_t value) {
  if (value == 0) return;
  auto [it, inserted] = entries.try_emplace(s, value);
  if (!inserted) {
    it->second = checked_add(it->second, value);
    if (it->second == 0) entries.erase(it);
  }
}

}  // namespace

DimSet::DimSet(std::initializer_list<int> elems)
    : DimSet(from_elements(std::span<const int>(elems.begin(), elems.size()))) {}

DimSet DimSet::from_elements(std::span<const int> elems) {
  std::uint64_t mask = 0;
  int prev = -1;
  for (int s : elems) {
    if (s < 0 || s >= 63) throw DomainError("dimension " + std::to_string(s) + " not storable");
    if (s <= prev) throw DomainError("dimension set must be strictly increasing");
    mask |= std::uint64_t{1} << s;
    prev = s;
  }
  return from_mask(mask);
}

std::size_t DimSet::size() const { return static_cast<std::size_t>(std::popcount(mask_)); }

bool DimSet::contains(int s) const {
  return s >= 0 && s < 64 && ((mask_ >> s) & 1U) != 0;
}

int DimSet::max() const {
  if (mask_ == 0) throw DomainError("max of empty dimension set");
  return 63 - std::countl_zero(mask_);
}

std::vector<int> DimSet::elements() const {
  std::vector<int> out;
  for (std::uint64_t m = mask_; m != 0; m &= m - 1) out.push_back(std::countr_zero(m));
  return out;
}

std::string DimSet::to_string() const {
  std::string out = "{";
  bool first = true;
  for (int s : elements()) {
    if (!first) out += ',';
    out += std::to_string(s);
    first = false;
  }
  return out + "}";
}

std::strong_ordering operator<=>(DimSet a, DimSet b) {
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  if (a.mask_ == b.mask_) return std::strong_ordering::equal;
  // Equal sizes: the sorted lists first differ at the lowest differing bit,
  // and the set holding that bit has the smaller element there.
  std::uint64_t lowest = (a.mask_ ^ b.mask_) & (~(a.mask_ ^ b.mask_) + 1);
  return (a.mask_ & lowest) != 0 ? std::strong_ordering::less : std::strong_ordering::greater;
}

std::vector<DimSet> all_dimsets(int d) {
  if (d < 0) return {DimSet{}};
  if (d > kMaxFlagDim) throw DomainError("too many dimension sets");
  std::vector<DimSet> out;
  out.reserve(std::size_t{1} << d);
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << d); ++m) out.push_back(DimSet::from_mask(m));
  std::sort(out.begin(), out.end());
  return out;
}

FlagVector::FlagVector(int dim) : dim_(dim) { check_dim(dim); }

FlagVector::FlagVector(int dim, Entries entries) : dim_(dim) {
  check_dim(dim);
  const std::uint64_t allowed = low_bits(dim);
  for (const auto& [s, v] : entries) {
    if ((s.mask() & ~allowed) != 0) {
      throw DomainError("dimension set " + s.to_string() + " not inside 0.." +
                        std::to_string(dim - 1));
    }
    if (v != 0) entries_.emplace(s, v);
  }
}

FlagVector FlagVector::empty_polytope() { return FlagVector(-1, {{DimSet{}, 1}}); }

FlagVector FlagVector::point() { return FlagVector(0, {{DimSet{}, 1}}); }

std::int64_t FlagVector::get(DimSet s) const {
  auto it = entries_.find(s);
  return it == entries_.end() ? 0 : it->second;
}

FlagVector FlagVector::operator+(const FlagVector& other) const {
  if (dim_ != other.dim_) throw DimensionMismatch("adding flag vectors of different dimensions");
  Entries out = entries_;
  for (const auto& [s, v] : other.entries_) accumulate(out, s, v);
  return FlagVector(dim_, std::move(out));
}

FlagVector FlagVector::operator-(const FlagVector& other) const {
  return *this + other.scaled(-1);
}

FlagVector FlagVector::scaled(std::int64_t c) const {
  Entries out;
  if (c != 0) {
    for (const auto& [s, v] : entries_) out.emplace(s, checked_mul(c, v));
  }
  return FlagVector(dim_, std::move(out));
}

std::string FlagVector::to_string() const {
  std::ostringstream os;
  for (DimSet s : all_dimsets(dim_)) os << s.to_string() << ": " << get(s) << '\n';
  return os.str();
}

std::int64_t extended_get(const FlagVector& f, std::span<const int> elems) {
  std::uint64_t mask = 0;
  int prev = -2;
  for (int s : elems) {
    if (s <= prev) throw DomainError("dimension set must be strictly increasing");
    prev = s;
    if (s < -1 || s > f.dim()) {
      throw DomainError("extended dimension " + std::to_string(s) + " outside -1.." +
                        std::to_string(f.dim()));
    }
    if (s >= 0 && s < f.dim()) mask |= std::uint64_t{1} << s;
  }
  return f.get(DimSet::from_mask(mask));
}

FlagVector linear_combine(std::span<const FlagTerm> terms) {
  if (terms.empty()) throw DomainError("linear combination of no terms has no dimension");
  const int dim = terms.front().flag.dim();
  FlagVector::Entries out;
  for (const auto& term : terms) {
    if (term.flag.dim() != dim) throw DimensionMismatch("linear combination of mixed dimensions");
    if (term.coeff == 0) continue;
    for (const auto& [s, v] : term.flag.entries()) accumulate(out, s, checked_mul(term.coeff, v));
  }
  return FlagVector(dim, std::move(out));
}

namespace {

// Chains of a pyramid or prism over a polytope of dimension d split at a
// threshold t: elements of S below t form a lower chain of faces of the
// base, those at or above t an upper chain whose base faces have one less
// dimension.  The lower top and upper bottom may coincide in the base.
// Visits (lower mask, base mask) for every threshold.
template <typename Visit>
void for_each_split(std::uint64_t s, int d, Visit&& visit) {
  const std::uint64_t drop_top = d >= 0 ? ~(std::uint64_t{1} << d) : ~std::uint64_t{0};
  auto emit = [&](int t) {
    const std::uint64_t lower = s & low_bits(t);
    const std::uint64_t upper = s & ~low_bits(t);
    visit(lower, upper, ((lower | (upper >> 1)) & drop_top));
  };
  emit(0);
  for (std::uint64_t m = s; m != 0; m &= m - 1) emit(std::countr_zero(m) + 1);
}

}  // namespace

FlagVector pyramid_flag(const FlagVector& f) {
  const int d = f.dim();
  if (d + 1 > kMaxFlagDim) throw DomainError("pyramid dimension too large");
  FlagVector::Entries out;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << (d + 1)); ++s) {
    std::int64_t total = 0;
    for_each_split(s, d, [&](std::uint64_t, std::uint64_t, std::uint64_t base) {
      total = checked_add(total, f.get(DimSet::from_mask(base)));
    });
    if (total != 0) out.emplace(DimSet::from_mask(s), total);
  }
  return FlagVector(d + 1, std::move(out));
}

FlagVector prism_flag(const FlagVector& f) {
  const int d = f.dim();
  if (d < 0) throw DomainError("prism over the empty polytope is undefined");
  if (d + 1 > kMaxFlagDim) throw DomainError("prism dimension too large");
  FlagVector::Entries out;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << (d + 1)); ++s) {
    std::int64_t total = 0;
    for_each_split(s, d, [&](std::uint64_t lower, std::uint64_t upper, std::uint64_t base) {
      // With no lower chain the upper chain starts at a vertex times the
      // segment, so its base face cannot be empty.
      if (lower == 0 && (upper & 1U) != 0) return;
      const std::int64_t endpoints = lower == 0 ? 1 : 2;
      checked_fma(total, endpoints, f.get(DimSet::from_mask(base)));
    });
    if (total != 0) out.emplace(DimSet::from_mask(s), total);
  }
  return FlagVector(d + 1, std::move(out));
}

FlagVector d_flag(const FlagVector& f) {
  const FlagVector cone = pyramid_flag(f);
  return prism_flag(cone) - pyramid_flag(cone);
}

FlagVector dual_flag(const FlagVector& f) {
  const int d = f.dim();
  if (d < 0) throw DomainError("dual of the empty polytope is undefined");
  FlagVector::Entries out;
  for (const auto& [s, v] : f.entries()) {
    std::uint64_t reversed = 0;
    for (int e : s.elements()) reversed |= std::uint64_t{1} << (d - 1 - e);
    out.emplace(DimSet::from_mask(reversed), v);
  }
  return FlagVector(d, std::move(out));
}

void GradedFlagVector::add(const FlagVector& f) {
  auto it = components_.find(f.dim());
  if (it == components_.end()) {
    if (!f.is_zero()) components_.emplace(f.dim(), f);
    return;
  }
  it->second = it->second + f;
  if (it->second.is_zero()) components_.erase(it);
}

FlagVector GradedFlagVector::at(int grade) const {
  auto it = components_.find(grade);
  return it == components_.end() ? FlagVector(grade) : it->second;
}

GradedFlagVector GradedFlagVector::operator+(const GradedFlagVector& other) const {
  GradedFlagVector out = *this;
  for (const auto& [grade, f] : other.components_) out.add(f);
  return out;
}

GradedFlagVector GradedFlagVector::scaled(std::int64_t c) const {
  GradedFlagVector out;
  for (const auto& [grade, f] : components_) out.add(f.scaled(c));
  return out;
}

GradedFlagVector c_on_graded(const GradedFlagVector& l) {
  GradedFlagVector out;
  for (const auto& [grade, f] : l.components()) out.add(pyramid_flag(f));
  return out;
}

}  // namespace hvector
