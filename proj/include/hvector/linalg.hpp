#ifndef HVECTOR_LINALG_HPP
#define HVECTOR_LINALG_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace hvector {

using BigInt = boost::multiprecision::cpp_int;

// Dense row-major matrix of 64-bit integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::int64_t& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::int64_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::span<const std::int64_t> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }

  IntMatrix transposed() const;
  std::string to_string() const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::int64_t> data_;
};

// Exact rank and determinant by Bareiss elimination.
std::size_t rank(const IntMatrix& m);
BigInt determinant(const IntMatrix& m);

// Solves x * A = b for a matrix A of full row rank (one unknown per row).
//
// Construction picks rows(A) linearly independent columns and inverts that
// square block by fraction-free Gauss-Jordan; solve() then applies the
// stored adjugate and checks every equation, so inconsistent right-hand
// sides are detected rather than silently projected.
class LeftSolver {
 public:
  // Throws DomainError when A does not have full row rank.
  explicit LeftSolver(IntMatrix a);

  struct Solution {
    std::vector<BigInt> numerators;
    BigInt denominator;  // positive
  };

  // Exact rational solution, or nullopt if x * A = b has none.
  std::optional<Solution> solve_rational(std::span<const std::int64_t> b) const;
  // Integer solution; nullopt if none exists or it is not integral.
  std::optional<std::vector<std::int64_t>> solve(std::span<const std::int64_t> b) const;

  const std::vector<std::size_t>& pivot_columns() const { return pivots_; }

 private:
  IntMatrix a_;
  std::vector<std::size_t> pivots_;
  std::vector<BigInt> adjugate_;  // rows(A) x rows(A), row-major
  BigInt det_;
};

// Greedily peels rows with a single remaining nonzero entry equal to +-1.
// True when some row and column permutation makes the matrix triangular
// with unit diagonal.
bool is_unitriangular_up_to_permutation(const IntMatrix& m);

}  // namespace hvector

#endif  // HVECTOR_LINALG_HPP
