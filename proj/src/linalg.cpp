#include "hvector/linalg.hpp"

#include <sstream>

#include "hvector/error.hpp"

namespace hvector {

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  for (std::size_t r = 0; r < rows_; ++r) {
    os << '[';
    for (std::size_t c = 0; c < cols_; ++c) os << (c ? "," : "") << (*this)(r, c);
    os << "]\n";
  }
  return os.str();
}

namespace {

using BigMatrix = std::vector<std::vector<BigInt>>;

BigMatrix to_big(const IntMatrix& m) {
  BigMatrix out(m.rows(), std::vector<BigInt>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out[r][c] = m(r, c);
  }
  return out;
}

struct Echelon {
  std::size_t rank = 0;
  BigInt last_pivot = 1;
  int sign = 1;
  std::vector<std::size_t> pivot_rows;  // original row index of each pivot
};

// Fraction-free forward elimination.  Every entry after step k is a
// (k+1)-minor of the input, so the divisions by the previous pivot are exact.
Echelon bareiss(BigMatrix m) {
  Echelon e;
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  std::vector<std::size_t> origin(rows);
  for (std::size_t i = 0; i < rows; ++i) origin[i] = i;
  BigInt prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    if (p != r) {
      std::swap(m[p], m[r]);
      std::swap(origin[p], origin[r]);
      e.sign = -e.sign;
    }
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]) / prev;
      }
      m[i][c] = 0;
    }
    prev = m[r][c];
    e.pivot_rows.push_back(origin[r]);
    ++r;
  }
  e.rank = r;
  e.last_pivot = prev;
  return e;
}

}  // namespace

std::size_t rank(const IntMatrix& m) { return bareiss(to_big(m)).rank; }

BigInt determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw DomainError("determinant of a non-square matrix");
  if (m.rows() == 0) return 1;
  const Echelon e = bareiss(to_big(m));
  if (e.rank < m.rows()) return 0;
  return e.sign * e.last_pivot;
}

LeftSolver::LeftSolver(IntMatrix a) : a_(std::move(a)) {
  const std::size_t n = a_.rows();
  // Pivot rows of A^T are independent columns of A.
  const Echelon e = bareiss(to_big(a_.transposed()));
  if (e.rank != n) throw DomainError("matrix does not have full row rank");
  pivots_ = e.pivot_rows;

  // Fraction-free Gauss-Jordan on [S | I] with S[r][k] = A[r][pivot_k],
  // the transpose of the square block, ending at [det I | adj].
  BigMatrix m(n, std::vector<BigInt>(2 * n));
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t r = 0; r < n; ++r) m[k][r] = a_(r, pivots_[k]);
    m[k][n + k] = 1;
  }
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) throw DomainError("pivot block is singular");
    if (p != c) {
      std::swap(m[p], m[c]);
      sign = -sign;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c) continue;
      for (std::size_t j = 0; j < 2 * n; ++j) {
        if (j == c) continue;
        m[i][j] = (m[c][c] * m[i][j] - m[i][c] * m[c][j]) / prev;
      }
      m[i][c] = 0;
    }
    prev = m[c][c];
  }
  // Now m = [p I | p S^-1] with p = prev.
  det_ = prev;
  adjugate_.assign(n * n, 0);
  const bool negate = det_ < 0;
  if (negate) det_ = -det_;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      adjugate_[i * n + j] = negate ? BigInt(-m[i][n + j]) : m[i][n + j];
    }
  }
}

std::optional<LeftSolver::Solution> LeftSolver::solve_rational(
    std::span<const std::int64_t> b) const {
  const std::size_t n = a_.rows();
  if (b.size() != a_.cols()) throw DimensionMismatch("right-hand side has the wrong length");
  // x^T = (S^-1 b_P) with S = A_P^T, so x = adj * b_P / det.
  Solution sol;
  sol.denominator = det_;
  sol.numerators.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    BigInt acc = 0;
    for (std::size_t k = 0; k < n; ++k) acc += adjugate_[i * n + k] * b[pivots_[k]];
    sol.numerators[i] = acc;
  }
  for (std::size_t c = 0; c < a_.cols(); ++c) {
    BigInt acc = 0;
    for (std::size_t r = 0; r < n; ++r) acc += sol.numerators[r] * a_(r, c);
    if (acc != det_ * b[c]) return std::nullopt;
  }
  return sol;
}

std::optional<std::vector<std::int64_t>> LeftSolver::solve(std::span<const std::int64_t> b) const {
  auto sol = solve_rational(b);
  if (!sol) return std::nullopt;
  std::vector<std::int64_t> out;
  out.reserve(sol->numerators.size());
  for (const BigInt& num : sol->numerators) {
    if (num % sol->denominator != 0) return std::nullopt;
    const BigInt q = num / sol->denominator;
    if (q > std::numeric_limits<std::int64_t>::max() ||
        q < std::numeric_limits<std::int64_t>::min()) {
      throw OverflowError("solution does not fit in 64 bits");
    }
    out.push_back(q.convert_to<std::int64_t>());
  }
  return out;
}

bool is_unitriangular_up_to_permutation(const IntMatrix& m) {
  if (m.rows() != m.cols()) return false;
  const std::size_t n = m.rows();
  std::vector<bool> row_done(n, false), col_done(n, false);
  for (std::size_t step = 0; step < n; ++step) {
    bool found = false;
    for (std::size_t r = 0; r < n && !found; ++r) {
      if (row_done[r]) continue;
      std::size_t nonzero = 0, col = 0;
      for (std::size_t c = 0; c < n; ++c) {
        if (!col_done[c] && m(r, c) != 0) {
          ++nonzero;
          col = c;
        }
      }
      if (nonzero == 1 && (m(r, col) == 1 || m(r, col) == -1)) {
        row_done[r] = true;
        col_done[col] = true;
        found = true;
      }
    }
    if (!found) return false;
  }
  return true;
}

}  // namespace hvector
