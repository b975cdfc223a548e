#include "cherednik/linalg.hpp"

namespace cherednik {

namespace {

// Reduces m in place; returns the rank and the sign-adjusted last pivot
// (the determinant when m is square and of full rank).
std::pair<std::size_t, ParamPoly> bareiss(Matrix<ParamPoly>& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  ParamPoly prev(1);
  std::size_t row = 0;
  int sign = 1;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    std::size_t p = row;
    while (p < rows && m(p, col).is_zero()) ++p;
    if (p == rows) continue;
    if (p != row) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(m(p, j), m(row, j));
      sign = -sign;
    }
    for (std::size_t i = row + 1; i < rows; ++i) {
      for (std::size_t j = col + 1; j < cols; ++j) {
        ParamPoly num = m(i, j) * m(row, col) - m(i, col) * m(row, j);
        auto q = divide_exact(num, prev);
        if (!q) throw invariant_violation("Bareiss step: inexact division");
        m(i, j) = std::move(*q);
      }
      m(i, col) = ParamPoly();
    }
    prev = m(row, col);
    ++row;
  }
  return {row, sign > 0 ? prev : -prev};
}

}  // namespace

std::size_t rank_bareiss(Matrix<ParamPoly> m) { return bareiss(m).first; }

ParamPoly det_bareiss(Matrix<ParamPoly> m) {
  if (m.rows() != m.cols()) throw algebra_error("determinant of a non-square matrix");
  if (m.rows() == 0) return ParamPoly(1);
  auto [rank, last] = bareiss(m);
  if (rank < m.rows()) return ParamPoly();
  return last;
}

}  // namespace cherednik
