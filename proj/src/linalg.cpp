#include "hagge/linalg.hpp"

#include <utility>

namespace hagge::linalg {

Scalar det3(const Scalar& a, const Scalar& b, const Scalar& c,
            const Scalar& d, const Scalar& e, const Scalar& f,
            const Scalar& g, const Scalar& h, const Scalar& i) {
  return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g);
}

Scalar determinant(Matrix m) {
  const std::size_t n = m.size();
  Scalar det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && is_zero(m[pivot][col])) ++pivot;
    if (pivot == n) return Scalar(0);
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (is_zero(m[r][col])) continue;
      const Scalar factor = m[r][col] / m[col][col];
      for (std::size_t c = col; c < n; ++c) m[r][c] -= factor * m[col][c];
    }
  }
  return det;
}

NullSpace null_space(Matrix m) {
  NullSpace out;
  if (m.empty()) return out;
  const std::size_t rows = m.size();
  const std::size_t cols = m.front().size();
  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && is_zero(m[p][c])) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    const Scalar inv = 1 / m[r][c];
    for (auto& v : m[r]) v *= inv;
    for (std::size_t k = 0; k < rows; ++k) {
      if (k == r || is_zero(m[k][c])) continue;
      const Scalar f = m[k][c];
      for (std::size_t j = 0; j < cols; ++j) m[k][j] -= f * m[r][j];
    }
    pivot_cols.push_back(c);
    ++r;
  }
  out.rank = r;
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivot_cols) is_pivot[c] = true;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Row v(cols, Scalar(0));
    v[free] = 1;
    for (std::size_t i = 0; i < pivot_cols.size(); ++i) v[pivot_cols[i]] = -m[i][free];
    out.basis.push_back(std::move(v));
  }
  return out;
}

}  // namespace hagge::linalg
