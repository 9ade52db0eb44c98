#include "pcolor/linalg.hpp"

#include <algorithm>

namespace pcolor {

Vec vec_zero(const FieldSpec& f, int n) { return Vec(n, Scalar::zero(f)); }

bool vec_is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

void vec_axpy(Vec& y, const Scalar& a, const Vec& x) {
  if (a.is_zero()) return;
  for (std::size_t i = 0; i < y.size(); ++i) y[i] += a * x[i];
}

Vec vec_scaled(const Vec& x, const Scalar& a) {
  Vec r(x);
  for (Scalar& s : r) s *= a;
  return r;
}

Vec vec_sum(const Vec& a, const Vec& b) {
  Vec r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

std::vector<int> rref(std::vector<Vec>& rows) {
  std::vector<int> pivots;
  if (rows.empty()) return pivots;
  const std::size_t ncols = rows[0].size();
  std::size_t r = 0;
  for (std::size_t col = 0; col < ncols && r < rows.size(); ++col) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][col].is_zero()) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[r], rows[piv]);
    const Scalar inv = rows[r][col].inv();
    for (Scalar& s : rows[r]) s *= inv;
    for (std::size_t j = 0; j < rows.size(); ++j) {
      if (j == r || rows[j][col].is_zero()) continue;
      const Scalar c = rows[j][col];
      for (std::size_t k = 0; k < ncols; ++k) rows[j][k] -= c * rows[r][k];
    }
    pivots.push_back(static_cast<int>(col));
    ++r;
  }
  rows.erase(std::remove_if(rows.begin(), rows.end(), vec_is_zero), rows.end());
  return pivots;
}

std::vector<Vec> nullspace(std::vector<Vec> rows, const FieldSpec& f, int ncols) {
  const std::vector<int> pivots = rref(rows);
  std::vector<bool> is_pivot(ncols, false);
  for (int p : pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (int free = 0; free < ncols; ++free) {
    if (is_pivot[free]) continue;
    Vec x = vec_zero(f, ncols);
    x[free] = Scalar::one(f);
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      x[pivots[r]] = -rows[r][free];
    }
    basis.push_back(std::move(x));
  }
  return basis;
}

}  // namespace pcolor
