#include "mforge/linalg.hpp"

namespace mforge {

Vec zero_vec(const Field& f, size_t n) { return Vec(n, Scalar::zero(f)); }

bool is_zero_vec(const Vec& v) {
  for (const auto& s : v)
    if (!s.is_zero()) return false;
  return true;
}

Echelon rref(const Mat& m, const Field& f, size_t ncols) {
  Mat a = m;
  Echelon out;
  size_t r = 0;
  for (size_t c = 0; c < ncols && r < a.size(); ++c) {
    size_t piv = r;
    while (piv < a.size() && a[piv][c].is_zero()) ++piv;
    if (piv == a.size()) continue;
    std::swap(a[r], a[piv]);
    Scalar inv = a[r][c].inv();
    for (size_t k = c; k < ncols; ++k) a[r][k] = a[r][k] * inv;
    for (size_t i = 0; i < a.size(); ++i) {
      if (i == r || a[i][c].is_zero()) continue;
      Scalar factor = a[i][c];
      for (size_t k = c; k < ncols; ++k) a[i][k] = a[i][k] - factor * a[r][k];
    }
    out.pivots.push_back(c);
    ++r;
  }
  a.resize(r);
  out.rows = std::move(a);
  (void)f;
  return out;
}

size_t rank(const Mat& m, const Field& f, size_t ncols) { return rref(m, f, ncols).pivots.size(); }

Mat kernel(const Mat& m, const Field& f, size_t ncols) {
  Echelon e = rref(m, f, ncols);
  std::vector<bool> is_pivot(ncols, false);
  for (size_t p : e.pivots) is_pivot[p] = true;
  Mat basis;
  for (size_t free = 0; free < ncols; ++free) {
    if (is_pivot[free]) continue;
    Vec v = zero_vec(f, ncols);
    v[free] = Scalar::one(f);
    for (size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = -e.rows[i][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vec> solve(const Mat& m, const Vec& b, const Field& f, size_t ncols) {
  Mat aug = m;
  for (size_t i = 0; i < aug.size(); ++i) aug[i].push_back(b[i]);
  Echelon e = rref(aug, f, ncols + 1);
  Vec x = zero_vec(f, ncols);
  for (size_t i = 0; i < e.pivots.size(); ++i) {
    if (e.pivots[i] == ncols) return std::nullopt;
    x[e.pivots[i]] = e.rows[i][ncols];
  }
  return x;
}

Mat transpose(const Mat& m, const Field& f, size_t ncols) {
  Mat t(ncols, zero_vec(f, m.size()));
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t j = 0; j < ncols; ++j) t[j][i] = m[i][j];
  return t;
}

Mat mat_inverse(const Mat& m, const Field& f) {
  size_t n = m.size();
  Mat aug = m;
  for (size_t i = 0; i < n; ++i) {
    Vec id = zero_vec(f, n);
    id[i] = Scalar::one(f);
    aug[i].insert(aug[i].end(), id.begin(), id.end());
  }
  Echelon e = rref(aug, f, 2 * n);
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1)
    throw MathError(Err::NotInvertible, "singular matrix");
  Mat inv(n);
  for (size_t i = 0; i < n; ++i) inv[i] = Vec(e.rows[i].begin() + n, e.rows[i].end());
  return inv;
}

Vec mat_vec(const Mat& m, const Vec& v) {
  Vec out;
  out.reserve(m.size());
  for (const auto& row : m) {
    Scalar acc = Scalar::zero(v.at(0).field());
    for (size_t j = 0; j < v.size(); ++j) acc += row[j] * v[j];
    out.push_back(acc);
  }
  return out;
}

}  // namespace mforge
