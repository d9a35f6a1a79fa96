#include "thetablocks/cycmat.hpp"

#include <utility>

namespace thetablocks::cycla {

CycMat identity(std::size_t n) {
  CycMat m(n, std::vector<CycNum>(n));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = CycNum(1);
  return m;
}

CycMat mul(const CycMat& a, const CycMat& b) {
  const std::size_t cols = b.empty() ? 0 : b[0].size();
  CycMat r(a.size(), std::vector<CycNum>(cols));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k) {
      if (a[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < cols; ++j)
        if (!b[k][j].is_zero()) r[i][j] += a[i][k] * b[k][j];
    }
  return r;
}

CycMat scale(const CycMat& a, const CycNum& s) {
  CycMat r = a;
  for (auto& row : r)
    for (auto& v : row) v *= s;
  return r;
}

CycNum trace(const CycMat& a) {
  CycNum t;
  for (std::size_t i = 0; i < a.size(); ++i) t += a[i][i];
  return t;
}

CycNum det(CycMat a) {
  const std::size_t n = a.size();
  CycNum d(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a[piv][c].is_zero()) ++piv;
    if (piv == n) return CycNum();
    if (piv != c) {
      std::swap(a[piv], a[c]);
      d = -d;
    }
    d *= a[c][c];
    CycNum inv = a[c][c].inverse();
    for (std::size_t i = c + 1; i < n; ++i) {
      if (a[i][c].is_zero()) continue;
      CycNum f = a[i][c] * inv;
      for (std::size_t j = c; j < n; ++j) a[i][j] -= f * a[c][j];
    }
  }
  return d;
}

std::vector<std::vector<CycNum>> nullspace(CycMat a) {
  const std::size_t rows = a.size(), cols = a.empty() ? 0 : a[0].size();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv][c].is_zero()) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[r]);
    CycNum inv = a[r][c].inverse();
    for (std::size_t j = c; j < cols; ++j) a[r][j] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c].is_zero()) continue;
      CycNum f = a[i][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  std::vector<bool> is_piv(cols, false);
  for (auto c : pivots) is_piv[c] = true;
  std::vector<std::vector<CycNum>> out;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_piv[f]) continue;
    std::vector<CycNum> v(cols);
    v[f] = CycNum(1);
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -a[i][f];
    out.push_back(std::move(v));
  }
  return out;
}

bool is_zero(const CycMat& a) {
  for (const auto& row : a)
    for (const auto& v : row)
      if (!v.is_zero()) return false;
  return true;
}

}  // namespace thetablocks::cycla
