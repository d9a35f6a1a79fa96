#include "thetablocks/ffmat.hpp"

#include <algorithm>
#include <numeric>

namespace thetablocks {

using Elem = FMat::Elem;

FMat FMat::identity(std::size_t n) {
  FMat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

void FMat::append_row(const std::vector<Elem>& v) {
  if (r_ == 0 && c_ == 0) c_ = v.size();
  a_.insert(a_.end(), v.begin(), v.end());
  ++r_;
}

namespace ffla {

FMat mul(const FiniteField& F, const FMat& a, const FMat& b) {
  FMat r(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Elem* out = r.row(i);
    for (std::size_t k = 0; k < a.cols(); ++k) {
      Elem s = a.at(i, k);
      if (s == 0) continue;
      const Elem* br = b.row(k);
      if (s == 1) {
        for (std::size_t j = 0; j < b.cols(); ++j) out[j] = F.add(out[j], br[j]);
      } else {
        for (std::size_t j = 0; j < b.cols(); ++j)
          if (br[j]) out[j] = F.add(out[j], F.mul(s, br[j]));
      }
    }
  }
  return r;
}

FMat add(const FiniteField& F, const FMat& a, const FMat& b) {
  FMat r(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r.at(i, j) = F.add(a.at(i, j), b.at(i, j));
  return r;
}

FMat scale(const FiniteField& F, const FMat& a, Elem s) {
  FMat r(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r.at(i, j) = F.mul(a.at(i, j), s);
  return r;
}

FMat transpose(const FMat& a) {
  FMat r(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r.at(j, i) = a.at(i, j);
  return r;
}

std::vector<Elem> vec_mul(const FiniteField& F, const std::vector<Elem>& v, const FMat& a) {
  std::vector<Elem> out(a.cols(), 0);
  for (std::size_t k = 0; k < a.rows(); ++k) {
    if (v[k] == 0) continue;
    const Elem* ar = a.row(k);
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (ar[j]) out[j] = F.add(out[j], F.mul(v[k], ar[j]));
  }
  return out;
}

std::vector<std::size_t> rref(const FiniteField& F, FMat& a) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  const std::size_t rows = a.rows(), cols = a.cols();
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a.at(piv, c) == 0) ++piv;
    if (piv == rows) continue;
    if (piv != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(a.at(piv, j), a.at(r, j));
    Elem s = F.inv(a.at(r, c));
    for (std::size_t j = c; j < cols; ++j) a.at(r, j) = F.mul(a.at(r, j), s);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a.at(i, c) == 0) continue;
      Elem f = F.neg(a.at(i, c));
      for (std::size_t j = c; j < cols; ++j)
        if (a.at(r, j)) a.at(i, j) = F.add(a.at(i, j), F.mul(f, a.at(r, j)));
    }
    pivots.push_back(c);
    ++r;
  }
  FMat out(r, cols);
  for (std::size_t i = 0; i < r; ++i) std::copy(a.row(i), a.row(i) + cols, out.row(i));
  a = std::move(out);
  return pivots;
}

std::size_t rank(const FiniteField& F, FMat a) { return rref(F, a).size(); }

FMat nullspace(const FiniteField& F, const FMat& a) {
  FMat m = a;
  const std::size_t n = a.cols();
  auto piv = rref(F, m);
  std::vector<bool> is_piv(n, false);
  for (auto c : piv) is_piv[c] = true;
  FMat out(0, n);
  for (std::size_t free = 0; free < n; ++free) {
    if (is_piv[free]) continue;
    std::vector<Elem> v(n, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = F.neg(m.at(i, free));
    out.append_row(v);
  }
  return out;
}

FMat left_nullspace(const FiniteField& F, const FMat& a) { return nullspace(F, transpose(a)); }

std::vector<Elem> charpoly(const FiniteField& F, FMat h) {
  const std::size_t n = h.rows();
  for (std::size_t m = 1; m + 1 < n; ++m) {
    std::size_t i = m;
    while (i < n && h.at(i, m - 1) == 0) ++i;
    if (i == n) continue;
    if (i != m) {
      for (std::size_t j = 0; j < n; ++j) std::swap(h.at(i, j), h.at(m, j));
      for (std::size_t j = 0; j < n; ++j) std::swap(h.at(j, i), h.at(j, m));
    }
    Elem t = F.inv(h.at(m, m - 1));
    for (std::size_t k = m + 1; k < n; ++k) {
      Elem u = F.mul(h.at(k, m - 1), t);
      if (u == 0) continue;
      Elem nu = F.neg(u);
      for (std::size_t j = 0; j < n; ++j)
        if (h.at(m, j)) h.at(k, j) = F.add(h.at(k, j), F.mul(nu, h.at(m, j)));
      for (std::size_t j = 0; j < n; ++j)
        if (h.at(j, k)) h.at(j, m) = F.add(h.at(j, m), F.mul(u, h.at(j, k)));
    }
  }
  std::vector<std::vector<Elem>> p(n + 1);
  p[0] = {1};
  for (std::size_t m = 1; m <= n; ++m) {
    std::vector<Elem> r(m + 1, 0);
    Elem d = F.neg(h.at(m - 1, m - 1));
    for (std::size_t j = 0; j < p[m - 1].size(); ++j) {
      r[j + 1] = F.add(r[j + 1], p[m - 1][j]);
      r[j] = F.add(r[j], F.mul(d, p[m - 1][j]));
    }
    Elem t = 1;
    for (std::size_t i = m - 1; i >= 1; --i) {
      t = F.mul(t, h.at(i, i - 1));
      if (t == 0) break;
      Elem c = F.neg(F.mul(t, h.at(i - 1, m - 1)));
      if (c == 0) continue;
      for (std::size_t j = 0; j < p[i - 1].size(); ++j) r[j] = F.add(r[j], F.mul(c, p[i - 1][j]));
    }
    p[m] = std::move(r);
  }
  return p[n];
}

void EchelonSpace::reduce(std::vector<Elem>& v) const {
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    Elem c = v[pivots_[i]];
    if (c == 0) continue;
    Elem nc = F_->neg(c);
    const auto& b = basis_[i];
    for (std::size_t j = 0; j < dim_; ++j)
      if (b[j]) v[j] = F_->add(v[j], F_->mul(nc, b[j]));
  }
}

bool EchelonSpace::add(std::vector<Elem> v) {
  reduce(v);
  std::size_t c = 0;
  while (c < dim_ && v[c] == 0) ++c;
  if (c == dim_) return false;
  Elem s = F_->inv(v[c]);
  for (auto& x : v) x = F_->mul(x, s);
  for (auto& b : basis_) {
    Elem f = b[c];
    if (f == 0) continue;
    Elem nf = F_->neg(f);
    for (std::size_t j = 0; j < dim_; ++j)
      if (v[j]) b[j] = F_->add(b[j], F_->mul(nf, v[j]));
  }
  basis_.push_back(std::move(v));
  pivots_.push_back(c);
  return true;
}

FMat EchelonSpace::matrix() const {
  std::vector<std::size_t> order(basis_.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return pivots_[a] < pivots_[b]; });
  FMat m(0, dim_);
  for (auto i : order) m.append_row(basis_[i]);
  return m;
}

FMat spin(const FiniteField& F, const std::vector<std::vector<Elem>>& seeds, const std::vector<FMat>& gens) {
  std::size_t dim = gens.empty() ? (seeds.empty() ? 0 : seeds[0].size()) : gens[0].rows();
  EchelonSpace S(F, dim);
  std::vector<std::vector<Elem>> queue;
  for (const auto& s : seeds)
    if (S.add(s)) queue.push_back(s);
  for (std::size_t i = 0; i < queue.size() && S.size() < dim; ++i)
    for (const auto& g : gens) {
      auto w = vec_mul(F, queue[i], g);
      if (S.add(w)) queue.push_back(std::move(w));
    }
  return S.matrix();
}

}  // namespace ffla
}  // namespace thetablocks
