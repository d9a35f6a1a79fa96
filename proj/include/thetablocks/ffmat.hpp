#pragma once

#include <cstddef>
#include <vector>

#include "thetablocks/finite_field.hpp"

namespace thetablocks {

/// Dense matrix over a FiniteField; vectors are rows and act on the right.
class FMat {
 public:
  using Elem = FiniteField::Elem;

  FMat() = default;
  FMat(std::size_t rows, std::size_t cols) : r_(rows), c_(cols), a_(rows * cols, 0) {}
  static FMat identity(std::size_t n);

  std::size_t rows() const { return r_; }
  std::size_t cols() const { return c_; }
  Elem& at(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
  Elem at(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }
  Elem* row(std::size_t i) { return a_.data() + i * c_; }
  const Elem* row(std::size_t i) const { return a_.data() + i * c_; }
  std::vector<Elem> row_vector(std::size_t i) const { return {row(i), row(i) + c_}; }
  void append_row(const std::vector<Elem>& v);

  friend bool operator==(const FMat& a, const FMat& b) { return a.r_ == b.r_ && a.c_ == b.c_ && a.a_ == b.a_; }

 private:
  std::size_t r_ = 0, c_ = 0;
  std::vector<Elem> a_;
};

namespace ffla {

FMat mul(const FiniteField& F, const FMat& a, const FMat& b);
FMat add(const FiniteField& F, const FMat& a, const FMat& b);
FMat scale(const FiniteField& F, const FMat& a, FMat::Elem s);
FMat transpose(const FMat& a);
std::vector<FMat::Elem> vec_mul(const FiniteField& F, const std::vector<FMat::Elem>& v, const FMat& a);

/// Reduced row echelon form in place (zero rows dropped); returns pivot columns.
std::vector<std::size_t> rref(const FiniteField& F, FMat& a);
std::size_t rank(const FiniteField& F, FMat a);
/// Basis (as rows) of {x : a x^T = 0}.
FMat nullspace(const FiniteField& F, const FMat& a);
/// Basis (as rows) of {v : v a = 0}.
FMat left_nullspace(const FiniteField& F, const FMat& a);
/// Characteristic polynomial det(xI - a), low to high.
std::vector<FMat::Elem> charpoly(const FiniteField& F, FMat a);

/// Subspace in reduced echelon form, grown one vector at a time.
class EchelonSpace {
 public:
  EchelonSpace(const FiniteField& F, std::size_t dim) : F_(&F), dim_(dim) {}
  /// Reduce v against the space; returns true (and stores it) if v was new.
  bool add(std::vector<FMat::Elem> v);
  std::size_t size() const { return basis_.size(); }
  const std::vector<std::vector<FMat::Elem>>& basis() const { return basis_; }
  /// The basis as a matrix in reduced echelon form.
  FMat matrix() const;

 private:
  void reduce(std::vector<FMat::Elem>& v) const;
  const FiniteField* F_;
  std::size_t dim_;
  std::vector<std::vector<FMat::Elem>> basis_;
  std::vector<std::size_t> pivots_;
};

/// Smallest subspace containing the seeds and closed under v -> v g for g in gens.
FMat spin(const FiniteField& F, const std::vector<std::vector<FMat::Elem>>& seeds, const std::vector<FMat>& gens);

}  // namespace ffla
}  // namespace thetablocks
