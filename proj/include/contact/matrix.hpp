#ifndef CONTACT_MATRIX_HPP
#define CONTACT_MATRIX_HPP

#include <cstdint>
#include <vector>

#include "contact/sparsevec.hpp"

namespace contact {

// Sparse rational matrix, stored column-wise. Indices are 0-based.
class Matrix {
 public:
  Matrix() : rows_(0) {}
  Matrix(std::int64_t rows, std::int64_t cols)
      : rows_(rows), cols_(static_cast<std::size_t>(cols)) {}

  static Matrix identity(std::int64_t d);

  std::int64_t rows() const { return rows_; }
  std::int64_t cols() const { return static_cast<std::int64_t>(cols_.size()); }

  const SparseVec& col(std::int64_t j) const { return cols_[j]; }
  SparseVec& col(std::int64_t j) { return cols_[j]; }
  void set_col(std::int64_t j, SparseVec v) { cols_[j] = std::move(v); }
  void append_col(SparseVec v) { cols_.push_back(std::move(v)); }

  Rational at(std::int64_t r, std::int64_t c) const { return cols_[c].at(r); }
  void set(std::int64_t r, std::int64_t c, const Rational& v);

  Matrix transpose() const;
  Matrix mul(const Matrix& other) const;  // this * other
  SparseVec apply(const SparseVec& v) const;  // matrix * vector

  std::int64_t nnz() const;
  bool operator==(const Matrix& o) const;

 private:
  std::int64_t rows_;
  std::vector<SparseVec> cols_;
};

// Unique reduced row-echelon form; the row space is preserved and zero rows
// sink to the bottom.
Matrix rref(const Matrix& m);

std::int64_t rank(const Matrix& m);

// Canonical basis of {v : m v = 0}, as columns in reduced column-echelon
// form (see Subspace for the normal form conventions).
Matrix kernel_basis(const Matrix& m);

// Exact Moore-Penrose pseudo-inverse with respect to the standard coordinate
// inner product: returns d with m*d*m = m and d*m*d = d. Deterministic.
Matrix splitting(const Matrix& m);

// Columns of `cols` brought to reduced column-echelon form with pivot rows
// increasing left to right; drops dependent columns. This is the canonical
// representative used for subspace equality.
std::vector<SparseVec> column_echelon(std::vector<SparseVec> cols);

// Combination vectors x (indexed by column number) with cols * x = 0,
// one per dependency, not canonicalized.
std::vector<SparseVec> kernel_combinations(const std::vector<SparseVec>& cols);

}  // namespace contact

#endif
