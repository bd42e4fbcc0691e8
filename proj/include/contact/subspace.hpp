#ifndef CONTACT_SUBSPACE_HPP
#define CONTACT_SUBSPACE_HPP

#include <vector>

#include "contact/matrix.hpp"

namespace contact {

// A linear subspace of Q^ambient, held as a basis matrix in reduced
// column-echelon form. The normal form is unique, so two Subspace values
// are equal iff they describe the same subspace.
class Subspace {
 public:
  Subspace() : ambient_(0) {}

  static Subspace zero(std::int64_t ambient);
  static Subspace full(std::int64_t ambient);
  static Subspace from_columns(std::int64_t ambient, std::vector<SparseVec> cols);
  // Basis already in canonical echelon form (e.g. straight from kernel_basis).
  static Subspace from_echelon(std::int64_t ambient, Matrix basis);

  std::int64_t ambient_dim() const { return ambient_; }
  std::int64_t dim() const { return basis_.cols(); }
  const Matrix& basis() const { return basis_; }

  bool contains(const SparseVec& v) const;
  bool contains(const Subspace& other) const;
  // Residual of v after reduction against the basis; zero iff contained.
  SparseVec reduce(SparseVec v) const;

  bool operator==(const Subspace& o) const;
  bool operator!=(const Subspace& o) const { return !(*this == o); }

 private:
  std::int64_t ambient_;
  Matrix basis_;
};

Subspace intersect(const Subspace& a, const Subspace& b);
Subspace sum(const Subspace& a, const Subspace& b);

// Subspace of V (x) W spanned by pairwise Kronecker products of the bases;
// the index convention is i_V * dim(W_ambient) + i_W.
Subspace tensor_subspace(const Subspace& a, const Subspace& b);

// Kronecker product of single vectors under the same index convention.
SparseVec kron(const SparseVec& a, const SparseVec& b, std::int64_t b_ambient);

}  // namespace contact

#endif
