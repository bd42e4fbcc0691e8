#ifndef CONTACT_KOSTANT_HPP
#define CONTACT_KOSTANT_HPP

#include <vector>

#include "contact/prolongation.hpp"
#include "contact/subspace.hpp"

namespace contact {

// Highest weight of an irreducible Sp(2r) representation, written over the
// fundamental weights with Bourbaki numbering: the last node carries the
// long root (the double bond points back toward the chain).
struct HighestWeight {
  std::vector<long> labels;

  int rank() const { return static_cast<int>(labels.size()); }
  bool operator==(const HighestWeight& o) const = default;
};

// Weyl dimension formula for type C_r, exact.
Integer weyl_dim(int rank_r, const HighestWeight& w);

// Weight of the bound representation of sp(2(n+1)) attached to an order-k
// operator on a weight-e bundle: prepend k-1.
HighestWeight bound_weight(const HighestWeight& e, int k);

HighestWeight cartan_product(const HighestWeight& a, const HighestWeight& b);

// Symbol of the model operator sym^k (.) E -> sym^k (.) E for E = sym^m:
// full symmetrization of S_perp^k (x) sym^m into sym^{k+m}, followed by the
// quotient by symmetrized Levi traces (zero here, but computed). Columns are
// (weighted monomial, sym^m basis) pairs, monomial-major; rows are sym^{k+m}
// coordinates.
Matrix cartan_symbol_matrix(int n, int k, int m);

// Kernel of the model symbol inside (x)^{k+m} H*.
Subspace cartan_symbol_kernel(int n, int k, int m);

// Graded dimension cross-check: the pieces S_perp^j (x) E for j < k, the
// symbol kernel at j = k, and the prolongation chain beyond must add up to
// the Weyl dimension of the bound representation.
struct GradedReport {
  int n = 1, k = 1, m = 0;
  std::vector<std::int64_t> dims_vj;
  Integer total = 0;
  Integer weyl_total = 0;
  bool passes = false;
};

GradedReport graded_check(int n, int k, int m, int lmax);

// Default chain cap for symbols of recognized Cartan type.
int cartan_lmax(int n, int k, long max_weight_entry);

}  // namespace contact

#endif
