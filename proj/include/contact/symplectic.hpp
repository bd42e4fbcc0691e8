#ifndef CONTACT_SYMPLECTIC_HPP
#define CONTACT_SYMPLECTIC_HPP

#include <cstdint>
#include <vector>

#include "contact/subspace.hpp"

namespace contact {

// The flat contact model in dimension 2n+1. Covectors on the contact
// distribution are indexed 0..2n-1 with dx_1..dx_n first and dy_1..dy_n
// after. The Levi form is fixed (together with its sign) by requiring that
// the n=1 map sigma_map reproduces the reference table exactly:
//   L_{i,n+i} = -1,  L_{n+i,i} = +1,
// and the inverse convention L^{ab} L_{ac} = delta^b_c makes levi_inv the
// same matrix.
struct SymplecticSpace {
  int n = 1;
  Matrix levi;      // 2n x 2n, skew
  Matrix levi_inv;  // 2n x 2n, L^{ab} L_{ac} = delta^b_c

  static SymplecticSpace standard(int n);
  int dim_h() const { return 2 * n; }
};

// --- tensor index utilities -------------------------------------------------
//
// Tensors in (x)^m of the 2n-dimensional covector space, optionally with a
// trailing auxiliary factor of dimension `trailing`, are stored as sparse
// vectors with index
//   ((d_0 * 2n + d_1) * 2n + ... ) * trailing + e
// for digits d_p in 0..2n-1 (lexicographic basis).

std::int64_t tensor_pow(std::int64_t base, int exp);

// Transposes adjacent slots (p, p+1). m = number of tensor slots.
SparseVec swap_adjacent(const SparseVec& v, int two_n, int m,
                        std::int64_t trailing, int p);

// Contracts slots (p, p+1) with levi_inv: (Yhat_p v)_rest = L^{ab} v_{..ab..}.
// Output lives in (x)^{m-2} (x) trailing.
SparseVec contract_levi(const SymplecticSpace& sp, const SparseVec& v, int m,
                        std::int64_t trailing, int p);

// Inserts the Levi form at slots (p, p+1): w |-> L (x) w reordered so the two
// new indices sit at positions p, p+1. w has m-2 slots.
SparseVec insert_levi(const SymplecticSpace& sp, const SparseVec& w, int m,
                      std::int64_t trailing, int p);

// Component of v at slots (p, p+1) transverse to the symmetric + Levi part:
//   u(v) = (v - swap_p v) - (1/n) L (x)_p Yhat_p(v).
// Vanishing of u is exactly "the skew part at (p,p+1) is a multiple of L".
// Identically zero when n = 1.
SparseVec lambda_perp_component(const SymplecticSpace& sp, const SparseVec& v,
                                int m, std::int64_t trailing, int p);

// --- canonical subspaces ----------------------------------------------------

// Totally symmetric tensors in (x)^m, dim C(2n+m-1, m).
Subspace sym_subspace(int n, int m);

// The contact symbol space S_perp^l inside (x)^l, built along the paths
//   l <= 1: everything; l = 2: sym + Levi line;
//   n = 1, l = 3: explicit symmetrized-Levi basis;
//   otherwise the two-sided recursion
//   S_perp^l = (H (x) S_perp^{l-1}) /\ (S_perp^{l-1} (x) H).
// Results are memoized per (n, l).
Subspace build_sperp(int n, int l);

std::int64_t sperp_dim_formula(int n, int l);

// Levi-trace-free skew two-tensors; dim n(2n-1) - 1 for n >= 2, zero for n=1.
Subspace lambda_perp2(int n);

// The n=1 homomorphism (x)^3 H* -> H* (x) L,
//   phi_abc |-> L^{ab} (phi_abc - phi_cab),
// rows indexed dx, dy with L trivialized by the standard contact form.
// Its kernel is S_perp^3.
Matrix sigma_map(const SymplecticSpace& sp);

// --- weighted monomials -----------------------------------------------------

// Monomial x^alpha y^beta z^gamma on the Heisenberg group; x,y count 1 and z
// counts 2 toward the weighted degree.
struct WeightedMonomial {
  std::vector<int> alpha;  // size n
  std::vector<int> beta;   // size n
  int gamma = 0;

  int weighted_degree() const;
  bool operator==(const WeightedMonomial& o) const = default;
};

std::vector<WeightedMonomial> monomials_of_weighted_degree(int n, int k);
std::vector<WeightedMonomial> monomials_up_to_weighted_degree(int n, int cap);

// Basis correspondence between weighted monomials of degree k and S_perp^k:
// a monomial maps to the plain symmetrization of its covector word with all
// placements of gamma Levi factors. embed columns follow the monomial order.
struct MonomialModel {
  int n = 1;
  int k = 0;
  std::vector<WeightedMonomial> monomials;
  Matrix embed;  // (2n)^k x monomials.size()
};

const MonomialModel& monomial_embed(int n, int k);

}  // namespace contact

#endif
