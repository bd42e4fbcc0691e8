#ifndef CONTACT_PROLONGATION_HPP
#define CONTACT_PROLONGATION_HPP

#include <optional>
#include <string>
#include <vector>

#include "contact/operator.hpp"
#include "contact/subspace.hpp"

namespace contact {

enum class Verdict { FiniteType, NotFiniteTypeWithinCap, Degenerate };

std::string verdict_name(Verdict v);

// The chain of prolongation spaces attached to a weighted-order-k symbol.
// levels[l-1] = dim (S_perp^l (x) K_H) /\ (S_perp^{k+l} (x) E) for l >= 1;
// once a level vanishes all later ones do, and the total bound is
//   rank_T = dim_E * sum_{j<k} dim S_perp^j + dim_KH + sum levels.
struct ProlongationChain {
  int order_k = 1;
  std::int64_t dim_E = 0;
  std::int64_t dim_F = 0;
  std::int64_t dim_KH = 0;
  std::vector<std::int64_t> levels;
  Verdict verdict = Verdict::Degenerate;
  std::optional<std::int64_t> rank_T;
};

// Chain plus the actual subspaces, for cross-checks: kh lives in
// (x)^k H* (x) E and level_spaces[l-1] in (x)^{k+l} H* (x) E.
struct ChainDetail {
  ProlongationChain chain;
  Subspace kh;
  std::vector<Subspace> level_spaces;
};

// `symbol` maps S_perp^k (x) E -> F in the weighted-monomial basis, columns
// indexed monomial-major as produced by enhanced_symbol().
ChainDetail contact_chain_detail(const Matrix& symbol, int n, int k, int lmax);
ProlongationChain contact_chain(const Matrix& symbol, int n, int k, int lmax);

// Classical Spencer chain on a d-dimensional manifold; `symbol` maps
// sym^k (x) E -> F with columns indexed by the weakly-increasing multiset
// basis of sym^k, multiset-major.
ChainDetail classical_chain_detail(const Matrix& symbol, int d, int k, int lmax);
ProlongationChain classical_chain(const Matrix& symbol, int d, int k, int lmax);

// Multiset basis order used for classical symbols (matches sym_subspace).
std::vector<std::vector<int>> sym_multisets(int d, int k);

// Prolonged flat partial connection: parallel sections satisfy
// d_a Sigma = A_a Sigma for each contact direction a, and project onto
// solutions of the source operator through the E block.
struct FlatConnection {
  int n = 2;
  std::int64_t total_rank = 0;
  std::vector<std::int64_t> block_dims;  // E, K_H, K_H^1, ...
  std::vector<Matrix> coeff;             // 2n matrices, total x total
  Matrix projection;                     // rank_E x total
};

// First-order constant-coefficient operators on the 2n+1 flat model, n >= 2,
// with a finite-type chain. Builds the connection level by level; the
// consistency equation at each level is split off with splitting().
FlatConnection build_flat_connection(const DarbouxOperator& op,
                                     const ProlongationChain& chain);

// The parallel-transport equations as a first-order operator
// Sigma |-> (d_a Sigma - A_a Sigma)_a, suitable for the oracle.
DarbouxOperator connection_as_operator(const FlatConnection& conn);

struct ConnectionCheck {
  std::int64_t parallel_dim = 0;
  std::int64_t solution_dim = 0;
  bool projection_bijective = false;
};

// Compares polynomial parallel sections of the connection with polynomial
// solutions of the operator up to weighted degree `cap`.
ConnectionCheck check_connection(const DarbouxOperator& op,
                                 const FlatConnection& conn, int cap);

}  // namespace contact

#endif
