#ifndef CONTACT_OPERATOR_HPP
#define CONTACT_OPERATOR_HPP

#include <string>
#include <vector>

#include "contact/matrix.hpp"
#include "contact/poly.hpp"
#include "contact/symplectic.hpp"

namespace contact {

// Frame generators of the Heisenberg group: X_i = d/dx_i,
// Y_i = d/dy_i + x_i d/dz, Z = d/dz, so [X_i, Y_i] = Z and Z is central.
enum class GenType { X, Y, Z };

struct Generator {
  GenType type = GenType::Z;
  int index = 0;  // 1..n for X/Y, unused for Z

  bool operator==(const Generator& o) const = default;
};

// Weighted order: X and Y count 1, Z counts 2.
int word_weighted_order(const std::vector<Generator>& word);

struct PolySection {
  int rank = 0;
  std::vector<Poly> components;

  bool is_zero() const;
};

struct DarbouxTerm {
  std::vector<Generator> word;               // leftmost generator acts last
  std::vector<std::vector<Poly>> coeff;      // rank_F x rank_E
};

// Linear differential operator in Darboux coordinates. The declared order is
// the weighted order the operator is analyzed at; it must dominate the
// weighted order of every term.
struct DarbouxOperator {
  int n = 1;
  int rank_E = 1;
  int rank_F = 1;
  int declared_order = 1;
  std::vector<DarbouxTerm> terms;

  int weighted_order() const;  // max over terms with a nonzero coefficient
  void validate() const;       // throws on malformed data
};

Poly apply_generator(int n, const Generator& g, const Poly& f);
Poly apply_word(int n, const std::vector<Generator>& word, const Poly& f);

PolySection apply(const DarbouxOperator& op, const PolySection& s);

Poly monomial_to_poly(int n, const WeightedMonomial& m);

// The weighted-order-k symbol as a matrix S_perp^k (x) E -> F in the
// weighted-monomial basis: column (m, e) holds apply(op, m*e) at the origin,
// with column index m * rank_E + e. Lower-weight terms cannot reach the
// origin and drop out, so only the top-weight part survives.
Matrix enhanced_symbol(const DarbouxOperator& op);

// Zero-order part: apply(op, constant e) at the origin, rank_F x rank_E.
Matrix zeroth_order_matrix(const DarbouxOperator& op);

// True when every term of weighted order == declared order has constant
// coefficients (the symbol and chain analysis require this).
bool has_constant_top_coefficients(const DarbouxOperator& op);

// True when all coefficients are constants.
bool has_constant_coefficients(const DarbouxOperator& op);

std::string generator_name(const Generator& g);

}  // namespace contact

#endif
