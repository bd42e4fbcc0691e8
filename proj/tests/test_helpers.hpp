#ifndef CONTACT_TEST_HELPERS_HPP
#define CONTACT_TEST_HELPERS_HPP

#include <sstream>
#include <string>
#include <vector>

#include "contact/operator.hpp"

namespace contact::testing {

inline std::vector<Generator> word_from(const std::string& spec, int n) {
  std::vector<Generator> out;
  std::istringstream is(spec);
  std::string tok;
  while (is >> tok) {
    Generator g;
    if (tok == "Z") {
      g.type = GenType::Z;
    } else {
      g.type = tok[0] == 'X' ? GenType::X : GenType::Y;
      g.index = std::stoi(tok.substr(1));
    }
    out.push_back(g);
  }
  (void)n;
  return out;
}

// Constant-coefficient term from a dense integer matrix.
inline DarbouxTerm term_from(const std::string& word, int n,
                             const std::vector<std::vector<long>>& coeff) {
  const int nv = 2 * n + 1;
  DarbouxTerm t;
  t.word = word_from(word, n);
  for (const auto& row : coeff) {
    std::vector<Poly> prow;
    for (long v : row) prow.push_back(Poly::constant(nv, rat(v)));
    t.coeff.push_back(std::move(prow));
  }
  return t;
}

inline DarbouxOperator make_op(
    int n, int rank_e, int rank_f, int order,
    const std::vector<std::pair<std::string, std::vector<std::vector<long>>>>&
        terms) {
  DarbouxOperator op;
  op.n = n;
  op.rank_E = rank_e;
  op.rank_F = rank_f;
  op.declared_order = order;
  for (const auto& [word, coeff] : terms) op.terms.push_back(term_from(word, n, coeff));
  op.validate();
  return op;
}

// The reference first-order system (f, g) |-> (X f, X g + Y f, Y g) on R^3.
inline DarbouxOperator pdes_operator() {
  return make_op(1, 2, 3, 1,
                 {{"X1", {{1, 0}, {0, 1}, {0, 0}}},
                  {"Y1", {{0, 0}, {1, 0}, {0, 1}}}});
}

// The length-four variant (f, g, h) |-> (Xf, Xg+Yf, Xh+Yg, Yh).
inline DarbouxOperator pdes4_operator() {
  return make_op(1, 3, 4, 1,
                 {{"X1", {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {0, 0, 0}}},
                  {"Y1", {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}}}});
}

// f |-> (X^2 f, Y^2 f), weighted order 2.
inline DarbouxOperator lagrangian_operator() {
  return make_op(1, 1, 2, 2, {{"X1 X1", {{1}, {0}}}, {"Y1 Y1", {{0}, {1}}}});
}

// d_H on functions: f |-> (X_1 f, .., Y_n f).
inline DarbouxOperator dh_operator(int n) {
  DarbouxOperator op;
  op.n = n;
  op.rank_E = 1;
  op.rank_F = 2 * n;
  op.declared_order = 1;
  const int nv = 2 * n + 1;
  for (int a = 0; a < 2 * n; ++a) {
    DarbouxTerm t;
    Generator g;
    if (a < n) {
      g.type = GenType::X;
      g.index = a + 1;
    } else {
      g.type = GenType::Y;
      g.index = a - n + 1;
    }
    t.word = {g};
    t.coeff.assign(2 * n, std::vector<Poly>(1, Poly(nv)));
    t.coeff[a][0] = Poly::constant(nv, rat(1));
    op.terms.push_back(std::move(t));
  }
  op.validate();
  return op;
}

// The n=2 synthetic finite-type system with one-dimensional symbol kernel:
// (f, g) |-> (X1 f, X1 g + Y1 f, Y1 g, X2 f, X2 g, Y2 f, Y2 g).
inline DarbouxOperator synthetic_n2_operator() {
  return make_op(2, 2, 7, 1,
                 {{"X1", {{1, 0}, {0, 1}, {0, 0}, {0, 0}, {0, 0}, {0, 0}, {0, 0}}},
                  {"Y1", {{0, 0}, {1, 0}, {0, 1}, {0, 0}, {0, 0}, {0, 0}, {0, 0}}},
                  {"X2", {{0, 0}, {0, 0}, {0, 0}, {1, 0}, {0, 1}, {0, 0}, {0, 0}}},
                  {"Y2", {{0, 0}, {0, 0}, {0, 0}, {0, 0}, {0, 0}, {1, 0}, {0, 1}}}});
}

}  // namespace contact::testing

#endif
