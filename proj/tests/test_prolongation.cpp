#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <random>

#include "contact/oracle.hpp"
#include "contact/prolongation.hpp"
#include "test_helpers.hpp"

using namespace contact;
using namespace contact::testing;

namespace {

// Direct computation of (S_perp^l (x) K_H) /\ (S_perp^{k+l} (x) E), the
// definition the incremental level step must reproduce.
Subspace level_by_definition(int n, int k, int l, const Subspace& kh,
                             std::int64_t rank_e) {
  Subspace sl = build_sperp(n, l);
  Subspace skl = build_sperp(n, k + l);
  Subspace lhs = tensor_subspace(sl, kh);
  Subspace rhs = tensor_subspace(skl, Subspace::full(rank_e));
  return intersect(lhs, rhs);
}

}  // namespace

TEST_CASE("reference system chain: 2 + 1 + 2 = 5") {
  DarbouxOperator op = pdes_operator();
  ChainDetail detail = contact_chain_detail(enhanced_symbol(op), 1, 1, 8);
  const ProlongationChain& chain = detail.chain;
  CHECK(chain.dim_KH == 1);
  CHECK(chain.levels == std::vector<std::int64_t>{2, 0});
  CHECK(chain.verdict == Verdict::FiniteType);
  REQUIRE(chain.rank_T.has_value());
  CHECK(*chain.rank_T == 5);
}

TEST_CASE("four-equation chain: 3 + 2 + 4 + 2 + 3 = 14") {
  DarbouxOperator op = pdes4_operator();
  ProlongationChain chain = contact_chain(enhanced_symbol(op), 1, 1, 8);
  CHECK(chain.dim_KH == 2);
  CHECK(chain.levels == std::vector<std::int64_t>{4, 2, 3, 0});
  REQUIRE(chain.rank_T.has_value());
  CHECK(*chain.rank_T == 14);
}

TEST_CASE("d_H has a trivial chain") {
  for (int n = 1; n <= 2; ++n) {
    ProlongationChain chain = contact_chain(enhanced_symbol(dh_operator(n)), n, 1, 4);
    CHECK(chain.dim_KH == 0);
    CHECK(chain.verdict == Verdict::FiniteType);
    REQUIRE(chain.rank_T.has_value());
    CHECK(*chain.rank_T == 1);
  }
}

TEST_CASE("Lagrangian-type operator is bounded by eight") {
  DarbouxOperator op = lagrangian_operator();
  ProlongationChain chain = contact_chain(enhanced_symbol(op), 1, 2, 8);
  CHECK(chain.dim_KH == 2);
  CHECK(chain.verdict == Verdict::FiniteType);
  REQUIRE(chain.rank_T.has_value());
  CHECK(*chain.rank_T == 8);
}

TEST_CASE("degenerate symbol is reported, not computed") {
  // one redundant equation: (f) -> (Xf, Xf)
  DarbouxOperator op = make_op(1, 1, 2, 1, {{"X1", {{1}, {1}}}});
  ProlongationChain chain = contact_chain(enhanced_symbol(op), 1, 1, 4);
  CHECK(chain.verdict == Verdict::Degenerate);
  CHECK(chain.levels.empty());
  CHECK_FALSE(chain.rank_T.has_value());
}

TEST_CASE("chain levels agree with the defining intersections") {
  // order-1 case
  {
    DarbouxOperator op = pdes_operator();
    ChainDetail detail = contact_chain_detail(enhanced_symbol(op), 1, 1, 8);
    for (std::size_t l = 1; l <= detail.level_spaces.size(); ++l) {
      Subspace expect =
          level_by_definition(1, 1, static_cast<int>(l), detail.kh, 2);
      CHECK(detail.level_spaces[l - 1] == expect);
    }
  }
  // order-2 case
  {
    DarbouxOperator op = lagrangian_operator();
    ChainDetail detail = contact_chain_detail(enhanced_symbol(op), 1, 2, 8);
    for (std::size_t l = 1; l <= detail.level_spaces.size(); ++l) {
      Subspace expect =
          level_by_definition(1, 2, static_cast<int>(l), detail.kh, 1);
      CHECK(detail.level_spaces[l - 1] == expect);
    }
  }
  // an n=2 first-order case
  {
    DarbouxOperator op = synthetic_n2_operator();
    ChainDetail detail = contact_chain_detail(enhanced_symbol(op), 2, 1, 4);
    for (std::size_t l = 1; l <= detail.level_spaces.size(); ++l) {
      Subspace expect =
          level_by_definition(2, 1, static_cast<int>(l), detail.kh, 2);
      CHECK(detail.level_spaces[l - 1] == expect);
    }
  }
}

TEST_CASE("tensoring sperp2 with the reference kernel") {
  // K_H of example A is one line inside H* (x) E; tensoring with S_perp^2
  // gives a four-dimensional subspace of the 16-dimensional ambient space,
  // cross-checked against a direct Kronecker computation.
  DarbouxOperator op = pdes_operator();
  ChainDetail detail = contact_chain_detail(enhanced_symbol(op), 1, 1, 8);
  REQUIRE(detail.kh.dim() == 1);
  Subspace t = tensor_subspace(build_sperp(1, 2), detail.kh);
  CHECK(t.ambient_dim() == 16);
  CHECK(t.dim() == 4);
  // independent route: Kronecker of hand-written bases
  SparseVec khvec;
  khvec.push_back(1, rat(1));   // dx (x) e2
  khvec.push_back(2, rat(-1));  // dy (x) e1
  std::vector<SparseVec> cols;
  for (std::int64_t j = 0; j < build_sperp(1, 2).dim(); ++j)
    cols.push_back(kron(build_sperp(1, 2).basis().col(j), khvec, 4));
  CHECK(Subspace::from_columns(16, cols) == t);
}

TEST_CASE("the Rumin-type kernel is sperp3") {
  // the sigma homomorphism viewed as a first-order symbol on E = H*
  SymplecticSpace sp = SymplecticSpace::standard(1);
  Matrix sigma = sigma_map(sp);
  // columns of sigma are indexed by (x)^3 = (monomial of degree 1, E = (x)^2);
  // that matches the contact_chain column convention with rank_E = 4? No:
  // treat E as the last two slots, rank_E = 4 would be wrong. Use rank_E = 4
  // only if the symbol had 2*4 columns; here we check the kernel directly.
  Subspace kern = Subspace::from_echelon(8, kernel_basis(sigma));
  CHECK(kern == build_sperp(1, 3));
}

TEST_CASE("tail vanishing on randomized first-order symbols") {
  std::mt19937 rng(31337);
  std::uniform_int_distribution<long> entry(-2, 2);
  int checked = 0;
  for (int trial = 0; trial < 400 && checked < 100; ++trial) {
    int n = 1 + (trial % 2);
    int re = 1 + (trial % 3);
    int rf = 2 * n * re - 1 - (trial % 2);
    if (rf < 1) rf = 1;
    Matrix sym(rf, static_cast<std::int64_t>(2 * n) * re);
    for (std::int64_t c = 0; c < sym.cols(); ++c) {
      std::vector<SparseVec::Entry> entries;
      for (int r = 0; r < rf; ++r) {
        long v = entry(rng);
        if (v != 0) entries.emplace_back(r, rat(v));
      }
      sym.set_col(c, SparseVec::from_entries(std::move(entries)));
    }
    if (rank(sym) != rf) continue;  // degenerate draw
    ProlongationChain chain = contact_chain(sym, n, 1, 6);
    ++checked;
    bool seen_zero = false;
    for (auto l : chain.levels) {
      if (seen_zero) CHECK(l == 0);
      if (l == 0) seen_zero = true;
    }
    // the solution bound dominates the oracle only when finite; here just
    // check internal consistency of rank_T
    if (chain.verdict == Verdict::FiniteType) {
      std::int64_t total = chain.dim_E + chain.dim_KH;
      for (auto l : chain.levels) total += l;
      CHECK(*chain.rank_T == total);
    }
  }
  CHECK(checked >= 100);
}

TEST_CASE("classical chain: full gradient in three variables") {
  // symbol of d on functions over R^3: sym^1 (x) R -> R^3, the identity
  Matrix sym = Matrix::identity(3);
  ProlongationChain chain = classical_chain(sym, 3, 1, 4);
  CHECK(chain.dim_KH == 0);
  CHECK(chain.verdict == Verdict::FiniteType);
  CHECK(*chain.rank_T == 1);
}

TEST_CASE("classical chain: d_H viewed classically is not finite-type") {
  // symbol Lambda^1(R^3) -> R^2 dropping the z-slot; kernel is the line L
  Matrix sym(2, 3);
  sym.set(0, 0, rat(1));
  sym.set(1, 1, rat(1));
  ProlongationChain chain = classical_chain(sym, 3, 1, 6);
  CHECK(chain.dim_KH == 1);
  CHECK(chain.verdict == Verdict::NotFiniteTypeWithinCap);
  CHECK_FALSE(chain.rank_T.has_value());
  for (auto l : chain.levels) CHECK(l == 1);
}

TEST_CASE("classical chain: Killing-type toy on the plane") {
  // sigma_b |-> grad_(a sigma_b) on R^2: sym^1 (x) R^2 -> sym^2, columns
  // (covector a, e_b) mapping to the symmetrized multiset {a, b}
  auto multisets = sym_multisets(2, 2);  // {0,0},{0,1},{1,1}
  Matrix sym(3, 4);
  auto row_of = [&](int a, int b) {
    std::vector<int> key{std::min(a, b), std::max(a, b)};
    for (std::size_t i = 0; i < multisets.size(); ++i)
      if (multisets[i] == key) return static_cast<std::int64_t>(i);
    return static_cast<std::int64_t>(-1);
  };
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      // coefficient of the symmetrization; halves keep the map honest but
      // any surjective normalization gives the same kernel
      sym.set(row_of(a, b), 2 * a + b, sym.at(row_of(a, b), 2 * a + b) + rat(1));
    }
  ProlongationChain chain = classical_chain(sym, 2, 1, 4);
  CHECK(chain.dim_KH == 1);
  CHECK(chain.verdict == Verdict::FiniteType);
  REQUIRE(chain.rank_T.has_value());
  CHECK(*chain.rank_T == 3);

  // brute-force polynomial oracle for Killing fields of flat R^2
  // unknowns: coefficients of sigma_1, sigma_2 up to degree 3
  std::vector<std::array<int, 2>> monos;
  for (int i = 0; i <= 3; ++i)
    for (int j = 0; i + j <= 3; ++j) monos.push_back({i, j});
  auto mono_id = [&](int i, int j) {
    for (std::size_t t = 0; t < monos.size(); ++t)
      if (monos[t][0] == i && monos[t][1] == j) return static_cast<std::int64_t>(t);
    return static_cast<std::int64_t>(-1);
  };
  std::vector<SparseVec> cols;
  for (int comp = 0; comp < 2; ++comp)
    for (const auto& mn : monos) {
      // equations: d_1 s_1 = 0, d_2 s_2 = 0, d_1 s_2 + d_2 s_1 = 0,
      // rows indexed by output monomial stacked per equation
      std::vector<SparseVec::Entry> entries;
      auto add = [&](int eq, int i, int j, long c) {
        if (i < 0 || j < 0 || c == 0) return;
        entries.emplace_back(eq * 16 + mono_id(i, j), rat(c));
      };
      int i = mn[0], j = mn[1];
      if (comp == 0) {
        add(0, i - 1, j, i);      // d_x sigma_1
        add(2, i, j - 1, j);      // d_y sigma_1
      } else {
        add(1, i, j - 1, j);      // d_y sigma_2
        add(2, i - 1, j, i);      // d_x sigma_2
      }
      cols.push_back(SparseVec::from_entries(std::move(entries)));
    }
  std::int64_t killing_dim =
      static_cast<std::int64_t>(kernel_combinations(cols).size());
  CHECK(killing_dim == 3);
  CHECK(killing_dim == *chain.rank_T);
}

TEST_CASE("classical kernel embeds in the contact kernel levelwise") {
  // compare chains of the same operator: classical symbol = restriction of
  // the enhanced symbol to the gamma = 0 monomials
  for (const DarbouxOperator& op : {pdes_operator(), lagrangian_operator()}) {
    Matrix sym = enhanced_symbol(op);
    const auto& model = monomial_embed(op.n, op.declared_order);
    std::vector<std::int64_t> plain_cols;
    for (std::size_t m = 0; m < model.monomials.size(); ++m)
      if (model.monomials[m].gamma == 0)
        for (int j = 0; j < op.rank_E; ++j)
          plain_cols.push_back(static_cast<std::int64_t>(m) * op.rank_E + j);
    Matrix classical(sym.rows(), static_cast<std::int64_t>(plain_cols.size()));
    for (std::size_t c = 0; c < plain_cols.size(); ++c)
      classical.set_col(static_cast<std::int64_t>(c), sym.col(plain_cols[c]));
    if (rank(classical) != classical.rows()) continue;
    ProlongationChain cc = classical_chain(classical, 2 * op.n,
                                           op.declared_order, 6);
    ProlongationChain hc = contact_chain(sym, op.n, op.declared_order, 6);
    CHECK(cc.dim_KH <= hc.dim_KH);
    for (std::size_t l = 0; l < cc.levels.size() && l < hc.levels.size(); ++l)
      CHECK(cc.levels[l] <= hc.levels[l]);
  }
}

TEST_CASE("flat connection for d_H on the five-dimensional model") {
  DarbouxOperator op = dh_operator(2);
  ProlongationChain chain = contact_chain(enhanced_symbol(op), 2, 1, 4);
  FlatConnection conn = build_flat_connection(op, chain);
  CHECK(conn.total_rank == 1);
  for (const auto& a : conn.coeff) CHECK(a.nnz() == 0);
  ConnectionCheck check = check_connection(op, conn, 4);
  CHECK(check.parallel_dim == 1);
  CHECK(check.solution_dim == 1);
  CHECK(check.projection_bijective);
}

TEST_CASE("flat connection for the synthetic n=2 system") {
  DarbouxOperator op = synthetic_n2_operator();
  ProlongationChain chain = contact_chain(enhanced_symbol(op), 2, 1, 6);
  CHECK(chain.dim_KH == 1);
  CHECK(chain.verdict == Verdict::FiniteType);
  CHECK(chain.levels == std::vector<std::int64_t>{0});
  REQUIRE(chain.rank_T.has_value());
  CHECK(*chain.rank_T == 3);
  FlatConnection conn = build_flat_connection(op, chain);
  CHECK(conn.total_rank == 3);
  CHECK(conn.block_dims == std::vector<std::int64_t>{2, 1});

  // the E rows of A_a select the direction-a component of the K_H block;
  // with no zero-order part the E-to-E block vanishes
  Matrix kh = kernel_basis(enhanced_symbol(op));
  for (int a = 0; a < 4; ++a) {
    for (int r = 0; r < 2; ++r)
      for (int c = 0; c < 2; ++c) CHECK(conn.coeff[a].at(r, c) == rat(0));
    for (int r = 0; r < 2; ++r)
      CHECK(conn.coeff[a].at(r, 2) == kh.col(0).at(a * 2 + r));
  }

  ConnectionCheck check = check_connection(op, conn, 5);
  CHECK(check.parallel_dim == 3);
  CHECK(check.solution_dim == 3);
  CHECK(check.projection_bijective);
}

TEST_CASE("flat connection with a zero-order term") {
  // (f, g) |-> (X1 f - g, X2 f, Y1 f, Y2 f, X1 g, X2 g, Y1 g, Y2 g):
  // solutions f = a + b x1, g = b
  DarbouxOperator op = make_op(
      2, 2, 8, 1,
      {{"X1", {{1, 0}, {0, 0}, {0, 0}, {0, 0}, {0, 1}, {0, 0}, {0, 0}, {0, 0}}},
       {"X2", {{0, 0}, {1, 0}, {0, 0}, {0, 0}, {0, 0}, {0, 1}, {0, 0}, {0, 0}}},
       {"Y1", {{0, 0}, {0, 0}, {1, 0}, {0, 0}, {0, 0}, {0, 0}, {0, 1}, {0, 0}}},
       {"Y2", {{0, 0}, {0, 0}, {0, 0}, {1, 0}, {0, 0}, {0, 0}, {0, 0}, {0, 1}}},
       {"", {{0, -1}, {0, 0}, {0, 0}, {0, 0}, {0, 0}, {0, 0}, {0, 0}, {0, 0}}}});
  ProlongationChain chain = contact_chain(enhanced_symbol(op), 2, 1, 4);
  CHECK(chain.dim_KH == 0);
  FlatConnection conn = build_flat_connection(op, chain);
  CHECK(conn.total_rank == 2);
  ConnectionCheck check = check_connection(op, conn, 4);
  CHECK(check.solution_dim == 2);
  CHECK(check.parallel_dim == 2);
  CHECK(check.projection_bijective);
}

TEST_CASE("flat connection with zero-order term and nontrivial kernel") {
  // the synthetic system with an added zero-order coupling
  DarbouxOperator op = make_op(
      2, 2, 7, 1,
      {{"X1", {{1, 0}, {0, 1}, {0, 0}, {0, 0}, {0, 0}, {0, 0}, {0, 0}}},
       {"Y1", {{0, 0}, {1, 0}, {0, 1}, {0, 0}, {0, 0}, {0, 0}, {0, 0}}},
       {"X2", {{0, 0}, {0, 0}, {0, 0}, {1, 0}, {0, 1}, {0, 0}, {0, 0}}},
       {"Y2", {{0, 0}, {0, 0}, {0, 0}, {0, 0}, {0, 0}, {1, 0}, {0, 1}}},
       {"", {{0, 1}, {0, 0}, {0, 0}, {0, 0}, {0, 0}, {0, 0}, {0, 0}}}});
  ProlongationChain chain = contact_chain(enhanced_symbol(op), 2, 1, 6);
  CHECK(chain.verdict == Verdict::FiniteType);
  FlatConnection conn = build_flat_connection(op, chain);
  ConnectionCheck check = check_connection(op, conn, 5);
  CHECK(check.parallel_dim == check.solution_dim);
  CHECK(check.projection_bijective);
}

TEST_CASE("flat connection preconditions") {
  DarbouxOperator op = pdes_operator();  // n = 1
  ProlongationChain chain = contact_chain(enhanced_symbol(op), 1, 1, 8);
  CHECK_THROWS_AS(build_flat_connection(op, chain), std::invalid_argument);
}

TEST_CASE("solution dimension never exceeds the finite-type bound") {
  struct Case {
    DarbouxOperator op;
    int n, k;
  };
  std::vector<Case> cases = {{pdes_operator(), 1, 1},
                             {pdes4_operator(), 1, 1},
                             {lagrangian_operator(), 1, 2},
                             {dh_operator(1), 1, 1},
                             {synthetic_n2_operator(), 2, 1}};
  for (const auto& c : cases) {
    ProlongationChain chain = contact_chain(enhanced_symbol(c.op), c.n, c.k, 8);
    REQUIRE(chain.verdict == Verdict::FiniteType);
    SolutionProfile p = stabilized_dim(c.op, 6);
    REQUIRE(p.stabilized_dim.has_value());
    CHECK(*p.stabilized_dim <= *chain.rank_T);
  }
}
