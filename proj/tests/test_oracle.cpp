#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "contact/oracle.hpp"
#include "test_helpers.hpp"

using namespace contact;
using namespace contact::testing;

TEST_CASE("constants are the only solutions of d_H") {
  for (int n = 1; n <= 2; ++n) {
    DarbouxOperator op = dh_operator(n);
    CHECK(solution_dim(op, 4) == 1);
    SolutionProfile p = stabilized_dim(op, 4);
    REQUIRE(p.stabilized_dim.has_value());
    CHECK(*p.stabilized_dim == 1);
  }
}

TEST_CASE("the reference system has a five-dimensional solution space") {
  DarbouxOperator op = pdes_operator();
  CHECK(solution_dim(op, 4) == 5);
  SolutionProfile p = stabilized_dim(op, 6);
  CHECK(p.dims_by_degree == std::vector<std::int64_t>{2, 3, 5, 5, 5, 5, 5});
  REQUIRE(p.stabilized_dim.has_value());
  CHECK(*p.stabilized_dim == 5);
}

TEST_CASE("the four-equation system stabilizes at fourteen") {
  DarbouxOperator op = pdes4_operator();
  CHECK(solution_dim(op, 6) == 14);
  SolutionProfile p = stabilized_dim(op, 6);
  REQUIRE(p.stabilized_dim.has_value());
  CHECK(*p.stabilized_dim == 14);
}

TEST_CASE("the Lagrangian-type operator stabilizes at eight") {
  DarbouxOperator op = lagrangian_operator();
  CHECK(solution_dim(op, 6) == 8);
  SolutionProfile p = stabilized_dim(op, 6);
  REQUIRE(p.stabilized_dim.has_value());
  CHECK(*p.stabilized_dim == 8);
}

TEST_CASE("an underdetermined equation never stabilizes") {
  // X f = 0 alone: any g(y, z) solves, so dims grow with the cap
  DarbouxOperator op = make_op(1, 1, 1, 1, {{"X1", {{1}}}});
  SolutionProfile p = stabilized_dim(op, 6);
  CHECK_FALSE(p.stabilized_dim.has_value());
  for (std::size_t i = 1; i < p.dims_by_degree.size(); ++i)
    CHECK(p.dims_by_degree[i] > p.dims_by_degree[i - 1]);
}

TEST_CASE("profiles are non-decreasing in the cap") {
  for (const DarbouxOperator& op :
       {pdes_operator(), pdes4_operator(), lagrangian_operator()}) {
    SolutionProfile p = stabilized_dim(op, 5);
    for (std::size_t i = 1; i < p.dims_by_degree.size(); ++i)
      CHECK(p.dims_by_degree[i] >= p.dims_by_degree[i - 1]);
  }
}

TEST_CASE("verify_solution") {
  DarbouxOperator op = pdes_operator();
  const int nv = 3;
  Poly x = Poly::variable(nv, 0), y = Poly::variable(nv, 1),
       z = Poly::variable(nv, 2);
  PolySection good;
  good.rank = 2;
  good.components = {z * rat(2) + y * y + y + Poly::constant(nv, rat(1)),
                     (z - x * y) * rat(2) - x * x - x + Poly::constant(nv, rat(1))};
  CHECK(verify_solution(op, good));

  PolySection constant;
  constant.rank = 1;
  constant.components = {Poly::constant(nv, rat(5))};
  CHECK(verify_solution(dh_operator(1), constant));

  DarbouxOperator xonly = make_op(1, 1, 1, 1, {{"X1", {{1}}}});
  PolySection bad;
  bad.rank = 1;
  bad.components = {x};
  CHECK_FALSE(verify_solution(xonly, bad));
}

TEST_CASE("solution basis members solve and are independent") {
  DarbouxOperator op = pdes_operator();
  std::vector<PolySection> basis = solution_basis(op, 4);
  CHECK(basis.size() == 5);
  for (const auto& s : basis) CHECK(verify_solution(op, s));
  // linearity: rational combinations stay in the kernel
  PolySection comb;
  comb.rank = 2;
  comb.components = {Poly(3), Poly(3)};
  Rational w(1);
  for (const auto& s : basis) {
    for (int j = 0; j < 2; ++j)
      comb.components[j] = comb.components[j] + s.components[j] * w;
    w += rat(1, 3);
  }
  CHECK(verify_solution(op, comb));
}

TEST_CASE("dims do not depend on the unknown enumeration order") {
  // reversing the unknown-coefficient enumeration leaves every dimension
  // unchanged; computed here directly on the reversed linear system
  DarbouxOperator op = pdes_operator();
  for (int cap = 0; cap <= 4; ++cap) {
    auto monos = monomials_up_to_weighted_degree(op.n, cap);
    const int nv = 3;
    std::map<Poly::Expo, std::int64_t> row_of;
    std::vector<SparseVec> columns;
    for (auto it = monos.rbegin(); it != monos.rend(); ++it) {
      Poly mono = monomial_to_poly(op.n, *it);
      for (int j = op.rank_E - 1; j >= 0; --j) {
        PolySection s;
        s.rank = op.rank_E;
        s.components.assign(op.rank_E, Poly(nv));
        s.components[j] = mono;
        PolySection im = apply(op, s);
        std::vector<SparseVec::Entry> entries;
        for (int i = 0; i < op.rank_F; ++i)
          for (const auto& [e, c] : im.components[i].terms()) {
            auto [rit, inserted] = row_of.try_emplace(
                e, static_cast<std::int64_t>(row_of.size()));
            entries.emplace_back(rit->second * op.rank_F + i, c);
          }
        columns.push_back(SparseVec::from_entries(std::move(entries)));
      }
    }
    std::int64_t reversed_dim =
        static_cast<std::int64_t>(kernel_combinations(columns).size());
    CHECK(reversed_dim == solution_dim(op, cap));
  }
}
