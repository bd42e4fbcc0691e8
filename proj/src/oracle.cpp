#include "contact/oracle.hpp"

#include <map>

namespace contact {

namespace {

struct LinearizedSystem {
  std::vector<WeightedMonomial> monomials;
  std::vector<SparseVec> columns;  // one per (monomial, E index)
};

// One column per unknown coefficient; rows are indexed by pairs
// (output monomial, F index) discovered on the fly.
LinearizedSystem linearize(const DarbouxOperator& op, int cap) {
  LinearizedSystem sys;
  sys.monomials = monomials_up_to_weighted_degree(op.n, cap);
  const int nv = 2 * op.n + 1;
  std::map<Poly::Expo, std::int64_t> row_of;
  for (const auto& m : sys.monomials) {
    Poly mono = monomial_to_poly(op.n, m);
    for (int j = 0; j < op.rank_E; ++j) {
      PolySection s;
      s.rank = op.rank_E;
      s.components.assign(op.rank_E, Poly(nv));
      s.components[j] = mono;
      PolySection im = apply(op, s);
      std::vector<SparseVec::Entry> entries;
      for (int i = 0; i < op.rank_F; ++i)
        for (const auto& [e, c] : im.components[i].terms()) {
          auto [it, ignored] = row_of.try_emplace(
              e, static_cast<std::int64_t>(row_of.size()));
          entries.emplace_back(it->second * op.rank_F + i, c);
        }
      sys.columns.push_back(SparseVec::from_entries(std::move(entries)));
    }
  }
  return sys;
}

}  // namespace

std::vector<PolySection> solution_basis(const DarbouxOperator& op, int cap) {
  LinearizedSystem sys = linearize(op, cap);
  std::vector<SparseVec> combos = kernel_combinations(sys.columns);
  const int nv = 2 * op.n + 1;
  std::vector<PolySection> out;
  out.reserve(combos.size());
  for (const auto& x : combos) {
    PolySection s;
    s.rank = op.rank_E;
    s.components.assign(op.rank_E, Poly(nv));
    for (const auto& [idx, c] : x.entries()) {
      const auto& m = sys.monomials[idx / op.rank_E];
      int j = static_cast<int>(idx % op.rank_E);
      s.components[j] = s.components[j] + monomial_to_poly(op.n, m) * c;
    }
    out.push_back(std::move(s));
  }
  return out;
}

std::int64_t solution_dim(const DarbouxOperator& op, int cap) {
  LinearizedSystem sys = linearize(op, cap);
  return static_cast<std::int64_t>(kernel_combinations(sys.columns).size());
}

SolutionProfile stabilized_dim(const DarbouxOperator& op, int cap_max,
                               int window) {
  SolutionProfile profile;
  for (int cap = 0; cap <= cap_max; ++cap)
    profile.dims_by_degree.push_back(solution_dim(op, cap));
  if (cap_max >= window) {
    bool stable = true;
    for (int i = 0; i < window; ++i)
      stable = stable && profile.dims_by_degree[cap_max - i] ==
                             profile.dims_by_degree[cap_max - i - 1];
    if (stable) profile.stabilized_dim = profile.dims_by_degree[cap_max];
  }
  return profile;
}

bool verify_solution(const DarbouxOperator& op, const PolySection& s) {
  return apply(op, s).is_zero();
}

}  // namespace contact
