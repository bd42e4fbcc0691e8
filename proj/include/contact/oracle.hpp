#ifndef CONTACT_ORACLE_HPP
#define CONTACT_ORACLE_HPP

#include <optional>
#include <vector>

#include "contact/operator.hpp"

namespace contact {

// Brute-force polynomial solution counts for D sigma = 0 on the Heisenberg
// group, filtered by weighted degree. Independent of the prolongation
// machinery: it only ever calls apply() and exact kernels.
struct SolutionProfile {
  std::vector<std::int64_t> dims_by_degree;  // entry N: dim of wdeg <= N solutions
  std::optional<std::int64_t> stabilized_dim;
};

// Solutions with all components of weighted degree <= cap, as sections.
std::vector<PolySection> solution_basis(const DarbouxOperator& op, int cap);

std::int64_t solution_dim(const DarbouxOperator& op, int cap);

// stabilized_dim is set iff the last window+1 entries of dims_by_degree agree.
SolutionProfile stabilized_dim(const DarbouxOperator& op, int cap_max,
                               int window = 2);

bool verify_solution(const DarbouxOperator& op, const PolySection& s);

}  // namespace contact

#endif
