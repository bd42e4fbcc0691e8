#ifndef CONTACT_PROBLEM_HPP
#define CONTACT_PROBLEM_HPP

#include <optional>
#include <string>
#include <vector>

#include "contact/kostant.hpp"
#include "contact/operator.hpp"
#include "contact/oracle.hpp"
#include "contact/prolongation.hpp"

namespace contact {

// On-disk description of an operator problem. The text format is
// line-oriented with nested blocks; see parse_document.
struct KostantBlock {
  std::vector<long> weight;
  int m = 0;
  bool operator==(const KostantBlock& o) const = default;
};

struct ProblemDocument {
  int format_version = 1;
  int n = 1;
  int order = 1;
  int rank_e = 1;
  int rank_f = 1;
  struct Term {
    std::vector<Generator> word;
    std::vector<std::vector<std::string>> coeff;  // polynomial strings
    bool operator==(const Term& o) const = default;
  };
  std::vector<Term> terms;
  int lmax = 8;
  int nmax = 6;
  std::optional<KostantBlock> kostant;
  std::optional<std::vector<std::string>> solution;

  bool operator==(const ProblemDocument& o) const = default;
};

// Recursive-descent polynomial parser: rational literals, x1.., y1.., z,
// + - * ^ and parentheses. Throws std::invalid_argument with a position.
Poly parse_poly(const std::string& text, int n);

ProblemDocument parse_document(const std::string& text);
std::string serialize_document(const ProblemDocument& doc);

// Faithful operator; validates ranks, generator names and declared order.
DarbouxOperator parse_operator(const ProblemDocument& doc);

PolySection parse_solution_section(const ProblemDocument& doc);

// Machine-readable outcome of the full pipeline. Every field is a pure
// function of the inputs.
struct Report {
  int format_version = 1;
  ProblemDocument problem;
  int weighted_order = 0;
  std::int64_t symbol_rank = 0;
  ProlongationChain chain;
  std::optional<SolutionProfile> oracle;
  std::optional<ConnectionCheck> connection;
  std::int64_t connection_rank = 0;
  std::optional<GradedReport> graded;
};

Report run_prolong(const ProblemDocument& doc);

std::string report_text(const Report& r);
std::string report_json(const Report& r);

}  // namespace contact

#endif
