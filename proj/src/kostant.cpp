#include "contact/kostant.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace contact {

Integer weyl_dim(int rank_r, const HighestWeight& w) {
  if (w.rank() != rank_r)
    throw std::invalid_argument("weyl_dim: weight rank mismatch");
  for (long l : w.labels)
    if (l < 0) throw std::invalid_argument("weyl_dim: negative label");
  // Coordinates l_i = sum_{j >= i} lambda_j, rho_i = r - i + 1; positive
  // roots of C_r are e_i - e_j, e_i + e_j (i < j) and 2 e_i.
  std::vector<long> l(rank_r), rho(rank_r);
  for (int i = 0; i < rank_r; ++i) {
    long s = 0;
    for (int j = i; j < rank_r; ++j) s += w.labels[j];
    l[i] = s;
    rho[i] = rank_r - i;
  }
  Integer num = 1, den = 1;
  auto push = [&](long top, long bottom) {
    num *= top;
    den *= bottom;
  };
  for (int i = 0; i < rank_r; ++i) {
    for (int j = i + 1; j < rank_r; ++j) {
      push((l[i] + rho[i]) - (l[j] + rho[j]), rho[i] - rho[j]);
      push((l[i] + rho[i]) + (l[j] + rho[j]), rho[i] + rho[j]);
    }
    push(2 * (l[i] + rho[i]), 2 * rho[i]);
  }
  Integer q = num / den;
  if (q * den != num) throw std::logic_error("weyl_dim: non-integral result");
  return q;
}

HighestWeight bound_weight(const HighestWeight& e, int k) {
  if (k < 1) throw std::invalid_argument("bound_weight: order must be >= 1");
  HighestWeight out;
  out.labels.reserve(e.labels.size() + 1);
  out.labels.push_back(k - 1);
  out.labels.insert(out.labels.end(), e.labels.begin(), e.labels.end());
  return out;
}

HighestWeight cartan_product(const HighestWeight& a, const HighestWeight& b) {
  if (a.rank() != b.rank())
    throw std::invalid_argument("cartan_product: rank mismatch");
  HighestWeight out = a;
  for (int i = 0; i < b.rank(); ++i) out.labels[i] += b.labels[i];
  return out;
}

namespace {

// Row index of a sorted multiset in the weakly-increasing enumeration.
std::map<std::vector<int>, std::int64_t> multiset_index(int d, int k) {
  std::map<std::vector<int>, std::int64_t> out;
  for (const auto& ms : sym_multisets(d, k))
    out.emplace(ms, static_cast<std::int64_t>(out.size()));
  return out;
}

// Class-sum coordinates of an ambient tensor: row per sorted multiset.
// Same kernel as the symmetrization projector.
SparseVec sym_coordinates(const SparseVec& v, int d, int k,
                          const std::map<std::vector<int>, std::int64_t>& index) {
  std::vector<SparseVec::Entry> entries;
  entries.reserve(v.nnz());
  for (const auto& [idx, c] : v.entries()) {
    std::vector<int> digits(k);
    std::int64_t rest = idx;
    for (int p = k - 1; p >= 0; --p) {
      digits[p] = static_cast<int>(rest % d);
      rest /= d;
    }
    std::sort(digits.begin(), digits.end());
    entries.emplace_back(index.at(digits), c);
  }
  return SparseVec::from_entries(std::move(entries));
}

}  // namespace

Matrix cartan_symbol_matrix(int n, int k, int m) {
  const int two_n = 2 * n;
  const auto& model = monomial_embed(n, k);
  Subspace syme = sym_subspace(n, m);
  const std::int64_t rank_e = syme.dim();
  const auto index = multiset_index(two_n, k + m);
  const std::int64_t rows = static_cast<std::int64_t>(index.size());

  // Symmetrized Levi traces; identically zero, kept as an explicit quotient.
  std::vector<SparseVec> trace_cols;
  if (k + m >= 2) {
    SparseVec one;
    one.push_back(0, rat(1));
    SparseVec levi =
        insert_levi(SymplecticSpace::standard(n), one, 2, 1, 0);
    Subspace lower = sym_subspace(n, k + m - 2);
    for (std::int64_t j = 0; j < lower.dim(); ++j) {
      SparseVec t = kron(levi, lower.basis().col(j), tensor_pow(two_n, k + m - 2));
      SparseVec coords = sym_coordinates(t, two_n, k + m, index);
      if (!coords.empty()) trace_cols.push_back(std::move(coords));
    }
  }
  Subspace trace_span =
      Subspace::from_columns(rows, std::move(trace_cols));

  Matrix out(rows, static_cast<std::int64_t>(model.monomials.size()) * rank_e);
  for (std::size_t i = 0; i < model.monomials.size(); ++i)
    for (std::int64_t j = 0; j < rank_e; ++j) {
      SparseVec t = kron(model.embed.col(static_cast<std::int64_t>(i)),
                         syme.basis().col(j), tensor_pow(two_n, m));
      SparseVec coords = sym_coordinates(t, two_n, k + m, index);
      if (trace_span.dim() > 0) coords = trace_span.reduce(std::move(coords));
      out.set_col(static_cast<std::int64_t>(i) * rank_e + j, std::move(coords));
    }
  return out;
}

Subspace cartan_symbol_kernel(int n, int k, int m) {
  const int two_n = 2 * n;
  const auto& model = monomial_embed(n, k);
  Subspace syme = sym_subspace(n, m);
  const std::int64_t rank_e = syme.dim();
  Matrix symbol = cartan_symbol_matrix(n, k, m);
  Matrix kern = kernel_basis(symbol);
  std::vector<SparseVec> cols;
  cols.reserve(kern.cols());
  for (std::int64_t j = 0; j < kern.cols(); ++j) {
    SparseVec v;
    for (const auto& [idx, c] : kern.col(j).entries()) {
      SparseVec t = kron(model.embed.col(idx / rank_e),
                         syme.basis().col(idx % rank_e), tensor_pow(two_n, m));
      v.axpy(c, t);
    }
    cols.push_back(std::move(v));
  }
  return Subspace::from_columns(tensor_pow(two_n, k + m), std::move(cols));
}

int cartan_lmax(int n, int k, long max_weight_entry) {
  return 2 * (k + static_cast<int>(max_weight_entry) + 2 * n);
}

GradedReport graded_check(int n, int k, int m, int lmax) {
  GradedReport report;
  report.n = n;
  report.k = k;
  report.m = m;

  const std::int64_t dim_e = binomial(2 * n + m - 1, m).get_si();
  for (int j = 0; j < k; ++j)
    report.dims_vj.push_back(sperp_dim_formula(n, j) * dim_e);

  Matrix symbol = cartan_symbol_matrix(n, k, m);
  ProlongationChain chain = contact_chain(symbol, n, k, lmax);
  if (chain.verdict == Verdict::NotFiniteTypeWithinCap)
    throw std::runtime_error("graded_check: chain did not terminate within lmax");
  report.dims_vj.push_back(chain.dim_KH);
  for (std::size_t i = 0; i < chain.levels.size(); ++i)
    if (chain.levels[i] != 0) report.dims_vj.push_back(chain.levels[i]);

  report.total = 0;
  for (auto d : report.dims_vj) report.total += d;

  HighestWeight e;
  e.labels.assign(n, 0);
  e.labels[0] = m;
  report.weyl_total = weyl_dim(n + 1, bound_weight(e, k));
  report.passes =
      chain.verdict == Verdict::FiniteType && report.total == report.weyl_total;
  return report;
}

}  // namespace contact
