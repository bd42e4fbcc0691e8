#include "contact/subspace.hpp"

#include <stdexcept>

namespace contact {

Subspace Subspace::zero(std::int64_t ambient) {
  Subspace s;
  s.ambient_ = ambient;
  s.basis_ = Matrix(ambient, 0);
  return s;
}

Subspace Subspace::full(std::int64_t ambient) {
  Subspace s;
  s.ambient_ = ambient;
  s.basis_ = Matrix::identity(ambient);
  return s;
}

Subspace Subspace::from_columns(std::int64_t ambient, std::vector<SparseVec> cols) {
  std::vector<SparseVec> ech = column_echelon(std::move(cols));
  Subspace s;
  s.ambient_ = ambient;
  s.basis_ = Matrix(ambient, static_cast<std::int64_t>(ech.size()));
  for (std::size_t j = 0; j < ech.size(); ++j)
    s.basis_.set_col(static_cast<std::int64_t>(j), std::move(ech[j]));
  return s;
}

Subspace Subspace::from_echelon(std::int64_t ambient, Matrix basis) {
  Subspace s;
  s.ambient_ = ambient;
  s.basis_ = std::move(basis);
  return s;
}

SparseVec Subspace::reduce(SparseVec v) const {
  // Basis columns are echelon with distinct leading rows; one forward sweep
  // eliminates every pivot row from v.
  std::size_t i = 0;
  const std::int64_t d = basis_.cols();
  std::int64_t next = 0;
  while (i < v.nnz() && next < d) {
    std::int64_t idx = v.entries()[i].first;
    while (next < d && basis_.col(next).lead_index() < idx) ++next;
    if (next == d) break;
    if (basis_.col(next).lead_index() == idx) {
      Rational c = -v.entries()[i].second;
      v.axpy(c, basis_.col(next));
      ++next;
    } else {
      ++i;
    }
  }
  return v;
}

bool Subspace::contains(const SparseVec& v) const { return reduce(v).empty(); }

bool Subspace::contains(const Subspace& other) const {
  for (std::int64_t j = 0; j < other.dim(); ++j)
    if (!contains(other.basis_.col(j))) return false;
  return true;
}

bool Subspace::operator==(const Subspace& o) const {
  return ambient_ == o.ambient_ && basis_ == o.basis_;
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw std::invalid_argument("intersect: ambient dimension mismatch");
  if (a.dim() == 0 || b.dim() == 0) return Subspace::zero(a.ambient_dim());
  // x lies in the kernel of the residual map iff A x is contained in b,
  // so {A x} spans the intersection.
  std::vector<SparseVec> residuals;
  residuals.reserve(a.dim());
  for (std::int64_t j = 0; j < a.dim(); ++j)
    residuals.push_back(b.reduce(a.basis().col(j)));
  std::vector<SparseVec> combos = kernel_combinations(residuals);
  std::vector<SparseVec> cols;
  cols.reserve(combos.size());
  for (const auto& x : combos) cols.push_back(a.basis().apply(x));
  return Subspace::from_columns(a.ambient_dim(), std::move(cols));
}

Subspace sum(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw std::invalid_argument("sum: ambient dimension mismatch");
  std::vector<SparseVec> cols;
  cols.reserve(a.dim() + b.dim());
  for (std::int64_t j = 0; j < a.dim(); ++j) cols.push_back(a.basis().col(j));
  for (std::int64_t j = 0; j < b.dim(); ++j) cols.push_back(b.basis().col(j));
  return Subspace::from_columns(a.ambient_dim(), std::move(cols));
}

SparseVec kron(const SparseVec& a, const SparseVec& b, std::int64_t b_ambient) {
  std::vector<SparseVec::Entry> entries;
  entries.reserve(a.nnz() * b.nnz());
  for (const auto& ea : a.entries())
    for (const auto& eb : b.entries())
      entries.emplace_back(ea.first * b_ambient + eb.first, ea.second * eb.second);
  return SparseVec::from_entries(std::move(entries));
}

Subspace tensor_subspace(const Subspace& a, const Subspace& b) {
  std::vector<SparseVec> cols;
  cols.reserve(static_cast<std::size_t>(a.dim()) * b.dim());
  for (std::int64_t i = 0; i < a.dim(); ++i)
    for (std::int64_t j = 0; j < b.dim(); ++j)
      cols.push_back(kron(a.basis().col(i), b.basis().col(j), b.ambient_dim()));
  return Subspace::from_columns(a.ambient_dim() * b.ambient_dim(), std::move(cols));
}

}  // namespace contact
