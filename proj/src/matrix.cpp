#include "contact/matrix.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <stdexcept>

namespace contact {

Matrix Matrix::identity(std::int64_t d) {
  Matrix m(d, d);
  for (std::int64_t j = 0; j < d; ++j) {
    SparseVec v;
    v.push_back(j, Rational(1));
    m.set_col(j, std::move(v));
  }
  return m;
}

void Matrix::set(std::int64_t r, std::int64_t c, const Rational& v) {
  assert(r >= 0 && r < rows_ && c >= 0 && c < cols());
  std::vector<SparseVec::Entry> entries(cols_[c].entries());
  bool found = false;
  for (auto& e : entries)
    if (e.first == r) {
      e.second = v;
      found = true;
    }
  if (!found) entries.emplace_back(r, v);
  cols_[c] = SparseVec::from_entries(std::move(entries));
}

Matrix Matrix::transpose() const {
  Matrix t(cols(), rows_);
  std::vector<std::vector<SparseVec::Entry>> buckets(rows_);
  for (std::int64_t j = 0; j < cols(); ++j)
    for (const auto& e : cols_[j].entries())
      buckets[e.first].emplace_back(j, e.second);
  for (std::int64_t r = 0; r < rows_; ++r)
    t.set_col(r, SparseVec::from_entries(std::move(buckets[r])));
  return t;
}

Matrix Matrix::mul(const Matrix& other) const {
  if (cols() != other.rows())
    throw std::invalid_argument("matrix product shape mismatch");
  Matrix out(rows_, other.cols());
  for (std::int64_t j = 0; j < other.cols(); ++j)
    out.set_col(j, apply(other.col(j)));
  return out;
}

SparseVec Matrix::apply(const SparseVec& v) const {
  SparseVec out;
  for (const auto& e : v.entries()) out.axpy(e.second, cols_[e.first]);
  return out;
}

std::int64_t Matrix::nnz() const {
  std::int64_t total = 0;
  for (const auto& c : cols_) total += static_cast<std::int64_t>(c.nnz());
  return total;
}

bool Matrix::operator==(const Matrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_;
}

namespace {

// Reduces v against an echelon set held in `basis`, where pivot_of maps a
// leading index to its position in `basis`. Touches only entries at or after
// the matched pivot, so a single forward sweep terminates.
void reduce_against(SparseVec& v, const std::vector<SparseVec>& basis,
                    const std::map<std::int64_t, std::size_t>& pivot_of) {
  std::size_t i = 0;
  while (i < v.nnz()) {
    std::int64_t idx = v.entries()[i].first;
    auto it = pivot_of.find(idx);
    if (it == pivot_of.end()) {
      ++i;
      continue;
    }
    Rational c = -v.entries()[i].second;
    v.axpy(c, basis[it->second]);
  }
}

// Same, but mirrors every operation on a companion vector.
void reduce_against_tracked(SparseVec& v, SparseVec& companion,
                            const std::vector<SparseVec>& basis,
                            const std::vector<SparseVec>& companions,
                            const std::map<std::int64_t, std::size_t>& pivot_of) {
  std::size_t i = 0;
  while (i < v.nnz()) {
    std::int64_t idx = v.entries()[i].first;
    auto it = pivot_of.find(idx);
    if (it == pivot_of.end()) {
      ++i;
      continue;
    }
    Rational c = -v.entries()[i].second;
    v.axpy(c, basis[it->second]);
    companion.axpy(c, companions[it->second]);
  }
}

}  // namespace

std::vector<SparseVec> column_echelon(std::vector<SparseVec> cols) {
  std::vector<SparseVec> basis;
  std::map<std::int64_t, std::size_t> pivot_of;
  for (auto& v : cols) {
    reduce_against(v, basis, pivot_of);
    if (v.empty()) continue;
    Rational inv = 1 / v.lead_value();
    v.scale(inv);
    std::int64_t piv = v.lead_index();
    for (auto& b : basis) {
      Rational c = b.at(piv);
      if (!is_zero(c)) b.axpy(-c, v);
    }
    pivot_of[piv] = basis.size();
    basis.push_back(std::move(v));
  }
  std::sort(basis.begin(), basis.end(), [](const SparseVec& a, const SparseVec& b) {
    return a.lead_index() < b.lead_index();
  });
  return basis;
}

std::vector<SparseVec> kernel_combinations(const std::vector<SparseVec>& cols) {
  std::vector<SparseVec> basis, companions, out;
  std::map<std::int64_t, std::size_t> pivot_of;
  for (std::size_t j = 0; j < cols.size(); ++j) {
    SparseVec v = cols[j];
    SparseVec comb;
    comb.push_back(static_cast<std::int64_t>(j), Rational(1));
    reduce_against_tracked(v, comb, basis, companions, pivot_of);
    if (v.empty()) {
      out.push_back(std::move(comb));
      continue;
    }
    Rational inv = 1 / v.lead_value();
    v.scale(inv);
    comb.scale(inv);
    pivot_of[v.lead_index()] = basis.size();
    basis.push_back(std::move(v));
    companions.push_back(std::move(comb));
  }
  return out;
}

Matrix rref(const Matrix& m) {
  // Row vectors are indexed by column number; canonical row echelon is the
  // column-echelon normal form of the row set.
  Matrix t = m.transpose();
  std::vector<SparseVec> rows;
  rows.reserve(m.rows());
  for (std::int64_t r = 0; r < m.rows(); ++r) rows.push_back(t.col(r));
  std::vector<SparseVec> ech = column_echelon(std::move(rows));
  Matrix out_t(m.cols(), m.rows());
  for (std::size_t i = 0; i < ech.size(); ++i)
    out_t.set_col(static_cast<std::int64_t>(i), std::move(ech[i]));
  return out_t.transpose();
}

std::int64_t rank(const Matrix& m) {
  std::vector<SparseVec> cols;
  cols.reserve(m.cols());
  for (std::int64_t j = 0; j < m.cols(); ++j) cols.push_back(m.col(j));
  return static_cast<std::int64_t>(column_echelon(std::move(cols)).size());
}

namespace {

// Dense kernel for narrow systems; cheaper than sparse bookkeeping.
Matrix kernel_dense(const Matrix& m) {
  const std::int64_t nr = m.rows(), nc = m.cols();
  std::vector<std::vector<Rational>> a(nr, std::vector<Rational>(nc, Rational(0)));
  for (std::int64_t j = 0; j < nc; ++j)
    for (const auto& e : m.col(j).entries()) a[e.first][j] = e.second;

  std::vector<std::int64_t> pivot_col;
  std::int64_t r = 0;
  for (std::int64_t c = 0; c < nc && r < nr; ++c) {
    std::int64_t prow = -1;
    for (std::int64_t i = r; i < nr; ++i)
      if (!is_zero(a[i][c])) {
        prow = i;
        break;
      }
    if (prow < 0) continue;
    std::swap(a[r], a[prow]);
    Rational inv = 1 / a[r][c];
    for (std::int64_t j = c; j < nc; ++j) a[r][j] *= inv;
    for (std::int64_t i = 0; i < nr; ++i) {
      if (i == r || is_zero(a[i][c])) continue;
      Rational f = a[i][c];
      for (std::int64_t j = c; j < nc; ++j) a[i][j] -= f * a[r][j];
    }
    pivot_col.push_back(c);
    ++r;
  }
  std::vector<bool> is_pivot(nc, false);
  for (auto c : pivot_col) is_pivot[c] = true;
  std::vector<SparseVec> cols;
  for (std::int64_t c = 0; c < nc; ++c) {
    if (is_pivot[c]) continue;
    std::vector<SparseVec::Entry> entries;
    entries.emplace_back(c, Rational(1));
    for (std::size_t i = 0; i < pivot_col.size(); ++i)
      if (!is_zero(a[i][c])) entries.emplace_back(pivot_col[i], -a[i][c]);
    cols.push_back(SparseVec::from_entries(std::move(entries)));
  }
  std::vector<SparseVec> ech = column_echelon(std::move(cols));
  Matrix out(nc, static_cast<std::int64_t>(ech.size()));
  for (std::size_t j = 0; j < ech.size(); ++j)
    out.set_col(static_cast<std::int64_t>(j), std::move(ech[j]));
  return out;
}

}  // namespace

Matrix kernel_basis(const Matrix& m) {
  if (m.cols() < 64 && m.rows() <= 2048 && m.cols() > 0)
    return kernel_dense(m);
  std::vector<SparseVec> cols;
  cols.reserve(m.cols());
  for (std::int64_t j = 0; j < m.cols(); ++j) cols.push_back(m.col(j));
  std::vector<SparseVec> combos = kernel_combinations(cols);
  std::vector<SparseVec> ech = column_echelon(std::move(combos));
  Matrix out(m.cols(), static_cast<std::int64_t>(ech.size()));
  for (std::size_t j = 0; j < ech.size(); ++j)
    out.set_col(static_cast<std::int64_t>(j), std::move(ech[j]));
  return out;
}

namespace {

// Gauss-Jordan inverse of a small dense symmetric-positive setup; the inputs
// here are Gram matrices of full-rank factors, hence invertible.
std::vector<std::vector<Rational>> dense_inverse(
    std::vector<std::vector<Rational>> a) {
  const std::size_t d = a.size();
  std::vector<std::vector<Rational>> inv(d, std::vector<Rational>(d, Rational(0)));
  for (std::size_t i = 0; i < d; ++i) inv[i][i] = 1;
  for (std::size_t c = 0; c < d; ++c) {
    std::size_t prow = c;
    while (prow < d && is_zero(a[prow][c])) ++prow;
    if (prow == d) throw std::logic_error("singular Gram matrix");
    std::swap(a[c], a[prow]);
    std::swap(inv[c], inv[prow]);
    Rational s = 1 / a[c][c];
    for (std::size_t j = 0; j < d; ++j) {
      a[c][j] *= s;
      inv[c][j] *= s;
    }
    for (std::size_t i = 0; i < d; ++i) {
      if (i == c || is_zero(a[i][c])) continue;
      Rational f = a[i][c];
      for (std::size_t j = 0; j < d; ++j) {
        a[i][j] -= f * a[c][j];
        inv[i][j] -= f * inv[c][j];
      }
    }
  }
  return inv;
}

Matrix from_dense(const std::vector<std::vector<Rational>>& a, std::int64_t rows,
                  std::int64_t cols) {
  Matrix m(rows, cols);
  for (std::int64_t j = 0; j < cols; ++j) {
    std::vector<SparseVec::Entry> entries;
    for (std::int64_t i = 0; i < rows; ++i)
      if (!is_zero(a[i][j])) entries.emplace_back(i, a[i][j]);
    m.set_col(j, SparseVec::from_entries(std::move(entries)));
  }
  return m;
}

}  // namespace

Matrix splitting(const Matrix& m) {
  // Full-rank factorization m = C R, then the Moore-Penrose inverse
  // R^T (R R^T)^{-1} (C^T C)^{-1} C^T. The result is independent of the
  // factorization, so echelon columns give a deterministic answer.
  std::vector<SparseVec> cols;
  cols.reserve(m.cols());
  for (std::int64_t j = 0; j < m.cols(); ++j) cols.push_back(m.col(j));
  std::vector<SparseVec> cbasis = column_echelon(std::move(cols));
  const std::int64_t r = static_cast<std::int64_t>(cbasis.size());
  if (r == 0) return Matrix(m.cols(), m.rows());

  Matrix C(m.rows(), r);
  for (std::int64_t j = 0; j < r; ++j) C.set_col(j, cbasis[j]);

  // Coordinates of each column of m in the echelon basis.
  Matrix R(r, m.cols());
  for (std::int64_t j = 0; j < m.cols(); ++j) {
    SparseVec v = m.col(j);
    std::vector<SparseVec::Entry> coords;
    for (std::int64_t i = 0; i < r; ++i) {
      Rational c = v.at(cbasis[i].lead_index());
      if (!is_zero(c)) {
        coords.emplace_back(i, c);
        v.axpy(-c, cbasis[i]);
      }
    }
    assert(v.empty());
    R.set_col(j, SparseVec::from_entries(std::move(coords)));
  }

  auto gram = [](const Matrix& a) {
    // a^T a as a dense r x r array
    const std::int64_t d = a.cols();
    std::vector<std::vector<Rational>> g(d, std::vector<Rational>(d, Rational(0)));
    for (std::int64_t i = 0; i < d; ++i)
      for (std::int64_t j = i; j < d; ++j) {
        Rational s(0);
        const auto& u = a.col(i).entries();
        const auto& v = a.col(j).entries();
        std::size_t p = 0, q = 0;
        while (p < u.size() && q < v.size()) {
          if (u[p].first < v[q].first)
            ++p;
          else if (v[q].first < u[p].first)
            ++q;
          else {
            s += u[p].second * v[q].second;
            ++p;
            ++q;
          }
        }
        g[i][j] = s;
        g[j][i] = s;
      }
    return g;
  };

  Matrix Rt = R.transpose();
  auto rrt_inv = dense_inverse(gram(Rt));  // (R R^T)^{-1}
  auto ctc_inv = dense_inverse(gram(C));   // (C^T C)^{-1}
  Matrix mid = from_dense(rrt_inv, r, r).mul(from_dense(ctc_inv, r, r));
  return Rt.mul(mid).mul(C.transpose());
}

}  // namespace contact
