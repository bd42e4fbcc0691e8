#ifndef CONTACT_SPARSEVEC_HPP
#define CONTACT_SPARSEVEC_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "contact/rational.hpp"

namespace contact {

// Sparse column vector: entries sorted by index, no stored zeros.
class SparseVec {
 public:
  using Entry = std::pair<std::int64_t, Rational>;

  SparseVec() = default;

  // Entries must end up sorted and zero-free; this constructor sorts,
  // merges duplicates and drops zeros.
  static SparseVec from_entries(std::vector<Entry> entries);

  void push_back(std::int64_t index, Rational value) {
    if (!is_zero(value)) entries_.emplace_back(index, std::move(value));
  }

  bool empty() const { return entries_.empty(); }
  std::size_t nnz() const { return entries_.size(); }
  const std::vector<Entry>& entries() const { return entries_; }

  // Leading (smallest-index) entry; vector must be nonempty.
  std::int64_t lead_index() const { return entries_.front().first; }
  const Rational& lead_value() const { return entries_.front().second; }

  Rational at(std::int64_t index) const;

  // *this += c * other
  void axpy(const Rational& c, const SparseVec& other);
  void scale(const Rational& c);
  void negate();

  bool operator==(const SparseVec& o) const { return entries_ == o.entries_; }

 private:
  std::vector<Entry> entries_;
};

}  // namespace contact

#endif
