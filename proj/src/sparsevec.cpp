#include "contact/sparsevec.hpp"

#include <algorithm>

namespace contact {

SparseVec SparseVec::from_entries(std::vector<Entry> entries) {
  std::sort(entries.begin(), entries.end(),
            [](const Entry& a, const Entry& b) { return a.first < b.first; });
  SparseVec v;
  v.entries_.reserve(entries.size());
  for (auto& e : entries) {
    if (!v.entries_.empty() && v.entries_.back().first == e.first) {
      v.entries_.back().second += e.second;
      if (is_zero(v.entries_.back().second)) v.entries_.pop_back();
    } else if (!is_zero(e.second)) {
      v.entries_.push_back(std::move(e));
    }
  }
  return v;
}

Rational SparseVec::at(std::int64_t index) const {
  auto it = std::lower_bound(
      entries_.begin(), entries_.end(), index,
      [](const Entry& e, std::int64_t i) { return e.first < i; });
  if (it != entries_.end() && it->first == index) return it->second;
  return Rational(0);
}

void SparseVec::axpy(const Rational& c, const SparseVec& other) {
  if (is_zero(c) || other.empty()) return;
  std::vector<Entry> merged;
  merged.reserve(entries_.size() + other.entries_.size());
  auto a = entries_.begin();
  auto b = other.entries_.begin();
  while (a != entries_.end() && b != other.entries_.end()) {
    if (a->first < b->first) {
      merged.push_back(std::move(*a));
      ++a;
    } else if (b->first < a->first) {
      merged.emplace_back(b->first, c * b->second);
      ++b;
    } else {
      Rational s = a->second + c * b->second;
      if (!is_zero(s)) merged.emplace_back(a->first, std::move(s));
      ++a;
      ++b;
    }
  }
  for (; a != entries_.end(); ++a) merged.push_back(std::move(*a));
  for (; b != other.entries_.end(); ++b)
    merged.emplace_back(b->first, c * b->second);
  entries_ = std::move(merged);
}

void SparseVec::scale(const Rational& c) {
  if (is_zero(c)) {
    entries_.clear();
    return;
  }
  for (auto& e : entries_) e.second *= c;
}

void SparseVec::negate() {
  for (auto& e : entries_) e.second = -e.second;
}

}  // namespace contact
