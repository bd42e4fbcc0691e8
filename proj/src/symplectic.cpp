#include "contact/symplectic.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <mutex>
#include <stdexcept>

namespace contact {

SymplecticSpace SymplecticSpace::standard(int n) {
  SymplecticSpace sp;
  sp.n = n;
  sp.levi = Matrix(2 * n, 2 * n);
  for (int i = 0; i < n; ++i) {
    sp.levi.set(i, n + i, rat(-1));
    sp.levi.set(n + i, i, rat(1));
  }
  sp.levi_inv = sp.levi;
  return sp;
}

std::int64_t tensor_pow(std::int64_t base, int exp) {
  std::int64_t r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

namespace {

// Decompose index = t * trailing + e, then t into m digits base two_n.
struct SlotView {
  int two_n;
  int m;
  std::int64_t trailing;

  std::int64_t stride(int p) const {
    // stride of slot p (0 = leftmost)
    return tensor_pow(two_n, m - 1 - p) * trailing;
  }
  int digit(std::int64_t idx, int p) const {
    return static_cast<int>((idx / stride(p)) % two_n);
  }
};

}  // namespace

SparseVec swap_adjacent(const SparseVec& v, int two_n, int m,
                        std::int64_t trailing, int p) {
  assert(p >= 0 && p + 1 < m);
  SlotView sv{two_n, m, trailing};
  const std::int64_t sp_ = sv.stride(p), sq = sv.stride(p + 1);
  std::vector<SparseVec::Entry> out;
  out.reserve(v.nnz());
  for (const auto& e : v.entries()) {
    int a = sv.digit(e.first, p), b = sv.digit(e.first, p + 1);
    std::int64_t idx = e.first + (b - a) * sp_ + (a - b) * sq;
    out.emplace_back(idx, e.second);
  }
  return SparseVec::from_entries(std::move(out));
}

SparseVec contract_levi(const SymplecticSpace& sp, const SparseVec& v, int m,
                        std::int64_t trailing, int p) {
  assert(p >= 0 && p + 1 < m);
  const int two_n = sp.dim_h();
  SlotView sv{two_n, m, trailing};
  const std::int64_t sq = sv.stride(p + 1);
  std::vector<SparseVec::Entry> out;
  for (const auto& e : v.entries()) {
    int a = sv.digit(e.first, p), b = sv.digit(e.first, p + 1);
    Rational c = sp.levi_inv.at(a, b);
    if (is_zero(c)) continue;
    // Remove digits a (slot p) and b (slot p+1): high part keeps slots < p,
    // low part keeps slots > p+1 and the trailing factor.
    std::int64_t low = e.first % sq;
    std::int64_t high = e.first / (sq * two_n * two_n);
    out.emplace_back(high * sq + low, c * e.second);
  }
  return SparseVec::from_entries(std::move(out));
}

SparseVec insert_levi(const SymplecticSpace& sp, const SparseVec& w, int m,
                      std::int64_t trailing, int p) {
  assert(p >= 0 && p + 1 < m);
  const int two_n = sp.dim_h();
  const std::int64_t sq = tensor_pow(two_n, m - 2 - p) * trailing;
  std::vector<SparseVec::Entry> out;
  for (const auto& e : w.entries()) {
    std::int64_t low = e.first % sq;
    std::int64_t high = e.first / sq;
    for (int i = 0; i < sp.n; ++i) {
      // L_{i, n+i} = -1, L_{n+i, i} = +1
      std::int64_t base = high * (sq * two_n * two_n) + low;
      out.emplace_back(base + i * (sq * two_n) + (sp.n + i) * sq, -e.second);
      out.emplace_back(base + (sp.n + i) * (sq * two_n) + i * sq, e.second);
    }
  }
  return SparseVec::from_entries(std::move(out));
}

SparseVec lambda_perp_component(const SymplecticSpace& sp, const SparseVec& v,
                                int m, std::int64_t trailing, int p) {
  if (sp.n == 1) return SparseVec();
  SparseVec skew = v;
  SparseVec swapped = swap_adjacent(v, sp.dim_h(), m, trailing, p);
  swapped.negate();
  skew.axpy(rat(1), swapped);
  SparseVec trace = contract_levi(sp, v, m, trailing, p);
  SparseVec lpart = insert_levi(sp, trace, m, trailing, p);
  skew.axpy(rat(-1, sp.n), lpart);
  return skew;
}

namespace {

void weakly_increasing_seqs(int two_n, int m, std::vector<int>& cur,
                            std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == m) {
    out.push_back(cur);
    return;
  }
  int lo = cur.empty() ? 0 : cur.back();
  for (int v = lo; v < two_n; ++v) {
    cur.push_back(v);
    weakly_increasing_seqs(two_n, m, cur, out);
    cur.pop_back();
  }
}

void distinct_permutations(std::vector<int> word,
                           std::vector<std::vector<int>>& out) {
  std::sort(word.begin(), word.end());
  do {
    out.push_back(word);
  } while (std::next_permutation(word.begin(), word.end()));
}

std::int64_t word_index(const std::vector<int>& word, int two_n) {
  std::int64_t idx = 0;
  for (int d : word) idx = idx * two_n + d;
  return idx;
}

}  // namespace

Subspace sym_subspace(int n, int m) {
  const int two_n = 2 * n;
  const std::int64_t ambient = tensor_pow(two_n, m);
  std::vector<std::vector<int>> multisets;
  std::vector<int> cur;
  weakly_increasing_seqs(two_n, m, cur, multisets);
  std::vector<SparseVec> cols;
  cols.reserve(multisets.size());
  for (const auto& ms : multisets) {
    std::vector<std::vector<int>> perms;
    distinct_permutations(ms, perms);
    std::vector<SparseVec::Entry> entries;
    entries.reserve(perms.size());
    for (const auto& p : perms) entries.emplace_back(word_index(p, two_n), rat(1));
    cols.push_back(SparseVec::from_entries(std::move(entries)));
  }
  return Subspace::from_columns(ambient, std::move(cols));
}

std::int64_t sperp_dim_formula(int n, int l) {
  Integer total = 0;
  for (int j = 0; 2 * j <= l; ++j) total += binomial(2 * n - 1 + l - 2 * j, l - 2 * j);
  return total.get_si();
}

namespace {

SparseVec levi_vector(const SymplecticSpace& sp) {
  // L as an element of (x)^2
  SparseVec one;
  one.push_back(0, rat(1));
  return insert_levi(sp, one, 2, 1, 0);
}

Subspace build_sperp_uncached(int n, int l) {
  const SymplecticSpace sp = SymplecticSpace::standard(n);
  const int two_n = 2 * n;
  const std::int64_t ambient = tensor_pow(two_n, l);
  if (l <= 1) return Subspace::full(ambient);
  if (l == 2) {
    Subspace s = sym_subspace(n, 2);
    std::vector<SparseVec> cols;
    for (std::int64_t j = 0; j < s.dim(); ++j) cols.push_back(s.basis().col(j));
    cols.push_back(levi_vector(sp));
    return Subspace::from_columns(ambient, std::move(cols));
  }
  if (n == 1 && l == 3) {
    // P_(abc) plus the symmetrized Levi slots Q_a L_bc + Q_b L_ac + Q_c L_ab.
    Subspace s = sym_subspace(1, 3);
    std::vector<SparseVec> cols;
    for (std::int64_t j = 0; j < s.dim(); ++j) cols.push_back(s.basis().col(j));
    for (int q = 0; q < 2; ++q) {
      SparseVec qv;
      qv.push_back(q, rat(1));
      SparseVec acc;
      for (int p = 0; p < 3; ++p) {
        // Q at slot p, L at the remaining two slots (order preserved).
        SparseVec moved = kron(qv, levi_vector(sp), 4);
        for (int s2 = 0; s2 < p; ++s2)
          moved = swap_adjacent(moved, two_n, 3, 1, s2);
        acc.axpy(rat(1), moved);
      }
      cols.push_back(std::move(acc));
    }
    return Subspace::from_columns(ambient, std::move(cols));
  }
  Subspace prev = build_sperp(n, l - 1);
  Subspace left = tensor_subspace(Subspace::full(two_n), prev);
  Subspace right = tensor_subspace(prev, Subspace::full(two_n));
  return intersect(left, right);
}

}  // namespace

Subspace build_sperp(int n, int l) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, Subspace> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({n, l});
    if (it != cache.end()) return it->second;
  }
  Subspace s = build_sperp_uncached(n, l);
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(std::make_pair(n, l), std::move(s)).first->second;
}

Subspace lambda_perp2(int n) {
  const SymplecticSpace sp = SymplecticSpace::standard(n);
  const int two_n = 2 * n;
  if (n == 1) return Subspace::zero(4);
  std::vector<SparseVec> cols;
  SparseVec lv = levi_vector(sp);
  for (int a = 0; a < two_n; ++a)
    for (int b = a + 1; b < two_n; ++b) {
      SparseVec v;
      v.push_back(a * two_n + b, rat(1));
      v.push_back(b * two_n + a, rat(-1));
      SparseVec tr = contract_levi(sp, v, 2, 1, 0);
      Rational t = tr.empty() ? Rational(0) : tr.lead_value();
      v.axpy(-t / rat(2 * n), lv);
      cols.push_back(std::move(v));
    }
  return Subspace::from_columns(tensor_pow(two_n, 2), std::move(cols));
}

Matrix sigma_map(const SymplecticSpace& sp) {
  if (sp.n != 1)
    throw std::invalid_argument("sigma_map is the three-dimensional model map");
  // phi |-> Yhat_1(phi) - Yhat_2(phi), realized columnwise on (x)^3.
  Matrix out(2, 8);
  for (std::int64_t idx = 0; idx < 8; ++idx) {
    SparseVec e;
    e.push_back(idx, rat(1));
    SparseVec y1 = contract_levi(sp, e, 3, 1, 0);
    SparseVec y2 = contract_levi(sp, e, 3, 1, 1);
    y2.negate();
    y1.axpy(rat(1), y2);
    out.set_col(idx, std::move(y1));
  }
  return out;
}

int WeightedMonomial::weighted_degree() const {
  int d = 2 * gamma;
  for (int a : alpha) d += a;
  for (int b : beta) d += b;
  return d;
}

namespace {

void exponent_vectors(int nvars, int degree, std::vector<int>& cur,
                      std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == nvars - 1) {
    cur.push_back(degree);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int e = degree; e >= 0; --e) {
    cur.push_back(e);
    exponent_vectors(nvars, degree - e, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<WeightedMonomial> monomials_of_weighted_degree(int n, int k) {
  std::vector<WeightedMonomial> out;
  for (int gamma = 0; 2 * gamma <= k; ++gamma) {
    int rest = k - 2 * gamma;
    std::vector<std::vector<int>> vecs;
    std::vector<int> cur;
    exponent_vectors(2 * n, rest, cur, vecs);
    for (auto& v : vecs) {
      WeightedMonomial m;
      m.alpha.assign(v.begin(), v.begin() + n);
      m.beta.assign(v.begin() + n, v.end());
      m.gamma = gamma;
      out.push_back(std::move(m));
    }
  }
  return out;
}

std::vector<WeightedMonomial> monomials_up_to_weighted_degree(int n, int cap) {
  std::vector<WeightedMonomial> out;
  for (int k = 0; k <= cap; ++k) {
    auto level = monomials_of_weighted_degree(n, k);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

namespace {

// All partitions of {0..k-1} into `gamma` unordered pairs plus a remainder
// set, reported as (pairs, remainder). The first available slot is either
// left in the remainder or paired with a later one; each partition shows up
// exactly once.
void pair_partitions(std::vector<int> avail, int gamma,
                     std::vector<std::pair<int, int>>& pairs,
                     std::vector<int>& rest,
                     std::vector<std::vector<std::pair<int, int>>>& out_pairs,
                     std::vector<std::vector<int>>& out_rest) {
  if (avail.empty() || gamma == 0) {
    if (gamma != 0) return;
    std::vector<int> full_rest = rest;
    full_rest.insert(full_rest.end(), avail.begin(), avail.end());
    out_pairs.push_back(pairs);
    out_rest.push_back(std::move(full_rest));
    return;
  }
  int first = avail.front();
  std::vector<int> tail(avail.begin() + 1, avail.end());
  rest.push_back(first);
  pair_partitions(tail, gamma, pairs, rest, out_pairs, out_rest);
  rest.pop_back();
  for (std::size_t j = 0; j < tail.size(); ++j) {
    std::vector<int> next;
    for (std::size_t t = 0; t < tail.size(); ++t)
      if (t != j) next.push_back(tail[t]);
    pairs.emplace_back(first, tail[j]);
    pair_partitions(next, gamma - 1, pairs, rest, out_pairs, out_rest);
    pairs.pop_back();
  }
}

SparseVec embed_monomial(const SymplecticSpace& sp, int k,
                         const WeightedMonomial& m) {
  const int two_n = sp.dim_h();
  std::vector<int> word;
  for (int i = 0; i < sp.n; ++i)
    for (int t = 0; t < m.alpha[i]; ++t) word.push_back(i);
  for (int i = 0; i < sp.n; ++i)
    for (int t = 0; t < m.beta[i]; ++t) word.push_back(sp.n + i);

  std::vector<int> slots(k);
  for (int i = 0; i < k; ++i) slots[i] = i;
  std::vector<std::vector<std::pair<int, int>>> all_pairs;
  std::vector<std::vector<int>> all_rest;
  std::vector<std::pair<int, int>> cur;
  std::vector<int> cur_rest;
  pair_partitions(slots, m.gamma, cur, cur_rest, all_pairs, all_rest);

  std::vector<std::vector<int>> covector_arrangements;
  distinct_permutations(word, covector_arrangements);

  std::vector<SparseVec::Entry> entries;
  std::vector<std::int64_t> stride(k);
  for (int p = 0; p < k; ++p) stride[p] = tensor_pow(two_n, k - 1 - p);

  for (std::size_t pp = 0; pp < all_pairs.size(); ++pp) {
    const auto& pairs = all_pairs[pp];
    const auto& rest = all_rest[pp];
    for (const auto& arr : covector_arrangements) {
      std::int64_t base = 0;
      for (std::size_t t = 0; t < rest.size(); ++t) base += arr[t] * stride[rest[t]];
      // expand the Levi factors
      std::vector<std::pair<std::int64_t, Rational>> partial = {{base, rat(1)}};
      for (const auto& pq : pairs) {
        std::vector<std::pair<std::int64_t, Rational>> next;
        next.reserve(partial.size() * 2 * sp.n);
        for (const auto& pe : partial)
          for (int i = 0; i < sp.n; ++i) {
            next.emplace_back(
                pe.first + i * stride[pq.first] + (sp.n + i) * stride[pq.second],
                -pe.second);
            next.emplace_back(
                pe.first + (sp.n + i) * stride[pq.first] + i * stride[pq.second],
                pe.second);
          }
        partial = std::move(next);
      }
      for (auto& pe : partial) entries.emplace_back(pe.first, pe.second);
    }
  }
  return SparseVec::from_entries(std::move(entries));
}

}  // namespace

const MonomialModel& monomial_embed(int n, int k) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, MonomialModel> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find({n, k});
  if (it != cache.end()) return it->second;

  const SymplecticSpace sp = SymplecticSpace::standard(n);
  MonomialModel model;
  model.n = n;
  model.k = k;
  model.monomials = monomials_of_weighted_degree(n, k);
  model.embed = Matrix(tensor_pow(2 * n, k),
                       static_cast<std::int64_t>(model.monomials.size()));
  for (std::size_t j = 0; j < model.monomials.size(); ++j)
    model.embed.set_col(static_cast<std::int64_t>(j),
                        embed_monomial(sp, k, model.monomials[j]));
  return cache.emplace(std::make_pair(n, k), std::move(model)).first->second;
}

}  // namespace contact
