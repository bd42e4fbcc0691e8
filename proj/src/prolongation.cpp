#include "contact/prolongation.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <stdexcept>

#include "contact/oracle.hpp"

namespace contact {

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::FiniteType:
      return "finite_type";
    case Verdict::NotFiniteTypeWithinCap:
      return "not_finite_type_within_cap";
    case Verdict::Degenerate:
      return "degenerate";
  }
  return "?";
}

namespace {

// Ambient realization of the symbol kernel: kernel coordinates are
// (basis-of-model, E) pairs; each model basis vector has an ambient embedding.
Subspace kernel_in_ambient(const Matrix& symbol, const Matrix& model_embed,
                           std::int64_t rank_E) {
  Matrix kern = kernel_basis(symbol);
  const std::int64_t ambient = model_embed.rows() * rank_E;
  std::vector<SparseVec> cols;
  cols.reserve(kern.cols());
  for (std::int64_t j = 0; j < kern.cols(); ++j) {
    SparseVec v;
    for (const auto& [idx, c] : kern.col(j).entries()) {
      std::int64_t m = idx / rank_E, e = idx % rank_E;
      SparseVec unit;
      unit.push_back(e, c);
      v.axpy(rat(1), kron(model_embed.col(m), unit, rank_E));
    }
    cols.push_back(std::move(v));
  }
  return Subspace::from_columns(ambient, std::move(cols));
}

// One prolongation level. `prev` sits inside (x)^m H* (x) E and already has
// the full S_perp-compatibility in its m slots; the next level is cut out of
// H* (x) prev by the conditions at the new leading pair:
//   - the skew part at slots (0,1) is a Levi multiple (empty when n = 1),
//   - its Levi factor matches the one at slots (1,2) when m >= 2.
Subspace contact_level_step(const SymplecticSpace& sp, const Subspace& prev,
                            int m, std::int64_t rank_E) {
  const int two_n = sp.dim_h();
  const std::int64_t ambient = tensor_pow(two_n, m + 1) * rank_E;
  std::vector<SparseVec> tensored;
  tensored.reserve(static_cast<std::size_t>(two_n) * prev.dim());
  for (int a = 0; a < two_n; ++a) {
    SparseVec unit;
    unit.push_back(a, rat(1));
    for (std::int64_t j = 0; j < prev.dim(); ++j)
      tensored.push_back(
          kron(unit, prev.basis().col(j), tensor_pow(two_n, m) * rank_E));
  }
  const std::int64_t block = ambient;
  std::vector<SparseVec> constraints;
  constraints.reserve(tensored.size());
  for (const auto& col : tensored) {
    SparseVec c = lambda_perp_component(sp, col, m + 1, rank_E, 0);
    if (m >= 2) {
      SparseVec y1 = contract_levi(sp, col, m + 1, rank_E, 0);
      SparseVec y2 = contract_levi(sp, col, m + 1, rank_E, 1);
      y2.negate();
      y1.axpy(rat(1), y2);
      for (const auto& [idx, v] : y1.entries()) c.push_back(block + idx, v);
    }
    constraints.push_back(std::move(c));
  }
  std::vector<SparseVec> combos = kernel_combinations(constraints);
  std::vector<SparseVec> cols;
  cols.reserve(combos.size());
  for (const auto& x : combos) {
    SparseVec v;
    for (const auto& [idx, c] : x.entries()) v.axpy(c, tensored[idx]);
    cols.push_back(std::move(v));
  }
  return Subspace::from_columns(ambient, std::move(cols));
}

// Classical analogue: the new slot must symmetrize with the rest.
Subspace classical_level_step(int d, const Subspace& prev, int m,
                              std::int64_t rank_E) {
  const std::int64_t ambient = tensor_pow(d, m + 1) * rank_E;
  std::vector<SparseVec> tensored;
  tensored.reserve(static_cast<std::size_t>(d) * prev.dim());
  for (int a = 0; a < d; ++a) {
    SparseVec unit;
    unit.push_back(a, rat(1));
    for (std::int64_t j = 0; j < prev.dim(); ++j)
      tensored.push_back(
          kron(unit, prev.basis().col(j), tensor_pow(d, m) * rank_E));
  }
  std::vector<SparseVec> constraints;
  constraints.reserve(tensored.size());
  for (const auto& col : tensored) {
    SparseVec swapped = swap_adjacent(col, d, m + 1, rank_E, 0);
    swapped.negate();
    SparseVec c = col;
    c.axpy(rat(1), swapped);
    constraints.push_back(std::move(c));
  }
  std::vector<SparseVec> combos = kernel_combinations(constraints);
  std::vector<SparseVec> cols;
  cols.reserve(combos.size());
  for (const auto& x : combos) {
    SparseVec v;
    for (const auto& [idx, c] : x.entries()) v.axpy(c, tensored[idx]);
    cols.push_back(std::move(v));
  }
  return Subspace::from_columns(ambient, std::move(cols));
}

}  // namespace

ChainDetail contact_chain_detail(const Matrix& symbol, int n, int k, int lmax) {
  if (lmax < 1) throw std::invalid_argument("contact_chain: lmax must be >= 1");
  const SymplecticSpace sp = SymplecticSpace::standard(n);
  const auto& model = monomial_embed(n, k);
  const std::int64_t nmono = static_cast<std::int64_t>(model.monomials.size());
  if (nmono == 0 || symbol.cols() % nmono != 0)
    throw std::invalid_argument("contact_chain: symbol has wrong column count");
  const std::int64_t rank_E = symbol.cols() / nmono;

  ChainDetail detail;
  ProlongationChain& chain = detail.chain;
  chain.order_k = k;
  chain.dim_E = rank_E;
  chain.dim_F = symbol.rows();
  detail.kh = kernel_in_ambient(symbol, model.embed, rank_E);
  chain.dim_KH = detail.kh.dim();
  if (rank(symbol) != symbol.rows()) {
    chain.verdict = Verdict::Degenerate;
    return detail;
  }
  chain.verdict = Verdict::NotFiniteTypeWithinCap;
  Subspace prev = detail.kh;
  int m = k;
  for (int l = 1; l <= lmax; ++l) {
    Subspace next = contact_level_step(sp, prev, m, rank_E);
    chain.levels.push_back(next.dim());
    detail.level_spaces.push_back(next);
    if (next.dim() == 0) {
      chain.verdict = Verdict::FiniteType;
      break;
    }
    prev = std::move(next);
    ++m;
  }
  if (chain.verdict == Verdict::FiniteType) {
    Integer jet = 0;
    for (int j = 0; j < k; ++j) jet += sperp_dim_formula(n, j);
    Integer total = jet * chain.dim_E + chain.dim_KH;
    for (auto l : chain.levels) total += l;
    chain.rank_T = total.get_si();
  }
  return detail;
}

ProlongationChain contact_chain(const Matrix& symbol, int n, int k, int lmax) {
  return contact_chain_detail(symbol, n, k, lmax).chain;
}

std::vector<std::vector<int>> sym_multisets(int d, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  // weakly increasing sequences over 0..d-1, same order as sym_subspace
  struct Rec {
    int d, k;
    std::vector<std::vector<int>>& out;
    void go(std::vector<int>& cur) {
      if (static_cast<int>(cur.size()) == k) {
        out.push_back(cur);
        return;
      }
      int lo = cur.empty() ? 0 : cur.back();
      for (int v = lo; v < d; ++v) {
        cur.push_back(v);
        go(cur);
        cur.pop_back();
      }
    }
  } rec{d, k, out};
  rec.go(cur);
  return out;
}

ChainDetail classical_chain_detail(const Matrix& symbol, int d, int k, int lmax) {
  if (lmax < 1) throw std::invalid_argument("classical_chain: lmax must be >= 1");
  auto multisets = sym_multisets(d, k);
  Matrix embed(tensor_pow(d, k), static_cast<std::int64_t>(multisets.size()));
  for (std::size_t j = 0; j < multisets.size(); ++j) {
    std::vector<int> word = multisets[j];
    std::vector<SparseVec::Entry> entries;
    std::sort(word.begin(), word.end());
    do {
      std::int64_t idx = 0;
      for (int dig : word) idx = idx * d + dig;
      entries.emplace_back(idx, rat(1));
    } while (std::next_permutation(word.begin(), word.end()));
    embed.set_col(static_cast<std::int64_t>(j),
                  SparseVec::from_entries(std::move(entries)));
  }
  const std::int64_t nbasis = embed.cols();
  if (nbasis == 0 || symbol.cols() % nbasis != 0)
    throw std::invalid_argument("classical_chain: symbol has wrong column count");
  const std::int64_t rank_E = symbol.cols() / nbasis;

  ChainDetail detail;
  ProlongationChain& chain = detail.chain;
  chain.order_k = k;
  chain.dim_E = rank_E;
  chain.dim_F = symbol.rows();
  detail.kh = kernel_in_ambient(symbol, embed, rank_E);
  chain.dim_KH = detail.kh.dim();
  if (rank(symbol) != symbol.rows()) {
    chain.verdict = Verdict::Degenerate;
    return detail;
  }
  chain.verdict = Verdict::NotFiniteTypeWithinCap;
  Subspace prev = detail.kh;
  int m = k;
  for (int l = 1; l <= lmax; ++l) {
    Subspace next = classical_level_step(d, prev, m, rank_E);
    chain.levels.push_back(next.dim());
    detail.level_spaces.push_back(next);
    if (next.dim() == 0) {
      chain.verdict = Verdict::FiniteType;
      break;
    }
    prev = std::move(next);
    ++m;
  }
  if (chain.verdict == Verdict::FiniteType) {
    Integer jet = 0;
    for (int j = 0; j < k; ++j) jet += binomial(d + j - 1, j);
    Integer total = jet * chain.dim_E + chain.dim_KH;
    for (auto l : chain.levels) total += l;
    chain.rank_T = total.get_si();
  }
  return detail;
}

ProlongationChain classical_chain(const Matrix& symbol, int d, int k, int lmax) {
  return classical_chain_detail(symbol, d, k, lmax).chain;
}

namespace {

// rows a*height .. a*height+height-1 of m
Matrix row_block(const Matrix& m, std::int64_t a, std::int64_t height) {
  Matrix out(height, m.cols());
  for (std::int64_t j = 0; j < m.cols(); ++j) {
    std::vector<SparseVec::Entry> entries;
    for (const auto& [idx, c] : m.col(j).entries())
      if (idx >= a * height && idx < (a + 1) * height)
        entries.emplace_back(idx - a * height, c);
    out.set_col(j, SparseVec::from_entries(std::move(entries)));
  }
  return out;
}

}  // namespace

FlatConnection build_flat_connection(const DarbouxOperator& op,
                                     const ProlongationChain& chain) {
  if (op.declared_order != 1)
    throw std::invalid_argument("flat connection: operator must be first order");
  if (op.n < 2)
    throw std::invalid_argument("flat connection: requires n >= 2");
  if (!has_constant_coefficients(op))
    throw std::invalid_argument("flat connection: requires constant coefficients");
  if (chain.verdict != Verdict::FiniteType)
    throw std::invalid_argument("flat connection: chain is not finite-type");

  const SymplecticSpace sp = SymplecticSpace::standard(op.n);
  const int two_n = 2 * op.n;
  const std::int64_t rank_E = op.rank_E;

  Matrix symbol = enhanced_symbol(op);  // columns (direction, e)
  Matrix bmat = zeroth_order_matrix(op);

  // Partial connection with D = symbol o (d + Gamma): Gamma = delta(A) B.
  Matrix gamma_all = splitting(symbol).mul(bmat);  // (2n rank_E) x rank_E
  std::vector<Matrix> gamma(two_n);
  for (int a = 0; a < two_n; ++a) gamma[a] = row_block(gamma_all, a, rank_E);

  Matrix kh = kernel_basis(symbol);  // (2n rank_E) x d0
  std::int64_t dim = rank_E;
  std::vector<std::int64_t> blocks = {rank_E};
  if (kh.cols() != chain.dim_KH)
    throw std::logic_error("flat connection: kernel dim mismatch with chain");

  std::size_t level = 0;
  Matrix kbasis = kh;  // subspace of H* (x) E_level, (2n * dim) x d
  while (kbasis.cols() > 0) {
    const std::int64_t d = kbasis.cols();
    const std::int64_t next_dim = dim + d;

    // partial exterior derivative symbol on H* (x) K, valued in the
    // Levi-transverse two-tensors
    Matrix dH(two_n * two_n * dim, two_n * d);
    for (int a = 0; a < two_n; ++a)
      for (std::int64_t j = 0; j < d; ++j) {
        SparseVec unit;
        unit.push_back(a, rat(1));
        SparseVec col = kron(unit, kbasis.col(j), two_n * dim);
        dH.set_col(a * d + j,
                   lambda_perp_component(sp, col, 2, dim, 0));
      }
    Matrix delta = splitting(dH);
    Matrix knext = kernel_basis(dH);  // inside H* (x) K coords

    {
      std::size_t expected = level < chain.levels.size()
                                 ? static_cast<std::size_t>(chain.levels[level])
                                 : 0;
      if (static_cast<std::size_t>(knext.cols()) != expected)
        throw std::logic_error("flat connection: level dim mismatch with chain");
    }

    // W(Sigma, mu) = kappa(Sigma) - dH(Gamma~ mu), as a map into the
    // two-tensor block. kappa is the Levi-transverse part of the Gamma
    // commutators; the flat frame contributes only Levi multiples.
    Matrix w(two_n * two_n * dim, next_dim);
    for (std::int64_t s = 0; s < dim; ++s) {
      SparseVec unit;
      unit.push_back(s, rat(1));
      std::vector<SparseVec::Entry> entries;
      for (int a = 0; a < two_n; ++a)
        for (int b = 0; b < two_n; ++b) {
          SparseVec gb = gamma[b].apply(unit);
          SparseVec com = gamma[a].apply(gb);
          SparseVec ga = gamma[a].apply(unit);
          SparseVec ba = gamma[b].apply(ga);
          ba.negate();
          com.axpy(rat(1), ba);
          for (const auto& [idx, c] : com.entries())
            entries.emplace_back((static_cast<std::int64_t>(a) * two_n + b) * dim + idx,
                                 c);
        }
      SparseVec col = SparseVec::from_entries(std::move(entries));
      w.set_col(s, lambda_perp_component(sp, col, 2, dim, 0));
    }
    for (std::int64_t j = 0; j < d; ++j) {
      // mu basis vector as an element of H* (x) E_level
      const SparseVec& mu = kbasis.col(j);
      std::vector<SparseVec::Entry> entries;
      for (const auto& [idx, c] : mu.entries()) {
        std::int64_t b = idx / dim, r = idx % dim;
        SparseVec unit;
        unit.push_back(r, c);
        for (int a = 0; a < two_n; ++a) {
          SparseVec ga = gamma[a].apply(unit);
          for (const auto& [ridx, rc] : ga.entries())
            entries.emplace_back((static_cast<std::int64_t>(a) * two_n + b) * dim + ridx,
                                 rc);
        }
      }
      SparseVec col = SparseVec::from_entries(std::move(entries));
      SparseVec proj = lambda_perp_component(sp, col, 2, dim, 0);
      proj.negate();
      w.set_col(dim + j, std::move(proj));
    }

    Matrix dw = delta.mul(w);  // (2n d) x next_dim

    // next Gamma, blockwise
    std::vector<Matrix> next_gamma(two_n);
    for (int a = 0; a < two_n; ++a) {
      Matrix g(next_dim, next_dim);
      for (std::int64_t c = 0; c < dim; ++c) {
        std::vector<SparseVec::Entry> entries;
        for (const auto& [idx, v] : gamma[a].col(c).entries())
          entries.emplace_back(idx, v);
        for (const auto& [idx, v] : dw.col(c).entries())
          if (idx >= a * d && idx < (a + 1) * d)
            entries.emplace_back(dim + (idx - a * d), -v);
        g.set_col(c, SparseVec::from_entries(std::move(entries)));
      }
      for (std::int64_t c = 0; c < d; ++c) {
        std::vector<SparseVec::Entry> entries;
        // -iota_a of the mu variable seen from the E_level rows
        for (const auto& [idx, v] : kbasis.col(c).entries())
          if (idx >= a * dim && idx < (a + 1) * dim)
            entries.emplace_back(idx - a * dim, -v);
        for (const auto& [idx, v] : dw.col(dim + c).entries())
          if (idx >= a * d && idx < (a + 1) * d)
            entries.emplace_back(dim + (idx - a * d), -v);
        g.set_col(dim + c, SparseVec::from_entries(std::move(entries)));
      }
      next_gamma[a] = std::move(g);
    }
    gamma = std::move(next_gamma);
    blocks.push_back(d);

    // knext lives in H* (x) K coords; re-express in H* (x) E_{level+1}
    Matrix shifted(two_n * next_dim, knext.cols());
    for (std::int64_t j = 0; j < knext.cols(); ++j) {
      std::vector<SparseVec::Entry> entries;
      for (const auto& [idx, c] : knext.col(j).entries()) {
        std::int64_t a = idx / d, r = idx % d;
        entries.emplace_back(a * next_dim + dim + r, c);
      }
      shifted.set_col(j, SparseVec::from_entries(std::move(entries)));
    }
    kbasis = std::move(shifted);
    dim = next_dim;
    ++level;
  }

  FlatConnection conn;
  conn.n = op.n;
  conn.total_rank = dim;
  conn.block_dims = std::move(blocks);
  conn.coeff.resize(two_n);
  for (int a = 0; a < two_n; ++a) {
    Matrix m(dim, dim);
    for (std::int64_t c = 0; c < dim; ++c) {
      SparseVec col = gamma[a].col(c);
      col.negate();
      m.set_col(c, std::move(col));
    }
    conn.coeff[a] = std::move(m);
  }
  conn.projection = Matrix(rank_E, dim);
  for (std::int64_t j = 0; j < rank_E; ++j) {
    SparseVec v;
    v.push_back(j, rat(1));
    conn.projection.set_col(j, std::move(v));
  }
  return conn;
}

DarbouxOperator connection_as_operator(const FlatConnection& conn) {
  const int two_n = 2 * conn.n;
  const std::int64_t t = conn.total_rank;
  const int nv = 2 * conn.n + 1;
  DarbouxOperator op;
  op.n = conn.n;
  op.rank_E = static_cast<int>(t);
  op.rank_F = static_cast<int>(two_n * t);
  op.declared_order = 1;
  for (int a = 0; a < two_n; ++a) {
    DarbouxTerm deriv;
    Generator g;
    if (a < conn.n) {
      g.type = GenType::X;
      g.index = a + 1;
    } else {
      g.type = GenType::Y;
      g.index = a - conn.n + 1;
    }
    deriv.word = {g};
    deriv.coeff.assign(two_n * t, std::vector<Poly>(t, Poly(nv)));
    for (std::int64_t r = 0; r < t; ++r)
      deriv.coeff[a * t + r][r] = Poly::constant(nv, rat(1));
    op.terms.push_back(std::move(deriv));
  }
  DarbouxTerm zero_term;
  zero_term.word = {};
  zero_term.coeff.assign(two_n * t, std::vector<Poly>(t, Poly(nv)));
  for (int a = 0; a < two_n; ++a)
    for (std::int64_t c = 0; c < t; ++c)
      for (const auto& [r, v] : conn.coeff[a].col(c).entries())
        zero_term.coeff[a * t + r][c] = Poly::constant(nv, -v);
  op.terms.push_back(std::move(zero_term));
  return op;
}

ConnectionCheck check_connection(const DarbouxOperator& op,
                                 const FlatConnection& conn, int cap) {
  ConnectionCheck out;
  DarbouxOperator par_op = connection_as_operator(conn);
  std::vector<PolySection> parallel = solution_basis(par_op, cap);
  std::vector<PolySection> solutions = solution_basis(op, cap);
  out.parallel_dim = static_cast<std::int64_t>(parallel.size());
  out.solution_dim = static_cast<std::int64_t>(solutions.size());

  // Project the parallel sections to E, confirm each is a solution, and
  // check the projections stay independent.
  const int nv = 2 * op.n + 1;
  std::vector<SparseVec> proj_vectors;
  std::map<std::pair<std::vector<int>, int>, std::int64_t> row_of;
  bool all_solve = true;
  for (const auto& big : parallel) {
    PolySection sigma;
    sigma.rank = op.rank_E;
    sigma.components.assign(op.rank_E, Poly(nv));
    for (int j = 0; j < op.rank_E; ++j) sigma.components[j] = big.components[j];
    all_solve = all_solve && verify_solution(op, sigma);
    std::vector<SparseVec::Entry> entries;
    for (int j = 0; j < op.rank_E; ++j)
      for (const auto& [e, c] : sigma.components[j].terms()) {
        auto [it, ignored] =
            row_of.try_emplace({e, j}, static_cast<std::int64_t>(row_of.size()));
        entries.emplace_back(it->second, c);
      }
    proj_vectors.push_back(SparseVec::from_entries(std::move(entries)));
  }
  std::int64_t proj_rank =
      static_cast<std::int64_t>(column_echelon(proj_vectors).size());
  out.projection_bijective = all_solve && out.parallel_dim == out.solution_dim &&
                             proj_rank == out.solution_dim;
  return out;
}

}  // namespace contact
