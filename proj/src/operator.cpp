#include "contact/operator.hpp"

#include <stdexcept>

namespace contact {

int word_weighted_order(const std::vector<Generator>& word) {
  int w = 0;
  for (const auto& g : word) w += g.type == GenType::Z ? 2 : 1;
  return w;
}

bool PolySection::is_zero() const {
  for (const auto& p : components)
    if (!p.is_zero()) return false;
  return true;
}

int DarbouxOperator::weighted_order() const {
  int w = 0;
  for (const auto& t : terms) {
    bool nonzero = false;
    for (const auto& row : t.coeff)
      for (const auto& p : row) nonzero = nonzero || !p.is_zero();
    if (nonzero) w = std::max(w, word_weighted_order(t.word));
  }
  return w;
}

void DarbouxOperator::validate() const {
  if (n < 1) throw std::invalid_argument("operator: n must be positive");
  if (rank_E < 1 || rank_F < 1)
    throw std::invalid_argument("operator: bundle ranks must be positive");
  for (const auto& t : terms) {
    for (const auto& g : t.word) {
      if (g.type != GenType::Z && (g.index < 1 || g.index > n))
        throw std::invalid_argument("operator: generator index out of range");
    }
    if (static_cast<int>(t.coeff.size()) != rank_F)
      throw std::invalid_argument("operator: coefficient row count mismatch");
    for (const auto& row : t.coeff)
      if (static_cast<int>(row.size()) != rank_E)
        throw std::invalid_argument("operator: coefficient column count mismatch");
  }
  if (weighted_order() > declared_order)
    throw std::invalid_argument(
        "operator: a term exceeds the declared weighted order");
}

Poly apply_generator(int n, const Generator& g, const Poly& f) {
  const int nv = 2 * n + 1;
  switch (g.type) {
    case GenType::X:
      return f.derivative(g.index - 1);
    case GenType::Y: {
      Poly out = f.derivative(n + g.index - 1);
      Poly zd = f.derivative(2 * n);
      return out + Poly::variable(nv, g.index - 1) * zd;
    }
    case GenType::Z:
      return f.derivative(2 * n);
  }
  return Poly(nv);
}

Poly apply_word(int n, const std::vector<Generator>& word, const Poly& f) {
  Poly out = f;
  for (auto it = word.rbegin(); it != word.rend(); ++it)
    out = apply_generator(n, *it, out);
  return out;
}

PolySection apply(const DarbouxOperator& op, const PolySection& s) {
  if (s.rank != op.rank_E)
    throw std::invalid_argument("apply: section rank mismatch");
  const int nv = 2 * op.n + 1;
  PolySection out;
  out.rank = op.rank_F;
  out.components.assign(op.rank_F, Poly(nv));
  for (const auto& t : op.terms) {
    std::vector<Poly> derived(op.rank_E, Poly(nv));
    for (int j = 0; j < op.rank_E; ++j)
      derived[j] = apply_word(op.n, t.word, s.components[j]);
    for (int i = 0; i < op.rank_F; ++i)
      for (int j = 0; j < op.rank_E; ++j)
        if (!t.coeff[i][j].is_zero() && !derived[j].is_zero())
          out.components[i] = out.components[i] + t.coeff[i][j] * derived[j];
  }
  return out;
}

Poly monomial_to_poly(int n, const WeightedMonomial& m) {
  const int nv = 2 * n + 1;
  Poly::Expo e(nv, 0);
  for (int i = 0; i < n; ++i) e[i] = m.alpha[i];
  for (int i = 0; i < n; ++i) e[n + i] = m.beta[i];
  e[2 * n] = m.gamma;
  Poly p(nv);
  p.add_term(e, rat(1));
  return p;
}

Matrix enhanced_symbol(const DarbouxOperator& op) {
  const int k = op.declared_order;
  const auto& model = monomial_embed(op.n, k);
  const int nmono = static_cast<int>(model.monomials.size());
  Matrix out(op.rank_F, static_cast<std::int64_t>(nmono) * op.rank_E);
  const int nv = 2 * op.n + 1;
  for (int m = 0; m < nmono; ++m) {
    Poly mono = monomial_to_poly(op.n, model.monomials[m]);
    for (int j = 0; j < op.rank_E; ++j) {
      PolySection s;
      s.rank = op.rank_E;
      s.components.assign(op.rank_E, Poly(nv));
      s.components[j] = mono;
      PolySection im = apply(op, s);
      SparseVec col;
      for (int i = 0; i < op.rank_F; ++i)
        col.push_back(i, im.components[i].eval_origin());
      out.set_col(static_cast<std::int64_t>(m) * op.rank_E + j, std::move(col));
    }
  }
  return out;
}

Matrix zeroth_order_matrix(const DarbouxOperator& op) {
  const int nv = 2 * op.n + 1;
  Matrix out(op.rank_F, op.rank_E);
  for (int j = 0; j < op.rank_E; ++j) {
    PolySection s;
    s.rank = op.rank_E;
    s.components.assign(op.rank_E, Poly(nv));
    s.components[j] = Poly::constant(nv, rat(1));
    PolySection im = apply(op, s);
    SparseVec col;
    for (int i = 0; i < op.rank_F; ++i)
      col.push_back(i, im.components[i].eval_origin());
    out.set_col(j, std::move(col));
  }
  return out;
}

namespace {

bool term_constant(const DarbouxTerm& t) {
  for (const auto& row : t.coeff)
    for (const auto& p : row) {
      if (p.is_zero()) continue;
      if (p.terms().size() > 1) return false;
      if (p.terms().begin()->first != Poly::Expo(p.nvars(), 0)) return false;
    }
  return true;
}

}  // namespace

bool has_constant_top_coefficients(const DarbouxOperator& op) {
  for (const auto& t : op.terms)
    if (word_weighted_order(t.word) == op.declared_order && !term_constant(t))
      return false;
  return true;
}

bool has_constant_coefficients(const DarbouxOperator& op) {
  for (const auto& t : op.terms)
    if (!term_constant(t)) return false;
  return true;
}

std::string generator_name(const Generator& g) {
  switch (g.type) {
    case GenType::X:
      return "X" + std::to_string(g.index);
    case GenType::Y:
      return "Y" + std::to_string(g.index);
    case GenType::Z:
      return "Z";
  }
  return "?";
}

}  // namespace contact
