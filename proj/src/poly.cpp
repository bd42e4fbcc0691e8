#include "contact/poly.hpp"

#include <sstream>

namespace contact {

Poly Poly::constant(int nvars, const Rational& c) {
  Poly p(nvars);
  p.add_term(Expo(nvars, 0), c);
  return p;
}

Poly Poly::variable(int nvars, int index) {
  Poly p(nvars);
  Expo e(nvars, 0);
  e[index] = 1;
  p.add_term(e, rat(1));
  return p;
}

void Poly::add_term(const Expo& e, const Rational& c) {
  if (contact::is_zero(c)) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
  } else {
    it->second += c;
    if (contact::is_zero(it->second)) terms_.erase(it);
  }
}

Poly Poly::operator+(const Poly& o) const {
  Poly out = *this;
  for (const auto& [e, c] : o.terms_) out.add_term(e, c);
  return out;
}

Poly Poly::operator-(const Poly& o) const {
  Poly out = *this;
  for (const auto& [e, c] : o.terms_) out.add_term(e, -c);
  return out;
}

Poly Poly::operator*(const Poly& o) const {
  Poly out(nvars_);
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) {
      Expo e(nvars_);
      for (int i = 0; i < nvars_; ++i) e[i] = e1[i] + e2[i];
      out.add_term(e, c1 * c2);
    }
  return out;
}

Poly Poly::operator*(const Rational& c) const {
  Poly out(nvars_);
  if (contact::is_zero(c)) return out;
  for (const auto& [e, v] : terms_) out.terms_.emplace(e, v * c);
  return out;
}

Poly Poly::operator-() const { return *this * rat(-1); }

Poly Poly::derivative(int var) const {
  Poly out(nvars_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Expo d = e;
    d[var] -= 1;
    out.add_term(d, c * rat(e[var]));
  }
  return out;
}

Rational Poly::eval_origin() const {
  Expo zero(nvars_, 0);
  auto it = terms_.find(zero);
  return it == terms_.end() ? Rational(0) : it->second;
}

int Poly::weighted_degree() const {
  int best = -1;
  for (const auto& [e, c] : terms_) {
    int d = 2 * e[nvars_ - 1];
    for (int i = 0; i + 1 < nvars_; ++i) d += e[i];
    if (d > best) best = d;
  }
  return best;
}

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  const int n = (nvars_ - 1) / 2;
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Rational a = c;
    if (!first) {
      os << (sgn(a) < 0 ? " - " : " + ");
      if (sgn(a) < 0) a = -a;
    }
    first = false;
    bool has_var = false;
    for (int i = 0; i < nvars_; ++i) has_var = has_var || e[i] > 0;
    if (a != 1 || !has_var) {
      os << a.get_str();
      if (has_var) os << "*";
    }
    bool printed = false;
    for (int i = 0; i < nvars_; ++i) {
      if (e[i] == 0) continue;
      if (printed) os << "*";
      printed = true;
      if (i < n)
        os << "x" << (i + 1);
      else if (i < 2 * n)
        os << "y" << (i - n + 1);
      else
        os << "z";
      if (e[i] > 1) os << "^" << e[i];
    }
  }
  return os.str();
}

}  // namespace contact
