#ifndef CONTACT_POLY_HPP
#define CONTACT_POLY_HPP

#include <map>
#include <string>
#include <vector>

#include "contact/rational.hpp"

namespace contact {

// Polynomial with rational coefficients in the Darboux coordinates
// x_1..x_n, y_1..y_n, z (variable indices 0..n-1, n..2n-1, 2n).
class Poly {
 public:
  using Expo = std::vector<int>;

  Poly() : nvars_(0) {}
  explicit Poly(int nvars) : nvars_(nvars) {}

  static Poly constant(int nvars, const Rational& c);
  static Poly variable(int nvars, int index);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Expo, Rational>& terms() const { return terms_; }

  void add_term(const Expo& e, const Rational& c);

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator*(const Rational& c) const;
  Poly operator-() const;
  bool operator==(const Poly& o) const {
    return nvars_ == o.nvars_ && terms_ == o.terms_;
  }

  Poly derivative(int var) const;
  Rational eval_origin() const;  // the constant coefficient

  // Max over monomials of sum(contact exponents) + 2 * z exponent, where the
  // last variable is z. Returns -1 for the zero polynomial.
  int weighted_degree() const;

  std::string str() const;

 private:
  int nvars_;
  std::map<Expo, Rational> terms_;
};

}  // namespace contact

#endif
