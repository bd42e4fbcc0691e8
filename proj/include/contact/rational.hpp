#ifndef CONTACT_RATIONAL_HPP
#define CONTACT_RATIONAL_HPP

#include <gmpxx.h>
#include <string>

namespace contact {

// Exact rational scalar. All rank decisions in the library are made over Q;
// floating point is not used anywhere in the core.
using Rational = mpq_class;
using Integer = mpz_class;

// mpq_class(n, d) does not canonicalize; this does.
inline Rational rat(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline Rational rat(const Integer& num, const Integer& den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

inline std::string to_string(const Rational& q) { return q.get_str(); }

inline Integer factorial(unsigned m) {
  Integer f = 1;
  for (unsigned i = 2; i <= m; ++i) f *= i;
  return f;
}

inline Integer binomial(long nn, long kk) {
  if (kk < 0 || kk > nn || nn < 0) return 0;
  Integer b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(nn),
               static_cast<unsigned long>(kk));
  return b;
}

}  // namespace contact

#endif
