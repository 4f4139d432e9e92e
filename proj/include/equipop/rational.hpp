#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace equipop {

using BigInt = mpz_class;
using Rational = mpq_class;

inline BigInt factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial: negative argument");
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

// Binomial coefficient with the usual convention C(n, k) = 0 for k < 0 or k > n.
inline BigInt binomial(int n, int k) {
  if (k < 0 || k > n || n < 0) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

// Generalized binomial coefficient C(r, j) for rational r, integer j >= 0.
inline Rational binomial(const Rational& r, int j) {
  if (j < 0) return Rational(0);
  Rational acc(1);
  Rational term = r;
  for (int i = 0; i < j; ++i) {
    acc *= term / (i + 1);
    term -= 1;
  }
  return acc;
}

inline std::string to_decimal_string(const BigInt& z) { return z.get_str(); }

// Exact text form "p/q" (or "p" when the denominator is 1).
inline std::string to_fraction_string(const Rational& q) {
  Rational r = q;
  r.canonicalize();
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

}  // namespace equipop
