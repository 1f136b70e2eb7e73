#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace gridcover {

// Every scalar in this project is an exact rational. GMP's canonical form
// (lowest terms, positive denominator) is the representation invariant;
// anything constructed here is canonicalized before use.
using Int = mpz_class;
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

inline Rat rat(const Int& num, const Int& den = 1) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

// Accepts "p" or "p/q" with optional leading '-'; rejects anything else.
inline Rat parse_rat(const std::string& token) {
  if (token.empty()) throw std::invalid_argument("empty rational token");
  bool seen_digit = false;
  bool seen_slash = false;
  for (size_t i = 0; i < token.size(); ++i) {
    char c = token[i];
    if (c == '-') {
      bool at_start = (i == 0) || (token[i - 1] == '/');
      if (!at_start) throw std::invalid_argument("bad rational: " + token);
    } else if (c == '/') {
      if (seen_slash || !seen_digit) throw std::invalid_argument("bad rational: " + token);
      seen_slash = true;
      seen_digit = false;
    } else if (c >= '0' && c <= '9') {
      seen_digit = true;
    } else {
      throw std::invalid_argument("bad rational: " + token);
    }
  }
  if (!seen_digit) throw std::invalid_argument("bad rational: " + token);
  Rat q;
  if (q.set_str(token, 10) != 0) throw std::invalid_argument("bad rational: " + token);
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + token);
  q.canonicalize();
  return q;
}

inline std::string rat_str(const Rat& q) { return q.get_str(); }

inline Int binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

inline Int factorial(long n) {
  if (n < 0) throw std::invalid_argument("factorial of negative");
  Int r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

inline Int int_pow(const Int& base, long e) {
  if (e < 0) throw std::invalid_argument("negative integer power");
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(e));
  return r;
}

inline Rat rat_pow(const Rat& base, long e) {
  if (e < 0) {
    if (base == 0) throw std::invalid_argument("negative power of zero");
    return rat(int_pow(base.get_den(), -e), int_pow(base.get_num(), -e));
  }
  return Rat(int_pow(base.get_num(), e), int_pow(base.get_den(), e));
}

// x(x-1)...(x-r+1) for integer x.
inline Int falling_product(long x, long r) {
  Int acc = 1;
  for (long t = 0; t < r; ++t) acc *= Int(x - t);
  return acc;
}

}  // namespace gridcover
