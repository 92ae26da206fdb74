// Exact arithmetic base: GMP-backed integers and rationals plus the handful
// of small helpers (binomials, coprime reduction, Euler phi) used everywhere.
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace slopecert {

using Int = mpz_class;
using Rat = mpq_class;

inline int sign(const Int& a) { return mpz_sgn(a.get_mpz_t()); }
inline int sign(const Rat& a) { return mpq_sgn(a.get_mpq_t()); }

inline Int abs_int(const Int& a) { return a < 0 ? Int(-a) : a; }
inline Rat abs_rat(const Rat& a) { return a < 0 ? Rat(-a) : a; }

inline Int int_gcd(const Int& a, const Int& b) {
  Int r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline Int int_lcm(const Int& a, const Int& b) {
  Int r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline Int int_pow(const Int& a, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), a.get_mpz_t(), e);
  return r;
}

inline Rat rat_pow(const Rat& a, unsigned long e) {
  Rat r;
  mpz_pow_ui(r.get_num().get_mpz_t(), a.get_num().get_mpz_t(), e);
  mpz_pow_ui(r.get_den().get_mpz_t(), a.get_den().get_mpz_t(), e);
  return r;
}

inline Int binomial(unsigned long n, unsigned long k) {
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

/// Number of bits in |a| (0 for a == 0).
inline size_t bit_length(const Int& a) {
  return a == 0 ? 0 : mpz_sizeinbase(a.get_mpz_t(), 2);
}

/// Reduces (p, q) to a coprime pair with the same ratio. Both zero is kept.
inline void make_coprime(Int& p, Int& q) {
  Int g = int_gcd(abs_int(p), abs_int(q));
  if (g > 1) {
    p /= g;
    q /= g;
  }
}

inline std::string rat_to_string(const Rat& q) { return q.get_str(); }

/// Euler totient by trial-division factorization; n is tiny here (torsion
/// order candidates), so nothing fancier is warranted.
inline uint64_t euler_phi(uint64_t n) {
  uint64_t result = n;
  for (uint64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

inline uint64_t gcd_u64(uint64_t a, uint64_t b) {
  while (b) {
    uint64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

inline uint64_t lcm_u64(uint64_t a, uint64_t b) {
  return a == 0 || b == 0 ? 0 : a / gcd_u64(a, b) * b;
}

}  // namespace slopecert
