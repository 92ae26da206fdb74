#include "slopecert/interval.hpp"

#include <mpfr.h>

#include <stdexcept>

namespace slopecert {

DyInterval DyInterval::from_rational(const Rat& q, unsigned prec) {
  return {Dyadic::from_rational(q, prec, false),
          Dyadic::from_rational(q, prec, true)};
}

DyInterval DyInterval::operator*(const DyInterval& o) const {
  Dyadic p1 = lo * o.lo, p2 = lo * o.hi, p3 = hi * o.lo, p4 = hi * o.hi;
  Dyadic mn = p1, mx = p1;
  for (const Dyadic* p : {&p2, &p3, &p4}) {
    if (*p < mn) mn = *p;
    if (*p > mx) mx = *p;
  }
  return {mn, mx};
}

DyInterval DyInterval::square() const {
  if (lo.sgn() >= 0) return {lo * lo, hi * hi};
  if (hi.sgn() <= 0) return {hi * hi, lo * lo};
  Dyadic a = lo * lo, b = hi * hi;
  return {Dyadic(), a > b ? a : b};
}

namespace {

// mpfr value -> exact Dyadic (every finite mpfr value is dyadic).
Dyadic mpfr_to_dyadic(mpfr_srcptr x) {
  if (mpfr_zero_p(x)) return Dyadic();
  if (!mpfr_number_p(x)) throw std::range_error("mpfr overflow in log");
  Int man;
  mpfr_exp_t e = mpfr_get_z_2exp(man.get_mpz_t(), x);
  return Dyadic(man, static_cast<long>(e));
}

Dyadic log_dyadic_dir(const Dyadic& v, unsigned prec, bool up) {
  if (v.sgn() <= 0) throw std::domain_error("log of non-positive value");
  mpfr_t x, r;
  // Exact set: give x enough precision to hold the mantissa verbatim.
  unsigned xbits =
      static_cast<unsigned>(bit_length(v.mantissa())) + 8;
  mpfr_init2(x, xbits);
  mpfr_init2(r, prec);
  mpfr_set_z_2exp(x, v.mantissa().get_mpz_t(), v.exponent(), MPFR_RNDN);
  mpfr_log(r, x, up ? MPFR_RNDU : MPFR_RNDD);
  Dyadic out = mpfr_to_dyadic(r);
  mpfr_clear(x);
  mpfr_clear(r);
  return out;
}

}  // namespace

DyInterval log_enclosure(const DyInterval& x, unsigned prec) {
  return {log_dyadic_dir(x.lo, prec, false), log_dyadic_dir(x.hi, prec, true)};
}

Dyadic log_dir(const Rat& q, unsigned prec, bool round_up) {
  if (sign(q) <= 0) throw std::domain_error("log of non-positive rational");
  mpfr_t x, r;
  mpfr_init2(x, prec + 16);
  mpfr_init2(r, prec);
  mpfr_set_q(x, q.get_mpq_t(), round_up ? MPFR_RNDU : MPFR_RNDD);
  mpfr_log(r, x, round_up ? MPFR_RNDU : MPFR_RNDD);
  Dyadic out = mpfr_to_dyadic(r);
  mpfr_clear(x);
  mpfr_clear(r);
  return out;
}

DyInterval log_enclosure(const Rat& q, unsigned prec) {
  return {log_dir(q, prec, false), log_dir(q, prec, true)};
}

}  // namespace slopecert
