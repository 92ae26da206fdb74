#include "slopecert/dyadic.hpp"

#include <cmath>
#include <stdexcept>

namespace slopecert {

void Dyadic::normalize() {
  if (man_ == 0) {
    exp_ = 0;
    return;
  }
  mp_bitcnt_t tz = mpz_scan1(man_.get_mpz_t(), 0);
  if (tz > 0) {
    mpz_fdiv_q_2exp(man_.get_mpz_t(), man_.get_mpz_t(), tz);
    exp_ += static_cast<long>(tz);
  }
}

Dyadic Dyadic::operator+(const Dyadic& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  long e = std::min(exp_, o.exp_);
  Int a = man_, b = o.man_;
  if (exp_ > e) mpz_mul_2exp(a.get_mpz_t(), a.get_mpz_t(), exp_ - e);
  if (o.exp_ > e) mpz_mul_2exp(b.get_mpz_t(), b.get_mpz_t(), o.exp_ - e);
  return Dyadic(a + b, e);
}

Dyadic Dyadic::operator-(const Dyadic& o) const { return *this + (-o); }

Dyadic Dyadic::operator*(const Dyadic& o) const {
  if (is_zero() || o.is_zero()) return Dyadic();
  return Dyadic(man_ * o.man_, exp_ + o.exp_);
}

int Dyadic::compare(const Dyadic& o) const {
  int sa = sgn(), sb = o.sgn();
  if (sa != sb) return sa < sb ? -1 : 1;
  if (sa == 0) return 0;
  Dyadic d = *this - o;
  return d.sgn();
}

Dyadic Dyadic::round_down(unsigned prec) const {
  size_t bits = bit_length(man_);
  if (bits <= prec) return *this;
  unsigned long k = bits - prec;
  Int m;
  mpz_fdiv_q_2exp(m.get_mpz_t(), man_.get_mpz_t(), k);
  return Dyadic(m, exp_ + static_cast<long>(k));
}

Dyadic Dyadic::round_up(unsigned prec) const {
  size_t bits = bit_length(man_);
  if (bits <= prec) return *this;
  unsigned long k = bits - prec;
  Int m;
  mpz_cdiv_q_2exp(m.get_mpz_t(), man_.get_mpz_t(), k);
  return Dyadic(m, exp_ + static_cast<long>(k));
}

Rat Dyadic::to_rational() const {
  Rat r(man_);
  if (exp_ >= 0) {
    Int p;
    mpz_mul_2exp(p.get_mpz_t(), man_.get_mpz_t(), exp_);
    return Rat(p);
  }
  Int d(1);
  mpz_mul_2exp(d.get_mpz_t(), d.get_mpz_t(), -exp_);
  Rat q(man_, d);
  q.canonicalize();
  return q;
}

double Dyadic::to_double() const {
  // Clamp through a 64-bit window; only used for numeric seeding.
  signed long e2;
  double d = mpz_get_d_2exp(&e2, man_.get_mpz_t());
  return std::ldexp(d, static_cast<int>(e2 + exp_));
}

std::string Dyadic::to_string() const {
  return man_.get_str() + "*2^" + std::to_string(exp_);
}

Dyadic Dyadic::from_rational(const Rat& q, unsigned prec, bool round_up) {
  if (q == 0) return Dyadic();
  const Int& num = q.get_num();
  const Int& den = q.get_den();
  // Scale so the quotient carries about `prec` significant bits.
  long shift = static_cast<long>(prec) + static_cast<long>(bit_length(den)) -
               static_cast<long>(bit_length(num)) + 1;
  if (shift < 0) shift = 0;
  Int scaled;
  mpz_mul_2exp(scaled.get_mpz_t(), num.get_mpz_t(), shift);
  Int m;
  if (round_up) {
    mpz_cdiv_q(m.get_mpz_t(), scaled.get_mpz_t(), den.get_mpz_t());
  } else {
    mpz_fdiv_q(m.get_mpz_t(), scaled.get_mpz_t(), den.get_mpz_t());
  }
  return Dyadic(m, -shift);
}

Dyadic Dyadic::from_double(double x) {
  if (x == 0.0) return Dyadic();
  if (!std::isfinite(x)) throw std::invalid_argument("non-finite double");
  int e = 0;
  double m = std::frexp(x, &e);  // m in [0.5, 1)
  long mi = static_cast<long>(std::ldexp(m, 53));
  return Dyadic(Int(mi), e - 53);
}

}  // namespace slopecert
