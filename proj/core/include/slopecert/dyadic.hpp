// Dyadic numbers m*2^e with exact ring arithmetic. Addition, subtraction and
// multiplication never round; rounding happens only through the explicit
// round_down/round_up entry points, which keeps every interval computation
// built on top of this type outward-correct by construction.
#pragma once

#include "slopecert/numeric.hpp"

#include <string>

namespace slopecert {

class Dyadic {
 public:
  Dyadic() : man_(0), exp_(0) {}
  Dyadic(const Int& mantissa, long exponent) : man_(mantissa), exp_(exponent) {
    normalize();
  }
  explicit Dyadic(long v) : man_(v), exp_(0) { normalize(); }
  explicit Dyadic(const Int& v) : man_(v), exp_(0) { normalize(); }

  const Int& mantissa() const { return man_; }
  long exponent() const { return exp_; }
  bool is_zero() const { return man_ == 0; }
  int sgn() const { return sign(man_); }

  Dyadic operator-() const { return Dyadic(-man_, exp_); }
  Dyadic operator+(const Dyadic& o) const;
  Dyadic operator-(const Dyadic& o) const;
  Dyadic operator*(const Dyadic& o) const;

  /// Exact halving; dyadics are closed under division by two.
  Dyadic half() const { return Dyadic(man_, exp_ - 1); }

  Dyadic abs() const { return man_ < 0 ? -*this : *this; }

  int compare(const Dyadic& o) const;
  bool operator<(const Dyadic& o) const { return compare(o) < 0; }
  bool operator<=(const Dyadic& o) const { return compare(o) <= 0; }
  bool operator>(const Dyadic& o) const { return compare(o) > 0; }
  bool operator>=(const Dyadic& o) const { return compare(o) >= 0; }
  bool operator==(const Dyadic& o) const { return compare(o) == 0; }
  bool operator!=(const Dyadic& o) const { return compare(o) != 0; }

  /// Round toward -inf keeping at most `prec` mantissa bits.
  Dyadic round_down(unsigned prec) const;
  /// Round toward +inf keeping at most `prec` mantissa bits.
  Dyadic round_up(unsigned prec) const;

  Rat to_rational() const;
  double to_double() const;
  std::string to_string() const;  // canonical "m*2^e"

  /// Largest dyadic with <= prec mantissa bits that is <= q (round down),
  /// or the smallest >= q (round up).
  static Dyadic from_rational(const Rat& q, unsigned prec, bool round_up);
  static Dyadic from_double(double x);

 private:
  void normalize();
  Int man_;
  long exp_;
};

}  // namespace slopecert
