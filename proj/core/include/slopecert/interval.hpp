// Interval arithmetic over exact dyadics and complex rectangles built from it.
// The ring operations are exact, so enclosures computed here are certificates;
// round_out is only a size-control knob, widening but never lying.
#pragma once

#include "slopecert/dyadic.hpp"

#include <string>

namespace slopecert {

struct DyInterval {
  Dyadic lo, hi;

  DyInterval() = default;
  DyInterval(const Dyadic& l, const Dyadic& h) : lo(l), hi(h) {}
  static DyInterval point(const Dyadic& v) { return {v, v}; }
  static DyInterval from_rational(const Rat& q, unsigned prec);

  bool valid() const { return lo <= hi; }
  bool contains_zero() const { return lo.sgn() <= 0 && hi.sgn() >= 0; }
  bool contains(const Dyadic& v) const { return lo <= v && v <= hi; }
  bool is_point() const { return lo == hi; }
  /// Strict containment in the interior of `o`.
  bool inside(const DyInterval& o) const { return o.lo < lo && hi < o.hi; }
  bool disjoint(const DyInterval& o) const { return hi < o.lo || o.hi < lo; }

  Dyadic width() const { return hi - lo; }
  Dyadic mid() const { return (lo + hi).half(); }

  DyInterval operator-() const { return {-hi, -lo}; }
  DyInterval operator+(const DyInterval& o) const {
    return {lo + o.lo, hi + o.hi};
  }
  DyInterval operator-(const DyInterval& o) const { return *this + (-o); }
  DyInterval operator*(const DyInterval& o) const;
  DyInterval square() const;

  DyInterval hull(const DyInterval& o) const {
    return {lo < o.lo ? lo : o.lo, hi > o.hi ? hi : o.hi};
  }
  /// Intersection; caller checks validity when the operands may be disjoint.
  DyInterval meet(const DyInterval& o) const {
    return {lo > o.lo ? lo : o.lo, hi < o.hi ? hi : o.hi};
  }

  DyInterval round_out(unsigned prec) const {
    return {lo.round_down(prec), hi.round_up(prec)};
  }

  std::string to_string() const {
    return "[" + lo.to_string() + ", " + hi.to_string() + "]";
  }
};

struct ComplexBox {
  DyInterval re, im;

  ComplexBox() = default;
  ComplexBox(const DyInterval& r, const DyInterval& i) : re(r), im(i) {}
  static ComplexBox real_point(const Dyadic& v) {
    return {DyInterval::point(v), DyInterval::point(Dyadic())};
  }

  bool is_real() const { return im.lo.is_zero() && im.hi.is_zero(); }
  bool contains_zero() const {
    return re.contains_zero() && im.contains_zero();
  }
  bool disjoint(const ComplexBox& o) const {
    return re.disjoint(o.re) || im.disjoint(o.im);
  }
  bool inside(const ComplexBox& o) const {
    return re.inside(o.re) && im.inside(o.im);
  }

  ComplexBox operator+(const ComplexBox& o) const {
    return {re + o.re, im + o.im};
  }
  ComplexBox operator-(const ComplexBox& o) const {
    return {re - o.re, im - o.im};
  }
  ComplexBox operator*(const ComplexBox& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
  ComplexBox conj() const { return {re, -im}; }

  /// Enclosure of |z|^2 over the box.
  DyInterval norm2() const { return re.square() + im.square(); }

  Dyadic max_width() const {
    Dyadic w1 = re.width(), w2 = im.width();
    return w1 > w2 ? w1 : w2;
  }

  ComplexBox round_out(unsigned prec) const {
    return {re.round_out(prec), im.round_out(prec)};
  }

  std::string to_string() const {
    return re.to_string() + " + i*" + im.to_string();
  }
};

/// Certified enclosure of log(x) for an interval with lo > 0, via MPFR
/// directed rounding at `prec` bits.
DyInterval log_enclosure(const DyInterval& x, unsigned prec);

/// Certified enclosure of log(q) for an exact rational q > 0.
DyInterval log_enclosure(const Rat& q, unsigned prec);

/// Directed-rounding log of a single positive value.
Dyadic log_dir(const Rat& q, unsigned prec, bool round_up);

}  // namespace slopecert
