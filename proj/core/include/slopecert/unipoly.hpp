// Dense univariate polynomials over the rationals. Everything downstream
// (resultants, minimal polynomials, Sturm chains, root isolation) reduces to
// this type, so it carries the full classical toolkit.
#pragma once

#include "slopecert/interval.hpp"
#include "slopecert/numeric.hpp"

#include <string>
#include <vector>

namespace slopecert {

enum class Var : uint8_t { X, Y, T, S };

const char* var_name(Var v);

class UniPoly {
 public:
  UniPoly() : var_(Var::T) {}
  explicit UniPoly(Var v) : var_(v) {}
  UniPoly(std::vector<Rat> coeffs, Var v = Var::T)
      : c_(std::move(coeffs)), var_(v) {
    trim();
  }
  static UniPoly constant(const Rat& a, Var v = Var::T) {
    return UniPoly({a}, v);
  }
  static UniPoly monomial(const Rat& a, size_t deg, Var v = Var::T);
  static UniPoly variable(Var v = Var::T) { return monomial(Rat(1), 1, v); }

  Var var() const { return var_; }
  UniPoly with_var(Var v) const {
    UniPoly r = *this;
    r.var_ = v;
    return r;
  }

  bool is_zero() const { return c_.empty(); }
  /// Degree; -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  const Rat& leading() const { return c_.back(); }
  const Rat& operator[](size_t i) const { return c_[i]; }
  Rat coeff(size_t i) const { return i < c_.size() ? c_[i] : Rat(0); }
  const std::vector<Rat>& coeffs() const { return c_; }
  size_t size() const { return c_.size(); }

  UniPoly operator-() const;
  UniPoly operator+(const UniPoly& o) const;
  UniPoly operator-(const UniPoly& o) const;
  UniPoly operator*(const UniPoly& o) const;
  UniPoly scaled(const Rat& k) const;
  UniPoly shifted_up(size_t k) const;  // multiply by var^k

  bool operator==(const UniPoly& o) const { return c_ == o.c_; }

  UniPoly derivative() const;
  Rat eval(const Rat& x) const;
  /// Interval Horner over a real interval.
  DyInterval eval(const DyInterval& x, unsigned prec) const;
  /// Interval Horner over a complex box.
  ComplexBox eval(const ComplexBox& x, unsigned prec) const;

  /// Quotient/remainder over Q; divisor must be nonzero.
  std::pair<UniPoly, UniPoly> divmod(const UniPoly& d) const;
  /// Exact division; throws if the remainder is nonzero.
  UniPoly exact_div(const UniPoly& d) const;
  bool divides(const UniPoly& d) const;

  /// Pseudo-remainder of *this by d with multiplier lc(d)^(deg-deg_d+1).
  UniPoly pseudo_rem(const UniPoly& d) const;

  /// Content as a positive rational such that *this / content is integer
  /// primitive with positive leading coefficient... sign goes to the unit.
  Rat content() const;
  /// Integer-primitive part with positive leading coefficient.
  UniPoly primitive() const;
  bool is_integer() const;

  UniPoly monic() const;

  /// gcd over Q, returned integer-primitive with positive leading coeff;
  /// gcd(f, 0) = primitive(f).
  static UniPoly gcd(const UniPoly& a, const UniPoly& b);

  UniPoly squarefree_part() const;

  /// Composition with x -> x + a (Taylor shift).
  UniPoly taylor_shift(const Rat& a) const;
  /// Reverse coefficients: x^deg * p(1/x).
  UniPoly reversed() const;
  UniPoly compose_scale(const Rat& k) const;  // p(k*x)

  /// All real roots lie within [-B, B] for this dyadic power of two (Cauchy).
  Dyadic root_bound() const;

  std::string to_string() const;

 private:
  void trim();
  std::vector<Rat> c_;  // c_[i] is the coefficient of var^i
  Var var_;
};

/// Sturm chain of the squarefree part; use count_real_roots on it.
std::vector<UniPoly> sturm_chain(const UniPoly& u);

/// Number of real roots in (a, b] given a precomputed Sturm chain.
int sturm_count(const std::vector<UniPoly>& chain, const Rat& a, const Rat& b);

int sign_variations_at(const std::vector<UniPoly>& chain, const Rat& x);

}  // namespace slopecert
