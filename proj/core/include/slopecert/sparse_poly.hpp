// Exact sparse bivariate polynomials over Q: the type that carries the input
// curve f, the tangency polynomials, and everything eliminated from them.
#pragma once

#include "slopecert/unipoly.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace slopecert {

struct Exp2 {
  uint32_t a = 0;  // exponent of x
  uint32_t b = 0;  // exponent of y
  friend bool operator==(const Exp2& l, const Exp2& r) {
    return l.a == r.a && l.b == r.b;
  }
};

/// Graded-lex, descending (printing order: highest total degree first,
/// then higher x-exponent first).
struct GrlexDesc {
  bool operator()(const Exp2& l, const Exp2& r) const {
    uint64_t dl = uint64_t(l.a) + l.b, dr = uint64_t(r.a) + r.b;
    if (dl != dr) return dl > dr;
    if (l.a != r.a) return l.a > r.a;
    return l.b > r.b;
  }
};

class SparsePoly {
 public:
  using TermMap = std::map<Exp2, Rat, GrlexDesc>;

  SparsePoly() = default;
  static SparsePoly zero() { return SparsePoly(); }
  static SparsePoly constant(const Rat& a);
  static SparsePoly term(const Rat& a, uint32_t xe, uint32_t ye);
  static SparsePoly var_x() { return term(Rat(1), 1, 0); }
  static SparsePoly var_y() { return term(Rat(1), 0, 1); }

  bool is_zero() const { return terms_.empty(); }
  size_t num_terms() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }
  Rat coeff(uint32_t xe, uint32_t ye) const;
  bool is_canonical() const { return canonical_; }

  /// Total degree (max a+b); -1 for zero.
  long total_degree() const;
  long degree_x() const;
  long degree_y() const;
  bool is_constant() const { return total_degree() <= 0; }

  SparsePoly operator-() const;
  SparsePoly operator+(const SparsePoly& o) const;
  SparsePoly operator-(const SparsePoly& o) const;
  SparsePoly operator*(const SparsePoly& o) const;
  SparsePoly scaled(const Rat& k) const;
  /// Multiply by x^a y^b (monomial clearing).
  SparsePoly mul_monomial(uint32_t a, uint32_t b) const;
  bool operator==(const SparsePoly& o) const { return terms_ == o.terms_; }

  SparsePoly derivative(Var v) const;
  Rat evaluate(const Rat& x, const Rat& y) const;

  /// Integer-coprime normal form: integer coefficients with gcd 1 and the
  /// lexicographically-leading coefficient positive.
  SparsePoly canonical() const;

  /// Coefficient vector along `main`, entries univariate in the other
  /// variable; index = exponent of `main`.
  std::vector<UniPoly> coefficients_in(Var main) const;
  static SparsePoly from_coefficients(const std::vector<UniPoly>& c, Var main);
  static SparsePoly from_unipoly(const UniPoly& u, Var as);

  /// Substitute a univariate polynomial for one variable; the result is
  /// univariate in the other (used for fibers and tangent-cone work).
  UniPoly substitute_x(const Rat& x0) const;  // -> poly in y
  UniPoly substitute_y(const Rat& y0) const;  // -> poly in x

  std::vector<Rat> coefficient_list() const;  // graded-lex order

  std::string to_string() const;

 private:
  void insert(const Exp2& e, const Rat& a);
  TermMap terms_;
  bool canonical_ = false;
  friend SparsePoly parse_poly(const std::string&);
  friend class SparsePolyBuilder;
};

/// Builder used by the parser and by generators in tests.
class SparsePolyBuilder {
 public:
  void add_term(const Rat& coeff, uint32_t xe, uint32_t ye);
  SparsePoly build_canonical() const;
  SparsePoly build_raw() const;

 private:
  SparsePoly p_;
};

/// Parses the expression grammar; throws ParseError with a byte position.
SparsePoly parse_poly(const std::string& text);

/// gcd over Q, canonical form; gcd(f, 0) = canonical(f).
SparsePoly poly_gcd(const SparsePoly& f, const SparsePoly& g);

/// true iff f (nonconstant) has no repeated factor.
bool squarefree_check(const SparsePoly& f);

/// Resultant eliminating `eliminate`; both inputs need positive degree in it.
/// Subresultant PRS over the remaining variable's polynomial ring.
UniPoly resultant(const SparsePoly& f, const SparsePoly& g, Var eliminate);

/// Subresultant PRS resultant for dense coefficient vectors over Q[other].
UniPoly resultant_vectors(std::vector<UniPoly> A, std::vector<UniPoly> B);

}  // namespace slopecert
