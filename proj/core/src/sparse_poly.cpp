#include "slopecert/sparse_poly.hpp"

#include "slopecert/errors.hpp"

#include <algorithm>
#include <sstream>

namespace slopecert {

SparsePoly SparsePoly::constant(const Rat& a) {
  SparsePoly p;
  p.insert({0, 0}, a);
  return p;
}

SparsePoly SparsePoly::term(const Rat& a, uint32_t xe, uint32_t ye) {
  SparsePoly p;
  p.insert({xe, ye}, a);
  return p;
}

void SparsePoly::insert(const Exp2& e, const Rat& a) {
  if (a == 0) return;
  auto [it, fresh] = terms_.emplace(e, a);
  if (!fresh) {
    it->second += a;
    if (it->second == 0) terms_.erase(it);
  }
  canonical_ = false;
}

Rat SparsePoly::coeff(uint32_t xe, uint32_t ye) const {
  auto it = terms_.find({xe, ye});
  return it == terms_.end() ? Rat(0) : it->second;
}

long SparsePoly::total_degree() const {
  if (terms_.empty()) return -1;
  // Map is graded-descending, so the first key has maximal total degree.
  const Exp2& e = terms_.begin()->first;
  return long(e.a) + long(e.b);
}

long SparsePoly::degree_x() const {
  long d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, long(e.a));
  return d;
}

long SparsePoly::degree_y() const {
  long d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, long(e.b));
  return d;
}

SparsePoly SparsePoly::operator-() const {
  SparsePoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  r.canonical_ = false;
  return r;
}

SparsePoly SparsePoly::operator+(const SparsePoly& o) const {
  SparsePoly r = *this;
  r.canonical_ = false;
  for (const auto& [e, c] : o.terms_) r.insert(e, c);
  return r;
}

SparsePoly SparsePoly::operator-(const SparsePoly& o) const {
  return *this + (-o);
}

SparsePoly SparsePoly::operator*(const SparsePoly& o) const {
  SparsePoly r;
  for (const auto& [e1, c1] : terms_) {
    for (const auto& [e2, c2] : o.terms_) {
      uint64_t a = uint64_t(e1.a) + e2.a, b = uint64_t(e1.b) + e2.b;
      if (a > UINT32_MAX || b > UINT32_MAX)
        throw InputError("exponent overflow in polynomial product");
      r.insert({uint32_t(a), uint32_t(b)}, c1 * c2);
    }
  }
  return r;
}

SparsePoly SparsePoly::scaled(const Rat& k) const {
  if (k == 0) return SparsePoly();
  SparsePoly r = *this;
  for (auto& [e, c] : r.terms_) c *= k;
  r.canonical_ = false;
  return r;
}

SparsePoly SparsePoly::mul_monomial(uint32_t a, uint32_t b) const {
  SparsePoly r;
  for (const auto& [e, c] : terms_) {
    uint64_t na = uint64_t(e.a) + a, nb = uint64_t(e.b) + b;
    if (na > UINT32_MAX || nb > UINT32_MAX)
      throw InputError("exponent overflow in monomial clearing");
    r.insert({uint32_t(na), uint32_t(nb)}, c);
  }
  return r;
}

SparsePoly SparsePoly::derivative(Var v) const {
  SparsePoly r;
  for (const auto& [e, c] : terms_) {
    if (v == Var::X) {
      if (e.a == 0) continue;
      r.insert({e.a - 1, e.b}, c * Rat(long(e.a)));
    } else {
      if (e.b == 0) continue;
      r.insert({e.a, e.b - 1}, c * Rat(long(e.b)));
    }
  }
  return r;
}

Rat SparsePoly::evaluate(const Rat& x, const Rat& y) const {
  Rat r(0);
  for (const auto& [e, c] : terms_) {
    r += c * rat_pow(x, e.a) * rat_pow(y, e.b);
  }
  return r;
}

SparsePoly SparsePoly::canonical() const {
  if (terms_.empty() || canonical_) return *this;
  Int num_gcd(0), den_lcm(1);
  for (const auto& [e, c] : terms_) {
    num_gcd = int_gcd(num_gcd, abs_int(c.get_num()));
    den_lcm = int_lcm(den_lcm, c.get_den());
  }
  Rat scale(den_lcm, num_gcd);
  scale.canonicalize();
  SparsePoly r = scaled(scale);
  // Sign convention: the lexicographically-leading coefficient is positive.
  const Rat* lead = nullptr;
  Exp2 best{0, 0};
  for (const auto& [e, c] : r.terms_) {
    if (!lead || e.a > best.a || (e.a == best.a && e.b > best.b)) {
      best = e;
      lead = &c;
    }
  }
  if (lead && *lead < 0) r = r.scaled(Rat(-1));
  r.canonical_ = true;
  return r;
}

std::vector<UniPoly> SparsePoly::coefficients_in(Var main) const {
  long d = main == Var::X ? degree_x() : degree_y();
  Var other = main == Var::X ? Var::Y : Var::X;
  std::vector<std::vector<Rat>> cc(static_cast<size_t>(d + 1));
  for (const auto& [e, c] : terms_) {
    uint32_t k = main == Var::X ? e.a : e.b;
    uint32_t j = main == Var::X ? e.b : e.a;
    auto& v = cc[k];
    if (v.size() <= j) v.resize(j + 1, Rat(0));
    v[j] = c;
  }
  std::vector<UniPoly> out;
  out.reserve(cc.size());
  for (auto& v : cc) out.emplace_back(std::move(v), other);
  return out;
}

SparsePoly SparsePoly::from_coefficients(const std::vector<UniPoly>& c,
                                         Var main) {
  SparsePoly r;
  for (size_t k = 0; k < c.size(); ++k) {
    for (size_t j = 0; j < c[k].size(); ++j) {
      if (c[k][j] == 0) continue;
      Exp2 e = main == Var::X ? Exp2{uint32_t(k), uint32_t(j)}
                              : Exp2{uint32_t(j), uint32_t(k)};
      r.insert(e, c[k][j]);
    }
  }
  return r;
}

SparsePoly SparsePoly::from_unipoly(const UniPoly& u, Var as) {
  SparsePoly r;
  for (size_t i = 0; i < u.size(); ++i) {
    if (u[i] == 0) continue;
    r.insert(as == Var::X ? Exp2{uint32_t(i), 0} : Exp2{0, uint32_t(i)}, u[i]);
  }
  return r;
}

UniPoly SparsePoly::substitute_x(const Rat& x0) const {
  std::vector<Rat> c;
  for (const auto& [e, co] : terms_) {
    if (c.size() <= e.b) c.resize(e.b + 1, Rat(0));
    c[e.b] += co * rat_pow(x0, e.a);
  }
  return UniPoly(std::move(c), Var::Y);
}

UniPoly SparsePoly::substitute_y(const Rat& y0) const {
  std::vector<Rat> c;
  for (const auto& [e, co] : terms_) {
    if (c.size() <= e.a) c.resize(e.a + 1, Rat(0));
    c[e.a] += co * rat_pow(y0, e.b);
  }
  return UniPoly(std::move(c), Var::X);
}

std::vector<Rat> SparsePoly::coefficient_list() const {
  std::vector<Rat> out;
  out.reserve(terms_.size());
  for (const auto& [e, c] : terms_) out.push_back(c);
  return out;
}

std::string SparsePoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Rat a = c;
    if (first) {
      if (a < 0) {
        os << "-";
        a = -a;
      }
      first = false;
    } else {
      os << (a < 0 ? " - " : " + ");
      a = abs_rat(a);
    }
    bool has_var = e.a > 0 || e.b > 0;
    bool unit = (a == 1) && has_var;
    if (!unit) os << a.get_str();
    if (e.a > 0) {
      if (!unit) os << "*";
      os << "x";
      if (e.a > 1) os << "^" << e.a;
      unit = false;  // force '*' before a following y
    }
    if (e.b > 0) {
      if (!unit) os << "*";
      os << "y";
      if (e.b > 1) os << "^" << e.b;
    }
  }
  return os.str();
}

void SparsePolyBuilder::add_term(const Rat& coeff, uint32_t xe, uint32_t ye) {
  p_.insert({xe, ye}, coeff);
}

SparsePoly SparsePolyBuilder::build_canonical() const { return p_.canonical(); }
SparsePoly SparsePolyBuilder::build_raw() const { return p_; }

// --- gcd / squarefree ------------------------------------------------------

namespace {

// Content of f viewed in `main`: gcd over Q[other] of the coefficients.
UniPoly content_in(const std::vector<UniPoly>& coeffs) {
  UniPoly g;
  for (const UniPoly& c : coeffs) {
    g = UniPoly::gcd(g, c);
    if (g.degree() == 0 && !g.is_zero()) break;
  }
  return g;
}

std::vector<UniPoly> divide_all(const std::vector<UniPoly>& coeffs,
                                const UniPoly& d) {
  std::vector<UniPoly> out;
  out.reserve(coeffs.size());
  for (const UniPoly& c : coeffs) {
    out.push_back(c.is_zero() ? c : c.exact_div(d));
  }
  return out;
}

long vec_degree(const std::vector<UniPoly>& v) {
  return static_cast<long>(v.size()) - 1;
}

void vec_trim(std::vector<UniPoly>& v) {
  while (!v.empty() && v.back().is_zero()) v.pop_back();
}

// Pseudo-remainder of dense coefficient vectors over Q[other]:
// lc(B)^(degA-degB+1) * A mod B.
std::vector<UniPoly> vec_pseudo_rem(std::vector<UniPoly> A,
                                    const std::vector<UniPoly>& B) {
  long da = vec_degree(A), db = vec_degree(B);
  const UniPoly& lb = B.back();
  long scale_left = da - db + 1;
  while (vec_degree(A) >= db) {
    UniPoly top = A.back();
    // A = lb*A - top * x^(dA-dB) * B
    for (auto& c : A) c = c * lb;
    long k = vec_degree(A) - db;
    for (long i = 0; i <= db; ++i) {
      A[size_t(i + k)] = A[size_t(i + k)] - top * B[size_t(i)];
    }
    vec_trim(A);
    --scale_left;
    if (A.empty()) break;
  }
  // Keep the multiplier exactly lc^(steps): pad missing factors.
  for (long i = 0; i < scale_left; ++i) {
    for (auto& c : A) c = c * lb;
  }
  return A;
}

std::vector<UniPoly> vec_primitive(std::vector<UniPoly> A) {
  vec_trim(A);
  if (A.empty()) return A;
  UniPoly c = content_in(A);
  return divide_all(A, c);
}

}  // namespace

SparsePoly poly_gcd(const SparsePoly& f, const SparsePoly& g) {
  if (f.is_zero()) return g.canonical();
  if (g.is_zero()) return f.canonical();
  // Pure rational-coefficient gcd reduces to univariate machinery in the
  // variable that actually appears; pick y as the main variable when present
  // in both, else fall back to x, else constants.
  bool fy = f.degree_y() > 0, gy = g.degree_y() > 0;
  bool fx = f.degree_x() > 0, gx = g.degree_x() > 0;
  Var main;
  if (fy && gy) {
    main = Var::Y;
  } else if (fx && gx) {
    main = Var::X;
  } else {
    // A nonzero-constant operand or disjoint single variables force a unit
    // gcd; the only surviving case is both univariate in the same variable.
    bool f_const = !fx && !fy, g_const = !gx && !gy;
    if (f_const || g_const) return SparsePoly::constant(Rat(1)).canonical();
    Var vf = fy ? Var::Y : Var::X;
    Var vg = gy ? Var::Y : Var::X;
    if (vf != vg) return SparsePoly::constant(Rat(1)).canonical();
    UniPoly a =
        (vf == Var::Y) ? f.substitute_x(Rat(0)) : f.substitute_y(Rat(0));
    UniPoly b =
        (vf == Var::Y) ? g.substitute_x(Rat(0)) : g.substitute_y(Rat(0));
    return SparsePoly::from_unipoly(UniPoly::gcd(a, b), vf).canonical();
  }

  auto A = f.coefficients_in(main);
  auto B = g.coefficients_in(main);
  UniPoly cA = content_in(A), cB = content_in(B);
  A = divide_all(A, cA);
  B = divide_all(B, cB);
  if (vec_degree(A) < vec_degree(B)) std::swap(A, B);
  while (!B.empty()) {
    auto R = vec_primitive(vec_pseudo_rem(A, B));
    A = std::move(B);
    B = std::move(R);
  }
  // gcd = gcd(contents) * primitive gcd in main.
  UniPoly cg = UniPoly::gcd(cA, cB);
  Var other = main == Var::Y ? Var::X : Var::Y;
  SparsePoly prim = SparsePoly::from_coefficients(vec_primitive(A), main);
  SparsePoly cont = SparsePoly::from_unipoly(cg, other);
  return (prim * cont).canonical();
}

bool squarefree_check(const SparsePoly& f) {
  if (f.is_constant()) throw InputError("squarefree_check: constant input");
  if (f.degree_x() > 0) {
    SparsePoly gx = poly_gcd(f, f.derivative(Var::X));
    if (gx.degree_x() > 0) return false;
  }
  if (f.degree_y() > 0) {
    SparsePoly gy = poly_gcd(f, f.derivative(Var::Y));
    if (gy.degree_y() > 0) return false;
  }
  return true;
}

// --- resultant (subresultant PRS) -------------------------------------------

UniPoly resultant_vectors(std::vector<UniPoly> A, std::vector<UniPoly> B) {
  vec_trim(A);
  vec_trim(B);
  if (A.empty() || B.empty())
    throw InputError("resultant of the zero polynomial");
  Var other = A.back().var();
  auto one = UniPoly::constant(Rat(1), other);
  int s = 1;
  if (vec_degree(A) < vec_degree(B)) {
    if ((vec_degree(A) & 1) && (vec_degree(B) & 1)) s = -s;
    std::swap(A, B);
  }
  if (vec_degree(B) == 0) {
    // Res(A, b0) = b0^deg(A); covers the deg(A) == 0 case too (empty product).
    UniPoly r = one;
    for (long i = 0; i < vec_degree(A); ++i) r = r * B[0];
    return s < 0 ? -r : r;
  }
  UniPoly g = one, h = one;
  while (true) {
    long da = vec_degree(A), db = vec_degree(B);
    long d = da - db;
    if ((da & 1) && (db & 1)) s = -s;
    auto R = vec_pseudo_rem(A, B);
    vec_trim(R);
    A = std::move(B);
    B = std::move(R);
    if (B.empty()) {
      // The PRS collapsed: f and g share a factor, so the resultant is 0.
      return UniPoly(other);
    }
    // B /= g * h^d
    UniPoly divisor = g;
    for (long i = 0; i < d; ++i) divisor = divisor * h;
    for (auto& c : B) {
      if (!c.is_zero()) c = c.exact_div(divisor);
    }
    g = A.back();
    if (d > 0) {
      // h = g^d / h^(d-1)
      UniPoly num = one;
      for (long i = 0; i < d; ++i) num = num * g;
      UniPoly den = one;
      for (long i = 0; i + 1 < d; ++i) den = den * h;
      h = num.exact_div(den);
    }
    if (vec_degree(B) == 0) {
      long l = vec_degree(A);
      // res = lc(B)^l / h^(l-1), with the accumulated sign.
      UniPoly num = one;
      for (long i = 0; i < l; ++i) num = num * B[0];
      UniPoly den = one;
      for (long i = 0; i + 1 < l; ++i) den = den * h;
      UniPoly r = num.exact_div(den);
      return s < 0 ? -r : r;
    }
  }
}

UniPoly resultant(const SparsePoly& f, const SparsePoly& g, Var eliminate) {
  long df = eliminate == Var::X ? f.degree_x() : f.degree_y();
  long dg = eliminate == Var::X ? g.degree_x() : g.degree_y();
  if (df <= 0 || dg <= 0)
    throw InputError(
        "resultant: inputs must have positive degree in the eliminated "
        "variable");
  return resultant_vectors(f.coefficients_in(eliminate),
                           g.coefficients_in(eliminate));
}

}  // namespace slopecert
