#include "slopecert/unipoly.hpp"

#include "slopecert/errors.hpp"

#include <algorithm>
#include <sstream>

namespace slopecert {

const char* var_name(Var v) {
  switch (v) {
    case Var::X: return "x";
    case Var::Y: return "y";
    case Var::T: return "t";
    case Var::S: return "s";
  }
  return "?";
}

UniPoly UniPoly::monomial(const Rat& a, size_t deg, Var v) {
  if (a == 0) return UniPoly(v);
  std::vector<Rat> c(deg + 1, Rat(0));
  c[deg] = a;
  return UniPoly(std::move(c), v);
}

void UniPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UniPoly UniPoly::operator-() const {
  UniPoly r = *this;
  for (auto& a : r.c_) a = -a;
  return r;
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
  std::vector<Rat> c(std::max(c_.size(), o.c_.size()), Rat(0));
  for (size_t i = 0; i < c_.size(); ++i) c[i] = c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) c[i] += o.c_[i];
  return UniPoly(std::move(c), var_);
}

UniPoly UniPoly::operator-(const UniPoly& o) const { return *this + (-o); }

UniPoly UniPoly::operator*(const UniPoly& o) const {
  if (is_zero() || o.is_zero()) return UniPoly(var_);
  std::vector<Rat> c(c_.size() + o.c_.size() - 1, Rat(0));
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (size_t j = 0; j < o.c_.size(); ++j) {
      if (o.c_[j] == 0) continue;
      c[i + j] += c_[i] * o.c_[j];
    }
  }
  return UniPoly(std::move(c), var_);
}

UniPoly UniPoly::scaled(const Rat& k) const {
  if (k == 0) return UniPoly(var_);
  UniPoly r = *this;
  for (auto& a : r.c_) a *= k;
  return r;
}

UniPoly UniPoly::shifted_up(size_t k) const {
  if (is_zero() || k == 0) return *this;
  std::vector<Rat> c(c_.size() + k, Rat(0));
  for (size_t i = 0; i < c_.size(); ++i) c[i + k] = c_[i];
  return UniPoly(std::move(c), var_);
}

UniPoly UniPoly::derivative() const {
  if (c_.size() <= 1) return UniPoly(var_);
  std::vector<Rat> c(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) c[i - 1] = c_[i] * Rat(static_cast<long>(i));
  return UniPoly(std::move(c), var_);
}

Rat UniPoly::eval(const Rat& x) const {
  Rat r(0);
  for (size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
  return r;
}

DyInterval UniPoly::eval(const DyInterval& x, unsigned prec) const {
  DyInterval r{Dyadic(), Dyadic()};
  for (size_t i = c_.size(); i-- > 0;) {
    r = (r * x + DyInterval::from_rational(c_[i], prec)).round_out(prec);
  }
  return r;
}

ComplexBox UniPoly::eval(const ComplexBox& x, unsigned prec) const {
  ComplexBox r;
  for (size_t i = c_.size(); i-- > 0;) {
    ComplexBox ci(DyInterval::from_rational(c_[i], prec),
                  DyInterval::point(Dyadic()));
    r = (r * x + ci).round_out(prec);
  }
  return r;
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& d) const {
  if (d.is_zero()) throw std::domain_error("division by zero polynomial");
  UniPoly q(var_), r = *this;
  if (degree() < d.degree()) return {q, r};
  std::vector<Rat> qc(degree() - d.degree() + 1, Rat(0));
  while (!r.is_zero() && r.degree() >= d.degree()) {
    Rat f = r.leading() / d.leading();
    size_t k = static_cast<size_t>(r.degree() - d.degree());
    qc[k] = f;
    // r -= f * x^k * d
    for (size_t i = 0; i < d.c_.size(); ++i) r.c_[i + k] -= f * d.c_[i];
    r.trim();
  }
  return {UniPoly(std::move(qc), var_), r};
}

UniPoly UniPoly::exact_div(const UniPoly& d) const {
  auto [q, r] = divmod(d);
  if (!r.is_zero()) throw CertificationBug("inexact polynomial division");
  return q;
}

bool UniPoly::divides(const UniPoly& d) const {
  if (is_zero()) return d.is_zero();
  return d.divmod(*this).second.is_zero();
}

UniPoly UniPoly::pseudo_rem(const UniPoly& d) const {
  if (d.is_zero()) throw std::domain_error("pseudo-division by zero");
  long dd = degree() - d.degree();
  if (dd < 0) return *this;
  UniPoly r = scaled(rat_pow(d.leading(), static_cast<unsigned long>(dd) + 1));
  return r.divmod(d).second;
}

Rat UniPoly::content() const {
  if (is_zero()) return Rat(1);
  Int num_gcd(0), den_lcm(1);
  for (const Rat& a : c_) {
    if (a == 0) continue;
    num_gcd = int_gcd(num_gcd, abs_int(a.get_num()));
    den_lcm = int_lcm(den_lcm, a.get_den());
  }
  Rat c(num_gcd, den_lcm);
  c.canonicalize();
  return c;
}

UniPoly UniPoly::primitive() const {
  if (is_zero()) return *this;
  UniPoly r = scaled(Rat(1) / content());
  if (r.leading() < 0) r = -r;
  return r;
}

bool UniPoly::is_integer() const {
  for (const Rat& a : c_)
    if (a.get_den() != 1) return false;
  return true;
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return *this;
  return scaled(Rat(1) / leading());
}

UniPoly UniPoly::gcd(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero()) return b.primitive();
  if (b.is_zero()) return a.primitive();
  // Primitive PRS keeps coefficient growth tame without bignum surprises.
  UniPoly f = a.primitive(), g = b.primitive();
  if (f.degree() < g.degree()) std::swap(f, g);
  while (!g.is_zero()) {
    UniPoly r = f.pseudo_rem(g).primitive();
    f = g;
    g = r;
  }
  return f.primitive();
}

UniPoly UniPoly::squarefree_part() const {
  if (degree() <= 0) return primitive();
  UniPoly g = gcd(*this, derivative());
  if (g.degree() == 0) return primitive();
  return primitive().exact_div(g.scaled(Rat(1) / g.leading())).primitive();
}

UniPoly UniPoly::taylor_shift(const Rat& a) const {
  // Horner form: p(x+a) built bottom-up.
  UniPoly r(var_);
  UniPoly lin({a, Rat(1)}, var_);
  for (size_t i = c_.size(); i-- > 0;) {
    r = r * lin + constant(c_[i], var_);
  }
  return r;
}

UniPoly UniPoly::reversed() const {
  std::vector<Rat> c(c_.rbegin(), c_.rend());
  return UniPoly(std::move(c), var_);
}

UniPoly UniPoly::compose_scale(const Rat& k) const {
  UniPoly r = *this;
  Rat p(1);
  for (size_t i = 1; i < r.c_.size(); ++i) {
    p *= k;
    r.c_[i] *= p;
  }
  r.trim();
  return r;
}

Dyadic UniPoly::root_bound() const {
  if (degree() <= 0) return Dyadic(1L);
  // Cauchy bound 1 + max |a_i / a_n|, rounded up to a power of two.
  Rat m(0);
  for (size_t i = 0; i + 1 < c_.size(); ++i) {
    Rat v = abs_rat(c_[i] / leading());
    if (v > m) m = v;
  }
  m += 1;
  Int ceil_m;
  mpz_cdiv_q(ceil_m.get_mpz_t(), m.get_num().get_mpz_t(),
             m.get_den().get_mpz_t());
  return Dyadic(Int(1), static_cast<long>(bit_length(ceil_m)));
}

std::string UniPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = c_.size(); i-- > 0;) {
    if (c_[i] == 0) continue;
    Rat a = c_[i];
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
    bool unit = (a == 1) && i > 0;
    if (!unit) os << a.get_str();
    if (i > 0) {
      if (!unit) os << "*";
      os << var_name(var_);
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

std::vector<UniPoly> sturm_chain(const UniPoly& u) {
  std::vector<UniPoly> chain;
  UniPoly f = u.squarefree_part();
  if (f.degree() <= 0) return chain;
  chain.push_back(f);
  UniPoly d1 = f.derivative();
  chain.push_back(d1.scaled(Rat(1) / d1.content()));
  while (chain.back().degree() > 0) {
    const UniPoly& a = chain[chain.size() - 2];
    const UniPoly& b = chain.back();
    UniPoly r = a.pseudo_rem(b);
    if (r.is_zero()) break;
    // pseudo_rem scales the true remainder by lc(b)^(d+1); the chain needs
    // -(a mod b) up to a positive factor, so compensate for a negative
    // multiplier before dividing out the (always positive) content.
    long d = a.degree() - b.degree();
    bool mult_negative = (b.leading() < 0) && ((d + 1) % 2 == 1);
    UniPoly next = mult_negative ? r : -r;
    chain.push_back(next.scaled(Rat(1) / next.content()));
  }
  return chain;
}

int sign_variations_at(const std::vector<UniPoly>& chain, const Rat& x) {
  int var = 0, prev = 0;
  for (const UniPoly& p : chain) {
    int s = sign(p.eval(x));
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++var;
    prev = s;
  }
  return var;
}

int sturm_count(const std::vector<UniPoly>& chain, const Rat& a,
                const Rat& b) {
  if (chain.empty()) return 0;
  return sign_variations_at(chain, a) - sign_variations_at(chain, b);
}

}  // namespace slopecert
