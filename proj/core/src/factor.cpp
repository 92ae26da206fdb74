#include "slopecert/factor.hpp"

#include "slopecert/errors.hpp"

#include <algorithm>
#include <cstdint>

namespace slopecert {

namespace {

// --- arithmetic mod a word prime ---------------------------------------------

using PolyP = std::vector<uint64_t>;  // little-endian, reduced mod p

uint64_t sub_p(uint64_t a, uint64_t b, uint64_t p) {
  return a >= b ? a - b : a + p - b;
}
uint64_t mul_p(uint64_t a, uint64_t b, uint64_t p) {
  return (a * b) % p;  // p < 2^31, no overflow
}
uint64_t pow_p(uint64_t a, uint64_t e, uint64_t p) {
  uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mul_p(r, a, p);
    a = mul_p(a, a, p);
    e >>= 1;
  }
  return r;
}
uint64_t inv_p(uint64_t a, uint64_t p) { return pow_p(a, p - 2, p); }

void trim_p(PolyP& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}
long deg_p(const PolyP& f) { return static_cast<long>(f.size()) - 1; }

PolyP mul_poly_p(const PolyP& a, const PolyP& b, uint64_t p) {
  if (a.empty() || b.empty()) return {};
  PolyP c(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
  }
  trim_p(c);
  return c;
}

PolyP sub_poly_p(const PolyP& a, const PolyP& b, uint64_t p) {
  PolyP c(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < a.size(); ++i) c[i] = a[i];
  for (size_t i = 0; i < b.size(); ++i) c[i] = sub_p(c[i], b[i], p);
  trim_p(c);
  return c;
}

// a = q*b + r; returns {q, r}.
std::pair<PolyP, PolyP> divmod_poly_p(PolyP a, const PolyP& b, uint64_t p) {
  if (deg_p(a) < deg_p(b)) return {{}, std::move(a)};
  PolyP q(a.size() - b.size() + 1, 0);
  uint64_t li = inv_p(b.back(), p);
  while (deg_p(a) >= deg_p(b)) {
    uint64_t f = mul_p(a.back(), li, p);
    size_t k = a.size() - b.size();
    q[k] = f;
    for (size_t i = 0; i < b.size(); ++i)
      a[i + k] = sub_p(a[i + k], mul_p(f, b[i], p), p);
    trim_p(a);
    if (a.empty()) break;
  }
  trim_p(q);
  return {std::move(q), std::move(a)};
}

PolyP rem_poly_p(PolyP a, const PolyP& b, uint64_t p) {
  return divmod_poly_p(std::move(a), b, p).second;
}

PolyP monic_p(PolyP f, uint64_t p) {
  if (f.empty() || f.back() == 1) return f;
  uint64_t li = inv_p(f.back(), p);
  for (auto& c : f) c = mul_p(c, li, p);
  return f;
}

PolyP gcd_poly_p(PolyP a, PolyP b, uint64_t p) {
  while (!b.empty()) {
    PolyP r = rem_poly_p(std::move(a), b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return monic_p(std::move(a), p);
}

PolyP deriv_poly_p(const PolyP& f, uint64_t p) {
  if (f.size() <= 1) return {};
  PolyP d(f.size() - 1);
  for (size_t i = 1; i < f.size(); ++i) d[i - 1] = (f[i] * (i % p)) % p;
  trim_p(d);
  return d;
}

PolyP powmod_x_p(uint64_t e, const PolyP& f, uint64_t p) {
  PolyP r{1};
  PolyP base = rem_poly_p(PolyP{0, 1}, f, p);
  while (e) {
    if (e & 1) r = rem_poly_p(mul_poly_p(r, base, p), f, p);
    base = rem_poly_p(mul_poly_p(base, base, p), f, p);
    e >>= 1;
  }
  return r;
}

PolyP to_mod_p(const UniPoly& u, uint64_t p) {
  PolyP f(u.size());
  for (size_t i = 0; i < u.size(); ++i) {
    Int r;
    mpz_mod_ui(r.get_mpz_t(), u[i].get_num().get_mpz_t(), p);
    f[i] = r.get_ui();
  }
  trim_p(f);
  return f;
}

// Extended gcd: s*a + t*b = 1 for coprime a, b over F_p.
std::pair<PolyP, PolyP> ext_gcd_p(const PolyP& a, const PolyP& b, uint64_t p) {
  PolyP r0 = a, r1 = b;
  PolyP s0{1}, s1{}, t0{}, t1{1};
  while (!r1.empty()) {
    auto [q, r] = divmod_poly_p(r0, r1, p);
    PolyP s2 = sub_poly_p(s0, mul_poly_p(q, s1, p), p);
    PolyP t2 = sub_poly_p(t0, mul_poly_p(q, t1, p), p);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (deg_p(r0) != 0) throw CertificationBug("ext_gcd_p on non-coprime input");
  uint64_t li = inv_p(r0[0], p);
  for (auto& c : s0) c = mul_p(c, li, p);
  for (auto& c : t0) c = mul_p(c, li, p);
  return {std::move(s0), std::move(t0)};
}

// Berlekamp factorization of a monic squarefree polynomial mod p.
std::vector<PolyP> berlekamp(const PolyP& f, uint64_t p) {
  long n = deg_p(f);
  if (n <= 1) return {f};
  PolyP xp = powmod_x_p(p, f, p);
  // Rows of the Frobenius-minus-identity matrix: coords of x^{ip} - x^i.
  std::vector<std::vector<uint64_t>> M(n, std::vector<uint64_t>(n, 0));
  PolyP row{1};
  for (long i = 0; i < n; ++i) {
    for (size_t j = 0; j < row.size(); ++j) M[i][j] = row[j];
    M[i][i] = sub_p(M[i][i], 1, p);
    if (i + 1 < n) row = rem_poly_p(mul_poly_p(row, xp, p), f, p);
  }
  // Kernel of v -> v*M: eliminate the transpose.
  std::vector<std::vector<uint64_t>> A(n, std::vector<uint64_t>(n, 0));
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j) A[j][i] = M[i][j];
  std::vector<long> pivot_col;
  long rank = 0;
  for (long col = 0; col < n && rank < n; ++col) {
    long piv = -1;
    for (long r2 = rank; r2 < n; ++r2) {
      if (A[r2][col]) {
        piv = r2;
        break;
      }
    }
    if (piv < 0) continue;
    std::swap(A[rank], A[piv]);
    uint64_t inv = inv_p(A[rank][col], p);
    for (long j = 0; j < n; ++j) A[rank][j] = mul_p(A[rank][j], inv, p);
    for (long r2 = 0; r2 < n; ++r2) {
      if (r2 == rank || !A[r2][col]) continue;
      uint64_t f2 = A[r2][col];
      for (long j = 0; j < n; ++j)
        A[r2][j] = sub_p(A[r2][j], mul_p(f2, A[rank][j], p), p);
    }
    pivot_col.push_back(col);
    ++rank;
  }
  std::vector<bool> is_pivot(n, false);
  for (long c : pivot_col) is_pivot[static_cast<size_t>(c)] = true;
  std::vector<PolyP> kernel;
  for (long col = 0; col < n; ++col) {
    if (is_pivot[static_cast<size_t>(col)]) continue;
    PolyP v(static_cast<size_t>(n), 0);
    v[static_cast<size_t>(col)] = 1;
    for (long r2 = 0; r2 < rank; ++r2)
      v[static_cast<size_t>(pivot_col[static_cast<size_t>(r2)])] =
          sub_p(0, A[static_cast<size_t>(r2)][static_cast<size_t>(col)], p);
    trim_p(v);
    kernel.push_back(std::move(v));
  }
  size_t r = kernel.size();
  std::vector<PolyP> factors{f};
  if (r <= 1) return factors;
  for (const PolyP& v : kernel) {
    if (factors.size() >= r) break;
    if (deg_p(v) < 1) continue;  // constants never split
    for (size_t fi = 0; fi < factors.size() && factors.size() < r; ++fi) {
      if (deg_p(factors[fi]) <= 1) continue;
      for (uint64_t c = 0; c < p && factors.size() < r; ++c) {
        PolyP shifted = v;
        shifted[0] = sub_p(shifted.empty() ? 0 : shifted[0], c, p);
        trim_p(shifted);
        if (shifted.empty()) continue;
        PolyP d = gcd_poly_p(factors[fi], shifted, p);
        if (deg_p(d) >= 1 && deg_p(d) < deg_p(factors[fi])) {
          PolyP rest = divmod_poly_p(factors[fi], d, p).first;
          factors[fi] = std::move(d);
          factors.push_back(std::move(rest));
        }
      }
    }
  }
  return factors;
}

// --- arithmetic mod p^k -------------------------------------------------------

using PolyM = std::vector<Int>;  // little-endian, reduced into [0, m)

void trim_m(PolyM& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}
long deg_m(const PolyM& f) { return static_cast<long>(f.size()) - 1; }

PolyM reduce_m(PolyM f, const Int& m) {
  for (auto& c : f) mpz_mod(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
  trim_m(f);
  return f;
}

PolyM add_m(const PolyM& a, const PolyM& b, const Int& m) {
  PolyM c(std::max(a.size(), b.size()), Int(0));
  for (size_t i = 0; i < a.size(); ++i) c[i] = a[i];
  for (size_t i = 0; i < b.size(); ++i) c[i] += b[i];
  return reduce_m(std::move(c), m);
}

PolyM sub_m(const PolyM& a, const PolyM& b, const Int& m) {
  PolyM c(std::max(a.size(), b.size()), Int(0));
  for (size_t i = 0; i < a.size(); ++i) c[i] = a[i];
  for (size_t i = 0; i < b.size(); ++i) c[i] -= b[i];
  return reduce_m(std::move(c), m);
}

PolyM mul_m(const PolyM& a, const PolyM& b, const Int& m) {
  if (a.empty() || b.empty()) return {};
  PolyM c(a.size() + b.size() - 1, Int(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  }
  return reduce_m(std::move(c), m);
}

// divmod by a monic divisor.
std::pair<PolyM, PolyM> divmod_m(PolyM a, const PolyM& b, const Int& m) {
  if (deg_m(a) < deg_m(b)) return {{}, std::move(a)};
  PolyM q(a.size() - b.size() + 1, Int(0));
  while (deg_m(a) >= deg_m(b)) {
    Int f = a.back();
    size_t k = a.size() - b.size();
    q[k] = f;
    for (size_t i = 0; i < b.size(); ++i) {
      a[i + k] -= f * b[i];
      mpz_mod(a[i + k].get_mpz_t(), a[i + k].get_mpz_t(), m.get_mpz_t());
    }
    trim_m(a);
    if (a.empty()) break;
  }
  return {reduce_m(std::move(q), m), std::move(a)};
}

struct HenselPair {
  PolyM g, h, s, t;  // f = g*h, s*g + t*h = 1 (mod m); h monic
};

// One quadratic Hensel step, modulus m -> m^2.
HenselPair hensel_step(const PolyM& f, const HenselPair& in, const Int& m) {
  Int m2 = m * m;
  PolyM e = sub_m(reduce_m(f, m2), mul_m(in.g, in.h, m2), m2);
  auto [q, r] = divmod_m(mul_m(in.s, e, m2), in.h, m2);
  PolyM g1 = add_m(in.g, add_m(mul_m(in.t, e, m2), mul_m(q, in.g, m2), m2), m2);
  PolyM h1 = add_m(in.h, r, m2);
  PolyM one{Int(1)};
  PolyM b = sub_m(add_m(mul_m(in.s, g1, m2), mul_m(in.t, h1, m2), m2), one, m2);
  auto [c, d] = divmod_m(mul_m(in.s, b, m2), h1, m2);
  PolyM s1 = sub_m(in.s, d, m2);
  PolyM t1 = sub_m(in.t, add_m(mul_m(in.t, b, m2), mul_m(c, g1, m2), m2), m2);
  return {std::move(g1), std::move(h1), std::move(s1), std::move(t1)};
}

PolyM from_poly_p(const PolyP& f) {
  PolyM out(f.size());
  for (size_t i = 0; i < f.size(); ++i) out[i] = Int(static_cast<long>(f[i]));
  return out;
}

// Lift the factorization f = prod(parts) from mod p to mod p^(2^doublings),
// recursively splitting the factor list in half. f is monic mod the target.
std::vector<PolyM> lift_split(const PolyM& f, const std::vector<PolyP>& parts,
                              uint64_t p, int doublings) {
  if (parts.size() == 1) return {f};
  size_t half = parts.size() / 2;
  PolyP g0{1}, h0{1};
  for (size_t i = 0; i < half; ++i) g0 = mul_poly_p(g0, parts[i], p);
  for (size_t i = half; i < parts.size(); ++i) h0 = mul_poly_p(h0, parts[i], p);
  auto [s0, t0] = ext_gcd_p(g0, h0, p);
  HenselPair hp{from_poly_p(g0), from_poly_p(h0), from_poly_p(s0),
                from_poly_p(t0)};
  Int m(static_cast<long>(p));
  for (int j = 0; j < doublings; ++j) {
    hp = hensel_step(f, hp, m);
    m = m * m;
  }
  std::vector<PolyP> left(parts.begin(), parts.begin() + half);
  std::vector<PolyP> right(parts.begin() + half, parts.end());
  std::vector<PolyM> out = lift_split(hp.g, left, p, doublings);
  std::vector<PolyM> out2 = lift_split(hp.h, right, p, doublings);
  out.insert(out.end(), out2.begin(), out2.end());
  return out;
}

Int sym_rep(const Int& c, const Int& m) {
  return 2 * c > m ? Int(c - m) : c;
}

UniPoly poly_from_sym(const PolyM& f, const Int& m, Var v) {
  std::vector<Rat> c(f.size());
  for (size_t i = 0; i < f.size(); ++i) c[i] = Rat(sym_rep(f[i], m));
  return UniPoly(std::move(c), v);
}

uint64_t next_prime_after(uint64_t p) {
  Int z(static_cast<long>(p));
  mpz_nextprime(z.get_mpz_t(), z.get_mpz_t());
  return z.get_ui();
}

Int l2_norm_ceil(const UniPoly& u) {
  Rat s(0);
  for (size_t i = 0; i < u.size(); ++i) s += u[i] * u[i];
  Int r;
  mpz_sqrt(r.get_mpz_t(), s.get_num().get_mpz_t());
  return r + 1;
}

bool cmp_unipoly(const UniPoly& a, const UniPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (size_t i = a.size(); i-- > 0;) {
    int c = cmp(a[i], b[i]);
    if (c != 0) return c < 0;
  }
  return false;
}

}  // namespace

std::vector<UniPoly> factor_squarefree(const UniPoly& input) {
  UniPoly u = input.primitive();
  if (u.degree() <= 0) return {};
  if (u.degree() == 1) return {u};
  if (UniPoly::gcd(u, u.derivative()).degree() > 0)
    throw InputError("factor_squarefree: input has a repeated factor");
  const Int lc = u.leading().get_num();

  // Deterministic prime choice: among the first three odd primes of good
  // reduction, keep the one with the fewest modular factors.
  uint64_t best_p = 0;
  std::vector<PolyP> best_factors;
  uint64_t p = 2;
  int found = 0;
  while (found < 3) {
    p = next_prime_after(p);
    if (mpz_divisible_ui_p(lc.get_mpz_t(), p)) continue;
    PolyP fp = monic_p(to_mod_p(u, p), p);
    PolyP d = gcd_poly_p(fp, deriv_poly_p(fp, p), p);
    if (deg_p(d) != 0) continue;  // not squarefree mod p
    std::vector<PolyP> fs = berlekamp(fp, p);
    ++found;
    if (best_p == 0 || fs.size() < best_factors.size()) {
      best_p = p;
      best_factors = std::move(fs);
    }
    if (best_factors.size() == 1) break;
  }
  p = best_p;
  if (best_factors.size() == 1) return {u};
  std::sort(best_factors.begin(), best_factors.end());

  // Landau-Mignotte style bound on the coefficients of lc * (any monic
  // factor lifted): 2^n * |lc| * ||u||_2, doubled for the symmetric range.
  Int bound = l2_norm_ceil(u) * abs_int(lc);
  mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(),
               static_cast<unsigned long>(u.degree()) + 1);
  int doublings = 0;
  Int modulus(static_cast<long>(p));
  while (modulus <= bound) {
    modulus = modulus * modulus;
    ++doublings;
  }

  // Monic image of u mod p^(2^doublings).
  Int lc_inv;
  if (!mpz_invert(lc_inv.get_mpz_t(), lc.get_mpz_t(), modulus.get_mpz_t()))
    throw CertificationBug("leading coefficient not invertible mod p^k");
  PolyM U(u.size());
  for (size_t i = 0; i < u.size(); ++i) {
    U[i] = u[i].get_num() * lc_inv;
    mpz_mod(U[i].get_mpz_t(), U[i].get_mpz_t(), modulus.get_mpz_t());
  }
  std::vector<PolyM> lifted = lift_split(U, best_factors, p, doublings);

  // Zassenhaus recombination with deterministic subset order.
  std::vector<UniPoly> out;
  UniPoly rest = u;
  std::vector<size_t> avail(lifted.size());
  for (size_t i = 0; i < avail.size(); ++i) avail[i] = i;

  auto try_subset = [&](const std::vector<size_t>& subset) -> bool {
    PolyM prod{Int(rest.leading().get_num())};
    for (size_t idx : subset) prod = mul_m(prod, lifted[avail[idx]], modulus);
    UniPoly g = poly_from_sym(prod, modulus, u.var()).primitive();
    if (g.degree() < 1) return false;
    if (!g.divides(rest)) return false;
    out.push_back(g);
    rest = rest.exact_div(g).primitive();
    std::vector<size_t> keep;
    for (size_t i = 0, k = 0; i < avail.size(); ++i) {
      if (k < subset.size() && subset[k] == i) {
        ++k;
        continue;
      }
      keep.push_back(avail[i]);
    }
    avail = std::move(keep);
    return true;
  };

  size_t s = 1;
  while (2 * s <= avail.size()) {
    // Iterate s-subsets of the available indices in lexicographic order.
    std::vector<size_t> idx(s);
    for (size_t i = 0; i < s; ++i) idx[i] = i;
    bool advanced_factor = false;
    while (true) {
      if (try_subset(idx)) {
        advanced_factor = true;
        break;
      }
      // next combination
      long i = static_cast<long>(s) - 1;
      while (i >= 0 && idx[static_cast<size_t>(i)] ==
                           avail.size() - s + static_cast<size_t>(i))
        --i;
      if (i < 0) break;
      ++idx[static_cast<size_t>(i)];
      for (size_t j = static_cast<size_t>(i) + 1; j < s; ++j)
        idx[j] = idx[j - 1] + 1;
    }
    if (!advanced_factor) ++s;
  }
  if (rest.degree() > 0) out.push_back(rest);
  std::sort(out.begin(), out.end(), cmp_unipoly);
  return out;
}

std::vector<std::pair<UniPoly, int>> factor(const UniPoly& input) {
  if (input.is_zero()) throw InputError("factor: zero polynomial");
  UniPoly u = input.primitive();
  std::vector<std::pair<UniPoly, int>> out;
  if (u.degree() <= 0) return out;
  std::vector<UniPoly> irr = factor_squarefree(u.squarefree_part());
  for (const UniPoly& q : irr) {
    int e = 0;
    while (q.divides(u)) {
      u = u.exact_div(q).primitive();
      ++e;
    }
    out.emplace_back(q, e);
  }
  if (u.degree() > 0)
    throw CertificationBug("factorization left a nontrivial cofactor");
  return out;
}

bool is_irreducible(const UniPoly& u) {
  UniPoly p = u.primitive();
  if (p.degree() <= 0) return false;
  if (p.degree() == 1) return true;
  if (p.squarefree_part().degree() != p.degree()) return false;
  return factor_squarefree(p).size() == 1;
}

}  // namespace slopecert
