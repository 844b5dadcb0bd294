#include "bilim/factor.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace bilim {
namespace {

// Dense integer polynomials with coefficients reduced into [0, M) for a
// positive modulus M. Trailing zeros are trimmed; zero is the empty vector.
using ZPoly = std::vector<mpz_class>;

void trim(ZPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int zdeg(const ZPoly& a) { return static_cast<int>(a.size()) - 1; }

mpz_class mod_pos(const mpz_class& v, const mpz_class& m) {
  mpz_class r;
  mpz_mod(r.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
  return r;
}

ZPoly zmod(const ZPoly& a, const mpz_class& m) {
  ZPoly r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = mod_pos(a[i], m);
  trim(r);
  return r;
}

ZPoly zadd(const ZPoly& a, const ZPoly& b, const mpz_class& m) {
  ZPoly r(std::max(a.size(), b.size()), mpz_class(0));
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] = mod_pos(r[i] + b[i], m);
  for (size_t i = b.size(); i < r.size(); ++i) r[i] = mod_pos(r[i], m);
  trim(r);
  return r;
}

ZPoly zsub(const ZPoly& a, const ZPoly& b, const mpz_class& m) {
  ZPoly r(std::max(a.size(), b.size()), mpz_class(0));
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] = mod_pos(r[i] - b[i], m);
  for (size_t i = b.size(); i < r.size(); ++i) r[i] = mod_pos(r[i], m);
  trim(r);
  return r;
}

ZPoly zmul(const ZPoly& a, const ZPoly& b, const mpz_class& m) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1, mpz_class(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return zmod(r, m);
}

ZPoly zscale(const ZPoly& a, const mpz_class& c, const mpz_class& m) {
  ZPoly r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = mod_pos(a[i] * c, m);
  trim(r);
  return r;
}

// Quotient and remainder by a divisor whose leading coefficient is a unit
// mod m; the caller supplies that inverse.
void zdivmod(const ZPoly& a, const ZPoly& b, const mpz_class& lc_inv,
             const mpz_class& m, ZPoly& q, ZPoly& r) {
  r = a;
  q.assign(a.size() > b.size() ? a.size() - b.size() + 1 : 1, mpz_class(0));
  trim(r);
  while (zdeg(r) >= zdeg(b)) {
    int k = zdeg(r) - zdeg(b);
    mpz_class c = mod_pos(r.back() * lc_inv, m);
    q[k] = c;
    for (size_t i = 0; i < b.size(); ++i)
      r[i + k] = mod_pos(r[i + k] - c * b[i], m);
    trim(r);
  }
  trim(q);
}

mpz_class zinvert(const mpz_class& a, const mpz_class& m) {
  mpz_class r;
  if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
    throw std::logic_error("zinvert: element not invertible");
  return r;
}

ZPoly zmonic(const ZPoly& a, const mpz_class& m) {
  return zscale(a, zinvert(a.back(), m), m);
}

ZPoly zgcd(ZPoly a, ZPoly b, const mpz_class& p) {
  while (!b.empty()) {
    ZPoly q, r;
    zdivmod(a, b, zinvert(b.back(), p), p, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  return a.empty() ? a : zmonic(a, p);
}

// Bezout pair for coprime monic g, h mod prime p: a*g + b*h = 1.
void zbezout(const ZPoly& g, const ZPoly& h, const mpz_class& p, ZPoly& a,
             ZPoly& b) {
  ZPoly r0 = g, r1 = h;
  ZPoly s0 = {mpz_class(1)}, s1 = {};
  ZPoly t0 = {}, t1 = {mpz_class(1)};
  while (!r1.empty()) {
    ZPoly q, r;
    zdivmod(r0, r1, zinvert(r1.back(), p), p, q, r);
    ZPoly s2 = zsub(s0, zmul(q, s1, p), p);
    ZPoly t2 = zsub(t0, zmul(q, t1, p), p);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (zdeg(r0) != 0) throw std::logic_error("zbezout: inputs not coprime");
  mpz_class inv = zinvert(r0[0], p);
  a = zscale(s0, inv, p);
  b = zscale(t0, inv, p);
}

ZPoly zderiv(const ZPoly& a, const mpz_class& m) {
  if (a.size() <= 1) return {};
  ZPoly r(a.size() - 1);
  for (size_t i = 1; i < a.size(); ++i) r[i - 1] = mod_pos(a[i] * i, m);
  trim(r);
  return r;
}

ZPoly zpowmod(ZPoly base, mpz_class e, const ZPoly& f, const mpz_class& p) {
  ZPoly q, r;
  ZPoly acc = {mpz_class(1)};
  mpz_class lc_inv = zinvert(f.back(), p);
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) {
      ZPoly t = zmul(acc, base, p);
      zdivmod(t, f, lc_inv, p, q, acc);
    }
    ZPoly t = zmul(base, base, p);
    zdivmod(t, f, lc_inv, p, q, base);
    e >>= 1;
  }
  return acc;
}

// Berlekamp factorization of a monic square-free polynomial mod a small
// prime p. Returns the monic irreducible factors.
std::vector<ZPoly> berlekamp(const ZPoly& f, const mpz_class& p) {
  int d = zdeg(f);
  if (d <= 1) return {f};
  // Frobenius rows: row i = coefficients of t^{i*p} mod f.
  std::vector<ZPoly> rows(d);
  rows[0] = {mpz_class(1)};
  ZPoly tp = zpowmod({mpz_class(0), mpz_class(1)}, p, f, p);
  ZPoly q, r;
  for (int i = 1; i < d; ++i) {
    ZPoly t = zmul(rows[i - 1], tp, p);
    zdivmod(t, f, mpz_class(1), p, q, rows[i]);
  }
  // Nullspace of (Q - I)^T over F_p, where Q has rows[i] as row i.
  std::vector<std::vector<mpz_class>> m(d, std::vector<mpz_class>(d, 0));
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j <= zdeg(rows[i]); ++j) m[j][i] = rows[i][j];
    m[i][i] = mod_pos(m[i][i] - 1, p);
  }
  std::vector<int> pivot_col(d, -1);
  int rank = 0;
  for (int col = 0; col < d && rank < d; ++col) {
    int sel = -1;
    for (int row = rank; row < d; ++row)
      if (m[row][col] != 0) {
        sel = row;
        break;
      }
    if (sel < 0) continue;
    std::swap(m[sel], m[rank]);
    mpz_class inv = zinvert(m[rank][col], p);
    for (int j = 0; j < d; ++j) m[rank][j] = mod_pos(m[rank][j] * inv, p);
    for (int row = 0; row < d; ++row) {
      if (row == rank || m[row][col] == 0) continue;
      mpz_class c = m[row][col];
      for (int j = 0; j < d; ++j)
        m[row][j] = mod_pos(m[row][j] - c * m[rank][j], p);
    }
    pivot_col[rank++] = col;
  }
  std::vector<ZPoly> basis;
  std::vector<bool> is_pivot(d, false);
  for (int i = 0; i < rank; ++i) is_pivot[pivot_col[i]] = true;
  for (int col = 0; col < d; ++col) {
    if (is_pivot[col]) continue;
    ZPoly v(d, mpz_class(0));
    v[col] = 1;
    for (int i = 0; i < rank; ++i)
      v[pivot_col[i]] = mod_pos(-m[i][col], p);
    trim(v);
    basis.push_back(std::move(v));
  }
  size_t want = basis.size();  // number of irreducible factors
  std::vector<ZPoly> factors = {f};
  for (const ZPoly& v : basis) {
    if (factors.size() == want) break;
    if (zdeg(v) < 1) continue;
    for (mpz_class s = 0; s < p && factors.size() < want; ++s) {
      ZPoly vs = zsub(v, {s}, p);
      std::vector<ZPoly> next;
      for (ZPoly& u : factors) {
        ZPoly g = zgcd(u, vs, p);
        if (zdeg(g) > 0 && zdeg(g) < zdeg(u)) {
          ZPoly rem;
          zdivmod(u, g, zinvert(g.back(), p), p, q, rem);
          next.push_back(g);
          next.push_back(zmonic(q, p));
        } else {
          next.push_back(std::move(u));
        }
      }
      factors = std::move(next);
    }
  }
  return factors;
}

// One linear Hensel step: given f = g*h mod M with g, h monic and
// a*g + b*h = 1 mod p, produce g', h' with f = g'*h' mod M*p.
void lift_step(const ZPoly& f, ZPoly& g, ZPoly& h, const ZPoly& a,
               const ZPoly& b, const mpz_class& p, const mpz_class& cur) {
  mpz_class next = cur * p;
  ZPoly prod = zmul(g, h, next);
  ZPoly diff = zsub(zmod(f, next), prod, next);
  ZPoly e(diff.size());
  for (size_t i = 0; i < diff.size(); ++i) e[i] = diff[i] / cur;
  trim(e);
  if (e.empty()) return;
  ZPoly q, dh, bq;
  ZPoly ae = zmul(a, e, p);
  zdivmod(ae, h, mpz_class(1), p, q, dh);
  ZPoly dg = zadd(zmul(b, e, p), zmul(q, g, p), p);
  g = zadd(g, zscale(dg, cur, next), next);
  h = zadd(h, zscale(dh, cur, next), next);
}

// Lift the factorization f = prod(parts) from mod p to mod p^steps via a
// balanced product tree; f and all parts monic.
std::vector<ZPoly> lift_list(const ZPoly& f, std::vector<ZPoly> parts,
                             const mpz_class& p, int steps) {
  if (parts.size() == 1) {
    mpz_class m = 1;
    for (int i = 0; i < steps; ++i) m *= p;
    return {zmod(f, m)};
  }
  size_t half = parts.size() / 2;
  ZPoly g = {mpz_class(1)}, h = {mpz_class(1)};
  for (size_t i = 0; i < half; ++i) g = zmul(g, parts[i], p);
  for (size_t i = half; i < parts.size(); ++i) h = zmul(h, parts[i], p);
  ZPoly a, b;
  zbezout(g, h, p, a, b);
  mpz_class cur = p;
  for (int i = 1; i < steps; ++i) {
    lift_step(f, g, h, a, b, p, cur);
    cur *= p;
  }
  std::vector<ZPoly> left =
      lift_list(g, {parts.begin(), parts.begin() + half}, p, steps);
  std::vector<ZPoly> right =
      lift_list(h, {parts.begin() + half, parts.end()}, p, steps);
  left.insert(left.end(), right.begin(), right.end());
  return left;
}

ZPoly symmetric(const ZPoly& a, const mpz_class& m) {
  ZPoly r = a;
  mpz_class half = m / 2;
  for (auto& c : r)
    if (c > half) c -= m;
  trim(r);
  return r;
}

// Exact division test over Z for a monic divisor; quotient returned on
// success.
bool zdivides(const ZPoly& a, const ZPoly& b, ZPoly& quo) {
  ZPoly r = a;
  quo.assign(a.size() > b.size() ? a.size() - b.size() + 1 : 1, mpz_class(0));
  trim(r);
  while (zdeg(r) >= zdeg(b)) {
    int k = zdeg(r) - zdeg(b);
    mpz_class c = r.back();
    quo[k] = c;
    for (size_t i = 0; i < b.size(); ++i) r[i + k] -= c * b[i];
    trim(r);
  }
  trim(quo);
  return r.empty();
}

UniPoly zpoly_to_upoly(const ZPoly& a) {
  std::vector<Rational> c(a.size());
  for (size_t i = 0; i < a.size(); ++i) c[i] = Rational(a[i]);
  return UniPoly(c);
}

// Integer-primitive with positive leading coefficient.
UniPoly canonical(const UniPoly& p) {
  UniPoly q = p.primitive_integer();
  if (q.lc().sign() < 0) q = -q;
  return q;
}

bool upoly_less(const UniPoly& a, const UniPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = a.degree(); i >= 0; --i) {
    if (a.coeff(i) != b.coeff(i)) return a.coeff(i) < b.coeff(i);
  }
  return false;
}

}  // namespace

std::vector<UniPoly> irreducible_factors(const UniPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("irreducible_factors: zero polynomial");
  if (p.degree() == 0) return {};
  UniPoly sf = canonical(squarefree_part(p));
  int d = sf.degree();
  if (d == 1) return {sf};

  // Monicize over Z: f(t) = L^(d-1) * sf(t/L) with L = lc(sf).
  mpz_class lead = sf.lc().num();
  ZPoly f(d + 1);
  f[d] = 1;
  mpz_class pw = 1;
  for (int i = d - 1; i >= 0; --i) {
    f[i] = sf.coeff(i).num() * pw;
    pw *= lead;
  }

  // Prime with square-free reduction.
  mpz_class prime = 0;
  for (int cand : {3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53,
                   59, 61, 67, 71, 73, 79, 83, 89, 97, 101, 103, 107, 109}) {
    mpz_class pc(cand);
    ZPoly fm = zmod(f, pc);
    if (zdeg(fm) != d) continue;
    ZPoly g = zgcd(zmonic(fm, pc), zderiv(fm, pc), pc);
    if (zdeg(g) == 0) {
      prime = pc;
      break;
    }
  }
  if (prime == 0) throw std::logic_error("irreducible_factors: no usable prime");

  std::vector<ZPoly> mod_factors = berlekamp(zmonic(zmod(f, prime), prime), prime);
  if (mod_factors.size() == 1) return {sf};

  // Coefficient bound for monic factors of f, then lift past twice that.
  mpz_class norm2 = 0;
  for (const auto& c : f) norm2 += c * c;
  mpz_class bound;
  mpz_sqrt(bound.get_mpz_t(), norm2.get_mpz_t());
  bound += 1;
  bound <<= (d + 1);
  int steps = 1;
  mpz_class mod = prime;
  while (mod <= bound) {
    mod *= prime;
    ++steps;
  }
  std::vector<ZPoly> lifted = lift_list(zmod(f, mod), std::move(mod_factors), prime, steps);

  // Subset recombination against the exact integer polynomial.
  std::vector<ZPoly> found;
  ZPoly remaining = f;
  std::vector<ZPoly> active = std::move(lifted);
  size_t take = 1;
  while (2 * take <= active.size()) {
    std::vector<size_t> idx(take);
    for (size_t i = 0; i < take; ++i) idx[i] = i;
    bool split = false;
    for (;;) {
      ZPoly cand = {mpz_class(1)};
      for (size_t i : idx) cand = zmul(cand, active[i], mod);
      cand = symmetric(cand, mod);
      ZPoly quo;
      if (zdivides(remaining, cand, quo)) {
        found.push_back(cand);
        remaining = std::move(quo);
        std::vector<ZPoly> rest;
        size_t k = 0;
        for (size_t i = 0; i < active.size(); ++i) {
          if (k < idx.size() && idx[k] == i) {
            ++k;
            continue;
          }
          rest.push_back(std::move(active[i]));
        }
        active = std::move(rest);
        split = true;
        break;
      }
      // Next combination in lexicographic order.
      size_t j = take;
      while (j > 0 && idx[j - 1] == active.size() - take + (j - 1)) --j;
      if (j == 0) break;
      ++idx[j - 1];
      for (size_t i = j; i < take; ++i) idx[i] = idx[i - 1] + 1;
    }
    if (!split) ++take;
  }
  if (zdeg(remaining) > 0) found.push_back(remaining);

  // Undo the monicizing substitution: h(t) -> primitive(h(L t)).
  std::vector<UniPoly> out;
  for (const ZPoly& h : found) {
    UniPoly u = zpoly_to_upoly(h);
    out.push_back(canonical(u.scale_arg(Rational(lead))));
  }
  std::sort(out.begin(), out.end(), upoly_less);
  return out;
}

}  // namespace bilim
