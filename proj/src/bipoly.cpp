#include "bilim/bipoly.hpp"

#include <algorithm>
#include <cstdint>
#include <random>
#include <sstream>
#include <stdexcept>

namespace bilim {

namespace {

Rational binom(int n, int k) {
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rational(b);
}

// Graded-lex with x > y: higher total degree first, then higher x exponent.
bool gradedlex_less(const BiPoly::Key& a, const BiPoly::Key& b) {
  int da = a.first + a.second, db = b.first + b.second;
  if (da != db) return da < db;
  return a.first < b.first;
}

BiPoly::Key leading_key(const BiPoly& f) {
  const auto& ts = f.terms();
  auto it = ts.begin();
  BiPoly::Key best = it->first;
  for (++it; it != ts.end(); ++it)
    if (gradedlex_less(best, it->first)) best = it->first;
  return best;
}

// Scale a nonzero polynomial to integer coefficients with gcd 1 and positive
// graded-lex leading coefficient.
BiPoly normalize2(const BiPoly& f) {
  mpz_class den_lcm(1), num_gcd(0);
  for (const auto& [k, c] : f.terms()) {
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.den().get_mpz_t());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.num().get_mpz_t());
  }
  Rational scale = Rational(den_lcm) / Rational(num_gcd);
  if (f.coeff(leading_key(f).first, leading_key(f).second).sign() < 0) scale = -scale;
  return scale * f;
}

}  // namespace

BiPoly BiPoly::constant(Rational c) {
  BiPoly p;
  p.set_coeff(0, 0, std::move(c));
  return p;
}

BiPoly BiPoly::monomial2(Rational c, int i, int j) {
  if (i < 0 || j < 0) throw std::invalid_argument("BiPoly: negative exponent");
  BiPoly p;
  p.set_coeff(i, j, std::move(c));
  return p;
}

BiPoly BiPoly::from_upoly_x(const UniPoly& p) {
  BiPoly r;
  for (int i = 0; i <= p.degree(); ++i) r.set_coeff(i, 0, p.coeff(i));
  return r;
}

BiPoly BiPoly::from_upoly_y(const UniPoly& p) {
  BiPoly r;
  for (int j = 0; j <= p.degree(); ++j) r.set_coeff(0, j, p.coeff(j));
  return r;
}

BiPoly BiPoly::from_y_coeffs(const std::vector<UniPoly>& c) {
  BiPoly r;
  for (size_t j = 0; j < c.size(); ++j)
    for (int i = 0; i <= c[j].degree(); ++i)
      r.set_coeff(i, static_cast<int>(j), c[j].coeff(i));
  return r;
}

bool BiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Key{0, 0});
}

Rational BiPoly::coeff(int i, int j) const {
  auto it = terms_.find({i, j});
  return it == terms_.end() ? Rational(0) : it->second;
}

void BiPoly::set_coeff(int i, int j, Rational c) {
  if (c.is_zero())
    terms_.erase({i, j});
  else
    terms_[{i, j}] = std::move(c);
}

int BiPoly::total_degree() const {
  if (terms_.empty()) return kDegNegInf;
  int d = 0;
  for (const auto& [k, c] : terms_) d = std::max(d, k.first + k.second);
  return d;
}

int BiPoly::deg_x() const {
  if (terms_.empty()) return kDegNegInf;
  int d = 0;
  for (const auto& [k, c] : terms_) d = std::max(d, k.first);
  return d;
}

int BiPoly::deg_y() const {
  if (terms_.empty()) return kDegNegInf;
  int d = 0;
  for (const auto& [k, c] : terms_) d = std::max(d, k.second);
  return d;
}

int BiPoly::ord() const {
  if (terms_.empty()) return kOrdInf;
  int m = kOrdInf;
  for (const auto& [k, c] : terms_) m = std::min(m, k.first + k.second);
  return m;
}

UniPoly BiPoly::coeff_y(int j) const {
  std::vector<Rational> c;
  for (const auto& [k, v] : terms_) {
    if (k.second != j) continue;
    if (static_cast<size_t>(k.first) >= c.size()) c.resize(static_cast<size_t>(k.first) + 1);
    c[static_cast<size_t>(k.first)] = v;
  }
  return UniPoly(std::move(c));
}

std::vector<UniPoly> BiPoly::y_coeffs() const {
  int dy = deg_y();
  std::vector<UniPoly> out;
  if (dy == kDegNegInf) return out;
  out.resize(static_cast<size_t>(dy) + 1);
  for (int j = 0; j <= dy; ++j) out[static_cast<size_t>(j)] = coeff_y(j);
  return out;
}

Rational BiPoly::eval(const Rational& xv, const Rational& yv) const {
  // Horner in y over exact powers of x.
  Rational acc(0);
  int dy = deg_y();
  if (dy == kDegNegInf) return acc;
  for (int j = dy; j >= 0; --j) acc = acc * yv + coeff_y(j).eval(xv);
  return acc;
}

UniPoly BiPoly::eval_x(const Rational& xv) const {
  int dy = deg_y();
  std::vector<Rational> c;
  if (dy == kDegNegInf) return UniPoly(std::move(c));
  c.assign(static_cast<size_t>(dy) + 1, Rational(0));
  for (const auto& [k, v] : terms_) c[static_cast<size_t>(k.second)] += v * xv.pow(static_cast<unsigned long>(k.first));
  return UniPoly(std::move(c));
}

UniPoly BiPoly::eval_y(const Rational& yv) const {
  int dx = deg_x();
  std::vector<Rational> c;
  if (dx == kDegNegInf) return UniPoly(std::move(c));
  c.assign(static_cast<size_t>(dx) + 1, Rational(0));
  for (const auto& [k, v] : terms_) c[static_cast<size_t>(k.first)] += v * yv.pow(static_cast<unsigned long>(k.second));
  return UniPoly(std::move(c));
}

BiPoly BiPoly::derivative_x() const {
  BiPoly r;
  for (const auto& [k, v] : terms_)
    if (k.first > 0) r.set_coeff(k.first - 1, k.second, Rational(k.first) * v);
  return r;
}

BiPoly BiPoly::derivative_y() const {
  BiPoly r;
  for (const auto& [k, v] : terms_)
    if (k.second > 0) r.set_coeff(k.first, k.second - 1, Rational(k.second) * v);
  return r;
}

BiPoly BiPoly::operator-() const {
  BiPoly r;
  for (const auto& [k, v] : terms_) r.terms_[k] = -v;
  return r;
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
  for (const auto& [k, v] : o.terms_) {
    auto it = terms_.find(k);
    if (it == terms_.end()) {
      terms_[k] = v;
    } else {
      it->second += v;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) { return *this += -o; }

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  BiPoly r;
  for (const auto& [ka, va] : a.terms_)
    for (const auto& [kb, vb] : b.terms_) {
      BiPoly::Key k{ka.first + kb.first, ka.second + kb.second};
      auto it = r.terms_.find(k);
      if (it == r.terms_.end()) {
        Rational p = va * vb;
        if (!p.is_zero()) r.terms_[k] = std::move(p);
      } else {
        it->second += va * vb;
        if (it->second.is_zero()) r.terms_.erase(it);
      }
    }
  return r;
}

BiPoly operator*(const Rational& c, BiPoly p) {
  if (c.is_zero()) return BiPoly::zero();
  for (auto& [k, v] : p.terms_) v *= c;
  return p;
}

BiPoly BiPoly::pow(unsigned e) const {
  BiPoly r = BiPoly::constant(Rational(1));
  BiPoly base = *this;
  while (e > 0) {
    if (e & 1u) r = r * base;
    base = base * base;
    e >>= 1u;
  }
  return r;
}

std::string BiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<Key, Rational>> ts(terms_.begin(), terms_.end());
  std::sort(ts.begin(), ts.end(),
            [](const auto& a, const auto& b) { return gradedlex_less(b.first, a.first); });
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : ts) {
    Rational a = c.abs();
    if (first) {
      if (c.sign() < 0) os << "-";
      first = false;
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    std::vector<std::string> parts;
    if (!a.is_one() || (k.first == 0 && k.second == 0)) parts.push_back(a.to_string());
    if (k.first == 1) parts.push_back("x");
    if (k.first > 1) parts.push_back("x^" + std::to_string(k.first));
    if (k.second == 1) parts.push_back("y");
    if (k.second > 1) parts.push_back("y^" + std::to_string(k.second));
    for (size_t i = 0; i < parts.size(); ++i) {
      if (i) os << "*";
      os << parts[i];
    }
  }
  return os.str();
}

int ord2(const BiPoly& f) { return f.ord(); }

BiPoly homog_component(const BiPoly& f, int k) {
  BiPoly r;
  for (const auto& [key, v] : f.terms())
    if (key.first + key.second == k) r.set_coeff(key.first, key.second, v);
  return r;
}

bool is_y_regular(const BiPoly& f) {
  if (f.is_zero()) throw std::invalid_argument("is_y_regular: zero polynomial");
  return !f.coeff(0, f.ord()).is_zero();
}

BiPoly shear_x(const BiPoly& f, const Rational& c) {
  if (c.is_zero()) return f;
  BiPoly r;
  for (const auto& [k, v] : f.terms()) {
    // (x + c y)^i y^j
    for (int t = 0; t <= k.first; ++t) {
      Rational coefv = v * binom(k.first, t) * c.pow(static_cast<unsigned long>(k.first - t));
      BiPoly add = BiPoly::monomial2(std::move(coefv), t, k.first - t + k.second);
      r += add;
    }
  }
  return r;
}

BiPoly shear_y(const BiPoly& f) {
  BiPoly r;
  for (const auto& [k, v] : f.terms()) {
    // x^i (x + y)^j
    for (int t = 0; t <= k.second; ++t)
      r += BiPoly::monomial2(v * binom(k.second, t), k.first + k.second - t, t);
  }
  return r;
}

BiPoly translate(const BiPoly& f, const Rational& a, const Rational& b) {
  if (a.is_zero() && b.is_zero()) return f;
  BiPoly r;
  for (const auto& [k, v] : f.terms()) {
    // (x + a)^i (y + b)^j
    for (int s = 0; s <= k.first; ++s) {
      Rational xa = binom(k.first, s) * a.pow(static_cast<unsigned long>(k.first - s));
      if (xa.is_zero()) continue;
      for (int t = 0; t <= k.second; ++t) {
        Rational yb = binom(k.second, t) * b.pow(static_cast<unsigned long>(k.second - t));
        if (yb.is_zero()) continue;
        r += BiPoly::monomial2(v * xa * yb, s, t);
      }
    }
  }
  return r;
}

BiPoly flip_x(const BiPoly& f) {
  BiPoly r;
  for (const auto& [k, v] : f.terms())
    r.set_coeff(k.first, k.second, k.first % 2 == 0 ? v : -v);
  return r;
}

BiPoly jacobian_det(const BiPoly& f, const BiPoly& g) {
  return f.derivative_x() * g.derivative_y() - f.derivative_y() * g.derivative_x();
}

BiPoly tangency_poly(const BiPoly& f, const BiPoly& g) {
  BiPoly bx = g * f.derivative_x() - f * g.derivative_x();
  BiPoly by = g * f.derivative_y() - f * g.derivative_y();
  return BiPoly::y() * bx - BiPoly::x() * by;
}

UniPoly content_in_x(const BiPoly& f) {
  UniPoly g = UniPoly::zero();
  for (const auto& c : f.y_coeffs()) {
    g = upoly_gcd(g, c);
    if (g == UniPoly::one()) break;
  }
  return g;
}

// ---------------------------------------------------------------------------
// Dense view in y with coefficients in Q[x]; backbone of gcd and division.

namespace {

struct YPoly {
  std::vector<UniPoly> c;  // c[j] = coefficient of y^j

  void trim() {
    while (!c.empty() && c.back().is_zero()) c.pop_back();
  }
  bool is_zero() const { return c.empty(); }
  int deg() const { return c.empty() ? kDegNegInf : static_cast<int>(c.size()) - 1; }
  const UniPoly& lc() const { return c.back(); }
};

YPoly to_ypoly(const BiPoly& f) {
  YPoly r;
  r.c = f.y_coeffs();
  r.trim();
  return r;
}

BiPoly from_ypoly(const YPoly& p) { return BiPoly::from_y_coeffs(p.c); }

YPoly yone() {
  YPoly r;
  r.c = {UniPoly::one()};
  return r;
}

// a * s for s in Q[x]
YPoly ymul_scalar(const YPoly& a, const UniPoly& s) {
  YPoly r;
  if (s.is_zero()) return r;
  r.c.reserve(a.c.size());
  for (const auto& ci : a.c) r.c.push_back(ci * s);
  r.trim();
  return r;
}

// a * s * y^k
YPoly yshift_mul(const YPoly& a, const UniPoly& s, int k) {
  YPoly r;
  if (s.is_zero() || a.is_zero()) return r;
  r.c.assign(a.c.size() + static_cast<size_t>(k), UniPoly::zero());
  for (size_t j = 0; j < a.c.size(); ++j) r.c[j + static_cast<size_t>(k)] = a.c[j] * s;
  r.trim();
  return r;
}

YPoly ysub(const YPoly& a, const YPoly& b) {
  YPoly r = a;
  if (r.c.size() < b.c.size()) r.c.resize(b.c.size());
  for (size_t j = 0; j < b.c.size(); ++j) r.c[j] -= b.c[j];
  r.trim();
  return r;
}

void ydiv_scalar_exact(YPoly& a, const UniPoly& s) {
  for (auto& ci : a.c)
    if (!ci.is_zero()) ci = UniPoly::div_exact(ci, s);
}

UniPoly ycontent(const YPoly& a) {
  UniPoly g = UniPoly::zero();
  for (const auto& ci : a.c) {
    g = upoly_gcd(g, ci);
    if (g == UniPoly::one()) break;
  }
  return g;
}

YPoly yprimitive(const YPoly& a) {
  if (a.is_zero()) return a;
  UniPoly ct = ycontent(a);
  YPoly r = a;
  if (!(ct == UniPoly::one())) ydiv_scalar_exact(r, ct);
  return r;
}

// lc(b)^(deg a - deg b + 1) * a mod b; requires deg a >= deg b >= 0.
YPoly yprem(const YPoly& a, const YPoly& b) {
  int db = b.deg();
  int need = a.deg() - db + 1;
  YPoly r = a;
  int performed = 0;
  while (!r.is_zero() && r.deg() >= db) {
    int k = r.deg() - db;
    UniPoly cr = r.lc();
    r = ysub(ymul_scalar(r, b.lc()), yshift_mul(b, cr, k));
    ++performed;
  }
  for (; performed < need; ++performed) r = ymul_scalar(r, b.lc());
  return r;
}

// Subresultant pseudo-remainder sequence; a, b primitive, deg a >= deg b >= 1.
// Returns the primitive gcd.
YPoly subres_gcd(YPoly a, YPoly b) {
  UniPoly psi(Rational(-1));
  int delta_prev = 0;
  bool first = true;
  for (;;) {
    int delta = a.deg() - b.deg();
    UniPoly beta;
    if (first) {
      beta = UniPoly(Rational(delta % 2 == 0 ? -1 : 1));
    } else {
      if (delta_prev == 1)
        psi = -a.lc();
      else if (delta_prev >= 2)
        psi = UniPoly::div_exact((-a.lc()).pow(static_cast<unsigned>(delta_prev)),
                                 psi.pow(static_cast<unsigned>(delta_prev - 1)));
      beta = -(a.lc() * psi.pow(static_cast<unsigned>(delta)));
    }
    YPoly r = yprem(a, b);
    if (r.is_zero()) return yprimitive(b);
    ydiv_scalar_exact(r, beta);
    if (r.deg() == 0) return yone();  // primitive inputs sharing only Q[x] content
    delta_prev = delta;
    a = std::move(b);
    b = std::move(r);
    first = false;
  }
}

// ---------------------------------------------------------------------------
// One-sided coprimality certificate: gcd of random specializations modulo a
// word-size prime. A constant specialized gcd proves the primitive parts are
// coprime; anything else falls through to the exact sequence.

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<u128>(a) * b % p); }

u64 powmod(u64 a, u64 e, u64 p) {
  u64 r = 1;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

u64 invmod(u64 a, u64 p) { return powmod(a, p - 2, p); }

bool rat_mod(const Rational& r, u64 p, u64& out) {
  u64 den = mpz_fdiv_ui(r.den().get_mpz_t(), p);
  if (den == 0) return false;
  u64 num = mpz_fdiv_ui(r.num().get_mpz_t(), p);
  out = mulmod(num, invmod(den, p), p);
  return true;
}

// y-coefficients of a YPoly specialized at x = t, mod p. False when a
// denominator vanishes mod p.
bool ypoly_mod_at(const YPoly& a, u64 p, u64 t, std::vector<u64>& out) {
  out.assign(a.c.size(), 0);
  for (size_t j = 0; j < a.c.size(); ++j) {
    const UniPoly& cj = a.c[j];
    u64 acc = 0;
    for (int i = cj.degree(); i >= 0; --i) {
      u64 ci;
      if (!rat_mod(cj.coeff(i), p, ci)) return false;
      acc = (mulmod(acc, t, p) + ci) % p;
    }
    out[j] = acc;
  }
  while (!out.empty() && out.back() == 0) out.pop_back();
  return true;
}

int gcd_deg_modp(std::vector<u64> a, std::vector<u64> b, u64 p) {
  auto trim = [](std::vector<u64>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
  };
  trim(a);
  trim(b);
  while (!b.empty()) {
    // a mod b
    u64 inv = invmod(b.back(), p);
    while (a.size() >= b.size() && !a.empty()) {
      u64 q = mulmod(a.back(), inv, p);
      size_t off = a.size() - b.size();
      for (size_t j = 0; j < b.size(); ++j) {
        u64 sub = mulmod(q, b[j], p);
        a[off + j] = (a[off + j] + p - sub) % p;
      }
      trim(a);
    }
    std::swap(a, b);
  }
  return a.empty() ? -1 : static_cast<int>(a.size()) - 1;
}

bool modp_coprime(const YPoly& a, const YPoly& b) {
  static const u64 kPrimes[] = {2305843009213693951ULL, 9223372036854775783ULL};
  std::mt19937_64 rng(0x6d61746869736673ULL);
  for (u64 p : kPrimes) {
    for (int trial = 0; trial < 4; ++trial) {
      u64 t = rng() % p;
      std::vector<u64> am, bm;
      if (!ypoly_mod_at(a, p, t, am) || !ypoly_mod_at(b, p, t, bm)) break;  // bad prime
      // Degree must survive specialization for the gcd bound to apply.
      if (static_cast<int>(am.size()) - 1 != a.deg() || static_cast<int>(bm.size()) - 1 != b.deg())
        continue;
      int d = gcd_deg_modp(am, bm, p);
      return d == 0;
    }
  }
  return false;
}

}  // namespace

BiPoly gcd2(const BiPoly& f, const BiPoly& g) {
  if (f.is_zero() && g.is_zero()) return BiPoly::zero();
  if (f.is_zero()) return normalize2(g);
  if (g.is_zero()) return normalize2(f);
  UniPoly cf = content_in_x(f);
  UniPoly cg = content_in_x(g);
  UniPoly cc = upoly_gcd(cf, cg);
  YPoly pf = to_ypoly(f);
  YPoly pg = to_ypoly(g);
  ydiv_scalar_exact(pf, cf);
  ydiv_scalar_exact(pg, cg);
  YPoly gpp;
  if (pf.deg() == 0 || pg.deg() == 0) {
    gpp = yone();  // a primitive polynomial of y-degree 0 is a constant
  } else if (modp_coprime(pf, pg)) {
    gpp = yone();
  } else {
    if (pf.deg() < pg.deg()) std::swap(pf, pg);
    gpp = subres_gcd(std::move(pf), std::move(pg));
  }
  return normalize2(from_ypoly(gpp) * BiPoly::from_upoly_x(cc));
}

BiPoly div2_exact(const BiPoly& f, const BiPoly& d) {
  if (d.is_zero()) throw std::domain_error("div2_exact: division by zero");
  if (f.is_zero()) return BiPoly::zero();
  YPoly a = to_ypoly(f);
  YPoly b = to_ypoly(d);
  if (a.deg() < b.deg()) throw std::domain_error("div2_exact: not divisible");
  YPoly q;
  q.c.assign(static_cast<size_t>(a.deg() - b.deg()) + 1, UniPoly::zero());
  while (!a.is_zero() && a.deg() >= b.deg()) {
    int k = a.deg() - b.deg();
    UniPoly qc = UniPoly::div_exact(a.lc(), b.lc());  // throws when not divisible
    q.c[static_cast<size_t>(k)] = qc;
    a = ysub(a, yshift_mul(b, qc, k));
  }
  if (!a.is_zero()) throw std::domain_error("div2_exact: not divisible");
  q.trim();
  return from_ypoly(q);
}

BiPoly squarefree_part2(const BiPoly& f) {
  if (f.is_zero()) throw std::invalid_argument("squarefree_part2: zero polynomial");
  if (f.is_constant()) return BiPoly::constant(Rational(1));
  UniPoly cf = content_in_x(f);
  YPoly pp = to_ypoly(f);
  ydiv_scalar_exact(pp, cf);
  UniPoly sf_cont = squarefree_part(cf);
  BiPoly result = BiPoly::from_upoly_x(sf_cont);
  if (pp.deg() >= 1) {
    BiPoly p = from_ypoly(pp);
    BiPoly d = gcd2(p, p.derivative_y());
    result = result * div2_exact(p, d);
  }
  return normalize2(result);
}

BiPoly squarefree_regularize(const BiPoly& f, int N, const Rational& c) {
  if (f.is_zero())
    throw std::invalid_argument("squarefree_regularize: zero polynomial");
  if (!is_y_regular(f))
    throw std::invalid_argument("squarefree_regularize: input is not y-regular");
  int m = f.ord();
  if (m <= 0)
    throw std::invalid_argument("squarefree_regularize: order must be positive");
  if (N <= 0 || static_cast<long long>(m) * N <= f.total_degree())
    throw std::invalid_argument("squarefree_regularize: level too small, need m*N > deg f");
  if (c.is_zero())
    throw std::invalid_argument("squarefree_regularize: shift constant must be nonzero");
  BiPoly r = f;
  int mn = m * N;
  r += BiPoly::monomial2(c, mn, 0);
  r += BiPoly::monomial2(c, 0, mn);
  return r;
}

Rational truncation_bound(int d) {
  if (d < 1) throw std::invalid_argument("truncation_bound: degree must be at least 1");
  Rational dm1(d - 1);
  return (dm1 * dm1 + Rational(1)) / Rational(2);
}

UniPoly resultant_y(const BiPoly& f, const BiPoly& g) {
  if (f.is_zero() || g.is_zero()) return UniPoly::zero();
  int dyf = f.deg_y(), dyg = g.deg_y();
  if (dyf == 0 && dyg == 0) return UniPoly::one();
  if (dyf == 0) return f.coeff_y(0).pow(static_cast<unsigned>(dyg));
  if (dyg == 0) return g.coeff_y(0).pow(static_cast<unsigned>(dyf));
  int bound = f.deg_x() * dyg + g.deg_x() * dyf;
  UniPoly lf = f.coeff_y(dyf), lg = g.coeff_y(dyg);
  // Evaluate at points where both leading y-coefficients survive, then
  // rebuild by Newton interpolation.
  std::vector<Rational> pts, vals;
  long long t = 0;
  while (static_cast<int>(pts.size()) < bound + 1) {
    Rational tv(t);
    t = (t > 0) ? -t : -t + 1;  // 0, 1, -1, 2, -2, ...
    if (lf.eval(tv).is_zero() || lg.eval(tv).is_zero()) continue;
    pts.push_back(tv);
    vals.push_back(resultant(f.eval_x(tv), g.eval_x(tv)));
  }
  // Newton divided differences.
  std::vector<Rational> dd = vals;
  for (size_t lvl = 1; lvl < dd.size(); ++lvl)
    for (size_t i = dd.size() - 1; i >= lvl; --i)
      dd[i] = (dd[i] - dd[i - 1]) / (pts[i] - pts[i - lvl]);
  UniPoly acc = UniPoly::zero();
  UniPoly basis = UniPoly::one();
  for (size_t i = 0; i < dd.size(); ++i) {
    acc += UniPoly(std::vector<Rational>{dd[i]}) * basis;
    basis = basis * UniPoly(std::vector<Rational>{-pts[i], Rational(1)});
  }
  return acc;
}

}  // namespace bilim
