#include <stdexcept>

#include "algebraic_internal.hpp"
#include "bilim/factor.hpp"

namespace bilim {
namespace detail {

size_t tower_size(const Tower& t) { return t ? t->size() : 0; }

Tower tower_slice(const Tower& t, size_t n) {
  if (n == 0) return nullptr;
  if (tower_size(t) == n) return t;
  return std::make_shared<const std::vector<TowerLevel>>(t->begin(),
                                                         t->begin() + n);
}

std::vector<IntervalQ> tower_box(const Tower& t) {
  std::vector<IntervalQ> box;
  if (t)
    for (const auto& lv : *t) box.push_back(lv.isolating);
  return box;
}

MPoly tower_reduce(MPoly p, const std::vector<TowerLevel>& levels) {
  if (p.level() == 0) return p;
  int lvl = p.level();
  auto cs = p.coeffs_at(lvl);
  for (auto& c : cs) c = tower_reduce(std::move(c), levels);
  MPoly m = MPoly::from_coeffs(lvl, std::move(cs));
  if (m.level() < lvl) return m;
  const MPoly& d = levels[lvl - 1].defining;
  if (m.degree_top() >= d.degree_top()) {
    MPoly q, r;
    MPoly::divmod_monic(m, d, lvl, q, r);
    return tower_reduce(std::move(r), levels);
  }
  return m;
}

Tower refine_level(const Tower& t, size_t j) {
  const TowerLevel& lv = (*t)[j - 1];
  if (lv.isolating.is_point()) return t;
  Tower prefix = tower_slice(t, j - 1);
  auto sign_at = [&](const Rational& x) {
    return alg_sign(AlgNum(prefix, lv.defining.subst_top(MPoly(x)),
                           MPoly(Rational(1))));
  };
  Rational m = lv.isolating.mid();
  int sm = sign_at(m);
  std::vector<TowerLevel> nl(*t);
  if (sm == 0) {
    nl[j - 1].isolating = IntervalQ::point(m);
  } else {
    int slo = sign_at(lv.isolating.lo);
    if (slo == 0)
      throw std::logic_error("tower invariant: interval endpoint is a root");
    nl[j - 1].isolating = slo != sm ? IntervalQ(lv.isolating.lo, m)
                                    : IntervalQ(m, lv.isolating.hi);
  }
  return std::make_shared<const std::vector<TowerLevel>>(std::move(nl));
}

Tower refine_all(const Tower& t) {
  Tower r = t;
  for (size_t j = 1; j <= tower_size(t); ++j) r = refine_level(r, j);
  return r;
}

MergedTowers merge_towers(const Tower& ta, const Tower& tb) {
  if (!tb) return {ta, static_cast<int>(tower_size(tb)), 0};
  if (!ta) return {tb, 0, 0};
  if (ta == tb) return {ta, static_cast<int>(ta->size()), 0};
  size_t ka = ta->size(), kb = tb->size();
  size_t common = 0;
  while (common < std::min(ka, kb)) {
    const TowerLevel& la = (*ta)[common];
    const TowerLevel& lb = (*tb)[common];
    if (!(la.defining == lb.defining)) break;
    if (!la.isolating.inside(lb.isolating) &&
        !lb.isolating.inside(la.isolating))
      break;
    ++common;
  }
  // Assemble a's levels (with the narrower interval on the shared prefix),
  // then whatever b has above the prefix, shifted past a's variables.
  std::vector<TowerLevel> nl(ta->begin(), ta->end());
  bool changed = false;
  for (size_t i = 0; i < common; ++i) {
    const IntervalQ& ib = (*tb)[i].isolating;
    if (ib.inside(nl[i].isolating) && !nl[i].isolating.inside(ib)) {
      nl[i].isolating = ib;
      changed = true;
    }
  }
  int shift = static_cast<int>(ka) - static_cast<int>(common);
  if (common == kb) {
    Tower t = changed
                  ? std::make_shared<const std::vector<TowerLevel>>(std::move(nl))
                  : ta;
    return {t, static_cast<int>(common), shift};
  }
  for (size_t i = common; i < kb; ++i) {
    TowerLevel lv = (*tb)[i];
    lv.defining = lv.defining.remap_vars_above(static_cast<int>(common), shift);
    nl.push_back(std::move(lv));
  }
  return {std::make_shared<const std::vector<TowerLevel>>(std::move(nl)),
          static_cast<int>(common), shift};
}

namespace {

// Operand pair lifted onto one tower.
struct Lifted {
  Tower tower;
  MPoly na, da, nb, db;
};

Lifted lift_pair(const AlgNum& a, const AlgNum& b) {
  MergedTowers m = merge_towers(a.tower(), b.tower());
  MPoly nb = b.num().remap_vars_above(m.common, m.shift);
  MPoly db = b.den().remap_vars_above(m.common, m.shift);
  return {m.tower, a.num(), a.den(), std::move(nb), std::move(db)};
}

// Level-1 values are plain univariate polynomials.
UniPoly level1_upoly(const MPoly& p) {
  std::vector<Rational> c;
  for (const MPoly& m : p.coeffs_at(1)) c.push_back(m.constant_value());
  return UniPoly(c);
}

}  // namespace

bool mpoly_value_zero(const Tower& t, const MPoly& p) {
  if (p.is_zero()) return true;
  if (p.level() == 0) return false;
  size_t j = static_cast<size_t>(p.level());
  const TowerLevel& lv = (*t)[j - 1];
  Tower prefix = tower_slice(t, j - 1);
  if (lv.isolating.is_point()) {
    MPoly v = p.subst_top(MPoly(lv.isolating.lo));
    if (prefix) v = tower_reduce(std::move(v), *prefix);
    return mpoly_value_zero(prefix, v);
  }
  if (j == 1) {
    // Base field is Q: one univariate gcd and two rational signs.
    UniPoly g = upoly_gcd(level1_upoly(p), level1_upoly(lv.defining));
    if (g.degree() < 1) return false;
    int sa = g.eval(lv.isolating.lo).sign();
    int sb = g.eval(lv.isolating.hi).sign();
    if (sa == 0 || sb == 0)
      throw std::logic_error("tower invariant: interval endpoint is a root");
    return sa != sb;
  }
  std::vector<AlgNum> pc, dc;
  for (auto& c : p.coeffs_at(static_cast<int>(j)))
    pc.emplace_back(prefix, std::move(c), MPoly(Rational(1)));
  for (auto& c : lv.defining.coeffs_at(static_cast<int>(j)))
    dc.emplace_back(prefix, std::move(c), MPoly(Rational(1)));
  APoly g = apoly_gcd_field(APoly(std::move(pc)), APoly(std::move(dc)));
  if (g.degree() < 1) return false;
  int sa = alg_sign(g.eval(AlgNum(lv.isolating.lo)));
  int sb = alg_sign(g.eval(AlgNum(lv.isolating.hi)));
  if (sa == 0 || sb == 0)
    throw std::logic_error("tower invariant: interval endpoint is a root");
  return sa != sb;
}

std::optional<AlgNum> tower_try_inverse(const AlgNum& a) {
  const Tower& t = a.tower();
  int k = static_cast<int>(tower_size(t));
  Tower prefix = tower_slice(t, static_cast<size_t>(k) - 1);
  auto lift = [&](const MPoly& p) {
    std::vector<AlgNum> c;
    for (auto& m : p.coeffs_at(k))
      c.emplace_back(prefix, std::move(m), MPoly(Rational(1)));
    return APoly(std::move(c));
  };
  APoly d = lift((*t)[static_cast<size_t>(k) - 1].defining);
  // Half-extended Euclid keeps s*num = r (mod defining) along the chain.
  APoly r0 = d, r1 = apoly_trim_value(lift(a.num()));
  APoly s0, s1(std::vector<AlgNum>{AlgNum(Rational(1))});
  while (r1.degree() > 0) {
    APoly q, r;
    apoly_divmod_field(r0, r1, q, r);
    APoly s2 = s0 - q * s1;
    r0 = std::move(r1);
    r1 = apoly_trim_value(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r1.is_zero()) return std::nullopt;  // defining splits at the top level
  // s1*num = r1 (mod d) with r1 a unit, so 1/a = den * s1 / r1.
  APoly w = lift(a.den()) * (r1.coeff(0).inv() * s1);
  APoly q, rem;
  apoly_divmod_field(w, d, q, rem);
  std::vector<MPoly> mc;
  for (const AlgNum& c : rem.coeffs()) {
    if (!c.is_rational() && c.den().level() != 0) return std::nullopt;
    mc.push_back(c.is_rational()
                     ? MPoly(c.rational_value())
                     : c.den().constant_value().inv() * c.num());
  }
  return AlgNum(t, MPoly::from_coeffs(k, std::move(mc)), MPoly(Rational(1)));
}

}  // namespace detail

AlgNum::AlgNum(Tower t, MPoly num, MPoly den) {
  if (t) {
    num = detail::tower_reduce(std::move(num), *t);
    den = detail::tower_reduce(std::move(den), *t);
  }
  if (den.is_zero()) throw std::domain_error("AlgNum: zero denominator");
  // num = q*den as normal forms forces the value q: den(root) != 0.
  Rational q;
  if (MPoly::proportional(num, den, q)) {
    num_ = MPoly(std::move(q));
    den_ = MPoly(Rational(1));
    return;
  }
  int used = std::max(num.level(), den.level());
  if (den.level() == 0) {
    num = den.constant_value().inv() * num;
    den = MPoly(Rational(1));
  }
  if (static_cast<size_t>(used) > detail::tower_size(t))
    throw std::logic_error("AlgNum: value uses variables beyond the tower");
  tower_ = detail::tower_slice(t, static_cast<size_t>(used));
  num_ = std::move(num);
  den_ = std::move(den);
}

const Rational& AlgNum::rational_value() const {
  if (tower_) throw std::logic_error("AlgNum: not a rational");
  return num_.constant_value();
}

AlgNum AlgNum::operator-() const {
  AlgNum r = *this;
  r.num_ = -r.num_;
  return r;
}

AlgNum operator+(const AlgNum& a, const AlgNum& b) {
  if (a.is_rational() && b.is_rational())
    return AlgNum(a.rational_value() + b.rational_value());
  detail::Lifted m = detail::lift_pair(a, b);
  return AlgNum(m.tower, m.na * m.db + m.nb * m.da, m.da * m.db);
}

AlgNum operator-(const AlgNum& a, const AlgNum& b) { return a + (-b); }

AlgNum operator*(const AlgNum& a, const AlgNum& b) {
  if (a.is_rational() && b.is_rational())
    return AlgNum(a.rational_value() * b.rational_value());
  detail::Lifted m = detail::lift_pair(a, b);
  return AlgNum(m.tower, m.na * m.nb, m.da * m.db);
}

AlgNum operator/(const AlgNum& a, const AlgNum& b) {
  if (alg_is_zero(b)) throw std::domain_error("AlgNum: division by zero");
  if (a.is_rational() && b.is_rational())
    return AlgNum(a.rational_value() / b.rational_value());
  return a * b.inv();
}

AlgNum AlgNum::inv() const {
  if (alg_is_zero(*this)) throw std::domain_error("AlgNum: inverse of zero");
  if (is_rational()) return AlgNum(rational_value().inv());
  if (std::optional<AlgNum> r = detail::tower_try_inverse(*this)) return *r;
  return AlgNum(tower_, den_, num_);
}

AlgNum AlgNum::pow(unsigned e) const {
  AlgNum r(Rational(1));
  AlgNum base = *this;
  while (e > 0) {
    if (e & 1u) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

AlgNum AlgNum::abs() const { return alg_sign(*this) < 0 ? -*this : *this; }

bool alg_is_zero(const AlgNum& a) {
  if (a.is_rational()) return a.rational_value().is_zero();
  return detail::mpoly_value_zero(a.tower(), a.num());
}

int alg_sign(const AlgNum& a) {
  if (a.is_rational()) return a.rational_value().sign();
  if (a.num().is_zero()) return 0;
  Tower t = a.tower();
  auto try_sign = [&](int* out) {
    auto box = detail::tower_box(t);
    IntervalQ dn = a.den().eval_box(box);
    if (dn.sign() == 0) return false;
    IntervalQ nm = a.num().eval_box(box);
    if (nm.sign() != 0) {
      *out = nm.sign() * dn.sign();
      return true;
    }
    if (nm.is_point()) {
      *out = 0;  // exact zero numerator
      return true;
    }
    return false;
  };
  int s = 0;
  for (int step = 0; step < 64; ++step) {
    if (try_sign(&s)) return s;
    t = detail::refine_all(t);
  }
  if (detail::mpoly_value_zero(a.tower(), a.num())) return 0;
  for (int step = 0; step < 100000; ++step) {
    if (try_sign(&s)) return s;
    t = detail::refine_all(t);
  }
  throw std::logic_error("alg_sign: refinement failed to converge");
}

int alg_compare(const AlgNum& a, const AlgNum& b) { return alg_sign(a - b); }

IntervalQ alg_enclosure(const AlgNum& a, const Rational& max_width) {
  if (a.is_rational()) return IntervalQ::point(a.rational_value());
  Tower t = a.tower();
  for (int step = 0; step < 100000; ++step) {
    auto box = detail::tower_box(t);
    IntervalQ dn = a.den().eval_box(box);
    if (dn.sign() != 0) {
      IntervalQ e = a.num().eval_box(box) / dn;
      if (e.width() <= max_width) return e;
    }
    t = detail::refine_all(t);
  }
  throw std::logic_error("alg_enclosure: refinement failed to converge");
}

std::optional<Rational> alg_to_rational(const AlgNum& a) {
  if (a.is_rational()) return a.rational_value();
  RealAlgebraic r = to_real_algebraic(a);
  if (r.defining.degree() != 1) return std::nullopt;
  return -r.defining.coeff(0) / r.defining.coeff(1);
}

namespace {

// Coordinates of a reduced polynomial in the monomial basis of the tower
// algebra; strides are mixed-radix over the level degrees.
void flatten_into(const MPoly& p, const std::vector<size_t>& strides,
                  size_t base, std::vector<Rational>& out) {
  if (p.level() == 0) {
    out[base] = out[base] + p.constant_value();
    return;
  }
  int lvl = p.level();
  auto cs = p.coeffs_at(lvl);
  for (size_t e = 0; e < cs.size(); ++e)
    flatten_into(cs[e], strides, base + e * strides[lvl - 1], out);
}

UniPoly canonical_defining(const UniPoly& p) {
  UniPoly q = p.primitive_integer();
  if (q.lc().sign() < 0) q = -q;
  return q;
}

}  // namespace

RealAlgebraic to_real_algebraic(const AlgNum& a) {
  if (a.is_rational()) {
    const Rational& q = a.rational_value();
    UniPoly def = canonical_defining(UniPoly({-q, Rational(1)}));
    return {def, IntervalQ::point(q)};
  }
  const auto& tw = *a.tower();
  size_t dim = 1;
  std::vector<size_t> strides(tw.size());
  for (size_t j = 0; j < tw.size(); ++j) {
    strides[j] = dim;
    dim *= static_cast<size_t>(tw[j].defining.degree_top());
  }
  // Power rows num^i * den^(dim-i) all lie in a dim-dimensional Q-space, so
  // some prefix is linearly dependent; the dependency is a polynomial
  // vanishing at the value.
  std::vector<MPoly> numpow(dim + 1), denpow(dim + 1);
  numpow[0] = MPoly(Rational(1));
  denpow[0] = MPoly(Rational(1));
  for (size_t i = 1; i <= dim; ++i) {
    numpow[i] = detail::tower_reduce(numpow[i - 1] * a.num(), tw);
    denpow[i] = detail::tower_reduce(denpow[i - 1] * a.den(), tw);
  }
  // Incremental elimination, each row augmented with its power index
  // combination to read the dependency back off.
  std::vector<std::vector<Rational>> pivots;  // echelon rows, length dim+dim+2
  std::vector<size_t> pivot_col;
  std::vector<Rational> lambda;
  size_t width = dim;
  for (size_t i = 0; i <= dim; ++i) {
    std::vector<Rational> row(width + dim + 1, Rational(0));
    MPoly s = detail::tower_reduce(numpow[i] * denpow[dim - i], tw);
    flatten_into(s, strides, 0, row);
    row[width + i] = Rational(1);
    for (size_t r = 0; r < pivots.size(); ++r) {
      const Rational& c = row[pivot_col[r]];
      if (c.is_zero()) continue;
      Rational f = c;
      for (size_t k = 0; k < row.size(); ++k)
        row[k] = row[k] - f * pivots[r][k];
    }
    size_t lead = width;
    for (size_t k = 0; k < width; ++k)
      if (!row[k].is_zero()) {
        lead = k;
        break;
      }
    if (lead == width) {
      lambda.assign(row.begin() + width, row.end());
      break;
    }
    Rational inv = row[lead].inv();
    for (auto& v : row) v = v * inv;
    pivots.push_back(std::move(row));
    pivot_col.push_back(lead);
  }
  if (lambda.empty())
    throw std::logic_error("to_real_algebraic: no dependency found");
  UniPoly w{std::vector<Rational>(lambda.begin(), lambda.end())};
  for (const UniPoly& h : irreducible_factors(w)) {
    APoly hp = APoly::from_upoly(h);
    if (!alg_is_zero(hp.eval(a))) continue;
    for (const IntervalQ& iv : isolate_real_roots(h)) {
      bool in = iv.is_point()
                    ? alg_compare(a, AlgNum(iv.lo)) == 0
                    : alg_compare(a, AlgNum(iv.lo)) > 0 &&
                          alg_compare(a, AlgNum(iv.hi)) < 0;
      if (in) return {h, iv};
    }
  }
  throw std::logic_error("to_real_algebraic: root matching failed");
}

std::string to_decimal(const AlgNum& a, int digits) {
  if (digits < 0) throw std::invalid_argument("to_decimal: negative digits");
  AlgNum scaled = a * AlgNum(Rational(10).pow(static_cast<unsigned long>(digits)));
  IntervalQ e = alg_enclosure(scaled, Rational(1, 4));
  mpz_class n = (e.mid() + Rational(1, 2)).floor();
  for (int guard = 0; guard < 4; ++guard) {
    mpz_class two_n = 2 * n;
    Rational lo_edge(mpq_class(mpz_class(two_n - 1), mpz_class(2)));
    Rational hi_edge(mpq_class(mpz_class(two_n + 1), mpz_class(2)));
    int c1 = alg_compare(scaled, AlgNum(lo_edge));
    int c2 = alg_compare(scaled, AlgNum(hi_edge));
    if (c1 < 0) {
      --n;
      continue;
    }
    if (c2 > 0) {
      ++n;
      continue;
    }
    if (c1 == 0 && mpz_odd_p(n.get_mpz_t())) --n;   // tie at n - 1/2
    if (c2 == 0 && mpz_odd_p(n.get_mpz_t())) ++n;   // tie at n + 1/2
    bool neg = n < 0;
    mpz_class m = neg ? mpz_class(-n) : n;
    std::string s = m.get_str();
    if (static_cast<int>(s.size()) < digits + 1)
      s.insert(0, static_cast<size_t>(digits + 1) - s.size(), '0');
    if (digits > 0) s.insert(s.size() - digits, ".");
    return (neg ? "-" : "") + s;
  }
  throw std::logic_error("to_decimal: rounding did not settle");
}

}  // namespace bilim
