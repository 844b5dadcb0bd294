#include <algorithm>
#include <stdexcept>

#include "algebraic_internal.hpp"
#include "bilim/factor.hpp"

namespace bilim {

namespace {

bool struct_zero(const AlgNum& a) {
  return a.is_rational() && a.rational_value().is_zero();
}

}  // namespace

APoly::APoly(std::vector<AlgNum> ascending) : c_(std::move(ascending)) {
  while (!c_.empty() && struct_zero(c_.back())) c_.pop_back();
}

APoly APoly::from_upoly(const UniPoly& p) {
  std::vector<AlgNum> c;
  for (int i = 0; i <= p.degree(); ++i) c.emplace_back(p.coeff(i));
  return APoly(std::move(c));
}

int APoly::degree() const {
  return c_.empty() ? kDegNegInf : static_cast<int>(c_.size()) - 1;
}

const AlgNum& APoly::coeff(int i) const {
  static const AlgNum kZero;
  if (i < 0 || i >= static_cast<int>(c_.size())) return kZero;
  return c_[i];
}

AlgNum APoly::eval(const AlgNum& x) const {
  AlgNum acc;
  for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
  return acc;
}

APoly APoly::derivative() const {
  std::vector<AlgNum> c;
  for (size_t i = 1; i < c_.size(); ++i)
    c.push_back(AlgNum(Rational(static_cast<long>(i))) * c_[i]);
  return APoly(std::move(c));
}

APoly operator+(const APoly& a, const APoly& b) {
  std::vector<AlgNum> c(std::max(a.c_.size(), b.c_.size()));
  for (size_t i = 0; i < c.size(); ++i) {
    if (i < a.c_.size()) c[i] = c[i] + a.c_[i];
    if (i < b.c_.size()) c[i] = c[i] + b.c_[i];
  }
  return APoly(std::move(c));
}

APoly operator-(const APoly& a, const APoly& b) {
  return a + AlgNum(Rational(-1)) * b;
}

APoly operator*(const APoly& a, const APoly& b) {
  if (a.c_.empty() || b.c_.empty()) return APoly();
  std::vector<AlgNum> c(a.c_.size() + b.c_.size() - 1);
  for (size_t i = 0; i < a.c_.size(); ++i)
    for (size_t j = 0; j < b.c_.size(); ++j)
      c[i + j] = c[i + j] + a.c_[i] * b.c_[j];
  return APoly(std::move(c));
}

APoly operator*(const AlgNum& c, const APoly& a) {
  std::vector<AlgNum> r;
  r.reserve(a.c_.size());
  for (const AlgNum& v : a.c_) r.push_back(c * v);
  return APoly(std::move(r));
}

namespace detail {

APoly apoly_trim_value(const APoly& p) {
  std::vector<AlgNum> c = p.coeffs();
  while (!c.empty() && alg_is_zero(c.back())) c.pop_back();
  return APoly(std::move(c));
}

void apoly_divmod_field(const APoly& a, const APoly& b, APoly& q, APoly& r) {
  int m = b.degree();
  if (m < 0) throw std::domain_error("apoly_divmod_field: zero divisor");
  AlgNum lead_inv = b.coeff(m).inv();
  std::vector<AlgNum> rc = a.coeffs();
  std::vector<AlgNum> qc(rc.size() > static_cast<size_t>(m) ? rc.size() - m : 0);
  while (static_cast<int>(rc.size()) - 1 >= m && m >= 0) {
    size_t top = rc.size() - 1;
    AlgNum cq = rc[top] * lead_inv;
    // The top coefficient cancels by construction; drop it outright.
    rc.pop_back();
    size_t k = top - m;
    for (int i = 0; i < m; ++i)
      rc[k + i] = rc[k + i] - cq * b.coeff(i);
    if (!qc.empty()) qc[k] = std::move(cq);
  }
  q = APoly(std::move(qc));
  r = APoly(std::move(rc));
}

APoly apoly_gcd_field(APoly a, APoly b) {
  a = apoly_trim_value(a);
  b = apoly_trim_value(b);
  while (!b.is_zero()) {
    APoly q, r;
    apoly_divmod_field(a, b, q, r);
    a = std::move(b);
    b = apoly_trim_value(r);
  }
  if (a.is_zero()) return a;
  return a.coeff(a.degree()).inv() * a;
}

}  // namespace detail

namespace {

using detail::apoly_divmod_field;
using detail::apoly_trim_value;

// Sturm chain over the field generated by the coefficient towers; entries
// are scaled by positive constants only.
std::vector<APoly> sturm_chain_field(const APoly& ps) {
  std::vector<APoly> chain = {ps, apoly_trim_value(ps.derivative())};
  if (chain[1].is_zero()) {
    chain.pop_back();
    return chain;
  }
  for (;;) {
    const APoly& s0 = chain[chain.size() - 2];
    const APoly& s1 = chain[chain.size() - 1];
    APoly q, r;
    apoly_divmod_field(s0, s1, q, r);
    r = apoly_trim_value(r);
    if (r.is_zero()) return chain;
    APoly neg = AlgNum(Rational(-1)) * r;
    AlgNum lead = neg.coeff(neg.degree());
    int sl = alg_sign(lead);
    // Scale by 1/|lead| to keep coefficients small; positive factor only.
    chain.push_back((AlgNum(Rational(sl)) * lead.inv()) * neg);
  }
}

int variations_at(const std::vector<APoly>& chain, const Rational& x) {
  int var = 0, prev = 0;
  AlgNum ax(x);
  for (const APoly& p : chain) {
    int s = alg_sign(p.eval(ax));
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++var;
    prev = s;
  }
  return var;
}

// Number of distinct real roots in (a, b] for a square-free chain head.
int count_halfopen(const std::vector<APoly>& chain, const Rational& a,
                   const Rational& b) {
  return variations_at(chain, a) - variations_at(chain, b);
}

struct IsolationContext {
  const APoly* ps;  // square-free, monic over the field
  const std::vector<APoly>* chain;
  std::vector<IntervalQ> out;
};

bool is_root_at(const IsolationContext& ctx, const Rational& x) {
  return alg_is_zero(ctx.ps->eval(AlgNum(x)));
}

// Endpoints are never roots; emits isolating intervals in ascending order.
void isolate_rec(IsolationContext& ctx, const Rational& a, const Rational& b,
                 int count) {
  if (count == 0) return;
  Rational m = (a + b) / Rational(2);
  if (is_root_at(ctx, m)) {
    // Rational root at the midpoint: certify a punctured gap around it.
    Rational delta = (b - a) / Rational(8);
    for (;;) {
      if (!is_root_at(ctx, m - delta) && !is_root_at(ctx, m + delta) &&
          count_halfopen(*ctx.chain, m - delta, m + delta) == 1)
        break;
      delta = delta / Rational(2);
    }
    int left = count_halfopen(*ctx.chain, a, m - delta);
    int right = count_halfopen(*ctx.chain, m + delta, b);
    isolate_rec(ctx, a, m - delta, left);
    ctx.out.push_back(IntervalQ::point(m));
    isolate_rec(ctx, m + delta, b, right);
    return;
  }
  if (count == 1) {
    ctx.out.push_back(IntervalQ(a, b));
    return;
  }
  int left = count_halfopen(*ctx.chain, a, m);
  isolate_rec(ctx, a, m, left);
  isolate_rec(ctx, m, b, count - left);
}

// One bisection step on an isolating interval of the chain head.
IntervalQ refine_iso(const IsolationContext& ctx, const IntervalQ& iv) {
  if (iv.is_point()) return iv;
  Rational m = iv.mid();
  if (is_root_at(ctx, m)) return IntervalQ::point(m);
  if (count_halfopen(*ctx.chain, iv.lo, m) == 1) return IntervalQ(iv.lo, m);
  return IntervalQ(m, iv.hi);
}

// Real roots of a polynomial whose coefficients are all rational: factor
// over Q first, so every depth-1 defining polynomial is irreducible. With
// an irreducible defining polynomial a reduced representation is zero as a
// value iff it is literally zero, which lets rational values collapse back
// to plain rationals downstream.
std::vector<AlgNum> rational_roots_path(const APoly& p) {
  std::vector<Rational> cs;
  for (const AlgNum& c : p.coeffs()) cs.push_back(c.rational_value());
  std::vector<AlgNum> roots;
  for (const UniPoly& h : irreducible_factors(UniPoly{cs})) {
    if (h.degree() == 1) {
      roots.emplace_back(-h.coeff(0) / h.coeff(1));
      continue;
    }
    UniPoly hm = h.monic();
    MPoly defining = [&] {
      std::vector<MPoly> mc;
      for (int i = 0; i <= hm.degree(); ++i) mc.emplace_back(hm.coeff(i));
      return MPoly::from_coeffs(1, std::move(mc));
    }();
    for (const IntervalQ& iv : isolate_real_roots(h)) {
      std::vector<TowerLevel> lv(1);
      lv[0].defining = defining;
      lv[0].isolating = iv;
      Tower t = std::make_shared<const std::vector<TowerLevel>>(std::move(lv));
      roots.emplace_back(t, MPoly::variable(1), MPoly(Rational(1)));
    }
  }
  std::sort(roots.begin(), roots.end(), [](const AlgNum& a, const AlgNum& b) {
    return alg_compare(a, b) < 0;
  });
  return roots;
}

// Lift every coefficient onto one shared tower by folding pairwise merges.
struct SharedContext {
  Tower tower;
  std::vector<AlgNum> coeffs;
};

SharedContext share_tower(const APoly& p) {
  SharedContext ctx;
  ctx.tower = nullptr;
  std::vector<std::pair<MPoly, MPoly>> vals;
  for (const AlgNum& c : p.coeffs()) {
    detail::MergedTowers m = detail::merge_towers(ctx.tower, c.tower());
    ctx.tower = m.tower;
    vals.emplace_back(c.num().remap_vars_above(m.common, m.shift),
                      c.den().remap_vars_above(m.common, m.shift));
  }
  for (auto& [n, d] : vals)
    ctx.coeffs.emplace_back(ctx.tower, std::move(n), std::move(d));
  return ctx;
}

}  // namespace

std::vector<AlgNum> apoly_real_roots(const APoly& p) {
  APoly pt = apoly_trim_value(p);
  if (pt.is_zero())
    throw std::invalid_argument("apoly_real_roots: zero polynomial");
  if (pt.degree() == 0) return {};

  SharedContext shared = share_tower(pt);
  if (!shared.tower) return rational_roots_path(APoly(shared.coeffs));
  Tower base = shared.tower;
  size_t k = base->size();

  // Square-free, monic over the field.
  APoly pc = APoly(shared.coeffs);
  APoly g = detail::apoly_gcd_field(pc, pc.derivative());
  APoly ps = pc;
  if (g.degree() > 0) {
    APoly q, r;
    apoly_divmod_field(pc, g, q, r);
    ps = apoly_trim_value(q);
  }
  int n = ps.degree();
  ps = ps.coeff(n).inv() * ps;
  if (n == 1) return {-ps.coeff(0)};

  // Cauchy bound from coefficient enclosures.
  Rational bound(1);
  for (int i = 0; i < n; ++i) {
    IntervalQ e = alg_enclosure(ps.coeff(i), Rational(1));
    bound = max(bound, max(e.lo.abs(), e.hi.abs()));
  }
  bound = bound + Rational(1);

  IsolationContext ctx;
  std::vector<APoly> chain = sturm_chain_field(ps);
  ctx.ps = &ps;
  ctx.chain = &chain;
  int total = count_halfopen(chain, -bound, bound);
  isolate_rec(ctx, -bound, bound, total);
  if (ctx.out.empty()) return {};

  // Denominator-cleared coefficients: P_i = n_i * prod_{j != i} d_j gives a
  // polynomial multiple of ps with MPoly coefficients and the same roots.
  size_t cnt = ps.coeffs().size();
  std::vector<MPoly> nums(cnt), dens(cnt);
  for (size_t i = 0; i < cnt; ++i) {
    nums[i] = ps.coeff(static_cast<int>(i)).num();
    dens[i] = ps.coeff(static_cast<int>(i)).den();
  }
  std::vector<MPoly> pre(cnt + 1), suf(cnt + 1);
  pre[0] = MPoly(Rational(1));
  for (size_t i = 0; i < cnt; ++i)
    pre[i + 1] = detail::tower_reduce(pre[i] * dens[i], *base);
  suf[cnt] = MPoly(Rational(1));
  for (size_t i = cnt; i-- > 0;)
    suf[i] = detail::tower_reduce(suf[i + 1] * dens[i], *base);
  std::vector<MPoly> cleared(cnt);
  for (size_t i = 0; i < cnt; ++i)
    cleared[i] =
        detail::tower_reduce(nums[i] * detail::tower_reduce(pre[i] * suf[i + 1], *base), *base);

  // Monicizing transform: roots scale by the cleared leading coefficient.
  const MPoly& lead = cleared[cnt - 1];
  std::vector<MPoly> dc(cnt);
  dc[cnt - 1] = MPoly(Rational(1));
  MPoly lead_pow(Rational(1));
  for (size_t i = cnt - 1; i-- > 0;) {
    dc[i] = detail::tower_reduce(cleared[i] * lead_pow, *base);
    lead_pow = detail::tower_reduce(lead_pow * lead, *base);
  }

  // Isolate the scaled roots: enclose lead and every root interval until the
  // products are pairwise disjoint and their endpoints avoid roots.
  auto defining_value_at = [&](const Rational& x, const Tower& tw) {
    MPoly acc;
    for (size_t i = cnt; i-- > 0;) acc = acc * MPoly(x) + dc[i];
    return AlgNum(tw, acc, MPoly(Rational(1)));
  };
  Tower enc = base;
  std::vector<IntervalQ> roots_iso = ctx.out;
  std::vector<IntervalQ> scaled(roots_iso.size());
  for (int guard = 0; guard < 200; ++guard) {
    IntervalQ le = lead.eval_box(detail::tower_box(enc));
    bool ok = le.sign() != 0;
    if (ok) {
      for (size_t i = 0; i < roots_iso.size(); ++i)
        scaled[i] = le * roots_iso[i];
      for (size_t i = 0; ok && i + 1 < scaled.size(); ++i)
        for (size_t j = i + 1; ok && j < scaled.size(); ++j)
          if (!scaled[i].disjoint(scaled[j])) ok = false;
      // Fused endpoints must not be roots of the scaled defining poly.
      for (size_t i = 0; ok && i < scaled.size(); ++i) {
        if (roots_iso[i].is_point()) continue;
        if (alg_is_zero(defining_value_at(scaled[i].lo, enc)) ||
            alg_is_zero(defining_value_at(scaled[i].hi, enc)))
          ok = false;
      }
    }
    if (ok) break;
    enc = detail::refine_all(enc);
    for (auto& iv : roots_iso) iv = refine_iso(ctx, iv);
    if (guard == 199)
      throw std::logic_error("apoly_real_roots: scaled isolation stalled");
  }

  // The base tower may have been refined while isolating; keep that work.
  // Dividing the scaled tower variable by `lead` through inv() keeps the
  // root's denominator trivial whenever the lead is invertible symbolically.
  AlgNum lead_inv = AlgNum(enc, lead, MPoly(Rational(1))).inv();
  std::vector<AlgNum> out;
  for (size_t i = 0; i < roots_iso.size(); ++i) {
    if (roots_iso[i].is_point()) {
      // Rational root discovered during isolation.
      out.emplace_back(roots_iso[i].lo);
      continue;
    }
    std::vector<TowerLevel> nl(enc->begin(), enc->end());
    TowerLevel lv;
    lv.defining = MPoly::from_coeffs(static_cast<int>(k) + 1,
                                     std::vector<MPoly>(dc.begin(), dc.end()));
    lv.isolating = scaled[i];
    nl.push_back(std::move(lv));
    Tower t = std::make_shared<const std::vector<TowerLevel>>(std::move(nl));
    out.emplace_back(AlgNum(t, MPoly::variable(static_cast<int>(k) + 1),
                            MPoly(Rational(1))) *
                     lead_inv);
  }
  // isolate_rec emits intervals left to right, so `out` is ascending.
  return out;
}

}  // namespace bilim
