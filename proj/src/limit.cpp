#include "bilim/limit.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "bilim/upoly.hpp"

namespace bilim {

namespace {

// 0, 1, -1, 2, -2, ...
Rational probe_constant(int k) {
  long half = (k + 1) / 2;
  return Rational(k % 2 == 1 ? half : -half);
}

// First x-shear f(x + c*y, y) with a nonzero pure-y term in the lowest
// form. Each candidate c excludes at most ord(h) values, so the probe
// terminates.
BiPoly regularize_y(const BiPoly& h, std::optional<Rational>* used) {
  for (int k = 0;; ++k) {
    Rational c = probe_constant(k);
    BiPoly hs = k == 0 ? h : shear_x(h, c);
    if (!is_y_regular(hs)) continue;
    if (used && k != 0) *used = c;
    return hs;
  }
}

struct PreparedPair {
  BiPoly f, g, F;  // F = jacobian determinant of the sheared pair
  std::optional<Rational> shear_c;
};

// First x-shear making f and g y-regular with the Jacobian determinant
// either identically zero (a shear-invariant property) or y-regular too.
PreparedPair prepare_pair(const BiPoly& f, const BiPoly& g) {
  for (int k = 0;; ++k) {
    Rational c = probe_constant(k);
    BiPoly fs = k == 0 ? f : shear_x(f, c);
    BiPoly gs = k == 0 ? g : shear_x(g, c);
    if (!is_y_regular(fs) || !is_y_regular(gs)) continue;
    BiPoly F = jacobian_det(fs, gs);
    if (!F.is_zero() && !is_y_regular(F)) continue;
    PreparedPair p{std::move(fs), std::move(gs), std::move(F), std::nullopt};
    if (k != 0) p.shear_c = c;
    return p;
  }
}

// Index of the lowest nonzero coefficient; p must be nonzero.
int low_index(const UniPoly& p) {
  int k = 0;
  while (p.coeff(k).is_zero()) ++k;
  return k;
}

// The factor of F carrying exactly the roots of F that are not roots of h.
BiPoly split_off(const BiPoly& F, const BiPoly& h) {
  BiPoly sF = squarefree_part2(F);
  BiPoly d = gcd2(sF, squarefree_part2(h));
  return d.is_constant() ? sF : div2_exact(sF, d);
}

std::vector<PuiseuxBranch> expand_both(const BiPoly& h, int N) {
  std::vector<PuiseuxBranch> out = expand(h, Rational(N), Side::plus).branches;
  std::vector<PuiseuxBranch> mb = expand(h, Rational(N), Side::minus).branches;
  out.insert(out.end(), mb.begin(), mb.end());
  return out;
}

// Level 1 decides emptiness: every emitted prefix extends to a real root.
bool has_real_branches(const BiPoly& h) {
  return !expand(h, Rational(1), Side::plus).branches.empty() ||
         !expand(h, Rational(1), Side::minus).branches.empty();
}

bool no_real_branches_at(const BiPoly& h, int M) {
  return expand(h, Rational(M), Side::plus).branches.empty() &&
         expand(h, Rational(M), Side::minus).branches.empty();
}

// Level past which a truncated branch of F determines the exact orders of
// f and g along the underlying root: one more than the larger of the
// root-separation bounds of f*F and of g.
int isolated_cap(const BiPoly& f, const BiPoly& g, const BiPoly& F) {
  Rational b = truncation_bound(f.total_degree() + F.total_degree());
  Rational bg = truncation_bound(g.total_degree());
  if (b < bg) b = bg;
  return static_cast<int>(b.floor().get_si()) + 1;
}

// Order/leading rule for lim f/g along a branch; on_g.order must be set.
ExtReal limit_value(const SeriesLeading& on_f, const SeriesLeading& on_g) {
  if (!on_f.order || *on_g.order < *on_f.order)
    return ExtReal::finite(AlgNum(0));
  if (*on_f.order == *on_g.order)
    return ExtReal::finite(on_f.leading / on_g.leading);
  int s = alg_sign(on_f.leading) * alg_sign(on_g.leading);
  return s > 0 ? ExtReal::pos_inf() : ExtReal::neg_inf();
}

struct CriticalBranch {
  PuiseuxBranch branch;
  SeriesLeading on_f, on_g;
};

// Branches of F1 on both sides with the exact orders and leading
// coefficients of f and g along them. The substitution order along a
// truncated branch is the sum of its divergence orders from the complex
// roots of the substituted polynomial, and a root still agreeing at the
// expansion level contributes at least the level; so a computed order
// BELOW the level certifies that every root diverged earlier, making the
// order and the leading coefficient exact. Uncertified branches force a
// deeper expansion, one level at a time up to `cap`, past which all
// divergences have provably happened and the values are exact
// unconditionally (and may then legitimately reach or exceed the level, so
// only the below-cap rounds may prune the substitution at the level).
std::vector<CriticalBranch> critical_branches(const BiPoly& f, const BiPoly& g,
                                              const BiPoly& F1, int start,
                                              int cap, int* level_used) {
  int N = std::min(std::max(start, separation_level(F1)), cap);
  for (;;) {
    std::vector<CriticalBranch> out;
    bool settled = true;
    for (PuiseuxBranch& br : expand_both(F1, N)) {
      CriticalBranch cb{std::move(br), SeriesLeading{}, SeriesLeading{}};
      cb.on_f = N < cap ? substitute_order(f, cb.branch, Rational(N))
                        : substitute_order(f, cb.branch);
      cb.on_g = N < cap ? substitute_order(g, cb.branch, Rational(N))
                        : substitute_order(g, cb.branch);
      for (const SeriesLeading* s : {&cb.on_f, &cb.on_g})
        if (!s->order || !(*s->order < Rational(N))) settled = false;
      out.push_back(std::move(cb));
    }
    if (N >= cap) {
      for (const CriticalBranch& cb : out) {
        if (!cb.on_f.order)
          throw std::logic_error(
              "critical_branches: branch off the numerator annihilates it");
        if (!cb.on_g.order)
          throw std::logic_error(
              "critical_branches: branch annihilates a denominator with an "
              "isolated zero");
      }
      settled = true;
    }
    if (settled) {
      if (level_used) *level_used = N;
      return out;
    }
    N = std::min(N + 1, cap);
  }
}

// [MIN, MAX] of the branch limits over the real branches of F off f,
// with 0 added whenever f has real branches of its own. f, g, F y-regular,
// F != 0, g with an isolated zero.
RangeInterval range_core(const BiPoly& f, const BiPoly& g, const BiPoly& F,
                         int start, Diagnostics* diag) {
  std::vector<ExtReal> cand;
  if (has_real_branches(f)) cand.push_back(ExtReal::finite(AlgNum(0)));
  BiPoly F1 = split_off(F, f);
  if (!F1.is_constant()) {
    int used = 0;
    std::vector<CriticalBranch> cbs =
        critical_branches(f, g, F1, start, isolated_cap(f, g, F), &used);
    for (const CriticalBranch& cb : cbs)
      cand.push_back(limit_value(cb.on_f, cb.on_g));
    if (diag) {
      diag->level_N = used;
      diag->branch_count = static_cast<int>(cbs.size());
    }
  }
  if (cand.empty())
    throw std::logic_error(
        "range: no candidate limits at an isolated denominator zero");
  RangeInterval r{cand.front(), cand.front()};
  for (const ExtReal& v : cand) {
    if (ext_compare(v, r.min) < 0) r.min = v;
    if (ext_compare(r.max, v) < 0) r.max = v;
  }
  return r;
}

}  // namespace

int ext_compare(const ExtReal& a, const ExtReal& b) {
  if (a.tag != b.tag) return a.tag < b.tag ? -1 : 1;
  if (a.tag != 0) return 0;
  return alg_compare(a.value, b.value);
}

BranchLimit branch_limit(const BiPoly& f, const BiPoly& g,
                         const PuiseuxBranch& branch) {
  SeriesLeading on_g = substitute_order(g, branch);
  if (!on_g.order)
    throw std::invalid_argument("branch_limit: branch lies on the denominator");
  return BranchLimit{branch, limit_value(substitute_order(f, branch), on_g)};
}

bool isolated_zero_test(const BiPoly& g) {
  if (g.is_zero())
    throw std::invalid_argument("isolated_zero_test: zero polynomial");
  if (!g.eval(Rational(0), Rational(0)).is_zero())
    throw std::invalid_argument("isolated_zero_test: g(0,0) != 0");
  BiPoly gr = regularize_y(g, nullptr);
  return no_real_branches_at(gr, separation_level(gr));
}

bool limit_zero_isolated(const BiPoly& f, const BiPoly& g) {
  if (f.is_zero() || g.is_zero())
    throw std::invalid_argument("limit_zero_isolated: zero input polynomial");
  PreparedPair p = prepare_pair(f, g);
  if (p.F.is_zero())
    throw std::invalid_argument(
        "limit_zero_isolated: Jacobian determinant vanishes identically");
  BiPoly F1 = split_off(p.F, p.f);
  if (F1.is_constant()) return true;  // every critical branch lies on f
  for (const CriticalBranch& cb :
       critical_branches(p.f, p.g, F1, 1, isolated_cap(p.f, p.g, p.F), nullptr))
    if (!(*cb.on_g.order < *cb.on_f.order)) return false;
  return true;
}

LimitOutcome limit_F_degenerate(const BiPoly& f, const BiPoly& g) {
  UniPoly gy = g.eval_x(Rational(0));
  if (gy.is_zero())
    throw std::invalid_argument(
        "limit_F_degenerate: denominator vanishes on the y-axis");
  LimitOutcome out;
  out.diag.isolated_zero = true;
  UniPoly fy = f.eval_x(Rational(0));
  int n = low_index(gy);
  int m = fy.is_zero() ? n + 1 : low_index(fy);
  if (n < m) {
    out.kind = LimitKind::exists_finite;
    out.value = AlgNum(0);
  } else if (m == n) {
    out.kind = LimitKind::exists_finite;
    out.value = AlgNum(fy.coeff(m) / gy.coeff(n));
  } else {
    out.kind = LimitKind::infinite;
    out.inf_sign = fy.coeff(m).sign() * gy.coeff(n).sign();
  }
  ExtReal lo = out.kind == LimitKind::exists_finite
                   ? ExtReal::finite(out.value)
                   : (out.inf_sign > 0 ? ExtReal::pos_inf() : ExtReal::neg_inf());
  out.range = RangeInterval{lo, lo};
  return out;
}

bool exists_zero_general(const BiPoly& f_in, const BiPoly& g_in) {
  if (g_in.is_zero())
    throw std::invalid_argument("exists_zero_general: zero denominator");
  if (f_in.is_zero()) return true;
  if (!(ord2(g_in) < ord2(f_in))) return false;  // the order gap is necessary
  // x-shear both y-regular; the limit ignores the coordinate change
  BiPoly f, g;
  for (int k = 0;; ++k) {
    Rational c = probe_constant(k);
    f = k == 0 ? f_in : shear_x(f_in, c);
    g = k == 0 ? g_in : shear_x(g_in, c);
    if (is_y_regular(f) && is_y_regular(g)) break;
  }
  BiPoly G = tangency_poly(f, g);
  if (G.is_zero()) return true;  // f, g dependent: the order gap decides
  if (!is_y_regular(G)) {
    // One diagonal substitution regularizes G while keeping f and g
    // y-regular (their pure-y lowest coefficients are unchanged).
    f = shear_y(f);
    g = shear_y(g);
    G = tangency_poly(f, g);
    if (G.is_zero()) return true;
    if (!is_y_regular(G))
      throw std::logic_error(
          "exists_zero_general: tangency curve resists regularization");
  }
  int dG = G.total_degree();
  Rational b2 = truncation_bound(f.total_degree() + dG);
  Rational b2g = truncation_bound(g.total_degree() + dG);
  if (b2 < b2g) b2 = b2g;
  int L2 = static_cast<int>(b2.floor().get_si()) + 1;
  // the order of f must beat the order of g along every real branch of the
  // tangency curve lying on neither f nor g
  BiPoly G1 = split_off(G, f * g);
  if (!G1.is_constant()) {
    for (const PuiseuxBranch& br : expand_both(G1, L2)) {
      SeriesLeading on_f = substitute_order(f, br);
      SeriesLeading on_g = substitute_order(g, br);
      if (!on_g.order)
        throw std::logic_error(
            "exists_zero_general: split branch annihilates the denominator");
      if (!on_f.order) continue;
      if (!(*on_g.order < *on_f.order)) return false;
    }
  }
  // every real branch of g must lie on f, with larger multiplicity or with
  // equal multiplicity and a larger generic perturbation order
  Rational b3 = truncation_bound(f.total_degree() + g.total_degree());
  int L3 = std::max(L2, static_cast<int>(b3.floor().get_si()) + 1);
  for (const PuiseuxBranch& br : expand_both(g, L3)) {
    if (!member(f, br)) return false;
    int pf = multiplicity(f, br, L3 - 1);
    int pg = multiplicity(g, br, L3 - 1);
    if (pg < pf) continue;
    if (pf < pg) return false;
    // Equal multiplicities: compare the generic perturbation orders. Probing
    // more constants than either polynomial has roots guarantees a generic
    // hit, and non-generic constants only inflate the order, so the minimum
    // is the generic value.
    std::optional<Rational> of, og;
    int cmax = f.deg_y() + g.deg_y() + 1;
    for (int c = 1; c <= cmax; ++c) {
      PuiseuxBranch probe = br;
      probe.terms.push_back(BranchTerm{Rational(L3), AlgNum(c)});
      probe.truncation = Rational(L3 + 1);
      SeriesLeading on_f = substitute_order(f, probe);
      SeriesLeading on_g = substitute_order(g, probe);
      if (on_f.order && (!of || *on_f.order < *of)) of = on_f.order;
      if (on_g.order && (!og || *on_g.order < *og)) og = on_g.order;
    }
    if (!og)
      throw std::logic_error("exists_zero_general: no generic probe for g");
    if (!of) continue;
    if (!(*og < *of)) return false;
  }
  return true;
}

RangeInterval range_isolated(const BiPoly& f, const BiPoly& g) {
  if (f.is_zero() || g.is_zero())
    throw std::invalid_argument("range_isolated: zero input polynomial");
  PreparedPair p = prepare_pair(f, g);
  if (p.F.is_zero())
    throw std::invalid_argument(
        "range_isolated: Jacobian determinant vanishes identically");
  return range_core(p.f, p.g, p.F, 1, nullptr);
}

LimitOutcome bilimit(const BiPoly& f_in, const BiPoly& g_in, const Rational& a,
                     const Rational& b) {
  if (g_in.is_zero())
    throw std::invalid_argument("bilimit: zero denominator polynomial");
  BiPoly f = translate(f_in, a, b);
  BiPoly g = translate(g_in, a, b);
  // dividing out the common factor changes nothing off the zero set of the
  // factor, and limits are blind to that set
  BiPoly d = gcd2(f, g);
  if (!d.is_constant()) {
    f = div2_exact(f, d);
    g = div2_exact(g, d);
  }
  LimitOutcome out;
  Rational g00 = g.eval(Rational(0), Rational(0));
  if (!g00.is_zero()) {
    out.kind = LimitKind::exists_finite;
    out.value = AlgNum(f.eval(Rational(0), Rational(0)) / g00);
    return out;
  }
  Rational f00 = f.eval(Rational(0), Rational(0));
  if (!f00.is_zero()) {
    // numerator bounded away from zero over a vanishing denominator: the
    // limit is a signed infinity when the zero is isolated (g then keeps
    // one sign nearby, read off along the y-axis), otherwise nothing
    BiPoly gr = regularize_y(g, &out.diag.shear_c);
    out.diag.level_M = separation_level(gr);
    out.diag.isolated_zero = no_real_branches_at(gr, out.diag.level_M);
    if (!out.diag.isolated_zero) {
      out.kind = LimitKind::does_not_exist;
      return out;
    }
    UniPoly gy = g.eval_x(Rational(0));  // nonzero: the zero set is just 0
    int s = gy.coeff(low_index(gy)).sign() * f00.sign();
    out.kind = LimitKind::infinite;
    out.inf_sign = s;
    ExtReal e = s > 0 ? ExtReal::pos_inf() : ExtReal::neg_inf();
    out.range = RangeInterval{e, e};
    return out;
  }
  // both vanish: the lowest forms pin the only possible finite limit value
  int m = ord2(f), n = ord2(g);
  std::optional<Rational> candidate;
  if (n < m) {
    candidate = Rational(0);
  } else if (m == n) {
    BiPoly fm = homog_component(f, m);
    BiPoly gn = homog_component(g, n);
    auto probe_dir = [&](const Rational& xb, const Rational& yb) {
      Rational fv = fm.eval(xb, yb), gv = gn.eval(xb, yb);
      if (fv.is_zero() || gv.is_zero()) return false;
      Rational L = fv / gv;
      if ((fm - L * gn).is_zero()) candidate = L;
      return true;  // non-proportional forms: no finite limit is possible
    };
    for (int t = 1;; ++t) {
      if (probe_dir(Rational(1), Rational(t))) break;
      if (t > 1 && probe_dir(Rational(t), Rational(1))) break;
    }
  }
  PreparedPair p = prepare_pair(f, g);
  out.diag.shear_c = p.shear_c;
  out.diag.level_M = separation_level(p.g);
  out.diag.isolated_zero = no_real_branches_at(p.g, out.diag.level_M);
  if (!out.diag.isolated_zero) {
    out.kind = LimitKind::does_not_exist;  // range not computed in this case
    return out;
  }
  if (p.F.is_zero()) {
    LimitOutcome deg = limit_F_degenerate(p.f, p.g);
    deg.diag = out.diag;
    deg.diag.isolated_zero = true;
    if (deg.kind == LimitKind::exists_finite &&
        (!candidate || alg_compare(deg.value, AlgNum(*candidate)) != 0))
      throw std::logic_error(
          "bilimit: axis limit contradicts the leading-form analysis");
    return deg;
  }
  RangeInterval r = range_core(p.f, p.g, p.F, out.diag.level_M, &out.diag);
  out.range = r;
  if (ext_compare(r.min, r.max) == 0) {
    if (r.min.is_finite()) {
      if (!candidate || alg_compare(r.min.value, AlgNum(*candidate)) != 0)
        throw std::logic_error(
            "bilimit: range verdict contradicts the leading-form analysis");
      out.kind = LimitKind::exists_finite;
      out.value = r.min.value;
    } else {
      out.kind = LimitKind::infinite;
      out.inf_sign = r.min.tag;
    }
  } else {
    out.kind = LimitKind::does_not_exist;
  }
  return out;
}

}  // namespace bilim
