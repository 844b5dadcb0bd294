#include "bilim/puiseux.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>

namespace bilim {

namespace {

// f(x, phi(x) + Y) as a finite sum of monomials c * x^e * Y^j with exact
// rational exponents e. Invariant: stored coefficients are nonzero as values.
using WorkKey = std::pair<Rational, int>;
using WorkPoly = std::map<WorkKey, AlgNum>;

WorkPoly from_bipoly(const BiPoly& f) {
  WorkPoly w;
  for (const auto& [k, c] : f.terms())
    w.emplace(WorkKey{Rational(k.first), k.second}, AlgNum(c));
  return w;
}

// Substitute Y := c * x^mu + Y.
WorkPoly recenter(const WorkPoly& w, const Rational& mu, const AlgNum& c) {
  int dy = 0;
  for (const auto& [k, a] : w) dy = std::max(dy, k.second);
  std::vector<AlgNum> cpow(static_cast<size_t>(dy) + 1, AlgNum(Rational(1)));
  for (int i = 1; i <= dy; ++i) cpow[i] = cpow[i - 1] * c;
  WorkPoly acc;
  for (const auto& [k, a] : w) {
    const auto& [e, j] = k;
    for (int t = 0; t <= j; ++t) {
      // x^e Y^j -> C(j, t) c^(j-t) x^(e + (j-t) mu) Y^t
      mpz_class b;
      mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(j),
                   static_cast<unsigned long>(t));
      AlgNum term = a * cpow[j - t] * AlgNum(Rational(mpz_class(b)));
      WorkKey key{e + Rational(j - t) * mu, t};
      auto it = acc.find(key);
      if (it == acc.end())
        acc.emplace(key, std::move(term));
      else
        it->second = it->second + term;
    }
  }
  for (auto it = acc.begin(); it != acc.end();) {
    if (alg_is_zero(it->second))
      it = acc.erase(it);
    else
      ++it;
  }
  return acc;
}

// Drop monomials with x-exponent above `bound`. Substitution only ever
// raises exponents, so dropped terms cannot reach any retained key later.
void drop_above(WorkPoly& w, const Rational& bound) {
  for (auto it = w.begin(); it != w.end();) {
    if (bound < it->first.first)
      it = w.erase(it);
    else
      ++it;
  }
}

// Drop monomials that cannot reach the Y^0/Y^1 columns within the window:
// a term x^e Y^j only gets there through substitution steps of slope > mu,
// each shedding Y-powers at a cost of more than mu per power, so it lands
// at exponent above e + (j - 1) mu. Anything past `bound` is unreachable.
void drop_unreachable(WorkPoly& w, const Rational& bound, const Rational& mu) {
  for (auto it = w.begin(); it != w.end();) {
    Rational reach = it->first.first;
    if (it->first.second > 1) reach += Rational(it->first.second - 1) * mu;
    if (bound < reach)
      it = w.erase(it);
    else
      ++it;
  }
}

// Lower Newton polygon face of negative slope -mu: roots of order mu.
struct Face {
  Rational mu;
  int j1, j2;   // y-degree span, j1 < j2
  Rational e1;  // x-order at column j1
};

std::vector<Face> polygon_faces(const WorkPoly& w) {
  std::map<int, Rational> colmin;
  for (const auto& [k, a] : w) {
    auto it = colmin.find(k.second);
    if (it == colmin.end())
      colmin.emplace(k.second, k.first);
    else if (k.first < it->second)
      it->second = k.first;
  }
  std::vector<std::pair<int, Rational>> pts(colmin.begin(), colmin.end());
  // Lower convex hull over (j, e), j ascending.
  std::vector<std::pair<int, Rational>> hull;
  for (const auto& p : pts) {
    while (hull.size() >= 2) {
      const auto& o = hull[hull.size() - 2];
      const auto& a = hull[hull.size() - 1];
      Rational cross = Rational(a.first - o.first) * (p.second - o.second) -
                       (a.second - o.second) * Rational(p.first - o.first);
      if (cross.sign() <= 0)
        hull.pop_back();
      else
        break;
    }
    hull.push_back(p);
  }
  std::vector<Face> faces;
  for (size_t i = 0; i + 1 < hull.size(); ++i) {
    if (!(hull[i + 1].second < hull[i].second)) break;  // slopes only increase
    Rational mu = (hull[i].second - hull[i + 1].second) /
                  Rational(hull[i + 1].first - hull[i].first);
    faces.push_back(Face{mu, hull[i].first, hull[i + 1].first, hull[i].second});
  }
  return faces;
}

// Characteristic polynomial of a face in u = c, lowest face exponent
// stripped: chi(u) = sum over on-face points of coeff * u^(j - j1).
APoly face_poly(const WorkPoly& w, const Face& face) {
  std::vector<AlgNum> cs(static_cast<size_t>(face.j2 - face.j1) + 1);
  for (int j = face.j1; j <= face.j2; ++j) {
    Rational e = face.e1 - face.mu * Rational(j - face.j1);
    auto it = w.find(WorkKey{e, j});
    if (it != w.end()) cs[static_cast<size_t>(j - face.j1)] = it->second;
  }
  return APoly(std::move(cs));
}

long ramification_of(const std::vector<BranchTerm>& terms) {
  mpz_class l(1);
  for (const auto& t : terms) {
    mpz_class d = t.exponent.den();
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
  }
  return l.get_si();
}

bool node_exact(const WorkPoly& w) {
  for (const auto& [k, a] : w)
    if (k.second == 0) return false;  // a Y^0 part remains
  return true;
}

// A simple real root of a face polynomial continues to exactly one root of
// the source, which must then be real: a non-real continuation would bring
// its conjugate as a second one through the same all-real prefix.
bool simple_root(const APoly& p, const AlgNum& c) {
  if (p.degree() == 1) return true;
  APoly d = p.derivative();
  AlgNum v;
  for (int i = d.degree(); i >= 0; --i) v = v * c + d.coeff(i);
  return !alg_is_zero(v);
}

// True when the current prefix is itself a root or extends to a real root
// diverging at an exponent > mu_last. A face steeper than `cutoff` carries
// only real continuations: a non-real one would agree with its conjugate
// beyond the root-separation bound. Only multiple face roots recurse;
// simple ones are real continuations outright.
bool real_continues(const WorkPoly& w, const Rational& mu_last,
                    const Rational& cutoff) {
  if (node_exact(w)) return true;
  for (const Face& face : polygon_faces(w)) {
    if (!(mu_last < face.mu)) continue;
    if (cutoff < face.mu) return true;
    APoly chi = face_poly(w, face);
    for (const AlgNum& c : apoly_real_roots(chi)) {
      if (simple_root(chi, c)) return true;
      if (real_continues(recenter(w, face.mu, c), face.mu, cutoff)) return true;
    }
  }
  return false;
}

struct ExpandState {
  Rational level;
  bool inclusive;   // terminal when mu > level instead of mu >= level
  Rational cutoff;  // root-separation bound of the expanded polynomial
  Side side;
  std::vector<PuiseuxBranch>* out;  // null: separation probe only
  bool certified = true;
};

// Chain recursion entered after following a simple face root: exactly one
// root of the source continues the prefix, and it is real. Every deeper node
// then carries a single span-1 face from the Y^0 to the Y^1 column (or no
// face at all once the prefix is itself a root), so the chi root is -a0/a1
// and certification can never change here. Only exponents up to the Y^1
// column order plus the level are ever consulted, so the chain runs inside a
// clipped exponent window: substitution only raises exponents, which keeps
// every retained key exact, and a run that outgrows its window is invalid
// and restarts with a wider one. The Y^1 order along a branch only grows
// toward its stable value, so the widening terminates.
void expand_tail(const WorkPoly& w0, const Rational& mu0,
                 std::vector<BranchTerm>& prefix, ExpandState& st) {
  if (!st.out) return;  // separation probes: chains cannot break certification
  size_t base = prefix.size();
  Rational theta;
  {
    const Rational* e1 = nullptr;
    for (const auto& [k, a] : w0)  // keys ascend by exponent, so the first
      if (k.second == 1) {         // hit is the column minimum
        e1 = &k.first;
        break;
      }
    if (!e1) throw std::logic_error("expand: chain entry lost its Y^1 column");
    theta = *e1 + st.level + Rational(1);
  }
  for (bool valid = false; !valid;) {
    valid = true;
    prefix.resize(base);
    WorkPoly w = w0;
    drop_unreachable(w, theta, mu0);
    Rational mu_last = mu0;
    for (;;) {
      const WorkKey* k0 = nullptr;
      const WorkKey* k1 = nullptr;
      for (const auto& [k, a] : w) {
        if (k.second == 0 && !k0) k0 = &k;
        if (k.second == 1 && !k1) k1 = &k;
        if (k0 && k1) break;
      }
      if (!k1) {  // true Y^1 order lies beyond the window: widen and rerun
        valid = false;
        theta = theta + theta;
        break;
      }
      Rational need = k1->first + st.level + Rational(1);
      if (theta < need) {  // window too tight for this node: rerun
        valid = false;
        theta = need;
        break;
      }
      if (!k0) break;  // prefix is a root, or diverges beyond the window
      Rational mu = k0->first - k1->first;
      if (!(mu_last < mu))
        throw std::logic_error("expand: chain face does not advance");
      if (st.inclusive ? st.level < mu : st.level <= mu) break;
      AlgNum c = -(w.at(*k0) / w.at(*k1));
      prefix.push_back(BranchTerm{mu, c});
      drop_unreachable(w, theta, mu);  // this step's slope bounds all later
      WorkPoly next = recenter(w, mu, c);
      drop_unreachable(next, theta, mu);
      w = std::move(next);
      mu_last = mu;
    }
  }
  st.out->push_back(
      PuiseuxBranch{st.side, ramification_of(prefix), prefix, st.level});
  prefix.resize(base);
}

// One recursion node of the Newton polygon algorithm. `prefix` holds the
// accepted terms; only faces with mu > mu_last continue this prefix.
void expand_rec(const WorkPoly& w, const Rational& mu_last,
                std::vector<BranchTerm>& prefix, ExpandState& st) {
  if (!st.out && !st.certified) return;
  bool exact = node_exact(w);  // y = prefix is itself a root
  int beyond_faces = 0, beyond_span = 0;
  bool beyond_real = false;
  for (const Face& face : polygon_faces(w)) {
    if (!(mu_last < face.mu)) continue;
    bool beyond = st.inclusive ? st.level < face.mu : st.level <= face.mu;
    if (beyond) {
      ++beyond_faces;
      beyond_span += face.j2 - face.j1;
      if (!beyond_real) {
        if (st.cutoff < face.mu) {
          beyond_real = true;
        } else {
          APoly chi = face_poly(w, face);
          for (const AlgNum& c : apoly_real_roots(chi))
            if (simple_root(chi, c) ||
                real_continues(recenter(w, face.mu, c), face.mu, st.cutoff)) {
              beyond_real = true;
              break;
            }
        }
      }
      continue;
    }
    APoly chi = face_poly(w, face);
    for (const AlgNum& c : apoly_real_roots(chi)) {
      prefix.push_back(BranchTerm{face.mu, c});
      if (simple_root(chi, c)) {
        if (st.out) expand_tail(recenter(w, face.mu, c), face.mu, prefix, st);
      } else {
        WorkPoly child = recenter(w, face.mu, c);
        expand_rec(child, face.mu, prefix, st);
      }
      prefix.pop_back();
    }
  }
  // Emit only truncations of actual real roots: ghosts whose continuations
  // are all complex are invisible to the real branch set.
  if (!exact && !beyond_real) return;
  // Collision: two real roots (or an exact root plus a real continuation)
  // share this truncation, so truncating at this level is not injective.
  bool lone_simple = !exact && beyond_faces == 1 && beyond_span == 1;
  if ((exact && beyond_real) || (!exact && !lone_simple)) st.certified = false;
  if (st.out)
    st.out->push_back(PuiseuxBranch{st.side, ramification_of(prefix), prefix,
                                    st.level});
}

bool same_terms(const std::vector<BranchTerm>& a,
                const std::vector<BranchTerm>& b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].exponent != b[i].exponent) return false;
    if (alg_compare(a[i].coeff, b[i].coeff) != 0) return false;
  }
  return true;
}

bool branch_less(const PuiseuxBranch& a, const PuiseuxBranch& b) {
  size_t n = std::min(a.terms.size(), b.terms.size());
  for (size_t i = 0; i < n; ++i) {
    if (a.terms[i].exponent != b.terms[i].exponent)
      return a.terms[i].exponent < b.terms[i].exponent;
    int c = alg_compare(a.terms[i].coeff, b.terms[i].coeff);
    if (c != 0) return c < 0;
  }
  return a.terms.size() < b.terms.size();
}

void check_expandable(const BiPoly& g) {
  if (g.is_zero()) throw std::invalid_argument("expand: zero polynomial");
  if (g.eval_x(Rational(0)).is_zero())
    throw std::invalid_argument("expand: f(0, y) vanishes; shear first");
}

}  // namespace

BranchSet expand(const BiPoly& f, const Rational& N, Side side) {
  if (N.sign() <= 0) throw std::invalid_argument("expand: level must be > 0");
  BiPoly g = side == Side::minus ? flip_x(f) : f;
  check_expandable(g);
  std::vector<PuiseuxBranch> branches;
  ExpandState st{N, false, truncation_bound(g.total_degree()), side, &branches};
  std::vector<BranchTerm> prefix;
  expand_rec(from_bipoly(g), Rational(0), prefix, st);
  std::sort(branches.begin(), branches.end(), branch_less);
  return BranchSet{std::move(branches), f, N};
}

namespace {

SeriesLeading substitute_series(const BiPoly& f, const PuiseuxBranch& branch,
                                const Rational* trust) {
  BiPoly g = branch.side == Side::minus ? flip_x(f) : f;
  WorkPoly w = from_bipoly(g);
  if (trust) drop_above(w, *trust);
  for (const BranchTerm& t : branch.terms) {
    w = recenter(w, t.exponent, t.coeff);
    if (trust) drop_above(w, *trust);
  }
  // Keys are ordered by exponent first, so the first Y^0 entry is leading.
  for (const auto& [k, a] : w)
    if (k.second == 0) {
      if (trust && !(k.first < *trust)) break;
      return SeriesLeading{k.first, a};
    }
  return SeriesLeading{std::nullopt, AlgNum()};
}

}  // namespace

SeriesLeading substitute_order(const BiPoly& f, const PuiseuxBranch& branch) {
  return substitute_series(f, branch, nullptr);
}

SeriesLeading substitute_order(const BiPoly& f, const PuiseuxBranch& branch,
                               const Rational& trust) {
  return substitute_series(f, branch, &trust);
}

bool member(const BiPoly& f, const PuiseuxBranch& branch) {
  if (f.is_zero()) return true;
  BiPoly g = branch.side == Side::minus ? flip_x(f) : f;
  UniPoly c = content_in_x(g);
  if (c.degree() > 0) g = div2_exact(g, BiPoly::from_upoly_x(c));
  if (g.is_constant()) return false;
  BranchSet bs = expand(g, branch.truncation, Side::plus);
  for (const PuiseuxBranch& cand : bs.branches)
    if (same_terms(cand.terms, branch.terms)) return true;
  return false;
}

int multiplicity(const BiPoly& f, const PuiseuxBranch& branch, int N) {
  if (f.is_zero()) throw std::invalid_argument("multiplicity: zero polynomial");
  if (!member(f, branch))
    throw std::invalid_argument("multiplicity: branch is not a root");
  int candidates = f.deg_y() + 1;
  auto probe_order = [&](int k) {
    // Generic value of ord f(x, trunc_k(branch) + c x^k): at most deg_y f
    // probe constants collide with an actual coefficient and inflate the
    // order, so the minimum over deg_y f + 1 of them is the generic one.
    std::optional<Rational> best;
    for (int ci = 1; ci <= candidates; ++ci) {
      PuiseuxBranch probe;
      probe.side = branch.side;
      for (const BranchTerm& t : branch.terms)
        if (t.exponent < Rational(k)) probe.terms.push_back(t);
      probe.terms.push_back(BranchTerm{Rational(k), AlgNum(Rational(ci))});
      probe.ramification = ramification_of(probe.terms);
      probe.truncation = Rational(k + 1);
      SeriesLeading sl = substitute_order(f, probe);
      if (sl.order && (!best || *sl.order < *best)) best = *sl.order;
    }
    if (!best) throw std::logic_error("multiplicity: every probe was a root");
    return *best;
  };
  Rational m = probe_order(N + 1) - probe_order(N);
  if (!m.is_integer() || m.sign() <= 0)
    throw std::logic_error("multiplicity: order difference not a positive integer");
  return static_cast<int>(m.num().get_si());
}

int separation_level(const BiPoly& f) {
  check_expandable(f);
  Rational cutoff = truncation_bound(f.total_degree());
  int cap = static_cast<int>(cutoff.floor().get_si()) + 1;
  for (int m = 1; m < cap; ++m) {
    bool ok = true;
    for (Side side : {Side::plus, Side::minus}) {
      BiPoly g = side == Side::minus ? flip_x(f) : f;
      ExpandState st{Rational(m), true, cutoff, side, nullptr};
      std::vector<BranchTerm> prefix;
      expand_rec(from_bipoly(g), Rational(0), prefix, st);
      if (!st.certified) {
        ok = false;
        break;
      }
    }
    if (ok) return m;
  }
  return cap;
}

namespace {

std::string exponent_text(const Rational& e) {
  if (e.is_integer()) {
    if (e == Rational(1)) return "x";
    return "x^" + e.to_string();
  }
  return "x^(" + e.to_string() + ")";
}

std::string coeff_text(const AlgNum& c) {
  if (c.is_rational()) return c.rational_value().to_string();
  RealAlgebraic ra = to_real_algebraic(c);
  return "root(" + ra.defining.to_string() + ", [" + ra.isolating.lo.to_string() +
         ", " + ra.isolating.hi.to_string() + "])";
}

}  // namespace

std::string branch_to_string(const PuiseuxBranch& branch) {
  std::string s = "y = ";
  bool first = true;
  for (const BranchTerm& t : branch.terms) {
    std::string c = coeff_text(t.coeff);
    bool neg = !c.empty() && c[0] == '-';
    std::string mag = neg ? c.substr(1) : c;
    std::string body =
        mag == "1" ? exponent_text(t.exponent) : mag + "*" + exponent_text(t.exponent);
    if (first)
      s += (neg ? "-" : "") + body;
    else
      s += (neg ? " - " : " + ") + body;
    first = false;
  }
  s += first ? "O(" + exponent_text(branch.truncation) + ")"
             : " + O(" + exponent_text(branch.truncation) + ")";
  return s;
}

bool branch_equal(const PuiseuxBranch& a, const PuiseuxBranch& b) {
  return a.side == b.side && a.truncation == b.truncation &&
         same_terms(a.terms, b.terms);
}

}  // namespace bilim
