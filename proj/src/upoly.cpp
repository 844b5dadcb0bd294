#include "bilim/upoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace bilim {

namespace {

const Rational kZero(0);

// Pseudo-remainder of polynomials a, b (deg a >= deg b >= 0), scaled so that
// the result is a positive multiple of the field remainder (a mod b). After
// the loop r = lb^performed * (a mod b), so only the sign needs fixing.
UniPoly prem_positive(const UniPoly& a, const UniPoly& b) {
  int db = b.degree();
  UniPoly r = a;
  const Rational& lb = b.lc();
  int performed = 0;
  while (!r.is_zero() && r.degree() >= db) {
    int k = r.degree() - db;
    Rational c = r.lc();
    UniPoly scaled = lb * r;
    scaled -= UniPoly::monomial(c, k) * b;
    r = std::move(scaled);
    ++performed;
  }
  if (lb.sign() < 0 && performed % 2 == 1) return -r;
  return r;
}

}  // namespace

UniPoly UniPoly::monomial(Rational c, int k) {
  if (k < 0) throw std::invalid_argument("UniPoly::monomial: negative degree");
  UniPoly p;
  if (!c.is_zero()) {
    p.coeffs_.assign(static_cast<size_t>(k) + 1, Rational(0));
    p.coeffs_.back() = std::move(c);
  }
  return p;
}

void UniPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

const Rational& UniPoly::lc() const {
  if (coeffs_.empty()) throw std::domain_error("UniPoly::lc: zero polynomial");
  return coeffs_.back();
}

const Rational& UniPoly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return kZero;
  return coeffs_[static_cast<size_t>(k)];
}

Rational UniPoly::eval(const Rational& x) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

IntervalQ UniPoly::eval(const IntervalQ& x) const {
  IntervalQ acc(Rational(0), Rational(0));
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * x + IntervalQ::point(*it);
  return acc;
}

double UniPoly::eval_double(double x) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * x + it->to_double();
  return acc;
}

UniPoly UniPoly::derivative() const {
  UniPoly d;
  if (coeffs_.size() <= 1) return d;
  d.coeffs_.resize(coeffs_.size() - 1);
  for (size_t i = 1; i < coeffs_.size(); ++i)
    d.coeffs_[i - 1] = Rational(static_cast<long>(i)) * coeffs_[i];
  d.trim();
  return d;
}

UniPoly UniPoly::operator-() const {
  UniPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
  for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
  for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  UniPoly r;
  if (a.is_zero() || b.is_zero()) return r;
  r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
  for (size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (size_t j = 0; j < b.coeffs_.size(); ++j)
      r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  r.trim();
  return r;
}

UniPoly operator*(const Rational& c, UniPoly p) {
  if (c.is_zero()) return UniPoly();
  for (auto& a : p.coeffs_) a *= c;
  return p;
}

UniPoly UniPoly::pow(unsigned e) const {
  UniPoly r = UniPoly::one();
  UniPoly base = *this;
  while (e) {
    if (e & 1u) r = r * base;
    e >>= 1u;
    if (e) base = base * base;
  }
  return r;
}

void UniPoly::divmod(const UniPoly& a, const UniPoly& b, UniPoly& quo, UniPoly& rem) {
  if (b.is_zero()) throw std::domain_error("UniPoly::divmod: division by zero polynomial");
  quo = UniPoly();
  rem = a;
  int db = b.degree();
  const Rational& lb = b.lc();
  while (!rem.is_zero() && rem.degree() >= db) {
    int k = rem.degree() - db;
    Rational c = rem.lc() / lb;
    UniPoly term = UniPoly::monomial(c, k);
    quo += term;
    rem -= term * b;
  }
}

UniPoly UniPoly::div_exact(const UniPoly& a, const UniPoly& b) {
  UniPoly q, r;
  divmod(a, b, q, r);
  if (!r.is_zero()) throw std::domain_error("UniPoly::div_exact: inexact division");
  return q;
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return *this;
  return lc().inv() * *this;
}

UniPoly UniPoly::taylor_shift(const Rational& c) const {
  // Horner in the shifted variable: p(t+c) built from the top coefficient down.
  UniPoly r;
  UniPoly shift = UniPoly(std::vector<Rational>{c, Rational(1)});
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    r = r * shift;
    r += UniPoly(*it);
  }
  return r;
}

UniPoly UniPoly::scale_arg(const Rational& c) const {
  UniPoly r = *this;
  Rational f(1);
  for (size_t i = 1; i < r.coeffs_.size(); ++i) {
    f *= c;
    r.coeffs_[i] *= f;
  }
  r.trim();
  return r;
}

UniPoly UniPoly::reverse() const {
  UniPoly r = *this;
  std::reverse(r.coeffs_.begin(), r.coeffs_.end());
  r.trim();
  return r;
}

UniPoly UniPoly::primitive_integer() const {
  if (is_zero()) return *this;
  mpz_class den_lcm(1);
  for (const auto& c : coeffs_)
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.den().get_mpz_t());
  mpz_class num_gcd(0);
  for (const auto& c : coeffs_) {
    mpz_class scaled = c.num() * (den_lcm / c.den());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled.get_mpz_t());
  }
  // num_gcd > 0 since the polynomial is nonzero.
  Rational factor{mpq_class(den_lcm) / mpq_class(num_gcd)};
  return Rational(factor) * *this;
}

Rational UniPoly::root_bound() const {
  if (is_zero()) return Rational(1);
  Rational m(0);
  const Rational& l = lc();
  for (size_t i = 0; i + 1 < coeffs_.size(); ++i)
    m = max(m, (coeffs_[i] / l).abs());
  return Rational(1) + m;
}

std::string UniPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const Rational& c = coeff(k);
    if (c.is_zero()) continue;
    Rational a = c.abs();
    if (first) {
      if (c.sign() < 0) os << "-";
      first = false;
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    bool unit = a.is_one() && k > 0;
    if (!unit) os << a.to_string();
    if (k > 0) {
      if (!unit) os << "*";
      os << var;
      if (k > 1) os << "^" << k;
    }
  }
  return os.str();
}

UniPoly upoly_gcd(const UniPoly& p, const UniPoly& q) {
  if (p.is_zero() && q.is_zero()) return UniPoly::zero();
  if (p.is_zero()) return q.monic();
  if (q.is_zero()) return p.monic();
  UniPoly a = p.primitive_integer();
  UniPoly b = q.primitive_integer();
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    if (b.degree() == 0) return UniPoly::one();
    UniPoly r = prem_positive(a, b);
    a = std::move(b);
    b = r.is_zero() ? UniPoly::zero() : r.primitive_integer();
  }
  return a.monic();
}

UniPoly squarefree_part(const UniPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("squarefree_part: zero polynomial");
  if (p.degree() == 0) return UniPoly::one();
  UniPoly g = upoly_gcd(p, p.derivative());
  return UniPoly::div_exact(p, g).monic();
}

Rational resultant(const UniPoly& p, const UniPoly& q) {
  // Fraction-free would be faster; exact Gaussian elimination on the
  // Sylvester matrix over Q is simple and the call sites are small.
  if (p.is_zero() || q.is_zero()) return Rational(0);
  int m = p.degree(), n = q.degree();
  if (m == 0) return p.lc().pow(static_cast<unsigned long>(n));
  if (n == 0) return q.lc().pow(static_cast<unsigned long>(m));
  int size = m + n;
  std::vector<std::vector<Rational>> s(static_cast<size_t>(size),
                                       std::vector<Rational>(static_cast<size_t>(size), Rational(0)));
  for (int row = 0; row < n; ++row)
    for (int k = 0; k <= m; ++k)
      s[static_cast<size_t>(row)][static_cast<size_t>(row + k)] = p.coeff(m - k);
  for (int row = 0; row < m; ++row)
    for (int k = 0; k <= n; ++k)
      s[static_cast<size_t>(n + row)][static_cast<size_t>(row + k)] = q.coeff(n - k);
  Rational det(1);
  for (int col = 0; col < size; ++col) {
    int pivot = -1;
    for (int r = col; r < size; ++r)
      if (!s[static_cast<size_t>(r)][static_cast<size_t>(col)].is_zero()) { pivot = r; break; }
    if (pivot < 0) return Rational(0);
    if (pivot != col) {
      std::swap(s[static_cast<size_t>(pivot)], s[static_cast<size_t>(col)]);
      det = -det;
    }
    const Rational pv = s[static_cast<size_t>(col)][static_cast<size_t>(col)];
    det *= pv;
    for (int r = col + 1; r < size; ++r) {
      Rational f = s[static_cast<size_t>(r)][static_cast<size_t>(col)] / pv;
      if (f.is_zero()) continue;
      for (int c2 = col; c2 < size; ++c2)
        s[static_cast<size_t>(r)][static_cast<size_t>(c2)] -=
            f * s[static_cast<size_t>(col)][static_cast<size_t>(c2)];
    }
  }
  return det;
}

SturmChain SturmChain::build(const UniPoly& p) {
  SturmChain ch;
  if (p.is_zero()) throw std::invalid_argument("SturmChain: zero polynomial");
  UniPoly a = p.primitive_integer();
  ch.seq_.push_back(a);
  if (a.degree() == 0) return ch;
  UniPoly b = a.derivative().primitive_integer();
  ch.seq_.push_back(b);
  while (!ch.seq_.back().is_zero() && ch.seq_.back().degree() > 0) {
    const UniPoly& s0 = ch.seq_[ch.seq_.size() - 2];
    const UniPoly& s1 = ch.seq_.back();
    UniPoly r = prem_positive(s0, s1);
    if (r.is_zero()) break;
    ch.seq_.push_back((-r).primitive_integer());
  }
  return ch;
}

namespace {
int count_variations(const std::vector<int>& signs) {
  int v = 0, prev = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++v;
    prev = s;
  }
  return v;
}
}  // namespace

int SturmChain::variations_at(const Rational& x) const {
  std::vector<int> signs;
  signs.reserve(seq_.size());
  for (const auto& s : seq_) signs.push_back(s.eval(x).sign());
  return count_variations(signs);
}

int SturmChain::variations_neg_inf() const {
  std::vector<int> signs;
  signs.reserve(seq_.size());
  for (const auto& s : seq_) {
    if (s.is_zero()) { signs.push_back(0); continue; }
    int sg = s.lc().sign();
    if (s.degree() % 2 == 1) sg = -sg;
    signs.push_back(sg);
  }
  return count_variations(signs);
}

int SturmChain::variations_pos_inf() const {
  std::vector<int> signs;
  signs.reserve(seq_.size());
  for (const auto& s : seq_)
    signs.push_back(s.is_zero() ? 0 : s.lc().sign());
  return count_variations(signs);
}

int SturmChain::count_halfopen(const Rational& a, const Rational& b) const {
  if (b < a) throw std::invalid_argument("SturmChain::count_halfopen: b < a");
  return variations_at(a) - variations_at(b);
}

int SturmChain::count_whole_line() const {
  return variations_neg_inf() - variations_pos_inf();
}

namespace {

// Move x off a root of p by dir * (1/(1+base)) * 2^-k for the first k that
// lands on a non-root; each attempt restarts from the original x.
Rational nudge_off_root(const UniPoly& p, const Rational& x, int dir, const Rational& base) {
  if (!p.eval(x).is_zero()) return x;
  Rational eps = Rational(1) / (Rational(1) + base);
  for (;;) {
    Rational cand = x + Rational(dir) * eps;
    if (!p.eval(cand).is_zero()) return cand;
    eps /= Rational(2);
  }
}

}  // namespace

int count_real_roots(const UniPoly& p, const IntervalQ& interval) {
  if (p.is_zero()) throw std::invalid_argument("count_real_roots: zero polynomial");
  Rational base(1);
  for (const auto& c : p.coeffs()) base = max(base, c.abs());
  Rational a = nudge_off_root(p, interval.lo, +1, base);
  Rational b = nudge_off_root(p, interval.hi, -1, base);
  if (b < a) return 0;
  SturmChain ch = SturmChain::build(p);
  return ch.count_halfopen(a, b);
}

int count_real_roots(const UniPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("count_real_roots: zero polynomial");
  if (p.degree() == 0) return 0;
  return SturmChain::build(p).count_whole_line();
}

namespace {

// Shrink delta until (m - delta, m + delta] holds exactly the root m and the
// offset endpoints are not roots themselves.
Rational isolate_point_gap(const SturmChain& ch, const Rational& m, Rational delta) {
  for (;;) {
    const UniPoly& p = ch.poly();
    if (!p.eval(m - delta).is_zero() && !p.eval(m + delta).is_zero() &&
        ch.count_halfopen(m - delta, m + delta) == 1)
      return delta;
    delta /= Rational(2);
  }
}

void isolate_rec(const SturmChain& ch, const Rational& lo, const Rational& hi,
                 int count, std::vector<IntervalQ>& out) {
  if (count == 0) return;
  if (count == 1) {
    out.emplace_back(lo, hi);
    return;
  }
  Rational m = (lo + hi) / Rational(2);
  if (ch.poly().eval(m).is_zero()) {
    Rational delta = isolate_point_gap(ch, m, (hi - lo) / Rational(4));
    int left = ch.count_halfopen(lo, m - delta);
    int right = ch.count_halfopen(m + delta, hi);
    isolate_rec(ch, lo, m - delta, left, out);
    out.push_back(IntervalQ::point(m));
    isolate_rec(ch, m + delta, hi, right, out);
    return;
  }
  int left = ch.count_halfopen(lo, m);
  isolate_rec(ch, lo, m, left, out);
  isolate_rec(ch, m, hi, count - left, out);
}

}  // namespace

std::vector<IntervalQ> isolate_real_roots(const UniPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("isolate_real_roots: zero polynomial");
  std::vector<IntervalQ> out;
  if (p.degree() == 0) return out;
  UniPoly sf = squarefree_part(p);
  if (sf.degree() == 0) return out;
  SturmChain ch = SturmChain::build(sf);
  Rational b = sf.root_bound();
  int total = ch.count_halfopen(-b, b);
  isolate_rec(ch, -b, b, total, out);
  // Tighten: callers expect isolating intervals near the root, not spans of
  // the whole root bound.
  const Rational kMaxWidth(1, 4);
  for (auto& iv : out)
    while (!iv.is_point() && iv.width() > kMaxWidth) iv = refine_root_interval(ch, iv);
  // Bisection can leave neighbours sharing a (non-root) endpoint; detach the
  // right interval by raising its lo toward its root until the gap is clear.
  for (size_t i = 1; i < out.size(); ++i) {
    if (out[i - 1].hi < out[i].lo) continue;
    Rational t = out[i].lo;
    Rational step = (out[i].hi - t) / Rational(2);
    for (;;) {
      Rational cand = t + step;
      if (ch.count_halfopen(t, cand) == 0) { out[i].lo = cand; break; }
      step /= Rational(2);
    }
  }
  return out;
}

IntervalQ refine_root_interval(const SturmChain& chain, const IntervalQ& iv) {
  if (iv.is_point()) return iv;
  Rational m = iv.mid();
  if (chain.poly().eval(m).is_zero()) return IntervalQ::point(m);
  if (chain.count_halfopen(iv.lo, m) == 1) return IntervalQ(iv.lo, m);
  return IntervalQ(m, iv.hi);
}

}  // namespace bilim
