#include <stdexcept>

#include "bilim/algebraic.hpp"

namespace bilim {

MPoly MPoly::variable(int level) {
  if (level < 1) throw std::invalid_argument("MPoly: variable level must be >= 1");
  std::vector<MPoly> cs(2);
  cs[0] = MPoly(Rational(0));
  cs[1] = MPoly(Rational(1));
  return from_coeffs(level, std::move(cs));
}

const Rational& MPoly::constant_value() const {
  if (lvl_ != 0) throw std::logic_error("MPoly: not a constant");
  return cval_;
}

int MPoly::degree_top() const {
  return lvl_ == 0 ? 0 : static_cast<int>(cs_.size()) - 1;
}

std::vector<MPoly> MPoly::coeffs_at(int lvl) const {
  if (lvl < lvl_) throw std::logic_error("MPoly: coefficient view below level");
  if (lvl_ == lvl && lvl_ > 0) return cs_;
  return {*this};
}

MPoly MPoly::from_coeffs(int lvl, std::vector<MPoly> coeffs) {
  while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();
  if (coeffs.empty()) return MPoly();
  if (coeffs.size() == 1) return std::move(coeffs[0]);
  MPoly r;
  r.lvl_ = lvl;
  r.cval_ = Rational(0);
  r.cs_ = std::move(coeffs);
  return r;
}

bool MPoly::operator==(const MPoly& o) const {
  if (lvl_ != o.lvl_) return false;
  if (lvl_ == 0) return cval_ == o.cval_;
  return cs_ == o.cs_;
}

bool MPoly::ratio_rec(const MPoly& a, const MPoly& b,
                      std::optional<Rational>& q) {
  if (b.is_zero()) return a.is_zero();
  if (a.is_zero()) {
    if (q && q->sign() != 0) return false;
    q = Rational(0);
    return true;
  }
  if (a.lvl_ != b.lvl_) return false;
  if (a.lvl_ == 0) {
    Rational r = a.cval_ / b.cval_;
    if (q) return *q == r;
    q = std::move(r);
    return true;
  }
  if (a.cs_.size() != b.cs_.size()) return false;
  for (size_t i = 0; i < a.cs_.size(); ++i)
    if (!ratio_rec(a.cs_[i], b.cs_[i], q)) return false;
  return true;
}

bool MPoly::proportional(const MPoly& a, const MPoly& b, Rational& q) {
  std::optional<Rational> r;
  if (!ratio_rec(a, b, r)) return false;
  q = r ? std::move(*r) : Rational(0);
  return true;
}

MPoly MPoly::operator-() const {
  if (lvl_ == 0) return MPoly(-cval_);
  std::vector<MPoly> cs;
  cs.reserve(cs_.size());
  for (const MPoly& c : cs_) cs.push_back(-c);
  return from_coeffs(lvl_, std::move(cs));
}

MPoly operator+(const MPoly& a, const MPoly& b) {
  if (a.lvl_ == 0 && b.lvl_ == 0) return MPoly(a.cval_ + b.cval_);
  int lvl = std::max(a.lvl_, b.lvl_);
  std::vector<MPoly> ca = a.coeffs_at(lvl), cb = b.coeffs_at(lvl);
  if (ca.size() < cb.size()) ca.resize(cb.size());
  for (size_t i = 0; i < cb.size(); ++i) ca[i] = ca[i] + cb[i];
  return MPoly::from_coeffs(lvl, std::move(ca));
}

MPoly operator-(const MPoly& a, const MPoly& b) { return a + (-b); }

MPoly operator*(const MPoly& a, const MPoly& b) {
  if (a.is_zero() || b.is_zero()) return MPoly();
  if (a.lvl_ == 0 && b.lvl_ == 0) return MPoly(a.cval_ * b.cval_);
  int lvl = std::max(a.lvl_, b.lvl_);
  std::vector<MPoly> ca = a.coeffs_at(lvl), cb = b.coeffs_at(lvl);
  std::vector<MPoly> r(ca.size() + cb.size() - 1);
  for (size_t i = 0; i < ca.size(); ++i) {
    if (ca[i].is_zero()) continue;
    for (size_t j = 0; j < cb.size(); ++j) {
      if (cb[j].is_zero()) continue;
      r[i + j] = r[i + j] + ca[i] * cb[j];
    }
  }
  return MPoly::from_coeffs(lvl, std::move(r));
}

MPoly operator*(const Rational& c, const MPoly& a) { return MPoly(c) * a; }

MPoly MPoly::pow(unsigned e) const {
  MPoly r{Rational(1)};
  MPoly base = *this;
  while (e > 0) {
    if (e & 1u) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

MPoly MPoly::subst_top(const MPoly& val) const {
  if (lvl_ == 0) return *this;
  MPoly acc;
  for (size_t i = cs_.size(); i-- > 0;) acc = acc * val + cs_[i];
  return acc;
}

MPoly MPoly::remap_vars_above(int threshold, int by) const {
  if (lvl_ <= threshold || by == 0) return *this;
  std::vector<MPoly> cs;
  cs.reserve(cs_.size());
  for (const MPoly& c : cs_) cs.push_back(c.remap_vars_above(threshold, by));
  return from_coeffs(lvl_ + by, std::move(cs));
}

IntervalQ MPoly::eval_box(const std::vector<IntervalQ>& box) const {
  if (lvl_ == 0) return IntervalQ::point(cval_);
  if (static_cast<size_t>(lvl_) > box.size())
    throw std::logic_error("MPoly: box too small for level");
  const IntervalQ& x = box[lvl_ - 1];
  IntervalQ acc = IntervalQ::point(Rational(0));
  for (size_t i = cs_.size(); i-- > 0;) acc = acc * x + cs_[i].eval_box(box);
  return acc;
}

void MPoly::divmod_monic(const MPoly& a, const MPoly& d, int lvl, MPoly& q,
                         MPoly& r) {
  int m = d.degree_top();
  if (d.level() != lvl || m < 1 || !(d.cs_.back() == MPoly(Rational(1))))
    throw std::logic_error("MPoly: divisor not monic at level");
  std::vector<MPoly> rc = a.coeffs_at(lvl);
  std::vector<MPoly> qc(rc.size() > d.cs_.size() ? rc.size() - m : 1);
  while (static_cast<int>(rc.size()) - 1 >= m) {
    if (rc.back().is_zero()) {
      rc.pop_back();
      continue;
    }
    int k = static_cast<int>(rc.size()) - 1 - m;
    MPoly c = rc.back();
    qc[k] = c;
    for (int i = 0; i < m; ++i) rc[i + k] = rc[i + k] - c * d.cs_[i];
    rc.pop_back();
  }
  q = from_coeffs(lvl, std::move(qc));
  r = from_coeffs(lvl, std::move(rc));
}

}  // namespace bilim
