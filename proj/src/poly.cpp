#include "contests/poly.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "contests/errors.hpp"

namespace contests {

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::operator+(const Poly& o) const {
  std::vector<Rational> r(std::max(c_.size(), o.c_.size()), Rational(0));
  for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
  return Poly(std::move(r));
}

Poly Poly::operator-(const Poly& o) const {
  std::vector<Rational> r(std::max(c_.size(), o.c_.size()), Rational(0));
  for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
  return Poly(std::move(r));
}

Poly Poly::operator*(const Poly& o) const {
  if (is_zero() || o.is_zero()) return Poly{};
  std::vector<Rational> r(c_.size() + o.c_.size() - 1, Rational(0));
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  return Poly(std::move(r));
}

Poly Poly::scaled(const Rational& s) const {
  if (s == 0) return Poly{};
  std::vector<Rational> r(c_);
  for (auto& v : r) v *= s;
  return Poly(std::move(r));
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return Poly{};
  std::vector<Rational> r(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * static_cast<int>(i);
  return Poly(std::move(r));
}

Rational Poly::eval(const Rational& x) const {
  Rational acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

double Poly::eval(double x) const {
  // Horner with error-free transformations (compensated Horner).
  double s = 0.0, comp = 0.0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    double ph = s * x;
    double pl = std::fma(s, x, -ph);
    double ci = to_double(*it);
    double sh = ph + ci;
    double z = sh - ph;
    double sl = (ph - (sh - z)) + (ci - z);
    s = sh;
    comp = comp * x + (pl + sl);
  }
  return s + comp;
}

int Poly::trailing_zero_count() const {
  int m = 0;
  while (m < static_cast<int>(c_.size()) && c_[m] == 0) ++m;
  return is_zero() ? 0 : m;
}

Poly Poly::deflate_zero(int m) const {
  if (m == 0) return *this;
  if (trailing_zero_count() < m) throw std::logic_error("deflate_zero: nonzero low coefficient");
  return Poly(std::vector<Rational>(c_.begin() + m, c_.end()));
}

Poly Poly::deflate_root(const Rational& r) const {
  if (is_zero()) throw std::logic_error("deflate_root on zero poly");
  std::vector<Rational> q(c_.size() - 1);
  Rational carry(0);
  for (int i = degree(); i >= 1; --i) {
    carry = carry * r + c_[i];
    q[i - 1] = carry;
  }
  if (carry * r + c_[0] != 0) throw std::logic_error("deflate_root: not a root");
  return Poly(std::move(q));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& d) const {
  if (d.is_zero()) throw std::logic_error("division by zero polynomial");
  std::vector<Rational> rem(c_);
  int dd = d.degree();
  int qd = degree() - dd;
  if (qd < 0) return {Poly{}, *this};
  std::vector<Rational> q(qd + 1, Rational(0));
  for (int i = qd; i >= 0; --i) {
    Rational f = rem[i + dd] / d.c_[dd];
    if (f == 0) continue;
    q[i] = f;
    for (int j = 0; j <= dd; ++j) rem[i + j] -= f * d.c_[j];
  }
  return {Poly(std::move(q)), Poly(std::move(rem))};
}

Poly Poly::normalized() const {
  if (is_zero()) return *this;
  Rational mx(0);
  for (const auto& v : c_) {
    Rational a = v < 0 ? Rational(-v) : v;
    if (a > mx) mx = a;
  }
  return scaled(Rational(1) / mx);
}

std::string Poly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    if (c_[i] == 0) continue;
    if (!first) os << (c_[i] > 0 ? " + " : " - ");
    else if (c_[i] < 0) os << "-";
    Rational a = c_[i] < 0 ? Rational(-c_[i]) : c_[i];
    if (a != 1 || i == 0) os << a.str();
    if (i >= 1) os << (a != 1 ? "*X" : "X");
    if (i >= 2) os << "^" << i;
    first = false;
  }
  return os.str();
}

Poly poly_gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = a.divmod(b).second.normalized();
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return a.scaled(Rational(1) / a.leading());  // monic
}

Poly squarefree_part(const Poly& p) {
  if (p.degree() <= 1) return p;
  Poly g = poly_gcd(p, p.derivative());
  if (g.degree() <= 0) return p;
  auto [q, r] = p.divmod(g);
  if (!r.is_zero()) throw std::logic_error("squarefree_part: inexact division");
  return q;
}

std::vector<Poly> sturm_chain(const Poly& p) {
  std::vector<Poly> chain;
  chain.push_back(p.normalized());
  Poly d = p.derivative();
  if (d.is_zero()) return chain;
  chain.push_back(d.normalized());
  while (true) {
    const Poly& a = chain[chain.size() - 2];
    const Poly& b = chain.back();
    Poly r = a.divmod(b).second;
    if (r.is_zero()) break;
    chain.push_back(r.scaled(Rational(-1)).normalized());
    if (chain.back().degree() == 0) break;
  }
  return chain;
}

int sturm_sign_changes(const std::vector<Poly>& chain, const Rational& x) {
  int changes = 0, prev = 0;
  for (const auto& q : chain) {
    int s = sign_of(q.eval(x));
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++changes;
    prev = s;
  }
  return changes;
}

namespace {

// Distinct roots of the squarefree poly sf in the half-open interval (a, b],
// assuming sf(a) != 0.
int count_half_open(const std::vector<Poly>& chain, const Rational& a, const Rational& b) {
  return sturm_sign_changes(chain, a) - sturm_sign_changes(chain, b);
}

}  // namespace

int count_roots_open(const Poly& p, const Rational& a, const Rational& b) {
  if (p.is_zero()) throw std::logic_error("count_roots_open on zero poly");
  if (!(a < b)) return 0;
  Poly sf = squarefree_part(p);
  while (sf.eval(a) == 0) sf = sf.deflate_root(a);
  while (sf.eval(b) == 0) sf = sf.deflate_root(b);
  if (sf.degree() <= 0) return 0;
  auto chain = sturm_chain(sf);
  return count_half_open(chain, a, b);
}

RootList isolate_roots_unit(const Poly& p) {
  if (p.is_zero()) throw std::logic_error("isolate_roots_unit on zero polynomial");
  RootList out;
  out.multiplicity_at_zero = p.trailing_zero_count();
  Poly q = p.deflate_zero(out.multiplicity_at_zero);
  if (out.multiplicity_at_zero > 0)
    out.intervals.push_back({Rational(0), Rational(0), true});
  if (q.degree() <= 0) return out;

  Poly sf = squarefree_part(q);
  std::vector<RootInterval> found;

  // Exact roots at the right endpoint.
  while (sf.eval(Rational(1)) == 0) {
    found.push_back({Rational(1), Rational(1), true});
    sf = sf.deflate_root(Rational(1));
  }
  // Keep only the first copy of 1; distinct roots only.
  if (found.size() > 1) found.resize(1);

  // Subdivide (0, 1). When a bisection midpoint hits a root exactly the root
  // is deflated and both halves stay on the stack, so recorded intervals are
  // pairwise disjoint and sorted order reflects root order. Segment counts are
  // recomputed at pop time against the current (possibly deflated) chain;
  // segment endpoints are never roots of the current sf.
  if (sf.degree() >= 1) {
    auto chain = sturm_chain(sf);
    struct Seg { Rational a, b; };
    std::vector<Seg> stack{{Rational(0), Rational(1)}};
    // sf(1) != 0 here, so (a, b] counting equals (a, b) counting.
    while (!stack.empty() && sf.degree() >= 1) {
      Seg s = stack.back();
      stack.pop_back();
      int n = count_half_open(chain, s.a, s.b);
      if (n == 0) continue;
      Rational mid = (s.a + s.b) / 2;
      if (sf.eval(mid) == 0) {
        found.push_back({mid, mid, true});
        sf = sf.deflate_root(mid);
        if (sf.degree() >= 1) chain = sturm_chain(sf);
        stack.push_back({s.a, mid});
        stack.push_back({mid, s.b});
        continue;
      }
      if (n == 1) {
        found.push_back({s.a, s.b, false});
        continue;
      }
      stack.push_back({s.a, mid});
      stack.push_back({mid, s.b});
    }
  }

  out.squarefree = sf;
  std::sort(found.begin(), found.end(),
            [](const RootInterval& x, const RootInterval& y) {
              return x.lo != y.lo ? x.lo < y.lo : x.hi < y.hi;
            });
  for (auto& iv : found) out.intervals.push_back(std::move(iv));
  return out;
}

RootResult refine_root(const Poly& sf, RootInterval iv, double tol) {
  RootResult res;
  if (iv.exact) {
    res.exact = true;
    res.exact_value = iv.lo;
    res.lo = res.hi = iv.lo;
    res.value = to_double(iv.lo);
    return res;
  }
  Rational lo = iv.lo, hi = iv.hi;
  int slo = sign_of(sf.eval(lo));
  if (slo == 0) {  // bracket endpoint happens to be the root
    res.exact = true;
    res.exact_value = lo;
    res.lo = res.hi = lo;
    res.value = to_double(lo);
    return res;
  }
  while (to_double(hi - lo) >= tol) {
    Rational mid = (lo + hi) / 2;
    int sm = sign_of(sf.eval(mid));
    if (sm == 0) {
      res.exact = true;
      res.exact_value = mid;
      res.lo = res.hi = mid;
      res.value = to_double(mid);
      return res;
    }
    if (sm == slo)
      lo = mid;
    else
      hi = mid;
  }
  res.lo = lo;
  res.hi = hi;
  res.value = to_double((lo + hi) / 2);

  // Snap small-denominator rational roots (bisection midpoints are dyadic and
  // would otherwise never land on e.g. 1/3).
  double x = res.value;
  double num = x, a0 = std::floor(num);
  BigInt p0(1), p1(static_cast<long long>(a0)), q0(0), q1(1);
  double frac = num - a0;
  for (int it = 0; it < 30 && q1 <= 1000000; ++it) {
    Rational cand(p1, q1);
    if (cand > res.lo && cand < res.hi && sf.eval(cand) == 0) {
      res.exact = true;
      res.exact_value = cand;
      res.lo = res.hi = cand;
      res.value = to_double(cand);
      return res;
    }
    if (frac < 1e-15) break;
    num = 1.0 / frac;
    a0 = std::floor(num);
    frac = num - a0;
    BigInt a(static_cast<long long>(a0));
    BigInt p2 = a * p1 + p0, q2 = a * q1 + q0;
    p0 = p1; p1 = p2; q0 = q1; q1 = q2;
  }
  return res;
}

RootResult highest_root_unit(const Poly& p, double tol) {
  RootList roots = isolate_roots_unit(p);
  if (roots.intervals.empty()) throw NoRootInUnit("no real root of polynomial in [0,1]");
  RootInterval iv = roots.intervals.back();
  if (iv.exact) {
    RootResult res;
    res.exact = true;
    res.exact_value = iv.lo;
    res.lo = res.hi = iv.lo;
    res.value = to_double(iv.lo);
    return res;
  }
  return refine_root(roots.squarefree, iv, tol);
}

}  // namespace contests
