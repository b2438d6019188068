#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "contests/rational.hpp"

namespace contests {

/// Dense univariate polynomial with exact rational coefficients,
/// stored lowest degree first.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Poly zero() { return Poly{}; }
  static Poly constant(Rational v) { return Poly{{std::move(v)}}; }
  static Poly identity() { return Poly{{Rational(0), Rational(1)}}; }  // p(X) = X

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero poly
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(int i) const {
    return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : Rational(0);
  }
  const Rational& leading() const { return c_.back(); }

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly scaled(const Rational& s) const;
  bool operator==(const Poly& o) const { return c_ == o.c_; }

  Poly derivative() const;

  Rational eval(const Rational& x) const;
  /// Compensated Horner evaluation in doubles.
  double eval(double x) const;

  int trailing_zero_count() const;
  /// Divide by X^m (requires the first m coefficients to be zero).
  Poly deflate_zero(int m) const;
  /// Synthetic division by (X - r); requires p(r) == 0 exactly.
  Poly deflate_root(const Rational& r) const;

  /// Euclidean division; returns (quotient, remainder).
  std::pair<Poly, Poly> divmod(const Poly& d) const;

  /// Scale so the largest |coefficient| is 1 (sign preserved). Exact roots unchanged.
  Poly normalized() const;

  std::string to_string() const;

 private:
  void trim();
  std::vector<Rational> c_;
};

Poly poly_gcd(Poly a, Poly b);

/// p with all repeated factors removed: p / gcd(p, p').
Poly squarefree_part(const Poly& p);

struct RootInterval {
  Rational lo, hi;   // lo == hi when the root is known exactly
  bool exact = false;
  double approx() const { return to_double((lo + hi) / 2); }
};

struct RootList {
  std::vector<RootInterval> intervals;  // ascending, pairwise disjoint
  int multiplicity_at_zero = 0;
  // squarefree part with all exactly-found roots deflated; the open intervals
  // bracket exactly one simple root of this polynomial each
  Poly squarefree;
};

/// Sturm chain of p (signs normalized per step to keep coefficients small).
std::vector<Poly> sturm_chain(const Poly& p);

/// Number of sign changes in the chain evaluated at x.
int sturm_sign_changes(const std::vector<Poly>& chain, const Rational& x);

/// Distinct real roots of p in the open interval (a, b). Roots of p at a or b
/// are deflated away before counting.
int count_roots_open(const Poly& p, const Rational& a, const Rational& b);

/// All real roots of p in [0, 1], each bracketed by an isolating interval
/// certified by exact Sturm counts. A root at 0 appears as a degenerate
/// interval with its multiplicity reported separately.
RootList isolate_roots_unit(const Poly& p);

struct RootResult {
  double value = 0.0;
  Rational lo, hi;  // exact bracket
  bool exact = false;
  Rational exact_value;  // valid when exact
};

/// Largest root of p in [0, 1], refined by bisection on the isolating interval
/// until the bracket is narrower than tol. Rational roots with denominator up
/// to ~1e6 are snapped to their exact value.
RootResult highest_root_unit(const Poly& p, double tol = 1e-12);

/// Refine a single isolating interval of sf (squarefree) by bisection.
RootResult refine_root(const Poly& sf, RootInterval iv, double tol);

}  // namespace contests
