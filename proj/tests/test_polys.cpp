#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "contests/errors.hpp"
#include "contests/poly.hpp"

using namespace contests;

namespace {

Poly make(std::initializer_list<long> cs) {
  std::vector<Rational> v;
  for (long c : cs) v.push_back(Rational(c));
  return Poly(v);
}

}  // namespace

TEST_CASE("arithmetic and derivative") {
  // d/dX of 2X^3 - X^2
  Poly p = make({0, 0, -1, 2});
  CHECK(p.derivative() == make({0, -2, 6}));

  // X * (1 - X)
  Poly x = Poly::identity();
  Poly one_minus_x = make({1, -1});
  CHECK(x * one_minus_x == make({0, 1, -1}));

  CHECK(make({1, 2}) + make({3, -2, 5}) == make({4, 0, 5}));
  CHECK(make({1, 2}) - make({1, 2}) == Poly::zero());
}

TEST_CASE("evaluation") {
  // f_1 for Tullock (1,2,1) evaluated at 1 must equal 1
  Poly f0 = make({0, 0, 3, -14, 12});
  CHECK(f0.eval(Rational(1)) == 1);
  CHECK(f0.eval(1.0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(f0.eval(Rational(1, 2)) == Rational(3, 4) - Rational(14, 8) + Rational(12, 16));
}

TEST_CASE("divmod, gcd, squarefree") {
  Poly p = make({0, 0, 1}) * make({-1, 2});  // X^2 (2X - 1)
  auto [q, r] = p.divmod(make({-1, 2}));
  CHECK(r.is_zero());
  CHECK(q == make({0, 0, 1}));

  Poly sq = make({-1, 1}) * make({-1, 1}) * make({2, 1});
  Poly sf = squarefree_part(sq);
  CHECK(sf.degree() == 2);
  CHECK(sf.eval(Rational(1)) == 0);
  CHECK(sf.eval(Rational(-2)) == 0);
}

TEST_CASE("root isolation on [0,1]") {
  // X^2 (12X^2 - 14X + 3): roots 0 (double), (7 +- sqrt(13))/12
  Poly p = make({0, 0, 3, -14, 12});
  RootList rl = isolate_roots_unit(p);
  CHECK(rl.multiplicity_at_zero == 2);
  REQUIRE(rl.intervals.size() == 3);
  double r1 = (7.0 - std::sqrt(13.0)) / 12.0;
  double r2 = (7.0 + std::sqrt(13.0)) / 12.0;
  CHECK(rl.intervals[1].lo.convert_to<double>() <= r1);
  CHECK(rl.intervals[1].hi.convert_to<double>() >= r1);
  CHECK(rl.intervals[2].lo.convert_to<double>() <= r2);
  CHECK(rl.intervals[2].hi.convert_to<double>() >= r2);

  // X^2: single multiple root at 0
  RootList rz = isolate_roots_unit(make({0, 0, 1}));
  CHECK(rz.multiplicity_at_zero == 2);
  CHECK(rz.intervals.size() == 1);

  // 2X^2 - X: {0, 1/2}
  RootList rh = isolate_roots_unit(make({0, -1, 2}));
  CHECK(rh.multiplicity_at_zero == 1);
  REQUIRE(rh.intervals.size() == 2);
  CHECK(rh.intervals[1].exact);
  CHECK(rh.intervals[1].lo == Rational(1, 2));
}

TEST_CASE("highest root refinement") {
  Poly p = make({0, 0, 3, -14, 12});
  RootResult r = highest_root_unit(p);
  CHECK(r.value == doctest::Approx((7.0 + std::sqrt(13.0)) / 12.0).epsilon(1e-12));

  // five-player sequential Tullock f_0
  Poly f5 = make({0, 0, 1, -30, 150, -240, 120});
  RootResult r5 = highest_root_unit(f5);
  CHECK(r5.value == doctest::Approx(0.9586842665527076).epsilon(1e-10));

  // 48X^4 - 62X^3 + 15X^2 -> (31 + sqrt(241))/48
  Poly p811 = make({0, 0, 15, -62, 48});
  RootResult r811 = highest_root_unit(p811);
  CHECK(r811.value == doctest::Approx((31.0 + std::sqrt(241.0)) / 48.0).epsilon(1e-12));

  // rational roots snap to exact values
  Poly ph = make({0, -1, 2});
  RootResult rh = highest_root_unit(ph);
  CHECK(rh.exact);
  CHECK(rh.exact_value == Rational(1, 2));

  Poly pt = make({0, 0, -1, 3}).scaled(Rational(1, 3));  // X^2 (X - 1/3)
  RootResult rt = highest_root_unit(pt);
  CHECK(rt.exact);
  CHECK(rt.exact_value == Rational(1, 3));

  CHECK_THROWS_AS(highest_root_unit(make({1, 0, 1})), NoRootInUnit);
}

TEST_CASE("highest root below 1 when p(1) positive") {
  Poly p = make({0, 0, 3, -14, 12});
  CHECK(p.eval(Rational(1)) == 1);
  RootResult r = highest_root_unit(p);
  CHECK(r.value < 1.0);
}

TEST_CASE("Sturm count matches isolation for random polynomials") {
  std::mt19937 rng(20240817);
  std::uniform_int_distribution<int> coef(-50, 50);
  std::uniform_int_distribution<int> deg(1, 12);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Rational> cs(deg(rng) + 1);
    for (auto& c : cs) c = Rational(coef(rng));
    Poly p(cs);
    if (p.is_zero()) continue;

    RootList rl = isolate_roots_unit(p);
    // Count distinct roots in [0,1] independently: deflate endpoint roots,
    // Sturm-count the open interval, add endpoints back.
    Poly sf = squarefree_part(p);
    int expected = 0;
    if (sf.eval(Rational(0)) == 0) {
      ++expected;
      sf = sf.deflate_root(Rational(0));
    }
    if (sf.eval(Rational(1)) == 0) {
      ++expected;
      sf = sf.deflate_root(Rational(1));
    }
    expected += count_roots_open(sf.is_zero() ? Poly::constant(Rational(1)) : sf,
                                 Rational(0), Rational(1));
    CHECK(static_cast<int>(rl.intervals.size()) == expected);
  }
}

TEST_CASE("refined roots satisfy the residual bound") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> coef(-50, 50);
  int checked = 0;
  for (int trial = 0; trial < 200 && checked < 60; ++trial) {
    std::vector<Rational> cs(6);
    for (auto& c : cs) c = Rational(coef(rng));
    Poly p(cs);
    if (p.is_zero() || p.eval(Rational(0)) == 0) continue;
    RootList rl = isolate_roots_unit(p);
    if (rl.intervals.empty()) continue;
    const Poly& sf = rl.squarefree;
    for (const auto& iv : rl.intervals) {
      RootResult r = refine_root(sf, iv, 1e-12);
      CHECK(r.value >= r.lo.convert_to<double>() - 1e-15);
      CHECK(r.value <= r.hi.convert_to<double>() + 1e-15);
      double deriv = sf.derivative().eval(r.value);
      CHECK(std::abs(sf.eval(r.value)) <= std::abs(deriv) * 1e-12 * 4 + 1e-300);
      ++checked;
    }
  }
  CHECK(checked >= 60);
}
