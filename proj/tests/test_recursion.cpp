#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "contests/errors.hpp"
#include "contests/recursion.hpp"

using namespace contests;

namespace {

Poly make(std::initializer_list<long> cs) {
  std::vector<Rational> v;
  for (long c : cs) v.push_back(Rational(c));
  return Poly(v);
}

BigInt binom(int n, int k) {
  BigInt r = 1;
  for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

}  // namespace

TEST_CASE("contest parsing") {
  CHECK(Contest::parse("1,2,1").n == std::vector<int>{1, 2, 1});
  CHECK(Contest::parse("1^5").n == std::vector<int>{1, 1, 1, 1, 1});
  CHECK(Contest::parse("2,1^3").n == std::vector<int>{2, 1, 1, 1});
  CHECK(Contest::parse("10").n == std::vector<int>{10});
  CHECK(Contest::parse("1,2,1").to_string() == "1,2,1");
  CHECK_THROWS(Contest::parse(""));
  CHECK_THROWS(Contest::parse("1,,2"));
  CHECK_THROWS(Contest::parse("0,2"));
  CHECK_THROWS(Contest::parse("1,x"));
}

TEST_CASE("information measures") {
  auto m = info_measures(Contest::parse("1,2,1"));
  CHECK(m.S == std::vector<BigInt>{4, 5, 2});
  CHECK(info_measures(Contest::parse("5,5")).S == std::vector<BigInt>{10, 25});
  CHECK(info_measures(Contest::parse("8,1,1")).S == std::vector<BigInt>{10, 17, 8});
  for (int n = 1; n <= 10; ++n) {
    auto seq = info_measures(Contest::parse("1^" + std::to_string(n)));
    for (int k = 1; k <= n; ++k) CHECK(seq.S[k - 1] == binom(n, k));
  }
  // S(n) = prod(1 + alpha n_t) - 1
  CHECK(info_measures(Contest::parse("1^5")).weighted_total(1.0) ==
        doctest::Approx(31.0).epsilon(1e-14));
  CHECK(info_measures(Contest::parse("1,2,1")).weighted_total(0.5) ==
        doctest::Approx(1.5 * 2.0 * 1.5 - 1.0).epsilon(1e-14));
}

TEST_CASE("suffix measures") {
  auto rows = suffix_measures(Contest::parse("1,2,1"));
  REQUIRE(rows.size() == 4);
  CHECK(rows[0] == std::vector<BigInt>{4, 5, 2});
  CHECK(rows[1] == std::vector<BigInt>{3, 2});
  CHECK(rows[2] == std::vector<BigInt>{1});
  CHECK(rows[3].empty());
}

TEST_CASE("discouragement sequence") {
  GSequence gs = build_g_sequence(PayoffKernel::tullock(), 3);
  CHECK(gs.poly(1) == make({0, 1, -1}));
  CHECK(gs.poly(2) == make({0, -1, 3, -2}));  // -(1-2X) X(1-X)

  GSequence gp = build_g_sequence(PayoffKernel::power_ratio(), 4);
  // g_2 = (1/4) X (2X-1) (1-X)
  Poly g2 = (Poly::identity() * make({-1, 2}) * make({1, -1})).scaled(Rational(1, 4));
  CHECK(gp.poly(2) == g2);
  // g_4 = (1/16) X (2X-1) (12X^2-12X+1) (1-X)
  Poly g4 = (Poly::identity() * make({-1, 2}) * make({1, -12, 12}) * make({1, -1}))
                .scaled(Rational(1, 16));
  CHECK(gp.poly(4) == g4);

  // g_k(1) = 0 for all k; Tullock g_k'(1) = -1
  GSequence gt = build_g_sequence(PayoffKernel::tullock(), 8);
  for (int k = 1; k <= 8; ++k) {
    CHECK(gt.poly(k).eval(Rational(1)) == 0);
    CHECK(gt.poly(k).derivative().eval(Rational(1)) == -1);
  }

  // general (non-polynomial) evaluation agrees with closed forms: LogDemand
  // g_2 = -g'g = (log X + 1) (-X log X)
  GSequence gl = build_g_sequence(PayoffKernel::log_demand(), 3);
  for (int j = 1; j < 20; ++j) {
    double X = j / 20.0;
    double g = -X * std::log(X);
    double expect2 = (std::log(X) + 1) * g;
    CHECK(gl.eval(2, X) == doctest::Approx(expect2).epsilon(1e-12));
    double expect3 = -(std::log(X) + 2 + 1 / X * 0) * 0 +
                     -((std::log(X) + 1) * (std::log(X) + 1) + 1.0) * -g;
    // g_3 = -g_2' g with g_2' = (1/X)(-X log X) + (log X + 1)(-log X - 1)
    double g2p = -std::log(X) - (std::log(X) + 1) * (std::log(X) + 1);
    CHECK(gl.eval(3, X) == doctest::Approx(-g2p * g).epsilon(1e-12));
    (void)expect3;
  }
}

TEST_CASE("f sequence, Tullock (1,2,1)") {
  FSequence fs = build_f_sequence(Contest::parse("1,2,1"), PayoffKernel::tullock());
  REQUIRE(fs.exact());
  CHECK(fs.poly(3) == Poly::identity());
  CHECK(fs.poly(2) == make({0, 0, 1}));
  CHECK(fs.poly(1) == make({0, 0, -3, 4}));
  CHECK(fs.poly(0) == make({0, 0, 3, -14, 12}));
  CHECK(fs.threshold(0).value == doctest::Approx((7 + std::sqrt(13.0)) / 12).epsilon(1e-12));
  CHECK(fs.threshold(1).value == doctest::Approx(0.75).epsilon(1e-12));
  CHECK(fs.threshold(2).value == 0.0);
}

TEST_CASE("f sequence, sequential Tullock") {
  FSequence f3 = build_f_sequence(Contest::parse("1,1,1"), PayoffKernel::tullock());
  CHECK(f3.poly(0) == make({0, 0, 1, -6, 6}));  // X^2 (6X^2 - 6X + 1)
  CHECK(f3.threshold(0).value ==
        doctest::Approx(0.5 + 0.5 / std::sqrt(3.0)).epsilon(1e-12));

  FSequence f5 = build_f_sequence(Contest::parse("1^5"), PayoffKernel::tullock());
  CHECK(f5.poly(0) == make({0, 0, 1, -30, 150, -240, 120}));
}

TEST_CASE("f_t boundary values and leading coefficients") {
  std::vector<std::string> specs = {"1,2,1", "1^5", "5,5", "8,1,1", "3,2,2", "2,3"};
  for (const auto& s : specs) {
    Contest c = Contest::parse(s);
    FSequence fs = build_f_sequence(c, PayoffKernel::tullock());
    int T = c.periods();
    for (int t = 0; t <= T; ++t) {
      CHECK(fs.poly(t).eval(Rational(1)) == 1);
      CHECK(fs.poly(t).eval(Rational(0)) == 0);
      BigInt lead = 1;
      for (int i = 1; i <= T - t; ++i) lead *= i;  // (T-t)!
      for (int s2 = t + 1; s2 <= T; ++s2) lead *= c.n[s2 - 1];
      CHECK(fs.poly(t).leading() == Rational(lead));
    }
    // thresholds interlace
    for (int t = 0; t < T; ++t)
      CHECK(fs.threshold(t).value >= fs.threshold(t + 1).value - 1e-12);
    CHECK(fs.threshold(T).value == 0.0);
    CHECK(fs.threshold(0).value < 1.0);
  }
}

TEST_CASE("fully sequential identity f_{n-k} (1-X) = g_k X") {
  for (int n : {3, 5, 7}) {
    FSequence fs = build_f_sequence(Contest::parse("1^" + std::to_string(n)),
                                    PayoffKernel::tullock());
    for (int k = 1; k <= n; ++k) {
      const Poly& gk = fs.gseq().poly(k);
      for (int j = 0; j <= 100; ++j) {
        double X = j / 100.0;
        CHECK(std::abs(fs.eval(n - k, X) * (1 - X) - gk.eval(X) * X) <= 1e-10);
      }
    }
  }
}

TEST_CASE("log-demand f sequence closed forms") {
  // f_1 = X (1 + n_2 log X); f_0 = X (1 + (n_1+n_2+n_1 n_2) log X + n_1 n_2 log^2 X)
  for (auto [n1, n2] : {std::pair{2, 2}, {1, 3}, {3, 1}}) {
    Contest c{{n1, n2}};
    FSequence fs = build_f_sequence(c, PayoffKernel::log_demand());
    CHECK_FALSE(fs.exact());
    for (int j = 1; j <= 99; ++j) {
      double X = j / 100.0;
      double L = std::log(X);
      CHECK(fs.eval(1, X) == doctest::Approx(X * (1 + n2 * L)).epsilon(1e-10));
      double f0 = X * (1 + (n1 + n2 + n1 * n2) * L + n1 * n2 * L * L);
      CHECK(fs.eval(0, X) == doctest::Approx(f0).epsilon(1e-10));
    }
  }
  FSequence fs22 = build_f_sequence(Contest::parse("2,2"), PayoffKernel::log_demand());
  CHECK(fs22.threshold(1).value == doctest::Approx(std::exp(-0.5)).epsilon(1e-10));
}

TEST_CASE("measure and recursion routes agree") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> periods(1, 4);
  std::uniform_int_distribution<int> group(1, 3);
  std::vector<PayoffKernel> kernels = {
      PayoffKernel::tullock(), PayoffKernel::linear_g(0.7),
      PayoffKernel::exp_demand(0.5, 2.0), PayoffKernel::log_demand(),
      PayoffKernel::power_ratio()};
  for (int trial = 0; trial < 50; ++trial) {
    Contest c;
    int T = periods(rng);
    for (int t = 0; t < T; ++t) c.n.push_back(group(rng));
    if (c.players() > 6) continue;
    const PayoffKernel& k = kernels[trial % kernels.size()];
    FSequence fs(c, k, k.is_polynomial() ? PathMode::Auto : PathMode::Float);
    for (int j = 0; j <= 1000; ++j) {
      double X = j / 1000.0;
      CHECK(std::abs(fs.eval(0, X) - fs.eval_recursive(0, X)) <= 1e-10);
    }
  }
}

TEST_CASE("float path matches exact path") {
  for (const auto& s : {"1,2,1", "1^5", "4,3"}) {
    Contest c = Contest::parse(s);
    FSequence ex(c, PayoffKernel::tullock(), PathMode::Exact);
    FSequence fl(c, PayoffKernel::tullock(), PathMode::Float);
    for (int t = 0; t <= c.periods(); ++t) {
      CHECK(fl.threshold(t).value ==
            doctest::Approx(ex.threshold(t).value).epsilon(1e-9));
      for (int j = 0; j <= 100; ++j) {
        double X = j / 100.0;
        CHECK(fl.eval(t, X) == doctest::Approx(ex.eval(t, X)).epsilon(1e-10));
      }
    }
  }
}

TEST_CASE("condition 1") {
  for (const auto& s : {"1,2,1", "1^5", "5,5", "8,1,1", "2,2,2,2", "3,3,2", "8"}) {
    auto rep = check_condition1(build_f_sequence(Contest::parse(s), PayoffKernel::tullock()));
    CHECK(rep.pass);
    CHECK(rep.certified);
  }

  // power-ratio failures: f_0 has no interior root
  auto p2 = check_condition1(build_f_sequence(Contest::parse("2"), PayoffKernel::power_ratio()));
  CHECK_FALSE(p2.pass);
  CHECK_FALSE(p2.x0_interior);
  auto p4 = check_condition1(
      build_f_sequence(Contest::parse("1,1,1,1"), PayoffKernel::power_ratio()));
  CHECK_FALSE(p4.pass);

  // power-ratio cases the paper solves explicitly
  CHECK(check_condition1(build_f_sequence(Contest::parse("4"), PayoffKernel::power_ratio())).pass);
  CHECK(check_condition1(build_f_sequence(Contest::parse("1,2,1"), PayoffKernel::power_ratio())).pass);

  // completely monotone kernels take the fast path
  auto lin = check_condition1(build_f_sequence(Contest::parse("2,3,1"), PayoffKernel::linear_g(1.0)));
  CHECK(lin.pass);
  CHECK(lin.by_monotonicity);

  auto logd = check_condition1(build_f_sequence(Contest::parse("2,2"), PayoffKernel::log_demand()));
  CHECK(logd.pass);
}

TEST_CASE("condition 2") {
  // Tullock (1,2,1): all g_k(X*) > 0
  FSequence fs121 = build_f_sequence(Contest::parse("1,2,1"), PayoffKernel::tullock());
  auto c121 = check_condition2(fs121.gseq(), fs121.threshold(0).value);
  CHECK(c121.verdict == Cond2Verdict::Pass);

  // fully sequential Tullock: g_T(X*) = 0 exactly -> boundary at k = T
  FSequence fseq = build_f_sequence(Contest::parse("1,1,1"), PayoffKernel::tullock());
  auto cseq = check_condition2(fseq.gseq(), fseq.threshold(0).value);
  CHECK(cseq.verdict == Cond2Verdict::Boundary);
  REQUIRE(cseq.first_nonpositive_k.has_value());
  CHECK(*cseq.first_nonpositive_k == 3);
  CHECK(std::abs(cseq.gk_values.back()) <= 1e-9);

  // power-ratio (4): g_2(1/2) = 0
  FSequence fp4 = build_f_sequence(Contest::parse("4"), PayoffKernel::power_ratio());
  // T = 1 has no k >= 2 terms; evaluate in a longer sequence at the same point
  GSequence gp = build_g_sequence(PayoffKernel::power_ratio(), 2);
  auto cp = check_condition2(gp, 0.5);
  CHECK(cp.verdict != Cond2Verdict::Pass);
  REQUIRE(cp.first_nonpositive_k.has_value());
  CHECK(*cp.first_nonpositive_k == 2);
  CHECK(fp4.threshold(0).exact);
  CHECK(fp4.threshold(0).exact_value == Rational(1, 2));

  // power-ratio (1,2,1): strictly negative g_2 at X* = 1/3
  FSequence fp121 = build_f_sequence(Contest::parse("1,2,1"), PayoffKernel::power_ratio());
  CHECK(fp121.threshold(0).exact_value == Rational(1, 3));
  auto cp121 = check_condition2(fp121.gseq(), 1.0 / 3.0);
  CHECK(cp121.verdict == Cond2Verdict::Fail);

  CHECK_THROWS_AS(check_condition2(gp, 1.5), OutOfRange);
}

TEST_CASE("declining weights at X*") {
  // g_{k-1}(X*) > g_k(X*) for Tullock contests
  for (const auto& s : {"1,2,1", "1^5", "2,2,2", "3,3,2", "1^7"}) {
    FSequence fs = build_f_sequence(Contest::parse(s), PayoffKernel::tullock());
    double xs = fs.threshold(0).value;
    for (int k = 2; k <= fs.T(); ++k)
      CHECK(fs.gseq().eval(k - 1, xs) > fs.gseq().eval(k, xs) - 1e-12);
  }
}
