#pragma once

#include <functional>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "contests/poly.hpp"

namespace contests {

enum class KernelFamily { Tullock, LinearG, ExpDemand, LogDemand, PowerRatio, PolyG };

/// A payoff kernel: players receive u_i = x_i h(X). The recursion only ever
/// consumes g(X) = -h(X)/h'(X) and its derivatives, which are closed-form for
/// every family. Domains are normalized so the zero-profit total is X = 1.
class PayoffKernel {
 public:
  static PayoffKernel tullock();
  static PayoffKernel linear_g(double alpha);
  static PayoffKernel exp_demand(double alpha, double b);
  static PayoffKernel log_demand();
  static PayoffKernel power_ratio();
  static PayoffKernel poly_g(std::vector<Rational> coeffs);

  /// Kernel spec grammar: tullock | linear:a=0.5 | exp:a=0.5,b=2 | log |
  /// power | poly:c0,c1,...
  static PayoffKernel parse(const std::string& spec);

  KernelFamily family() const { return family_; }
  std::string spec_string() const;

  /// k-th derivative of g at X.
  double g(int k, double X) const;
  /// Marginal benefit h(X); negative past 1 (signed-power extensions).
  double h(double X) const;
  /// alpha = -g'(1), the kernel's decay rate at full dissipation.
  double alpha() const;

  /// Derivatives of g blow up as X -> 0+ (log-demand); g_k limits are still 0.
  bool singular_at_zero() const { return family_ == KernelFamily::LogDemand; }

  bool is_polynomial() const { return g_poly_.has_value(); }
  const std::optional<Poly>& g_poly() const { return g_poly_; }
  /// Highest analytic derivative order available.
  int max_order() const;

 private:
  PayoffKernel(KernelFamily f, double a, double b, std::optional<Poly> gp)
      : family_(f), a_(a), b_(b), g_poly_(std::move(gp)) {}

  KernelFamily family_;
  double a_ = 0, b_ = 0;  // family parameters (alpha, base)
  std::optional<Poly> g_poly_;
};

struct MonotoneReport {
  int order_checked = 0;
  bool pass = false;
  // (derivative order k, sample point X, offending value) when pass is false
  std::optional<std::tuple<int, double, double>> first_failure;
};

inline constexpr double kEpsMono = 1e-9;

/// Checks (-1)^k g^(k)(X) >= -eps on a uniform grid over [0,1] for all k <= m.
MonotoneReport check_t_monotone(const PayoffKernel& kernel, int m, int grid_size = 1001,
                                bool strict = false);

/// Same check for an arbitrary derivative chain gfun(k, X).
MonotoneReport check_t_monotone_fn(const std::function<double(int, double)>& gfun, int m,
                                   int grid_size = 1001, double eps = kEpsMono);

}  // namespace contests
