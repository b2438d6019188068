#include "contests/kernel.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "contests/errors.hpp"

namespace contests {

namespace {

Rational parse_rational_token(const std::string& tok) {
  if (tok.empty()) throw InvalidKernel("empty coefficient");
  auto slash = tok.find('/');
  if (slash != std::string::npos) {
    BigInt num(tok.substr(0, slash));
    BigInt den(tok.substr(slash + 1));
    if (den == 0) throw InvalidKernel("zero denominator in coefficient: " + tok);
    return Rational(num, den);
  }
  auto dot = tok.find('.');
  if (dot == std::string::npos) return Rational(BigInt(tok));
  std::string digits = tok.substr(0, dot) + tok.substr(dot + 1);
  size_t frac_len = tok.size() - dot - 1;
  bool neg = false;
  if (!digits.empty() && (digits[0] == '-' || digits[0] == '+')) {
    neg = digits[0] == '-';
    digits = digits.substr(1);
  }
  if (digits.empty()) throw InvalidKernel("bad coefficient: " + tok);
  Rational r(BigInt(digits), boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(frac_len)));
  return neg ? Rational(-r) : r;
}

double parse_double_param(const std::string& params, const std::string& key) {
  std::stringstream ss(params);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos) throw InvalidKernel("expected key=value, got: " + item);
    if (item.substr(0, eq) == key) return std::stod(item.substr(eq + 1));
  }
  throw InvalidKernel("missing kernel parameter: " + key);
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

// Adaptive Simpson quadrature for the PolyG marginal-benefit integral.
double simpson(const std::function<double(double)>& f, double a, double b, double fa,
               double fm, double fb, double whole, double eps, int depth) {
  double m = (a + b) / 2;
  double lm = (a + m) / 2, rm = (m + b) / 2;
  double flm = f(lm), frm = f(rm);
  double left = (m - a) / 6 * (fa + 4 * flm + fm);
  double right = (b - m) / 6 * (fm + 4 * frm + fb);
  if (depth <= 0 || std::abs(left + right - whole) < 15 * eps)
    return left + right + (left + right - whole) / 15;
  return simpson(f, a, m, fa, flm, fm, left, eps / 2, depth - 1) +
         simpson(f, m, b, fm, frm, fb, right, eps / 2, depth - 1);
}

double integrate(const std::function<double(double)>& f, double a, double b, double eps) {
  double fa = f(a), fb = f(b), m = (a + b) / 2, fm = f(m);
  double whole = (b - a) / 6 * (fa + 4 * fm + fb);
  return simpson(f, a, b, fa, fm, fb, whole, eps, 40);
}

double sign_pow(double base, double p) {
  // signed power: keeps h strictly decreasing through its zero at X = 1
  return base >= 0 ? std::pow(base, p) : -std::pow(-base, p);
}

}  // namespace

PayoffKernel PayoffKernel::tullock() {
  return PayoffKernel(KernelFamily::Tullock, 1.0, 0.0,
                      Poly({Rational(0), Rational(1), Rational(-1)}));
}

PayoffKernel PayoffKernel::linear_g(double alpha) {
  if (!(alpha > 0)) throw InvalidKernel("linear kernel requires a > 0");
  Rational a = rational_from_double(alpha);
  return PayoffKernel(KernelFamily::LinearG, alpha, 0.0, Poly({a, Rational(-a)}));
}

PayoffKernel PayoffKernel::exp_demand(double alpha, double b) {
  if (!(alpha > 0)) throw InvalidKernel("exp kernel requires a > 0");
  if (!(b > 1)) throw InvalidKernel("exp kernel requires b > 1");
  return PayoffKernel(KernelFamily::ExpDemand, alpha, b, std::nullopt);
}

PayoffKernel PayoffKernel::log_demand() {
  return PayoffKernel(KernelFamily::LogDemand, 0.0, 0.0, std::nullopt);
}

PayoffKernel PayoffKernel::power_ratio() {
  return PayoffKernel(KernelFamily::PowerRatio, 0.0, 0.0,
                      Poly({Rational(0), Rational(1, 2), Rational(-1, 2)}));
}

PayoffKernel PayoffKernel::poly_g(std::vector<Rational> coeffs) {
  Poly g(std::move(coeffs));
  if (g.is_zero()) throw InvalidKernel("poly kernel: g is identically zero");
  if (g.eval(Rational(1)) != 0) throw InvalidKernel("poly kernel: g(1) must be 0");
  for (int j = 1; j < 100; ++j) {
    if (g.eval(Rational(j, 100)) <= 0)
      throw InvalidKernel("poly kernel: g must be positive on (0,1)");
  }
  if (g.derivative().eval(Rational(1)) >= 0)
    throw InvalidKernel("poly kernel: requires g'(1) < 0");
  return PayoffKernel(KernelFamily::PolyG, 0.0, 0.0, std::move(g));
}

PayoffKernel PayoffKernel::parse(const std::string& spec) {
  auto colon = spec.find(':');
  std::string fam = spec.substr(0, colon);
  std::string params = colon == std::string::npos ? "" : spec.substr(colon + 1);
  if (fam == "tullock") return tullock();
  if (fam == "linear") return linear_g(parse_double_param(params, "a"));
  if (fam == "exp")
    return exp_demand(parse_double_param(params, "a"), parse_double_param(params, "b"));
  if (fam == "log") return log_demand();
  if (fam == "power") return power_ratio();
  if (fam == "poly") {
    std::vector<Rational> cs;
    std::stringstream ss(params);
    std::string tok;
    while (std::getline(ss, tok, ',')) cs.push_back(parse_rational_token(tok));
    if (cs.empty()) throw InvalidKernel("poly kernel needs coefficients");
    return poly_g(std::move(cs));
  }
  throw InvalidKernel("unknown kernel family: " + fam);
}

std::string PayoffKernel::spec_string() const {
  switch (family_) {
    case KernelFamily::Tullock:
      return "tullock";
    case KernelFamily::LinearG:
      return "linear:a=" + fmt(a_);
    case KernelFamily::ExpDemand:
      return "exp:a=" + fmt(a_) + ",b=" + fmt(b_);
    case KernelFamily::LogDemand:
      return "log";
    case KernelFamily::PowerRatio:
      return "power";
    case KernelFamily::PolyG: {
      std::string s = "poly:";
      const auto& cs = g_poly_->coeffs();
      for (size_t i = 0; i < cs.size(); ++i) {
        if (i) s += ",";
        if (boost::multiprecision::denominator(cs[i]) == 1)
          s += boost::multiprecision::numerator(cs[i]).str();
        else
          s += rational_to_string(cs[i]);
      }
      return s;
    }
  }
  throw std::logic_error("unreachable");
}

int PayoffKernel::max_order() const { return std::numeric_limits<int>::max(); }

double PayoffKernel::g(int k, double X) const {
  if (k < 0) throw UnsupportedOrder("negative derivative order");
  if (g_poly_) {
    Poly p = *g_poly_;
    for (int i = 0; i < k && !p.is_zero(); ++i) p = p.derivative();
    return p.eval(X);
  }
  switch (family_) {
    case KernelFamily::ExpDemand: {
      double lb = std::log(b_);
      if (k == 0) return a_ * (std::pow(b_, 1 - X) - 1) / lb;
      double v = a_ * std::pow(lb, k - 1) * std::pow(b_, 1 - X);
      return (k % 2 == 0) ? v : -v;
    }
    case KernelFamily::LogDemand: {
      if (k == 0) return X <= 0 ? 0.0 : -X * std::log(X);
      if (X <= 0) {
        double inf = std::numeric_limits<double>::infinity();
        if (k == 1) return inf;
        return (k % 2 == 1) ? inf : -inf;
      }
      if (k == 1) return -std::log(X) - 1;
      double f = 1;  // (k-2)!
      for (int i = 2; i <= k - 2; ++i) f *= i;
      double v = f * std::pow(X, 1.0 - k);
      return (k % 2 == 1) ? v : -v;
    }
    default:
      throw std::logic_error("unreachable");
  }
}

double PayoffKernel::h(double X) const {
  switch (family_) {
    case KernelFamily::Tullock:
      if (X <= 0) throw OutOfRange("Tullock h undefined at X <= 0");
      return 1.0 / X - 1.0;
    case KernelFamily::LinearG:
      return sign_pow(1 - X, 1.0 / a_);
    case KernelFamily::ExpDemand:
      return sign_pow(b_ - std::pow(b_, X), 1.0 / a_);
    case KernelFamily::LogDemand:
      if (X <= 0) throw OutOfRange("log-demand h undefined at X <= 0");
      return -std::log(X);
    case KernelFamily::PowerRatio: {
      if (X <= 0) throw OutOfRange("power-ratio h undefined at X <= 0");
      double t = (1 - X) / X;
      return t * std::abs(t);
    }
    case KernelFamily::PolyG: {
      if (X <= 0) throw OutOfRange("poly-g h undefined at X <= 0");
      if (X == 1) return 0.0;
      if (X > 1) return -(X - 1);  // any decreasing negative extension works here
      auto integrand = [this](double t) { return 1.0 / g_poly_->eval(t); };
      double I = integrate(integrand, 0.5, X, 1e-12);
      double v = std::exp(-I);
      // taper to exactly 0 at 1: exp(-I) already decays, but the quadrature
      // cannot reach the singular endpoint; clamp tiny values
      return v < 1e-300 ? 0.0 : v;
    }
  }
  throw std::logic_error("unreachable");
}

double PayoffKernel::alpha() const {
  double a = -g(1, 1.0);
  if (!(a > 0)) throw InvalidKernel("kernel has -g'(1) <= 0");
  return a;
}

MonotoneReport check_t_monotone_fn(const std::function<double(int, double)>& gfun, int m,
                                   int grid_size, double eps) {
  MonotoneReport rep;
  rep.order_checked = m;
  rep.pass = true;
  // highest orders first, so the reported failure is the binding one
  for (int k = m; k >= 0; --k) {
    for (int j = 0; j < grid_size; ++j) {
      double X = static_cast<double>(j) / (grid_size - 1);
      double v = gfun(k, X);
      double signed_v = (k % 2 == 0) ? v : -v;
      if (std::isnan(signed_v) || signed_v < -eps) {
        rep.pass = false;
        rep.first_failure = {k, X, v};
        return rep;
      }
    }
  }
  return rep;
}

MonotoneReport check_t_monotone(const PayoffKernel& kernel, int m, int grid_size,
                                bool strict) {
  if (strict && kernel.is_polynomial()) {
    MonotoneReport rep;
    rep.order_checked = m;
    rep.pass = true;
    std::vector<Poly> derivs{*kernel.g_poly()};
    for (int k = 1; k <= m; ++k) derivs.push_back(derivs.back().derivative());
    for (int k = m; k >= 0; --k) {
      for (int j = 0; j < grid_size; ++j) {
        Rational X(j, grid_size - 1);
        Rational v = derivs[k].eval(X);
        Rational signed_v = (k % 2 == 0) ? v : Rational(-v);
        if (signed_v < 0) {
          rep.pass = false;
          rep.first_failure = {k, to_double(X), to_double(v)};
          return rep;
        }
      }
    }
    return rep;
  }
  return check_t_monotone_fn([&kernel](int k, double X) { return kernel.g(k, X); }, m,
                             grid_size, strict ? 0.0 : kEpsMono);
}

}  // namespace contests
