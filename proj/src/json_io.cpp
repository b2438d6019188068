#include "contests/json_io.hpp"

#include <cstdio>

namespace contests {

using nlohmann::ordered_json;

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.15g", v);
  return buf;
}

namespace {

ordered_json doubles(const std::vector<double>& v) {
  ordered_json a = ordered_json::array();
  for (double x : v) a.push_back(format_double(x));
  return a;
}

std::vector<double> parse_doubles(const ordered_json& a) {
  std::vector<double> v;
  for (const auto& s : a) v.push_back(std::stod(s.get<std::string>()));
  return v;
}

SolveStatus status_from_string(const std::string& s) {
  if (s == "Solved") return SolveStatus::Solved;
  if (s == "NoInteriorCandidate") return SolveStatus::NoInteriorCandidate;
  if (s == "ConditionsUnverified") return SolveStatus::ConditionsUnverified;
  throw std::invalid_argument("unknown solve status: " + s);
}

Cond2Verdict verdict_from_string(const std::string& s) {
  if (s == "Pass") return Cond2Verdict::Pass;
  if (s == "Boundary") return Cond2Verdict::Boundary;
  if (s == "Fail") return Cond2Verdict::Fail;
  throw std::invalid_argument("unknown verdict: " + s);
}

}  // namespace

ordered_json solution_to_json(const EquilibriumSolution& sol, bool include_exact) {
  ordered_json j;
  j["contest"] = sol.contest.n;
  j["kernel"] = sol.kernel_spec;
  j["status"] = to_string(sol.status);
  j["tol"] = format_double(sol.tol);
  j["X_star"] = format_double(sol.X_star);
  j["exact"] = sol.exact;
  if (include_exact && sol.exact && sol.X_star_exact != 0)
    j["X_star_exact"] = rational_to_string(sol.X_star_exact);
  j["cumulative"] = doubles(sol.cumulative);
  j["efforts"] = doubles(sol.efforts);
  j["payoffs"] = doubles(sol.payoffs);
  if (include_exact && !sol.efforts_exact.empty()) {
    ordered_json a = ordered_json::array();
    for (const auto& r : sol.efforts_exact) a.push_back(rational_to_string(r));
    j["efforts_exact"] = a;
  }

  const Condition1Report& c1 = sol.conditions.condition1;
  ordered_json j1;
  j1["pass"] = c1.pass;
  j1["certified"] = c1.certified;
  j1["by_monotonicity"] = c1.by_monotonicity;
  j1["x0_interior"] = c1.x0_interior;
  ordered_json ws = ordered_json::array();
  for (const auto& w : c1.witnesses) {
    ordered_json jw;
    jw["t"] = w.t;
    jw["threshold"] = format_double(w.threshold);
    jw["root_found"] = w.root_found;
    jw["sign_ok"] = w.sign_ok;
    jw["monotone_ok"] = w.monotone_ok;
    ws.push_back(jw);
  }
  j1["witnesses"] = ws;

  const Condition2Report& c2 = sol.conditions.condition2;
  ordered_json j2;
  j2["verdict"] = to_string(c2.verdict);
  j2["gk_values"] = doubles(c2.gk_values);
  if (c2.first_nonpositive_k)
    j2["first_nonpositive_k"] = *c2.first_nonpositive_k;
  else
    j2["first_nonpositive_k"] = nullptr;

  ordered_json jc;
  jc["condition1"] = j1;
  jc["condition2"] = j2;
  jc["certified_by_monotonicity"] = sol.conditions.certified_by_monotonicity;
  j["conditions"] = jc;
  return j;
}

EquilibriumSolution solution_from_json(const ordered_json& j) {
  EquilibriumSolution sol;
  sol.contest.n = j.at("contest").get<std::vector<int>>();
  sol.kernel_spec = j.at("kernel").get<std::string>();
  sol.status = status_from_string(j.at("status").get<std::string>());
  sol.tol = std::stod(j.at("tol").get<std::string>());
  sol.X_star = std::stod(j.at("X_star").get<std::string>());
  sol.exact = j.at("exact").get<bool>();
  if (j.contains("X_star_exact"))
    sol.X_star_exact = Rational(j.at("X_star_exact").get<std::string>());
  sol.cumulative = parse_doubles(j.at("cumulative"));
  sol.efforts = parse_doubles(j.at("efforts"));
  sol.payoffs = parse_doubles(j.at("payoffs"));
  if (j.contains("efforts_exact"))
    for (const auto& s : j.at("efforts_exact"))
      sol.efforts_exact.push_back(Rational(s.get<std::string>()));

  const auto& j1 = j.at("conditions").at("condition1");
  Condition1Report& c1 = sol.conditions.condition1;
  c1.pass = j1.at("pass").get<bool>();
  c1.certified = j1.at("certified").get<bool>();
  c1.by_monotonicity = j1.at("by_monotonicity").get<bool>();
  c1.x0_interior = j1.at("x0_interior").get<bool>();
  for (const auto& jw : j1.at("witnesses")) {
    Condition1Report::PeriodWitness w;
    w.t = jw.at("t").get<int>();
    w.threshold = std::stod(jw.at("threshold").get<std::string>());
    w.root_found = jw.at("root_found").get<bool>();
    w.sign_ok = jw.at("sign_ok").get<bool>();
    w.monotone_ok = jw.at("monotone_ok").get<bool>();
    c1.witnesses.push_back(w);
  }

  const auto& j2 = j.at("conditions").at("condition2");
  Condition2Report& c2 = sol.conditions.condition2;
  c2.verdict = verdict_from_string(j2.at("verdict").get<std::string>());
  c2.gk_values = parse_doubles(j2.at("gk_values"));
  if (!j2.at("first_nonpositive_k").is_null())
    c2.first_nonpositive_k = j2.at("first_nonpositive_k").get<int>();
  sol.conditions.certified_by_monotonicity =
      j.at("conditions").at("certified_by_monotonicity").get<bool>();
  return sol;
}

ordered_json grid_solution_to_json(const GridSolution& g) {
  ordered_json j;
  j["step"] = format_double(g.step);
  j["efforts"] = doubles(g.efforts);
  j["total"] = format_double(g.total);
  j["value_tables_digest"] = g.value_tables_digest;
  return j;
}

std::string dump_json(const ordered_json& j) { return j.dump(2) + "\n"; }

}  // namespace contests
