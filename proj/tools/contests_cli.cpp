#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "contests/analysis.hpp"
#include "contests/equilibrium.hpp"
#include "contests/errors.hpp"
#include "contests/json_io.hpp"
#include "contests/oracle.hpp"

using namespace contests;
using nlohmann::ordered_json;

namespace {

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  out << text;
}

std::string solve_table(const EquilibriumSolution& sol) {
  std::string s;
  s += "contest  " + sol.contest.to_string() + "\n";
  s += "kernel   " + sol.kernel_spec + "\n";
  s += "status   " + to_string(sol.status) + "\n";
  s += "X*       " + format_double(sol.X_star) + "\n";
  for (size_t i = 0; i < sol.efforts.size(); ++i)
    s += "x_" + std::to_string(i + 1) + "      " + format_double(sol.efforts[i]) +
         "  (payoff " + format_double(sol.payoffs[i]) + ")\n";
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sequential contest equilibrium toolkit"};
  app.require_subcommand(1);

  std::string contest_spec, kernel_spec = "tullock", format = "json", output;
  double tol = 1e-12;
  bool exact = false;
  int jobs = 1;

  auto add_common = [&](CLI::App* cmd, bool need_contest) {
    auto* c = cmd->add_option("--contest", contest_spec, "contest spec, e.g. 1,2,1 or 1^5");
    if (need_contest) c->required();
    cmd->add_option("--kernel", kernel_spec, "payoff kernel spec");
    cmd->add_option("--tol", tol, "root tolerance");
    cmd->add_option("--format", format, "output format: json, csv or table");
    cmd->add_option("--output", output, "output path (default stdout)");
    cmd->add_flag("--exact", exact, "include exact rational brackets");
    cmd->add_option("--jobs", jobs, "parallel workers for design and sweep");
  };

  auto* cmd_solve = app.add_subcommand("solve", "solve the contest to its equilibrium");
  add_common(cmd_solve, true);

  auto* cmd_cond = app.add_subcommand("conditions", "report equilibrium conditions");
  add_common(cmd_cond, true);

  auto* cmd_meas = app.add_subcommand("measures", "print the information measures S_k");
  add_common(cmd_meas, true);

  std::string contest_b;
  auto* cmd_cmp = app.add_subcommand("compare", "compare two contests by measures and totals");
  add_common(cmd_cmp, true);
  cmd_cmp->add_option("--contest-b", contest_b, "second contest spec")->required();

  int players = 0;
  std::optional<int> max_periods;
  std::string objective = "max";
  auto* cmd_design = app.add_subcommand("design", "search for the extremal disclosure rule");
  add_common(cmd_design, false);
  cmd_design->add_option("--players", players, "total number of players")->required();
  cmd_design->add_option("--max-periods", max_periods, "cap on number of periods");
  cmd_design->add_option("--objective", objective, "max or min");

  auto* cmd_approx = app.add_subcommand("approx", "large-contest approximation");
  add_common(cmd_approx, true);

  std::string family = "seq";
  int n_max = 10, n_min = 2;
  auto* cmd_sweep = app.add_subcommand("sweep", "family sweep for figure data");
  add_common(cmd_sweep, false);
  cmd_sweep->add_option("--family", family, "seq, half, leader or sim")->required();
  cmd_sweep->add_option("--n-max", n_max, "largest player count")->required();
  cmd_sweep->add_option("--n-min", n_min, "smallest player count");

  double step = 1e-3;
  auto* cmd_oracle = app.add_subcommand("oracle", "grid backward-induction cross-check");
  add_common(cmd_oracle, true);
  cmd_oracle->add_option("--step", step, "grid resolution");

  int period = 1, points = 101;
  auto* cmd_br = app.add_subcommand("br", "best-response curve of one period (CSV)");
  add_common(cmd_br, true);
  cmd_br->add_option("--period", period, "period whose response is traced")->required();
  cmd_br->add_option("--points", points, "number of grid points");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return 2;
  }

  try {
    if (cmd_solve->parsed() || cmd_cond->parsed()) {
      Contest c = Contest::parse(contest_spec);
      PayoffKernel k = PayoffKernel::parse(kernel_spec);
      EquilibriumSolution sol = solve(c, k, tol);
      if (cmd_cond->parsed()) {
        ordered_json j = solution_to_json(sol, exact)["conditions"];
        emit(dump_json(j), output);
      } else if (format == "table") {
        emit(solve_table(sol), output);
      } else {
        emit(dump_json(solution_to_json(sol, exact)), output);
      }
      return sol.status == SolveStatus::NoInteriorCandidate ? 1 : 0;
    }

    if (cmd_meas->parsed()) {
      Contest c = Contest::parse(contest_spec);
      InfoMeasures m = info_measures(c);
      std::string s;
      for (size_t i = 0; i < m.S.size(); ++i)
        s += (i ? "," : "") + m.S[i].str();
      emit(s + "\n", output);
      return 0;
    }

    if (cmd_cmp->parsed()) {
      auto r = compare(Contest::parse(contest_spec), Contest::parse(contest_b),
                       PayoffKernel::parse(kernel_spec));
      ordered_json j;
      j["contest_a"] = r.contest_a.n;
      j["contest_b"] = r.contest_b.n;
      ordered_json sa = ordered_json::array(), sb = ordered_json::array();
      for (const auto& v : r.S_a.S) sa.push_back(v.str());
      for (const auto& v : r.S_b.S) sb.push_back(v.str());
      j["S_a"] = sa;
      j["S_b"] = sb;
      j["dominance"] = to_string(r.dominance);
      j["X_a"] = format_double(r.X_a);
      j["X_b"] = format_double(r.X_b);
      j["consistent_with_theorem"] = r.consistent_with_theorem;
      emit(dump_json(j), output);
      return 0;
    }

    if (cmd_design->parsed()) {
      if (objective != "max" && objective != "min")
        throw CLI::ValidationError("--objective must be max or min");
      auto r = design_optimize(players, max_periods, PayoffKernel::parse(kernel_spec),
                               objective == "max" ? Objective::maximize : Objective::minimize,
                               jobs);
      ordered_json j;
      j["objective"] = objective;
      j["players"] = r.players;
      if (r.T_max)
        j["max_periods"] = *r.T_max;
      else
        j["max_periods"] = nullptr;
      j["best_contest"] = r.best_contest.n;
      j["best_value"] = format_double(r.best_value);
      j["evaluated"] = r.evaluated_count;
      emit(dump_json(j), output);
      return 0;
    }

    if (cmd_approx->parsed()) {
      Contest c = Contest::parse(contest_spec);
      auto a = large_contest_approx(c, PayoffKernel::parse(kernel_spec));
      ordered_json j;
      j["contest"] = c.n;
      j["X_star_approx"] = format_double(a.X_star_approx);
      ordered_json ef = ordered_json::array();
      for (double x : a.efforts_approx) ef.push_back(format_double(x));
      j["efforts_approx"] = ef;
      j["hhi_approx"] = format_double(a.hhi_approx);
      j["S_weighted"] = format_double(a.S_weighted);
      emit(dump_json(j), output);
      return 0;
    }

    if (cmd_sweep->parsed()) {
      auto rows = convergence_table(sweep_family_from_string(family), n_min, n_max,
                                    PayoffKernel::parse(kernel_spec), jobs);
      if (format == "json") {
        ordered_json arr = ordered_json::array();
        for (const auto& r : rows) {
          ordered_json j;
          j["n"] = r.n;
          j["contest"] = r.contest.n;
          j["X_star"] = format_double(r.X_star);
          j["one_minus_X"] = format_double(r.one_minus_X);
          j["S_weighted"] = format_double(r.S_weighted);
          arr.push_back(j);
        }
        emit(dump_json(arr), output);
      } else {
        std::string s = "n,contest,X_star,one_minus_X,S_weighted\n";
        for (const auto& r : rows)
          s += std::to_string(r.n) + "," + r.contest.to_string() + "," +
               format_double(r.X_star) + "," + format_double(r.one_minus_X) + "," +
               format_double(r.S_weighted) + "\n";
        emit(s, output);
      }
      return 0;
    }

    if (cmd_oracle->parsed()) {
      auto g = grid_spe(Contest::parse(contest_spec), PayoffKernel::parse(kernel_spec), step);
      emit(dump_json(grid_solution_to_json(g)), output);
      return 0;
    }

    if (cmd_br->parsed()) {
      Contest c = Contest::parse(contest_spec);
      FSequence fseq(c, PayoffKernel::parse(kernel_spec));
      if (period < 1 || period > c.periods())
        throw CLI::ValidationError("--period out of range");
      if (points < 2) throw CLI::ValidationError("--points must be at least 2");
      std::string s = "X_prev,best_response\n";
      for (int i = 0; i < points; ++i) {
        double X_prev = double(i) / (points - 1);
        s += format_double(X_prev) + "," +
             format_double(best_response(fseq, period, X_prev)) + "\n";
      }
      emit(s, output);
      return 0;
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const InvalidKernel& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
