#include "contests/contest.hpp"

#include <sstream>
#include <stdexcept>

namespace contests {

Contest Contest::parse(const std::string& spec) {
  Contest c;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) throw std::invalid_argument("empty entry in contest spec: " + spec);
    auto caret = item.find('^');
    std::string base = item.substr(0, caret);
    int reps = 1;
    size_t pos = 0;
    int v = std::stoi(base, &pos);
    if (pos != base.size()) throw std::invalid_argument("bad contest entry: " + item);
    if (caret != std::string::npos) {
      std::string rep = item.substr(caret + 1);
      reps = std::stoi(rep, &pos);
      if (pos != rep.size()) throw std::invalid_argument("bad repetition count: " + item);
    }
    if (v < 1 || reps < 1) throw std::invalid_argument("contest entries must be >= 1: " + item);
    if (reps > 10000 || c.n.size() + reps > 10000)
      throw std::invalid_argument("contest too long: " + spec);
    for (int i = 0; i < reps; ++i) c.n.push_back(v);
  }
  if (c.n.empty()) throw std::invalid_argument("empty contest spec");
  return c;
}

std::string Contest::to_string() const {
  std::string s;
  for (size_t i = 0; i < n.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(n[i]);
  }
  return s;
}

std::vector<BigInt> elem_sym(const std::vector<int>& parts) {
  // coefficients of prod_t (1 + n_t z); e[k] after dropping e_0 = 1
  std::vector<BigInt> e(parts.size() + 1, BigInt(0));
  e[0] = 1;
  size_t used = 0;
  for (int v : parts) {
    ++used;
    for (size_t k = used; k >= 1; --k) e[k] += BigInt(v) * e[k - 1];
  }
  return std::vector<BigInt>(e.begin() + 1, e.end());
}

double InfoMeasures::weighted_total(double alpha) const {
  double total = 0.0, ak = 1.0;
  for (const auto& sk : S) {
    ak *= alpha;
    total += ak * to_double(sk);
  }
  return total;
}

InfoMeasures info_measures(const Contest& contest) { return {elem_sym(contest.n)}; }

std::vector<std::vector<BigInt>> suffix_measures(const Contest& contest) {
  int T = contest.periods();
  std::vector<std::vector<BigInt>> rows(T + 1);
  for (int t = T; t >= 0; --t) {
    rows[t] = elem_sym(std::vector<int>(contest.n.begin() + t, contest.n.end()));
  }
  return rows;
}

}  // namespace contests
