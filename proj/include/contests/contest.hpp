#pragma once

#include <string>
#include <vector>

#include "contests/rational.hpp"

namespace contests {

/// Disclosure structure n = (n_1,...,n_T): n_t players act between the
/// (t-1)-th and t-th public disclosure of cumulative effort.
struct Contest {
  std::vector<int> n;

  int periods() const { return static_cast<int>(n.size()); }
  int players() const {
    int s = 0;
    for (int v : n) s += v;
    return s;
  }

  /// Grammar: comma-separated positive integers with optional ^k repetition,
  /// e.g. "1,2,1" or "1^5" or "2,1^3".
  static Contest parse(const std::string& spec);
  std::string to_string() const;

  bool operator==(const Contest& o) const { return n == o.n; }
};

/// Elementary symmetric polynomials e_1..e_m of the parts (exact).
std::vector<BigInt> elem_sym(const std::vector<int>& parts);

/// The information measures S(n) = (S_1,...,S_T).
struct InfoMeasures {
  std::vector<BigInt> S;

  /// S(n) = prod_t (1 + alpha n_t) - 1 = sum_k alpha^k S_k.
  double weighted_total(double alpha) const;
};

InfoMeasures info_measures(const Contest& contest);

/// S_k(n^t) for the sub-contest n^t = (n_{t+1},...,n_T), for t = 0..T.
/// Row t has entries k = 1..T-t (row T is empty).
std::vector<std::vector<BigInt>> suffix_measures(const Contest& contest);

}  // namespace contests
