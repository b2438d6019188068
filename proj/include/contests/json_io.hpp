#pragma once

#include <string>

#include <json.hpp>

#include "contests/equilibrium.hpp"
#include "contests/oracle.hpp"

namespace contests {

/// 15 significant digits; byte-stable and round-trips through a double.
std::string format_double(double v);

/// Solution schema with floats rendered as 15-digit strings. Exact rational
/// fields appear only when include_exact is set and the solution carries them.
nlohmann::ordered_json solution_to_json(const EquilibriumSolution& sol,
                                        bool include_exact = false);
EquilibriumSolution solution_from_json(const nlohmann::ordered_json& j);

nlohmann::ordered_json grid_solution_to_json(const GridSolution& g);

std::string dump_json(const nlohmann::ordered_json& j);

}  // namespace contests
