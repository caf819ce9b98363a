#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "fracbvp/green.hpp"
#include "fracbvp/solver.hpp"

namespace fracbvp {

/// 17-significant-digit decimal form, enough to round-trip any double.
std::string format_double(double x);

/// Shortest decimal form that round-trips (used in config files).
std::string format_shortest(double x);

/// Solution CSV: header "t,y"; t as an exact rational string, y with 17
/// significant digits.
std::string solution_csv(const Solution& solution);

/// Green table CSV: header "t,s0,s1,...,sb"; same formatting rules.
std::string green_csv(const GreenTable& table);

/// Flat "key = value" report for a solution (method, sign, iterations,
/// residuals, cone diagnostics).
std::string solution_report(const Solution& solution);

/// Writes content to path via a temporary file and rename, so readers never
/// observe a half-written file.
void atomic_write_file(const std::filesystem::path& path,
                       std::string_view content);

}  // namespace fracbvp
