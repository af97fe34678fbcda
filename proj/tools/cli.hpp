#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "sumrecon/bounds.hpp"

namespace sumrecon::cli {

enum ExitCode : int { kOk = 0, kUsage = 2, kInfeasible = 3 };

/// Runs the command line `args` (without the program name). Normal output
/// goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Bound table on a uniform grid over [0, p]:
/// D,wz_outer,steinberg_inner,lkm_inner,wz_pre_envelope,steinberg_prehull,lkm_prehull
std::string bounds_csv(SourceParam p, std::size_t grid_size);

}  // namespace sumrecon::cli
