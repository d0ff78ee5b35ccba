#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "coxcomb/rootsystem.hpp"

namespace coxcomb {

enum ExitCode : int { kExitPass = 0, kExitFail = 1, kExitUsage = 2, kExitCap = 3 };

/// Entry point of the command-line tool. argv[0] is the program name.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// "(e_1+e_2)/2" style rendering of an ambient vector in the epsilon basis
/// (UTF-8 epsilon, indices as in eps()).
std::string eps_string(const RootSystem& rs, const RatVec& v);

/// Rank-2 only: alcove tessellation of the radius ball with the given
/// combing paths (pairs of coweight coordinates) and, when corridor > 0,
/// the special vertices within that graph distance of each path.
std::string render_svg(const RootSystem& rs, int radius,
                       const std::vector<std::pair<std::vector<long>, std::vector<long>>>& paths, int corridor);

}  // namespace coxcomb
