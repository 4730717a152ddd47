// Command implementations shared by the qcanon binary and its tests.
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "qcanon/io.hpp"

namespace qcanon::cli {

enum Exit { ok = 0, check_failed = 1, config_error = 2, invariant_breach = 3 };

int cmd_roots(const RunConfig& cfg, std::ostream& out);
int cmd_gram(const RunConfig& cfg, std::ostream& out);
int cmd_transition(const RunConfig& cfg, std::ostream& out);
int cmd_check(const RunConfig& cfg, std::ostream& out);

/// Parses `args` (without the program name), dispatches, and maps
/// exceptions onto the exit codes above.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// fixtures/<preset>/<weight>.json, the weight written as on the command line
std::string fixture_path(const std::string& dir, const std::string& preset, const RootVector& weight);

}  // namespace qcanon::cli
