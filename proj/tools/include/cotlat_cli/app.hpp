#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cotlat::cli {

enum ExitCode : int { kExitOk = 0, kExitToleranceMiss = 1, kExitUsage = 2 };

/// Environment variable naming the configuration file.
inline constexpr const char* kConfigEnv = "COTLAT_CONFIG";
/// Configuration file read from the working directory when present.
inline constexpr const char* kDefaultConfig = "cotlat.toml";

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
/// argv[0] is supplied.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cotlat::cli
