#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "cotlat/verify.hpp"

namespace cotlat::cli {

/// "a", "a+bi", "a-bi", "bi", "i", "-i"; no whitespace, scientific notation allowed.
/// Throws std::invalid_argument.
Complex parse_complex(std::string_view text);

class GridParseError : public std::runtime_error {
 public:
  GridParseError(int line, const std::string& what)
      : std::runtime_error("grid line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

/// One point per line, `n <int> z <complex>`; `#` starts a comment, blank lines
/// are skipped.
std::vector<GridPoint> parse_grid(std::string_view text);
std::vector<GridPoint> load_grid_file(const std::string& path);

/// n in {1,2,3,4,5,6,8} x z in {0.3, 0.7, 1.5, 2.5, 0.5+0.5i}.
std::vector<GridPoint> default_verify_grid();
/// n in {1,2,3,4,8} x z in {0.5, 2.5, 8.5, 32.5, 128.5}.
std::vector<GridPoint> default_bench_grid();

/// "default" selects `fallback`, anything else is a file path.
std::vector<GridPoint> resolve_grid(const std::string& name, std::vector<GridPoint> (*fallback)());

}  // namespace cotlat::cli
