#include "cotlat_cli/parse.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace cotlat::cli {

namespace {

double parse_real(std::string_view s, std::string_view whole) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
    throw std::invalid_argument("cannot parse complex number '" + std::string(whole) + "'");
  }
  return v;
}

// Coefficient of i: "", "+", "-" stand for 1, 1, -1.
double parse_imag(std::string_view s, std::string_view whole) {
  if (s.empty() || s == "+") return 1.0;
  if (s == "-") return -1.0;
  return parse_real(s, whole);
}

}  // namespace

Complex parse_complex(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("cannot parse complex number ''");
  if (text.back() != 'i') return {parse_real(text, text), 0.0};
  const auto body = text.substr(0, text.size() - 1);
  // Split at the last sign that is neither leading nor an exponent sign.
  std::size_t split = std::string_view::npos;
  for (std::size_t i = body.size(); i-- > 1;) {
    if ((body[i] == '+' || body[i] == '-') && body[i - 1] != 'e' && body[i - 1] != 'E') {
      split = i;
      break;
    }
  }
  if (split == std::string_view::npos) return {0.0, parse_imag(body, text)};
  return {parse_real(body.substr(0, split), text), parse_imag(body.substr(split), text)};
}

std::vector<GridPoint> parse_grid(std::string_view text) {
  std::vector<GridPoint> points;
  std::istringstream in{std::string(text)};
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::vector<std::string> tok;
    for (std::string t; fields >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    if (tok.size() != 4 || tok[0] != "n" || tok[2] != "z") {
      throw GridParseError(number, "expected 'n <int> z <complex>'");
    }
    int n = 0;
    const auto [ptr, ec] = std::from_chars(tok[1].data(), tok[1].data() + tok[1].size(), n);
    if (ec != std::errc{} || ptr != tok[1].data() + tok[1].size()) {
      throw GridParseError(number, "bad n '" + tok[1] + "'");
    }
    try {
      points.push_back({n, parse_complex(tok[3])});
    } catch (const std::invalid_argument& e) {
      throw GridParseError(number, e.what());
    }
  }
  return points;
}

std::vector<GridPoint> load_grid_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open grid file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_grid(buf.str());
}

std::vector<GridPoint> default_verify_grid() {
  return GridSpec::cartesian({1, 2, 3, 4, 5, 6, 8}, {0.3, 0.7, 1.5, 2.5, {0.5, 0.5}}, {}).points;
}

std::vector<GridPoint> default_bench_grid() {
  return GridSpec::cartesian({1, 2, 3, 4, 8}, {0.5, 2.5, 8.5, 32.5, 128.5}, {}).points;
}

std::vector<GridPoint> resolve_grid(const std::string& name, std::vector<GridPoint> (*fallback)()) {
  return name == "default" ? fallback() : load_grid_file(name);
}

}  // namespace cotlat::cli
