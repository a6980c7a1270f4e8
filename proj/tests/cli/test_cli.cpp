#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <algorithm>
#include <limits>
#include <map>
#include <numbers>
#include <sstream>

#include "cotlat_cli/app.hpp"
#include "cotlat_cli/parse.hpp"
#include "cotlat_cli/records.hpp"
#include "doctest.h"

using namespace cotlat;
using namespace cotlat::cli;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<OutputRecord> json_records(const std::string& text) {
  std::vector<OutputRecord> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(record_from_json_line(line));
  return out;
}

std::filesystem::path temp_file(const std::string& name, const std::string& body) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << body;
  return path;
}

}  // namespace

TEST_CASE("complex argument syntax") {
  CHECK(parse_complex("1") == Complex{1.0, 0.0});
  CHECK(parse_complex("-2.5") == Complex{-2.5, 0.0});
  CHECK(parse_complex("1+2i") == Complex{1.0, 2.0});
  CHECK(parse_complex("1-2i") == Complex{1.0, -2.0});
  CHECK(parse_complex("-1-i") == Complex{-1.0, -1.0});
  CHECK(parse_complex("0.5+i") == Complex{0.5, 1.0});
  CHECK(parse_complex("3i") == Complex{0.0, 3.0});
  CHECK(parse_complex("-i") == Complex{0.0, -1.0});
  CHECK(parse_complex("i") == Complex{0.0, 1.0});
  CHECK(parse_complex("1e-3+2.5e+1i") == Complex{1e-3, 25.0});
  CHECK(parse_complex("1E2-1e-2i") == Complex{100.0, -0.01});
  CHECK(parse_complex("+4") == Complex{4.0, 0.0});
  for (const char* bad : {"", "1 + 2i", "abc", "1+2j", "1+2", "--1", "1+2ii", "1e", "i1"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_complex(bad), std::invalid_argument);
  }
}

TEST_CASE("formatted complex numbers parse back exactly") {
  for (const Complex z : {Complex{0.1, -0.3}, Complex{1e-300, 2.5e17}, Complex{-3.0, 0.0}, Complex{std::numbers::pi, std::numbers::e}}) {
    CHECK(parse_complex(format_complex(z)) == z);
  }
}

TEST_CASE("grid files") {
  const auto pts = parse_grid("# header\n\nn 2 z 1\nn 3 z 0.5+0.5i   # trailing\n  n 4 z -1e-1-2i\n");
  REQUIRE(pts.size() == 3);
  CHECK(pts[0].n == 2);
  CHECK(pts[1].z == Complex{0.5, 0.5});
  CHECK(pts[2].z == Complex{-0.1, -2.0});
  try {
    parse_grid("n 2 z 1\nn two z 1\n");
    FAIL("expected a parse error");
  } catch (const GridParseError& e) {
    CHECK(e.line() == 2);
  }
  CHECK_THROWS_AS(parse_grid("n 2 1\n"), GridParseError);
  CHECK_THROWS_AS(parse_grid("n 2 z 1+\n"), GridParseError);
  CHECK(default_verify_grid().size() == 35);
  CHECK(default_bench_grid().size() == 25);
}

TEST_CASE("records round-trip through json-lines and csv") {
  OutputRecord r;
  r.command = "eval";
  r.params = {{"n", "3"}, {"z", "0.1-2i"}, {"odd;key=", "a,b\"c%"}};
  r.quantity = "U_n";
  r.method = "ClosedForm";
  r.re = 0.1 + 0.2;
  r.im = -1.0 / 3.0;
  r.err_estimate = 5e-324;
  r.work = 3;
  r.wall_time_ns = 123456789012;
  r.status = "ok";
  CHECK(record_from_json_line(to_json_line(r)) == r);
  CHECK(record_from_csv_row(to_csv_row(r)) == r);

  r.err_estimate = std::numeric_limits<double>::infinity();
  r.status = "NonConvergent";
  CHECK(record_from_json_line(to_json_line(r)) == r);
  CHECK(record_from_csv_row(to_csv_row(r)) == r);

  r.re = std::numeric_limits<double>::quiet_NaN();
  const auto back = record_from_json_line(to_json_line(r));
  CHECK(std::isnan(back.re));
  CHECK_THROWS_AS(record_from_json_line("{\"schema_version\":2}"), std::invalid_argument);
  CHECK_THROWS_AS(record_from_json_line("not json"), std::invalid_argument);
  CHECK_THROWS_AS(record_from_csv_row("1,eval"), std::invalid_argument);
}

TEST_CASE("every record of a real run round-trips") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"--format", "json-lines", "eval", "-n", "4", "-z", "0.3+0.2i"},
           {"--format", "json-lines", "zeta", "-n", "2"},
           {"--format", "json-lines", "product", "-n", "3", "-x", "0.2", "-y", "0.6"}}) {
    const auto res = run(args);
    REQUIRE(res.code == 0);
    std::istringstream in(res.out);
    for (std::string line; std::getline(in, line);) CHECK(to_json_line(record_from_json_line(line)) == line);
  }
  const auto csv = run({"--format", "csv", "eval", "-n", "2", "-z", "1"});
  std::istringstream in(csv.out);
  std::string header, line;
  std::getline(in, header);
  CHECK(header == csv_header());
  while (std::getline(in, line)) CHECK(to_csv_row(record_from_csv_row(line)) == line);
}

TEST_CASE("eval subcommand") {
  auto res = run({"--format", "json-lines", "eval", "-n", "2", "-z", "1", "--method", "closed"});
  CHECK(res.code == 0);
  auto recs = json_records(res.out);
  REQUIRE(recs.size() == 1);
  CHECK(recs[0].re == doctest::Approx(3.15334809).epsilon(1e-8));
  CHECK(recs[0].im == 0.0);
  CHECK(recs[0].method == "ClosedForm");
  CHECK(recs[0].params == std::vector<std::pair<std::string, std::string>>{{"n", "2"}, {"z", "1"}, {"method", "closed"}});

  res = run({"--format", "json-lines", "eval", "-n", "1", "-z", "0.5", "--method", "direct"});
  CHECK(res.code == 0);
  recs = json_records(res.out);
  REQUIRE(recs.size() == 1);
  CHECK(std::abs(recs[0].re) < 1e-9);

  res = run({"--format", "json-lines", "eval", "-n", "4", "-z", "1", "--method", "all"});
  CHECK(res.code == 0);
  CHECK(json_records(res.out).size() == 4);
  res = run({"--format", "json-lines", "eval", "-n", "3", "-z", "0.5"});
  CHECK(json_records(res.out).size() == 2);
}

TEST_CASE("usage and domain errors exit with 2 and one diagnostic line") {
  const std::vector<std::vector<std::string>> cases{
      {"eval", "-n", "2", "-z", "0"},
      {"eval", "-n", "2", "-z", "1+"},
      {"eval", "-n", "0", "-z", "1"},
      {"eval", "-n", "3", "-z", "1", "--method", "theta"},
      {"eval", "-n", "2", "-z", "1", "--method", "simpson"},
      {"eval", "-n", "2"},
      {"zeta", "-n", "0"},
      {"product", "-n", "1", "-x", "0.6", "-y", "0.5"},
      {"theta", "-n", "1", "-q", "1.5"},
      {"verify", "--grid", "/nonexistent/grid.txt"},
      {"--abs-tol", "0", "--rel-tol", "0", "zeta", "-n", "1"},
      {"frobnicate"},
      {},
  };
  for (const auto& args : cases) {
    const auto res = run(args);
    CAPTURE(res.err);
    CHECK(res.code == 2);
    CHECK(res.out.empty());
    CHECK(std::count(res.err.begin(), res.err.end(), '\n') == 1);
  }
  CHECK(run({"eval", "-n", "2", "-z", "0"}).err.find("domain: z=0 excluded for even n") != std::string::npos);
}

TEST_CASE("help exits with 0") {
  const auto res = run({"--help"});
  CHECK(res.code == 0);
  CHECK(res.out.find("eval") != std::string::npos);
}

TEST_CASE("tolerance misses exit with 1") {
  const auto res = run({"--format", "json-lines", "--max-terms", "50", "eval", "-n", "2", "-z", "1", "--method", "direct"});
  CHECK(res.code == 1);
  const auto recs = json_records(res.out);
  REQUIRE(recs.size() == 1);
  CHECK(recs[0].status == "NonConvergent");
}

TEST_CASE("zeta, product and theta subcommands") {
  auto recs = json_records(run({"--format", "json-lines", "zeta", "-n", "1"}).out);
  REQUIRE(recs.size() == 2);
  CHECK(recs[0].re == doctest::Approx(1.64493407).epsilon(1e-8));
  CHECK(recs[1].re == doctest::Approx(1.64493407).epsilon(1e-6));
  recs = json_records(run({"--format", "json-lines", "zeta", "-n", "2"}).out);
  CHECK(recs[0].re == doctest::Approx(1.08232323).epsilon(1e-8));

  auto res = run({"--format", "json-lines", "product", "-n", "1", "-x", "0.25", "-y", "0.5"});
  CHECK(res.code == 0);
  recs = json_records(res.out);
  REQUIRE(recs.size() == 2);
  CHECK(recs[1].quantity == "product");
  CHECK(recs[1].re == doctest::Approx(2.0).epsilon(1e-10));
  recs = json_records(run({"--format", "json-lines", "product", "-n", "1", "-x", "0.5", "-y", "0.5"}).out);
  CHECK(recs[1].re == 1.0);

  recs = json_records(run({"--format", "json-lines", "theta", "-n", "1", "-q", "0.1"}).out);
  REQUIRE(recs.size() == 1);
  CHECK(std::abs(recs[0].re - 1.2002000020) < 1e-9);
}

TEST_CASE("verify subcommand") {
  auto res = run({"--format", "json-lines", "verify", "--grid", "default"});
  CHECK(res.code == 0);
  CHECK(res.out.find("\"record\":\"summary\"") != std::string::npos);
  CHECK(res.out.find("\"all_pass\":true") != std::string::npos);

  const auto grid = temp_file("cotlat_cli_grid.txt", "n 2 z 0\nn 4 z 1\n");
  res = run({"verify", "--grid", grid.string()});
  CHECK(res.code == 1);
  CHECK(res.out.find("error n=2") != std::string::npos);

  res = run({"--format", "csv", "verify", "--grid", "default"});
  CHECK(res.code == 0);
  CHECK(res.out.rfind("schema_version,record,", 0) == 0);
}

TEST_CASE("bench subcommand: closed-form work is n, direct work grows with |z|") {
  const auto res = run({"--format", "json-lines", "bench", "--grid", "default", "--repeats", "1"});
  CHECK(res.code == 0);
  const auto recs = json_records(res.out);
  CHECK(!recs.empty());
  std::map<std::string, std::int64_t> last_direct;
  for (const auto& r : recs) {
    const std::string n = r.params.at(0).second;
    if (r.method == "ClosedForm") CHECK(r.work == std::stoll(n));
    if (r.method == "DirectSum") {
      CHECK(r.work >= last_direct[n]);
      last_direct[n] = r.work;
    }
    CHECK(r.wall_time_ns > 0);
  }
}

TEST_CASE("configuration file and environment override") {
  const auto cfg = temp_file("cotlat_cli_test.toml", "format = \"json-lines\"\nmax-terms = 50\n");
  auto res = run({"--config", cfg.string(), "eval", "-n", "2", "-z", "1", "--method", "direct"});
  CHECK(res.code == 1);
  CHECK(res.out.find("NonConvergent") != std::string::npos);

  setenv(kConfigEnv, cfg.string().c_str(), 1);
  res = run({"eval", "-n", "2", "-z", "1", "--method", "closed"});
  unsetenv(kConfigEnv);
  CHECK(res.code == 0);
  CHECK(res.out.rfind("{\"schema_version\":1", 0) == 0);

  // Flags beat the file.
  res = run({"--config", cfg.string(), "--max-terms", "10000000", "eval", "-n", "2", "-z", "1", "--method", "direct"});
  CHECK(res.code == 0);
}

TEST_CASE("global options after the subcommand") {
  const auto res = run({"eval", "-n", "2", "-z", "1", "--format", "json-lines"});
  CHECK(res.code == 0);
  CHECK(res.out.rfind("{", 0) == 0);
}
