#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cotlat/verify.hpp"

namespace cotlat::cli {

inline constexpr int kSchemaVersion = 1;

/// One evaluated quantity. `params` echoes the request (flag name, text as given).
struct OutputRecord {
  std::string command;
  std::vector<std::pair<std::string, std::string>> params;
  std::string quantity;
  std::string method;
  double re = 0.0;
  double im = 0.0;
  double err_estimate = 0.0;
  std::int64_t work = 0;
  std::int64_t wall_time_ns = 0;
  /// "ok", "tolerance_miss", or an ErrorKind name.
  std::string status = "ok";

  friend bool operator==(const OutputRecord&, const OutputRecord&) = default;
};

enum class Format { Plain, Csv, JsonLines };

Format format_from_string(std::string_view s);

std::string to_json_line(const OutputRecord& r);
/// Throws std::invalid_argument on malformed input or a schema_version mismatch.
OutputRecord record_from_json_line(std::string_view line);

std::string csv_header();
std::string to_csv_row(const OutputRecord& r);
/// Parses a row produced by to_csv_row.
OutputRecord record_from_csv_row(std::string_view row);

std::string to_plain(const OutputRecord& r);

/// Writes records in one format; CSV gets its header before the first row.
class RecordWriter {
 public:
  RecordWriter(std::ostream& out, Format format) : out_(out), format_(format) {}
  void write(const OutputRecord& r);

 private:
  std::ostream& out_;
  Format format_;
  bool header_done_ = false;
};

/// Comparison entries, error entries and a closing summary line.
void write_verify_report(std::ostream& out, Format format, const VerifyReport& report);

/// %.17g
std::string format_double(double v);
/// "a+bi" with both parts at %.17g.
std::string format_complex(Complex z);

}  // namespace cotlat::cli
