#include "cotlat_cli/records.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <stdexcept>

#include "json.hpp"

namespace cotlat::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

// JSON has no inf/nan literals; they travel as strings.
ordered_json encode_double(double v) {
  if (std::isfinite(v)) return v;
  if (std::isnan(v)) return "nan";
  return v > 0 ? "inf" : "-inf";
}

double decode_double(const ordered_json& j) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
    if (s == "inf") return std::numeric_limits<double>::infinity();
    if (s == "-inf") return -std::numeric_limits<double>::infinity();
  }
  throw std::invalid_argument("record: expected a number");
}

double parse_double(std::string_view s) {
  if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
  if (s == "inf") return std::numeric_limits<double>::infinity();
  if (s == "-inf") return -std::numeric_limits<double>::infinity();
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
    throw std::invalid_argument("record: bad number '" + std::string(s) + "'");
  }
  return v;
}

std::int64_t parse_int(std::string_view s) {
  const std::string text(s);
  std::size_t used = 0;
  std::int64_t v = 0;
  try {
    v = std::stoll(text, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("record: bad integer '" + text + "'");
  }
  if (used != text.size()) throw std::invalid_argument("record: bad integer '" + text + "'");
  return v;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (const char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

std::vector<std::string> split_csv(std::string_view row) {
  std::vector<std::string> fields(1);
  bool quoted = false;
  for (std::size_t i = 0; i < row.size(); ++i) {
    const char c = row[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < row.size() && row[i + 1] == '"') {
          fields.back() += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        fields.back() += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.emplace_back();
    } else {
      fields.back() += c;
    }
  }
  if (quoted) throw std::invalid_argument("record: unterminated quote");
  return fields;
}

// Params share one CSV column as k=v;k=v with %, ; and = percent-escaped.
std::string escape_param(const std::string& s) {
  std::string out;
  for (const char c : s) {
    if (c == '%' || c == ';' || c == '=') {
      char buf[4];
      std::snprintf(buf, sizeof buf, "%%%02X", static_cast<unsigned char>(c));
      out += buf;
    } else {
      out += c;
    }
  }
  return out;
}

std::string unescape_param(std::string_view s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '%' && i + 2 < s.size()) {
      out += static_cast<char>(std::stoi(std::string(s.substr(i + 1, 2)), nullptr, 16));
      i += 2;
    } else {
      out += s[i];
    }
  }
  return out;
}

std::string encode_params(const OutputRecord& r) {
  std::string out;
  for (const auto& [k, v] : r.params) {
    if (!out.empty()) out += ';';
    out += escape_param(k) + '=' + escape_param(v);
  }
  return out;
}

std::vector<std::pair<std::string, std::string>> decode_params(std::string_view s) {
  std::vector<std::pair<std::string, std::string>> out;
  while (!s.empty()) {
    const auto end = s.find(';');
    const auto item = s.substr(0, end);
    const auto eq = item.find('=');
    if (eq == std::string_view::npos) throw std::invalid_argument("record: bad params field");
    out.emplace_back(unescape_param(item.substr(0, eq)), unescape_param(item.substr(eq + 1)));
    if (end == std::string_view::npos) break;
    s.remove_prefix(end + 1);
  }
  return out;
}

std::string params_text(const std::vector<std::pair<std::string, std::string>>& params) {
  std::string out;
  for (const auto& [k, v] : params) {
    if (!out.empty()) out += ' ';
    out += k + '=' + v;
  }
  return out;
}

}  // namespace

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string format_complex(Complex z) {
  std::string im = format_double(z.imag());
  if (im.front() != '-') im = "+" + im;
  return format_double(z.real()) + im + "i";
}

Format format_from_string(std::string_view s) {
  if (s == "plain") return Format::Plain;
  if (s == "csv") return Format::Csv;
  if (s == "json-lines") return Format::JsonLines;
  throw std::invalid_argument("unknown format: " + std::string(s));
}

std::string to_json_line(const OutputRecord& r) {
  ordered_json params = ordered_json::object();
  for (const auto& [k, v] : r.params) params[k] = v;
  ordered_json j;
  j["schema_version"] = kSchemaVersion;
  j["record"] = "value";
  j["command"] = r.command;
  j["params"] = std::move(params);
  j["quantity"] = r.quantity;
  j["method"] = r.method;
  j["re"] = encode_double(r.re);
  j["im"] = encode_double(r.im);
  j["err_estimate"] = encode_double(r.err_estimate);
  j["work"] = r.work;
  j["wall_time_ns"] = r.wall_time_ns;
  j["status"] = r.status;
  return j.dump();
}

OutputRecord record_from_json_line(std::string_view line) {
  ordered_json j;
  try {
    j = ordered_json::parse(line);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("record: ") + e.what());
  }
  try {
    if (j.at("schema_version").get<int>() != kSchemaVersion) {
      throw std::invalid_argument("record: unsupported schema_version");
    }
    OutputRecord r;
    r.command = j.at("command").get<std::string>();
    for (const auto& [k, v] : j.at("params").items()) r.params.emplace_back(k, v.get<std::string>());
    r.quantity = j.at("quantity").get<std::string>();
    r.method = j.at("method").get<std::string>();
    r.re = decode_double(j.at("re"));
    r.im = decode_double(j.at("im"));
    r.err_estimate = decode_double(j.at("err_estimate"));
    r.work = j.at("work").get<std::int64_t>();
    r.wall_time_ns = j.at("wall_time_ns").get<std::int64_t>();
    r.status = j.at("status").get<std::string>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("record: ") + e.what());
  }
}

std::string csv_header() {
  return "schema_version,command,params,quantity,method,re,im,err_estimate,work,wall_time_ns,status";
}

std::string to_csv_row(const OutputRecord& r) {
  std::string row = std::to_string(kSchemaVersion);
  for (const std::string& f :
       {r.command, encode_params(r), r.quantity, r.method, format_double(r.re), format_double(r.im),
        format_double(r.err_estimate), std::to_string(r.work), std::to_string(r.wall_time_ns), r.status}) {
    row += ',';
    row += csv_field(f);
  }
  return row;
}

OutputRecord record_from_csv_row(std::string_view row) {
  const auto f = split_csv(row);
  if (f.size() != 11) throw std::invalid_argument("record: expected 11 CSV fields");
  if (parse_int(f[0]) != kSchemaVersion) throw std::invalid_argument("record: unsupported schema_version");
  OutputRecord r;
  r.command = f[1];
  r.params = decode_params(f[2]);
  r.quantity = f[3];
  r.method = f[4];
  r.re = parse_double(f[5]);
  r.im = parse_double(f[6]);
  r.err_estimate = parse_double(f[7]);
  r.work = parse_int(f[8]);
  r.wall_time_ns = parse_int(f[9]);
  r.status = f[10];
  return r;
}

std::string to_plain(const OutputRecord& r) {
  std::string out = r.command;
  if (!r.params.empty()) out += " " + params_text(r.params);
  out += "  " + r.quantity + " [" + r.method + "] = ";
  out += r.im == 0.0 ? format_double(r.re) : format_complex({r.re, r.im});
  out += "  err=" + format_double(r.err_estimate);
  out += " work=" + std::to_string(r.work);
  out += " time_ns=" + std::to_string(r.wall_time_ns);
  if (r.status != "ok") out += "  " + r.status;
  return out;
}

void RecordWriter::write(const OutputRecord& r) {
  switch (format_) {
    case Format::JsonLines:
      out_ << to_json_line(r) << '\n';
      break;
    case Format::Csv:
      if (!header_done_) {
        out_ << csv_header() << '\n';
        header_done_ = true;
      }
      out_ << to_csv_row(r) << '\n';
      break;
    case Format::Plain:
      out_ << to_plain(r) << '\n';
      break;
  }
}

void write_verify_report(std::ostream& out, Format format, const VerifyReport& report) {
  const auto& s = report.summary;
  switch (format) {
    case Format::JsonLines: {
      for (const auto& c : report.entries) {
        ordered_json j;
        j["schema_version"] = VerifyReport::kSchemaVersion;
        j["record"] = "comparison";
        j["n"] = c.point.n;
        j["z"] = format_complex(c.point.z);
        j["method_a"] = to_string(c.a);
        j["method_b"] = to_string(c.b);
        j["delta"] = encode_double(c.delta);
        j["bound"] = encode_double(c.bound);
        j["pass"] = c.pass;
        out << j.dump() << '\n';
      }
      for (const auto& p : report.points) {
        for (const auto& o : p.outcomes) {
          if (o.result) continue;
          ordered_json j;
          j["schema_version"] = VerifyReport::kSchemaVersion;
          j["record"] = "error";
          j["n"] = p.point.n;
          j["z"] = format_complex(p.point.z);
          j["method"] = to_string(o.method);
          j["error_kind"] = o.error ? to_string(*o.error) : "";
          j["message"] = o.message;
          out << j.dump() << '\n';
        }
      }
      ordered_json j;
      j["schema_version"] = VerifyReport::kSchemaVersion;
      j["record"] = "summary";
      j["max_delta"] = encode_double(s.max_delta);
      if (s.worst) {
        j["worst"] = {{"n", s.worst->point.n},
                      {"z", format_complex(s.worst->point.z)},
                      {"method_a", to_string(s.worst->a)},
                      {"method_b", to_string(s.worst->b)},
                      {"delta", encode_double(s.worst->delta)},
                      {"bound", encode_double(s.worst->bound)}};
      } else {
        j["worst"] = nullptr;
      }
      j["pass_count"] = s.pass_count;
      j["fail_count"] = s.fail_count;
      j["error_count"] = s.error_count;
      j["all_pass"] = report.all_pass();
      out << j.dump() << '\n';
      break;
    }
    case Format::Csv: {
      out << "schema_version,record,n,z,method_a,method_b,delta,bound,pass,detail\n";
      const std::string v = std::to_string(VerifyReport::kSchemaVersion);
      for (const auto& c : report.entries) {
        out << v << ",comparison," << c.point.n << ',' << format_complex(c.point.z) << ',' << to_string(c.a)
            << ',' << to_string(c.b) << ',' << format_double(c.delta) << ',' << format_double(c.bound) << ','
            << (c.pass ? "true" : "false") << ",\n";
      }
      for (const auto& p : report.points) {
        for (const auto& o : p.outcomes) {
          if (o.result) continue;
          out << v << ",error," << p.point.n << ',' << format_complex(p.point.z) << ',' << to_string(o.method)
              << ",,,," << "false," << csv_field((o.error ? std::string(to_string(*o.error)) + ": " : "") + o.message)
              << '\n';
        }
      }
      out << v << ",summary,,,,," << format_double(s.max_delta) << ",," << (report.all_pass() ? "true" : "false")
          << ",pass=" << s.pass_count << " fail=" << s.fail_count << " error=" << s.error_count << '\n';
      break;
    }
    case Format::Plain: {
      for (const auto& c : report.entries) {
        out << (c.pass ? "pass " : "FAIL ") << "n=" << c.point.n << " z=" << format_complex(c.point.z) << "  "
            << to_string(c.a) << " vs " << to_string(c.b) << "  delta=" << format_double(c.delta)
            << " bound=" << format_double(c.bound) << '\n';
      }
      for (const auto& p : report.points) {
        for (const auto& o : p.outcomes) {
          if (o.result) continue;
          out << "error n=" << p.point.n << " z=" << format_complex(p.point.z) << "  " << to_string(o.method)
              << ": " << o.message << '\n';
        }
      }
      out << "summary: " << s.pass_count << " pass, " << s.fail_count << " fail, " << s.error_count
          << " error, max delta " << format_double(s.max_delta) << '\n';
      break;
    }
  }
}

}  // namespace cotlat::cli
