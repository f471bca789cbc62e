#include "infoutil/trace_csv.hpp"

#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <istream>
#include <ostream>
#include <sstream>

namespace infoutil {

namespace {

std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> fields;
  std::stringstream ss(line);
  std::string field;
  while (std::getline(ss, field, ',')) {
    fields.push_back(field);
  }
  if (!line.empty() && line.back() == ',') {
    fields.emplace_back();
  }
  return fields;
}

}  // namespace

TraceRecord to_record(const TraceRow& r) {
  return {static_cast<double>(r.step), r.h_act_agent, r.h_obs_env, r.h_obs_agent, r.h_act_env,
          r.kl_obs_inst,               r.kl_act_inst, r.kl_obs_cum, r.kl_act_cum,  r.r_G,
          r.r_P,                       r.r_Q,         r.u_G_cum,    r.u_P_cum,     r.u_Q_cum};
}

void write_trace_csv(std::ostream& out, const EntropyTrace& trace, std::uint64_t seed) {
  out << "# seed=" << seed << '\n';
  for (std::size_t i = 0; i < kTraceColumns.size(); ++i) {
    out << (i ? "," : "") << kTraceColumns[i];
  }
  out << '\n';
  for (const TraceRow& row : trace.rows) {
    const TraceRecord rec = to_record(row);
    out << row.step;
    for (std::size_t i = 1; i < rec.size(); ++i) {
      out << ',' << format_number(rec[i]);
    }
    out << '\n';
  }
}

TraceParseError::TraceParseError(std::size_t line, std::string column, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + (column.empty() ? "" : ", column '" + column + "'") + ": " +
                         what),
      line_(line),
      column_(std::move(column)) {}

TraceFile read_trace_csv(std::istream& in) {
  TraceFile file;
  std::string line;
  std::size_t line_no = 0;

  auto next_line = [&]() -> bool {
    if (!std::getline(in, line)) {
      return false;
    }
    ++line_no;
    if (!line.empty() && line.back() == '\r') {
      line.pop_back();
    }
    return true;
  };

  if (!next_line() || line.rfind("# seed=", 0) != 0) {
    throw TraceParseError(line_no, "", "expected '# seed=<n>' metadata line");
  }
  {
    const std::string digits = line.substr(7);
    const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), file.seed);
    if (ec != std::errc{} || ptr != digits.data() + digits.size() || digits.empty()) {
      throw TraceParseError(line_no, "", "seed is not an unsigned integer");
    }
  }

  if (!next_line()) {
    throw TraceParseError(line_no + 1, "", "missing header");
  }
  const std::vector<std::string> header = split(line);
  if (header.size() != kTraceColumns.size()) {
    throw TraceParseError(line_no, "", "header has " + std::to_string(header.size()) + " columns, expected " +
                                           std::to_string(kTraceColumns.size()));
  }
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (header[i] != kTraceColumns[i]) {
      throw TraceParseError(line_no, std::string(kTraceColumns[i]), "unexpected header name '" + header[i] + "'");
    }
  }

  while (next_line()) {
    const std::vector<std::string> fields = split(line);
    if (fields.size() != kTraceColumns.size()) {
      throw TraceParseError(line_no, "", "expected " + std::to_string(kTraceColumns.size()) + " fields, found " +
                                             std::to_string(fields.size()));
    }
    TraceRecord rec{};
    for (std::size_t i = 0; i < fields.size(); ++i) {
      // strtod accepts the inf/-inf spellings printf produces.
      const char* begin = fields[i].c_str();
      char* end = nullptr;
      rec[i] = std::strtod(begin, &end);
      if (fields[i].empty() || end != begin + fields[i].size()) {
        throw TraceParseError(line_no, std::string(kTraceColumns[i]), "not a number: '" + fields[i] + "'");
      }
    }
    file.rows.push_back(rec);
  }
  return file;
}

}  // namespace infoutil
