#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "infoutil/analysis.hpp"

namespace infoutil {

/// Column order of the trace CSV. Fixed; readers reject any other header.
inline constexpr std::array<std::string_view, 15> kTraceColumns = {
    "step",       "h_act_agent", "h_obs_env",  "h_obs_agent", "h_act_env", "kl_obs_inst", "kl_act_inst", "kl_obs_cum",
    "kl_act_cum", "r_G",         "r_P",        "r_Q",         "u_G_cum",   "u_P_cum",     "u_Q_cum"};

using TraceRecord = std::array<double, kTraceColumns.size()>;

/// Values of `row` in kTraceColumns order.
TraceRecord to_record(const TraceRow& row);

/// Writes "# seed=<n>", the header, then one row per step with 12
/// significant digits.
void write_trace_csv(std::ostream& out, const EntropyTrace& trace, std::uint64_t seed);

/// Thrown for malformed trace files. Row numbers are 1-based file lines.
class TraceParseError : public std::runtime_error {
 public:
  TraceParseError(std::size_t line, std::string column, const std::string& what);
  std::size_t line() const { return line_; }
  const std::string& column() const { return column_; }

 private:
  std::size_t line_;
  std::string column_;
};

struct TraceFile {
  std::uint64_t seed = 0;
  std::vector<TraceRecord> rows;
};

TraceFile read_trace_csv(std::istream& in);

}  // namespace infoutil
