/*
Copyright 2026 The EdgePlacer Authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#include "edgeplacer/csv.hpp"

#include <array>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>

namespace edgeplacer {

namespace {

std::string strip_cr(std::string line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return line;
}

bool parse_index(std::string_view text, std::size_t &out) {
  if (text.empty()) return false;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
  return ec == std::errc() && ptr == text.data() + text.size();
}

}  // namespace

std::string format_double(double x) {
  std::array<char, 64> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x);
  if (ec != std::errc()) return "nan";
  return std::string(buf.data(), ptr);
}

void write_summary_row(std::ostream &os, const std::string &axis, const SweepRow &row) {
  os << axis << ',' << to_string(row.policy) << ',' << format_double(row.avg_latency) << ','
     << format_double(row.avg_cost) << ',' << format_double(row.avg_queue) << ','
     << format_double(row.final_queue) << ',' << row.negative_w_frames << '\n';
}

void write_summary_csv(std::ostream &os, std::span<const SweepRow> rows) {
  os << kSummaryHeader << '\n';
  for (const SweepRow &row : rows) write_summary_row(os, format_double(row.axis_value), row);
}

void write_run_summary_csv(std::ostream &os, std::span<const RunRecord> records) {
  os << kSummaryHeader << '\n';
  for (const RunRecord &rec : records) write_summary_row(os, "run", summarize(0.0, rec));
}

void write_per_slot_csv(std::ostream &os, const RunRecord &rec) {
  os << kPerSlotHeader << '\n';
  for (const SlotRecord &s : rec.per_slot) {
    os << s.t << ',' << s.placement << ',' << format_double(s.latency) << ','
       << format_double(s.cost) << ',' << format_double(s.q) << ',' << format_double(s.w) << '\n';
  }
}

MobilityTrace read_trace_csv(std::istream &is) {
  std::string line;
  if (!std::getline(is, line)) throw TraceFormatError("trace is empty, expected header 'slot,region'");
  if (strip_cr(line) != kTraceHeader) {
    throw TraceFormatError("trace header must be 'slot,region', got '" + strip_cr(line) + "'");
  }
  MobilityTrace trace;
  std::size_t line_no = 1;
  while (std::getline(is, line)) {
    ++line_no;
    line = strip_cr(line);
    if (line.empty()) continue;
    const auto comma = line.find(',');
    std::size_t slot = 0, region = 0;
    if (comma == std::string::npos || !parse_index(std::string_view(line).substr(0, comma), slot) ||
        !parse_index(std::string_view(line).substr(comma + 1), region)) {
      throw TraceFormatError("trace line " + std::to_string(line_no) + ": expected 'slot,region', got '" +
                             line + "'");
    }
    if (slot != trace.regions.size()) {
      throw TraceFormatError("trace line " + std::to_string(line_no) + ": expected slot " +
                             std::to_string(trace.regions.size()) + ", got " + std::to_string(slot));
    }
    trace.regions.push_back(region);
  }
  if (trace.regions.empty()) throw TraceFormatError("trace has no rows");
  return trace;
}

MobilityTrace read_trace_file(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw TraceFormatError("cannot open trace file '" + path + "'");
  try {
    return read_trace_csv(in);
  } catch (const TraceFormatError &e) {
    throw TraceFormatError(path + ": " + e.what());
  }
}

void write_trace_csv(std::ostream &os, const MobilityTrace &trace) {
  os << kTraceHeader << '\n';
  for (std::size_t t = 0; t < trace.regions.size(); ++t) os << t << ',' << trace.regions[t] << '\n';
}

}  // namespace edgeplacer
