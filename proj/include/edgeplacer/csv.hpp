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

#pragma once

#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>

#include "edgeplacer/harness.hpp"

namespace edgeplacer {

class TraceFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr const char *kSummaryHeader =
    "axis,policy,avg_latency_s,avg_cost,avg_queue,final_queue,negative_w_frames";
inline constexpr const char *kPerSlotHeader = "t,placement,latency_s,cost,q,w";
inline constexpr const char *kTraceHeader = "slot,region";

/// Shortest decimal that round-trips to the same double.
std::string format_double(double x);

/// `axis` is written verbatim (a number for sweeps, "run" for single runs).
void write_summary_row(std::ostream &os, const std::string &axis, const SweepRow &row);
void write_summary_csv(std::ostream &os, std::span<const SweepRow> rows);
void write_run_summary_csv(std::ostream &os, std::span<const RunRecord> records);
void write_per_slot_csv(std::ostream &os, const RunRecord &rec);

/// Header `slot,region`, slots 0,1,2,... in order. Throws TraceFormatError.
MobilityTrace read_trace_csv(std::istream &is);
MobilityTrace read_trace_file(const std::string &path);
void write_trace_csv(std::ostream &os, const MobilityTrace &trace);

}  // namespace edgeplacer
