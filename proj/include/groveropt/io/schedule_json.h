// Copyright 2026 The groveropt Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GROVEROPT_IO_SCHEDULE_JSON_H_
#define GROVEROPT_IO_SCHEDULE_JSON_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "groveropt/gate_word.h"
#include "groveropt/optimizers.h"
#include "groveropt/plane.h"

namespace groveropt::io {

inline constexpr int kScheduleFormat = 1;

/// The deployable circuit of a run: accepted words only, grouped by
/// iteration, angles reduced to (-pi, pi]. Rejected line-search trials are
/// summarized by their oracle cost in `trial_queries`.
///
/// JSON layout:
///   {"format": 1,
///    "spec": {"n": <int>, "M": <int>, "q0": <real>},
///    "method": "rga" | "rmn" | "grover",
///    "iterations": [{"k": <int>, "gates": [{"kind": "oracle"|"diffusion",
///                                          "theta": <radians>}, ...]}, ...],
///    "total_oracle_queries": <int>,
///    "trial_queries": <int>}
struct Schedule {
    OracleSpec spec;
    Method method = Method::kRmn;
    std::vector<GateWord> iterations;
    std::uint64_t total_oracle_queries = 0;
    std::uint64_t trial_queries = 0;
};

Schedule make_schedule(const RunResult& run);

/// Shortest round-trip formatting for reals.
std::string schedule_to_json(const Schedule& schedule, int indent = 2);

/// Throws InvalidInput on malformed documents, unknown format versions or
/// gate kinds, and query totals that disagree with the gate list.
Schedule schedule_from_json(std::string_view text);

/// Runs the schedule from the uniform superposition through the plane
/// simulator.
PlaneState replay_schedule(const Schedule& schedule);

}  // namespace groveropt::io

#endif  // GROVEROPT_IO_SCHEDULE_JSON_H_
