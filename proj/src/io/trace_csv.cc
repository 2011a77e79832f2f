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

#include "groveropt/io/trace_csv.h"

#include <fmt/format.h>
#include <fmt/ostream.h>

#include <sstream>

namespace groveropt::io {

void write_trace_csv(std::ostream& out, const IterTrace& trace) {
    out << kTraceHeader << '\n';
    for (const IterRecord& r : trace.records) {
        out << fmt::format("{},{:.16e},{:.16e},{:.16e},{:.16e},{:.16e},{:.16e},{:.16e},{},{}\n", r.k, r.q, r.err,
                           r.grad_norm, r.x, r.y, r.t, r.gamma, r.backtracks, r.oracle_queries);
    }
}

std::string trace_csv(const IterTrace& trace) {
    std::ostringstream os;
    write_trace_csv(os, trace);
    return os.str();
}

}  // namespace groveropt::io
