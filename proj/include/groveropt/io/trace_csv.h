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

#ifndef GROVEROPT_IO_TRACE_CSV_H_
#define GROVEROPT_IO_TRACE_CSV_H_

#include <ostream>
#include <string>
#include <string_view>

#include "groveropt/optimizers.h"

namespace groveropt::io {

inline constexpr std::string_view kTraceHeader = "k,q,err,grad_norm,x,y,t,gamma,backtracks,oracle_queries";

/// One line per record; reals in 17-significant-digit scientific notation
/// so identical runs give byte-identical files.
void write_trace_csv(std::ostream& out, const IterTrace& trace);
std::string trace_csv(const IterTrace& trace);

}  // namespace groveropt::io

#endif  // GROVEROPT_IO_TRACE_CSV_H_
