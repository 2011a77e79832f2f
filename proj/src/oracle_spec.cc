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

#include "groveropt/oracle_spec.h"

#include <cmath>
#include <string>

namespace groveropt {

OracleSpec make_spec(int qubits, std::uint64_t marked) {
    if (qubits < 1 || qubits > kMaxPlaneQubits) {
        throw InvalidInput("qubit count must be in [1, 62], got " + std::to_string(qubits));
    }
    const std::uint64_t size = std::uint64_t{1} << qubits;
    if (marked == 0 || marked >= size) {
        throw InvalidInput("marked count must satisfy 1 <= M < 2^n (M=" + std::to_string(marked) +
                           ", N=" + std::to_string(size) + ")");
    }
    OracleSpec spec;
    spec.qubits = qubits;
    spec.marked = marked;
    spec.size = size;
    spec.q0 = std::ldexp(static_cast<double>(marked), -qubits);
    spec.q0_complement = std::ldexp(static_cast<double>(size - marked), -qubits);
    return spec;
}

}  // namespace groveropt
