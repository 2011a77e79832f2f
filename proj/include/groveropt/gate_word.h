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

#ifndef GROVEROPT_GATE_WORD_H_
#define GROVEROPT_GATE_WORD_H_

#include <cstddef>
#include <random>
#include <string_view>
#include <vector>

namespace groveropt {

/// kOracle is exp(i*theta*H) and costs one oracle query; kDiffusion is
/// exp(i*theta*psi0).
enum class GateKind { kOracle, kDiffusion };

std::string_view gate_kind_name(GateKind kind);

struct Gate {
    GateKind kind = GateKind::kOracle;
    double angle = 0.0;

    friend bool operator==(const Gate&, const Gate&) = default;
};

/// Gates in circuit order: gates.front() acts on the state first.
struct GateWord {
    std::vector<Gate> gates;

    std::size_t size() const { return gates.size(); }
    bool empty() const { return gates.empty(); }

    void push_oracle(double angle) { gates.push_back({GateKind::kOracle, angle}); }
    void push_diffusion(double angle) { gates.push_back({GateKind::kDiffusion, angle}); }

    /// Appends `later` so that it runs after the gates already present.
    GateWord& append(const GateWord& later);

    friend bool operator==(const GateWord&, const GateWord&) = default;
};

/// w1 runs first, then w2.
GateWord concat(const GateWord& w1, const GateWord& w2);

std::size_t oracle_count(const GateWord& word);

/// Maps an angle to (-pi, pi].
double reduce_angle(double angle);

/// Random Grover-compatible word: fair-coin gate kinds, angles uniform in
/// (-pi, pi].
GateWord random_grover_word(std::mt19937_64& rng, std::size_t length);

}  // namespace groveropt

#endif  // GROVEROPT_GATE_WORD_H_
