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

#include "groveropt/gate_word.h"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace groveropt {

std::string_view gate_kind_name(GateKind kind) {
    return kind == GateKind::kOracle ? "oracle" : "diffusion";
}

GateWord& GateWord::append(const GateWord& later) {
    gates.insert(gates.end(), later.gates.begin(), later.gates.end());
    return *this;
}

GateWord concat(const GateWord& w1, const GateWord& w2) {
    GateWord out = w1;
    out.append(w2);
    return out;
}

std::size_t oracle_count(const GateWord& word) {
    return static_cast<std::size_t>(std::count_if(word.gates.begin(), word.gates.end(), [](const Gate& g) {
        return g.kind == GateKind::kOracle;
    }));
}

double reduce_angle(double angle) {
    constexpr double kPi = std::numbers::pi;
    double r = std::remainder(angle, 2.0 * kPi);  // [-pi, pi]
    if (r <= -kPi) {
        r += 2.0 * kPi;
    }
    return r;
}

GateWord random_grover_word(std::mt19937_64& rng, std::size_t length) {
    constexpr double kPi = std::numbers::pi;
    // nextafter keeps -pi out and pi in, matching the (-pi, pi] convention.
    std::uniform_real_distribution<double> angle(std::nextafter(-kPi, 0.0), std::nextafter(kPi, 4.0));
    std::bernoulli_distribution coin(0.5);
    GateWord word;
    word.gates.reserve(length);
    for (std::size_t i = 0; i < length; ++i) {
        const double theta = std::min(angle(rng), kPi);
        word.gates.push_back({coin(rng) ? GateKind::kOracle : GateKind::kDiffusion, theta});
    }
    return word;
}

}  // namespace groveropt
