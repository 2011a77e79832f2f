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

#include "groveropt/io/schedule_json.h"

#include <json.hpp>

namespace groveropt::io {

using nlohmann::json;

Schedule make_schedule(const RunResult& run) {
    Schedule s;
    s.spec = run.spec;
    s.method = run.method;
    s.iterations.reserve(run.steps.size());
    for (const GateWord& w : run.steps) {
        GateWord reduced = w;
        for (Gate& g : reduced.gates) g.angle = reduce_angle(g.angle);
        s.iterations.push_back(std::move(reduced));
    }
    s.total_oracle_queries = run.accepted_queries();
    s.trial_queries = run.trial_queries;
    return s;
}

std::string schedule_to_json(const Schedule& schedule, int indent) {
    json doc;
    doc["format"] = kScheduleFormat;
    doc["spec"] = {{"n", schedule.spec.qubits}, {"M", schedule.spec.marked}, {"q0", schedule.spec.q0}};
    doc["method"] = std::string(method_name(schedule.method));
    json iterations = json::array();
    for (std::size_t k = 0; k < schedule.iterations.size(); ++k) {
        json gates = json::array();
        for (const Gate& g : schedule.iterations[k].gates) {
            gates.push_back({{"kind", std::string(gate_kind_name(g.kind))}, {"theta", g.angle}});
        }
        iterations.push_back({{"k", k}, {"gates", std::move(gates)}});
    }
    doc["iterations"] = std::move(iterations);
    doc["total_oracle_queries"] = schedule.total_oracle_queries;
    doc["trial_queries"] = schedule.trial_queries;
    return doc.dump(indent) + "\n";
}

Schedule schedule_from_json(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw InvalidInput(std::string("schedule is not valid JSON: ") + e.what());
    }
    try {
        if (doc.at("format").get<int>() != kScheduleFormat) {
            throw InvalidInput("unsupported schedule format " + doc.at("format").dump());
        }
        Schedule s;
        const json& spec = doc.at("spec");
        s.spec = make_spec(spec.at("n").get<int>(), spec.at("M").get<std::uint64_t>());
        const auto method = parse_method(doc.at("method").get<std::string>());
        if (!method) throw InvalidInput("unknown method " + doc.at("method").dump());
        s.method = *method;
        std::uint64_t counted = 0;
        for (const json& it : doc.at("iterations")) {
            GateWord w;
            for (const json& g : it.at("gates")) {
                const auto kind = g.at("kind").get<std::string>();
                const double theta = g.at("theta").get<double>();
                if (kind == "oracle") {
                    w.push_oracle(theta);
                } else if (kind == "diffusion") {
                    w.push_diffusion(theta);
                } else {
                    throw InvalidInput("unknown gate kind '" + kind + "'");
                }
            }
            counted += oracle_count(w);
            s.iterations.push_back(std::move(w));
        }
        s.total_oracle_queries = doc.at("total_oracle_queries").get<std::uint64_t>();
        s.trial_queries = doc.value("trial_queries", std::uint64_t{0});
        if (counted != s.total_oracle_queries) {
            throw InvalidInput("total_oracle_queries does not match the oracle gates listed");
        }
        return s;
    } catch (const json::exception& e) {
        throw InvalidInput(std::string("malformed schedule: ") + e.what());
    }
}

PlaneState replay_schedule(const Schedule& schedule) {
    PlaneState state = initial_state(schedule.spec);
    for (const GateWord& w : schedule.iterations) {
        state = apply_word(state, w);
    }
    return state;
}

}  // namespace groveropt::io
