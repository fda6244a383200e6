// Copyright 2026 The directional-codes Authors
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


#include "dircode/circuit.h"

#include "gtest/gtest.h"

#include "dircode/flow.h"

using namespace dircode;

namespace {

CssCode ne3n36() {
    return build_code(DirectionSequence::parse("NE3N"), Layout::standard(1), Parallelogram{{18, 0}, {0, 4}});
}

}  // namespace

TEST(qubit_tracker, forward_then_reverse_round_restores_positions) {
    auto code = ne3n36();
    QubitTracker start(code);
    QubitTracker t = start;
    syndrome_round(code, Orientation::Forward, t);
    ASSERT_TRUE(t.bijective());
    ASSERT_FALSE(t == start);
    syndrome_round(code, Orientation::Reverse, t);
    ASSERT_TRUE(t == start);
}

TEST(syndrome_round, layer_structure) {
    auto code = ne3n36();
    QubitTracker t(code);
    auto ops = syndrome_round(code, Orientation::Forward, t);
    Circuit c = empty_code_circuit(code);
    c.ops = ops;
    ASSERT_EQ(c.count_instructions(GateKind::Tick), 7u);
    ASSERT_EQ(c.count_applications(GateKind::ResetX), code.generators.size());
    ASSERT_EQ(c.count_applications(GateKind::MeasureX), code.generators.size());
    ASSERT_EQ(c.count_applications(GateKind::CXSWAP) + c.count_applications(GateKind::CZSWAP), 5 * code.generators.size());
    ASSERT_EQ(layer_direction(code.seq, Orientation::Forward, 1), (IVec2{1, 0}));
    ASSERT_EQ(layer_direction(code.seq, Orientation::Reverse, 0), (IVec2{0, -1}));
    ASSERT_EQ(max_interaction_degree(c), 3u);
}

TEST(memory_experiment, detector_counts) {
    auto code = ne3n36();
    auto mc = memory_experiment(code, 5, logical_basis(code).xs);
    // Round one uses X ancillas only, later rounds all ancillas, plus the closing X comparison.
    size_t nx = code.x_rows.size(), na = code.generators.size();
    ASSERT_EQ(mc.num_detectors, nx + 4 * na + nx);
    ASSERT_EQ(mc.num_observables, 4u);
    ASSERT_EQ(mc.circuit.num_measurements(), 5 * na + code.n);
    ASSERT_THROW(memory_experiment(code, 5, {}), NoLogicals);
    ASSERT_THROW(memory_experiment(code, 5, {BitVec(code.n)}), NoLogicals);
    ASSERT_THROW(memory_experiment(code, 0, logical_basis(code).xs), std::invalid_argument);
}

TEST(compile_to_iswap, removes_cpswap_gates) {
    auto code = ne3n36();
    auto mc = memory_experiment(code, 2, logical_basis(code).xs);
    auto ic = compile_to_iswap(mc.circuit);
    ASSERT_EQ(ic.count_instructions(GateKind::CXSWAP), 0u);
    ASSERT_EQ(ic.count_instructions(GateKind::CZSWAP), 0u);
    ASSERT_EQ(ic.count_applications(GateKind::ISWAP),
              mc.circuit.count_applications(GateKind::CXSWAP) + mc.circuit.count_applications(GateKind::CZSWAP));
    ASSERT_EQ(ic.num_measurements(), mc.circuit.num_measurements());
    ASSERT_EQ(max_interaction_degree(ic), max_interaction_degree(mc.circuit));
}

TEST(noise, si1000_strengths) {
    auto profile = NoiseProfile::load(default_noise_profile_path());
    ASSERT_EQ(profile.name, "si1000");
    ASSERT_EQ(profile.version, 1);
    auto builtin = NoiseProfile::si1000();
    ASSERT_EQ(profile.measure, builtin.measure);
    ASSERT_EQ(profile.reset, builtin.reset);
    auto code = ne3n36();
    auto mc = memory_experiment(code, 2, logical_basis(code).xs);
    auto noisy = add_noise(mc.circuit, profile, 1e-3);
    std::map<GateKind, std::set<double>> args;
    for (const auto &op : noisy.ops) {
        if (is_noise(op.kind)) {
            args[op.kind].insert(op.arg);
        }
    }
    ASSERT_EQ(args[GateKind::Depolarize2], (std::set<double>{1e-3}));
    ASSERT_EQ(args[GateKind::ZError], (std::set<double>{2e-3, 5e-3}));
    ASSERT_TRUE(args[GateKind::Depolarize1].count(1e-4));
    ASSERT_THROW(add_noise(mc.circuit, profile, 0.5), std::invalid_argument);
    // Without noise channels the circuit is unchanged.
    auto stripped = noisy;
    stripped.ops.erase(std::remove_if(stripped.ops.begin(), stripped.ops.end(),
                                      [](const GateOp &op) {
                                          return is_noise(op.kind);
                                      }),
                       stripped.ops.end());
    ASSERT_EQ(stripped, mc.circuit);
}

TEST(stim_text, round_trip) {
    auto code = ne3n36();
    auto mc = memory_experiment(code, 3, logical_basis(code).xs);
    auto noisy = add_noise(compile_to_iswap(mc.circuit), NoiseProfile::si1000(), 2e-3);
    for (const auto &c : {mc.circuit, noisy}) {
        auto text = to_stim_text(c);
        auto back = parse_stim_text(text);
        ASSERT_EQ(back, c);
        ASSERT_EQ(to_stim_text(back), text);
    }
    auto text = to_stim_text(mc.circuit);
    ASSERT_NE(text.find("CXSWAP"), std::string::npos);
    ASSERT_NE(text.find("DETECTOR("), std::string::npos);
    ASSERT_NE(text.find("OBSERVABLE_INCLUDE(3)"), std::string::npos);
    ASSERT_THROW(parse_stim_text("FOO 0\n"), UnknownGate);
    ASSERT_THROW(parse_stim_text("MX 0\nDETECTOR rec[-2]\n"), std::invalid_argument);
}

TEST(stim_text, inverted_measurements) {
    Circuit c;
    c.num_qubits = 2;
    GateOp m(GateKind::MeasureX);
    m.targets = {0, 1};
    m.inverted = {true, false};
    c.ops.push_back(m);
    auto text = to_stim_text(c);
    ASSERT_EQ(text, "MX !0 1\n");
    ASSERT_EQ(parse_stim_text(text), c);
}
