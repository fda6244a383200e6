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


#include "dircode/flow.h"

#include "gtest/gtest.h"

using namespace dircode;

namespace {

CssCode make(const char *seq, Parallelogram p, int layout = 1, bool require_valid = true) {
    BuildOptions options;
    options.require_valid = require_valid;
    return build_code(DirectionSequence::parse(seq), Layout::standard(layout), p, options);
}

}  // namespace

TEST(flow_simulator, back_propagates_single_measurement) {
    Circuit c;
    c.num_qubits = 2;
    GateOp cx(GateKind::CXSWAP);
    cx.targets = {0, 1};
    GateOp mx(GateKind::MeasureX);
    mx.targets = {1};
    c.ops = {cx, mx};
    FlowSimulator sim(c);
    ASSERT_EQ(sim.num_records(), 1u);
    // CXSWAP maps X_0 to X_0 X_1 then swaps, so X_1 after the gate pulls back to X_0 X_1.
    ASSERT_EQ(sim.back_propagate(0).str(), "+XX");
}

TEST(verify_simultaneous_independent, valid_rounds_pass) {
    auto code = make("NE3N", {{18, 0}, {0, 4}});
    QubitTracker start(code);
    QubitTracker mid = start;
    auto fwd = round_circuit(code, Orientation::Forward, mid);
    auto rep = verify_simultaneous_independent(code, fwd, start, {}, 2);
    ASSERT_TRUE(rep.ok) << rep.str();
    ASSERT_EQ(rep.verdicts.size(), code.generators.size());
    QubitTracker end = mid;
    auto rev = round_circuit(code, Orientation::Reverse, end);
    ASSERT_TRUE(verify_simultaneous_independent(code, rev, mid).ok);
}

TEST(verify_simultaneous_independent, invalid_layout_fails) {
    auto code = make("NE2N", {{8, 0}, {0, 8}}, 2, false);
    QubitTracker t(code);
    auto round = round_circuit(code, Orientation::Forward, t);
    auto rep = verify_simultaneous_independent(code, round, QubitTracker(code), layout_representatives(code));
    ASSERT_FALSE(rep.ok);
    ASSERT_GT(rep.failures, 0u);
}

TEST(check_determinism, memory_circuits) {
    auto code = make("N2E2N2", {{8, 0}, {0, 16}});
    auto mc = memory_experiment(code, 5, logical_basis(code).xs);
    auto rep = check_determinism(mc.circuit, 2);
    ASSERT_TRUE(rep.ok) << rep.str();
    ASSERT_EQ(rep.detectors, mc.num_detectors);
    ASSERT_EQ(rep.observables, 6u);
    ASSERT_TRUE(check_determinism(compile_to_iswap(mc.circuit)).ok);
}

TEST(check_determinism, detects_broken_circuit) {
    auto code = make("NE3N", {{18, 0}, {0, 4}});
    auto mc = memory_experiment(code, 3, logical_basis(code).xs);
    // Dropping one entangling layer of the second round breaks the flows.
    auto broken = mc.circuit;
    size_t seen = 0;
    for (size_t k = 0; k < broken.ops.size(); k++) {
        if (broken.ops[k].kind == GateKind::CXSWAP && ++seen == 7) {
            broken.ops.erase(broken.ops.begin() + k);
            break;
        }
    }
    auto rep = check_determinism(broken);
    ASSERT_FALSE(rep.ok);
    ASSERT_TRUE(rep.counterexample.has_value());
}

TEST(hook_error_spectrum, residuals_have_prefix_form) {
    auto code = make("NE3N", {{18, 0}, {0, 4}});
    for (auto o : {Orientation::Forward, Orientation::Reverse}) {
        auto faults = hook_error_spectrum(code, o, layout_representatives(code));
        ASSERT_FALSE(faults.empty());
        size_t mid_round = 0;
        for (const auto &f : faults) {
            ASSERT_TRUE(f.clean);
            ASSERT_TRUE(f.prefix.has_value());
            ASSERT_LE(f.reduced_weight(), f.w / 2);
            mid_round += f.layer > 0 && f.layer < f.w && f.reduced_weight() > 0;
        }
        ASSERT_GT(mid_round, 0u);
    }
}

TEST(bad_hook_check, none_on_small_instances) {
    auto code = make("NE3N", {{18, 0}, {0, 4}});
    auto rep = bad_hook_check(code, 4);
    ASSERT_FALSE(rep.bad_hook_found) << rep.str();
    ASSERT_EQ(rep.extra_target, 2u);
    ASSERT_EQ(rep.max_extra_checked, 2u);
    ASSERT_FALSE(rep.budget_limited);
    auto limited = bad_hook_check(code, 4, 10);
    ASSERT_TRUE(limited.budget_limited);
}
