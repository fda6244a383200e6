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

#include <algorithm>
#include <future>
#include <map>
#include <set>
#include <sstream>

namespace dircode {

namespace {

std::vector<uint32_t> support_of(const PauliString &p) {
    std::vector<uint32_t> out;
    const auto &xw = p.x.words();
    const auto &zw = p.z.words();
    for (size_t w = 0; w < xw.size(); w++) {
        uint64_t bits = xw[w] | zw[w];
        while (bits) {
            out.push_back((uint32_t)(w * 64 + std::countr_zero(bits)));
            bits &= bits - 1;
        }
    }
    return out;
}

/// Runs f(k) for k in [0, count) on `jobs` workers.
template <typename F>
void parallel_for(size_t count, int jobs, F f) {
    jobs = std::max(1, std::min<int>(jobs, (int)count));
    if (jobs <= 1) {
        for (size_t k = 0; k < count; k++) {
            f(k);
        }
        return;
    }
    std::vector<std::future<void>> fs;
    for (int j = 0; j < jobs; j++) {
        fs.push_back(std::async(std::launch::async, [&, j]() {
            for (size_t k = j; k < count; k += jobs) {
                f(k);
            }
        }));
    }
    for (auto &fu : fs) {
        fu.get();
    }
}

}  // namespace

FlowSimulator::FlowSimulator(const Circuit &c) : c_(c), slot_(c.ops.size()) {
    for (size_t k = 0; k < c.ops.size(); k++) {
        const auto &op = c.ops[k];
        for (auto q : op.targets) {
            if (q >= c.num_qubits) {
                throw std::invalid_argument("Target " + std::to_string(q) + " exceeds the qubit count.");
            }
        }
        if (is_unitary(op.kind)) {
            gate_rule(op.kind);
            auto &s = slot_[k];
            s.assign(c.num_qubits, -1);
            size_t step = is_two_qubit(op.kind) ? 2 : 1;
            for (size_t t = 0; t < op.targets.size(); t += step) {
                for (size_t j = 0; j < step; j++) {
                    if (s[op.targets[t + j]] >= 0) {
                        throw std::invalid_argument(std::string("Qubit repeated within one ") + gate_name(op.kind) + ".");
                    }
                    s[op.targets[t + j]] = (int32_t)t;
                }
            }
        } else if (op.kind == GateKind::MeasureX) {
            for (uint32_t t = 0; t < op.targets.size(); t++) {
                rec_op_.push_back(k);
                rec_pos_.push_back(t);
            }
        }
    }
}

uint32_t FlowSimulator::record_qubit(uint64_t r) const {
    return c_.ops[rec_op_[r]].targets[rec_pos_[r]];
}

bool FlowSimulator::record_inverted(uint64_t r) const {
    const auto &inv = c_.ops[rec_op_[r]].inverted;
    return !inv.empty() && inv[rec_pos_[r]];
}

void FlowSimulator::conjugate_op(PauliString &p, size_t k, bool inverse) const {
    const auto &s = slot_[k];
    if (s.empty()) {
        return;
    }
    const auto &op = c_.ops[k];
    const auto &rule = gate_rule(op.kind);
    std::vector<int32_t> done;
    for (auto q : support_of(p)) {
        int32_t t = s[q];
        if (t < 0 || std::find(done.begin(), done.end(), t) != done.end()) {
            continue;
        }
        done.push_back(t);
        if (rule.arity == 2) {
            conjugate(p, rule, op.targets[t], op.targets[t + 1], inverse);
        } else {
            conjugate(p, rule, op.targets[t], 0, inverse);
        }
    }
}

PauliString FlowSimulator::back_propagate(uint64_t record) const {
    if (record >= rec_op_.size()) {
        throw std::out_of_range("Measurement record " + std::to_string(record) + " does not exist.");
    }
    PauliString p(c_.num_qubits);
    p.mul_single(record_qubit(record), 'X');
    if (record_inverted(record)) {
        p.phase = (p.phase + 2) & 3;
    }
    return back_propagate(std::move(p), 0, rec_op_[record]);
}

PauliString FlowSimulator::back_propagate(PauliString p, size_t begin, size_t end) const {
    for (size_t k = end; k-- > begin;) {
        conjugate_op(p, k, true);
    }
    return p;
}

PauliString FlowSimulator::forward_propagate(PauliString p, size_t begin, size_t end) const {
    for (size_t k = begin; k < end; k++) {
        conjugate_op(p, k, false);
    }
    return p;
}

std::string FlowReport::str() const {
    std::ostringstream out;
    out << (ok ? "PASS" : "FAIL") << ": " << verdicts.size() << " ancilla measurements checked, " << failures
        << " violations\n";
    for (const auto &v : verdicts) {
        out << "  ancilla " << v.ancilla << ": " << (v.ok ? "ok" : "violation") << " sign " << (v.sign < 0 ? "-" : "+");
        if (!v.reason.empty()) {
            out << " (" << v.reason << ")";
        }
        out << "\n";
    }
    return out.str();
}

FlowReport verify_simultaneous_independent(const CssCode &code, const Circuit &round, const QubitTracker &start,
                                           const std::vector<size_t> &ancillas, int jobs) {
    FlowSimulator sim(round);
    size_t num_anc = code.generators.size();
    if (sim.num_records() != num_anc) {
        throw std::invalid_argument("A round circuit measures every ancilla exactly once.");
    }
    std::vector<size_t> list = ancillas;
    if (list.empty()) {
        for (size_t a = 0; a < num_anc; a++) {
            list.push_back(a);
        }
    }
    FlowReport report;
    report.verdicts.resize(list.size());
    const auto &points = code.torus.points();
    parallel_for(list.size(), jobs, [&](size_t i) {
        size_t a = list[i];
        AncillaVerdict v;
        v.ancilla = a;
        const auto &g = code.generators[a];
        PauliString p = sim.back_propagate(a);
        int s = p.sign();
        v.sign = s == 0 ? 1 : s;
        std::vector<std::string> problems;
        if (s == 0) {
            problems.push_back("non-Hermitian preimage");
        }
        uint32_t own = start.ancilla_position(a);
        if (p.at(own) != 'X') {
            problems.push_back(std::string("own ancilla carries ") + p.at(own));
        }
        char want = to_char(g.pauli);
        std::set<size_t> expected(g.qubits.begin(), g.qubits.end());
        for (auto q : support_of(p)) {
            if (q == own) {
                continue;
            }
            uint32_t role = start.role_at(q);
            char c = p.at(q);
            if (!start.is_data_role(role)) {
                problems.push_back("entangled with ancilla " + std::to_string(role - start.num_data()) + " at " +
                                   points[q].str() + " via " + c);
                continue;
            }
            if (!expected.erase(role)) {
                problems.push_back(std::string("unexpected ") + c + " on data " + points[q].str());
            } else if (c != want) {
                problems.push_back(std::string(1, c) + " instead of " + want + " on data " + points[q].str());
            }
        }
        for (auto d : expected) {
            problems.push_back(std::string("missing ") + want + " on data " + code.torus.data()[d].str());
        }
        v.ok = problems.empty();
        for (size_t k = 0; k < problems.size(); k++) {
            v.reason += (k ? "; " : "") + problems[k];
        }
        report.verdicts[i] = v;
    });
    for (const auto &v : report.verdicts) {
        if (!v.ok) {
            report.ok = false;
            report.failures++;
        }
    }
    return report;
}

Circuit round_circuit(const CssCode &code, Orientation o, QubitTracker &tracker) {
    Circuit c = empty_code_circuit(code);
    c.ops = syndrome_round(code, o, tracker);
    return c;
}

std::vector<size_t> layout_representatives(const CssCode &code) {
    std::set<IVec2> seen;
    std::vector<size_t> out;
    for (size_t a = 0; a < code.generators.size(); a++) {
        IVec2 key = hnf_reduce(code.layout.period(), code.generators[a].anchor);
        if (seen.insert(key).second) {
            out.push_back(a);
        }
    }
    return out;
}

std::string DeterminismReport::str() const {
    std::ostringstream out;
    size_t random = 0, negative = 0;
    for (const auto *vals : {&detector_values, &observable_values}) {
        for (auto v : *vals) {
            random += v == 0;
            negative += v < 0;
        }
    }
    out << (ok ? "PASS" : "FAIL") << ": " << detectors << " detectors, " << observables << " observables, " << random
        << " random, " << negative << " with value -1";
    if (counterexample) {
        out << "; first counterexample: " << *counterexample;
    }
    return out.str();
}

namespace {

/// Product of the listed measurement outcomes at the start of the circuit, or a reason it is random.
int flow_value(const FlowSimulator &sim, std::vector<uint64_t> recs, std::string &why) {
    std::sort(recs.begin(), recs.end());
    // Repeated records cancel.
    std::vector<uint64_t> r;
    for (size_t k = 0; k < recs.size();) {
        size_t j = k;
        while (j < recs.size() && recs[j] == recs[k]) {
            j++;
        }
        if ((j - k) % 2 == 1) {
            r.push_back(recs[k]);
        }
        k = j;
    }
    if (r.empty()) {
        return 1;
    }
    const auto &c = sim.circuit();
    uint64_t last = r.back();
    PauliString o(c.num_qubits);
    std::vector<uint64_t> base(c.ops.size(), 0);
    {
        uint64_t m = 0;
        for (size_t k = 0; k < c.ops.size(); k++) {
            base[k] = m;
            if (c.ops[k].kind == GateKind::MeasureX) {
                m += c.ops[k].targets.size();
            }
        }
    }
    for (size_t k = sim.record_op(last) + 1; k-- > 0;) {
        const auto &op = c.ops[k];
        if (op.kind == GateKind::MeasureX) {
            for (size_t t = op.targets.size(); t-- > 0;) {
                uint64_t rec = base[k] + t;
                if (rec > last) {
                    continue;
                }
                uint32_t q = op.targets[t];
                if (o.z.get(q)) {
                    why = "anticommutes with the X measurement of qubit " + std::to_string(q) + " at record " + std::to_string(rec);
                    return 0;
                }
                if (std::binary_search(r.begin(), r.end(), rec)) {
                    o.mul_single(q, 'X');
                    if (!op.inverted.empty() && op.inverted[t]) {
                        o.phase = (o.phase + 2) & 3;
                    }
                }
            }
        } else if (op.kind == GateKind::ResetX) {
            for (auto q : op.targets) {
                if (o.z.get(q)) {
                    why = "not stabilized by the X reset of qubit " + std::to_string(q) + " (op " + std::to_string(k) + ")";
                    return 0;
                }
                o.x.set(q, false);
            }
        } else if (is_unitary(op.kind)) {
            sim.conjugate_op(o, k, true);
        }
    }
    if (o.x.any()) {
        why = "not stabilized by the initial |0> state";
        return 0;
    }
    int s = o.sign();
    if (s == 0) {
        why = "non-Hermitian flow";
    }
    return s;
}

}  // namespace

DeterminismReport check_determinism(const Circuit &c, int jobs) {
    FlowSimulator sim(c);
    std::vector<std::vector<uint64_t>> items;
    std::vector<std::string> names;
    std::map<uint32_t, std::vector<uint64_t>> obs;
    for (const auto &op : c.ops) {
        if (op.kind == GateKind::Detector) {
            std::string name = "detector " + std::to_string(items.size());
            if (!op.coords.empty()) {
                name += " at (";
                for (size_t k = 0; k < op.coords.size(); k++) {
                    name += (k ? "," : "") + std::to_string((long long)op.coords[k]);
                }
                name += ")";
            }
            items.push_back(op.records);
            names.push_back(name);
        } else if (op.kind == GateKind::Observable) {
            auto &v = obs[op.index];
            v.insert(v.end(), op.records.begin(), op.records.end());
        }
    }
    DeterminismReport rep;
    rep.detectors = items.size();
    rep.observables = obs.size();
    for (auto &[idx, recs] : obs) {
        items.push_back(recs);
        names.push_back("observable " + std::to_string(idx));
    }
    std::vector<int> values(items.size());
    std::vector<std::string> whys(items.size());
    parallel_for(items.size(), jobs, [&](size_t k) {
        values[k] = flow_value(sim, items[k], whys[k]);
    });
    for (size_t k = 0; k < items.size(); k++) {
        (k < rep.detectors ? rep.detector_values : rep.observable_values).push_back(values[k]);
        if (values[k] == 0) {
            rep.ok = false;
            if (!rep.counterexample) {
                rep.counterexample = names[k] + " is random: " + whys[k];
            }
        }
    }
    return rep;
}

size_t HookFault::reduced_weight() const {
    return std::min(residual.size(), w - std::min(w, residual.size()));
}

std::vector<HookFault> hook_error_spectrum(const CssCode &code, Orientation o, const std::vector<size_t> &ancillas) {
    QubitTracker start(code);
    if (o == Orientation::Reverse) {
        syndrome_round(code, Orientation::Forward, start);
    }
    QubitTracker end = start;
    Circuit rc = round_circuit(code, o, end);
    FlowSimulator sim(rc);
    std::vector<size_t> ticks;
    size_t mx = 0;
    for (size_t k = 0; k < rc.ops.size(); k++) {
        if (rc.ops[k].kind == GateKind::Tick) {
            ticks.push_back(k);
        } else if (rc.ops[k].kind == GateKind::MeasureX) {
            mx = k;
        }
    }
    size_t w = code.seq.size();
    auto partner = [&](size_t layer, uint32_t q) {
        for (size_t k = ticks[layer - 1] + 1; k < ticks[layer]; k++) {
            const auto &t = rc.ops[k].targets;
            for (size_t j = 0; j < t.size(); j++) {
                if (t[j] == q) {
                    return t[j ^ 1];
                }
            }
        }
        throw TrackerDesync("Ancilla lost in layer " + std::to_string(layer) + ".");
    };
    std::vector<HookFault> out;
    for (size_t a : ancillas) {
        const auto &g = code.generators[a];
        std::vector<size_t> sched(g.qubits.begin(), g.qubits.end());
        if (o == Orientation::Reverse) {
            std::reverse(sched.begin(), sched.end());
        }
        uint32_t pos = start.ancilla_position(a);
        for (size_t layer = 0; layer <= w; layer++) {
            if (layer > 0) {
                pos = partner(layer, pos);
            }
            for (char c : {'X', 'Y', 'Z'}) {
                PauliString p(rc.num_qubits);
                p.mul_single(pos, c);
                p = sim.forward_propagate(p, ticks[layer], mx);
                HookFault f;
                f.ancilla = a;
                f.w = w;
                f.layer = layer;
                f.pauli = c;
                for (auto q : support_of(p)) {
                    uint32_t role = end.role_at(q);
                    if (!end.is_data_role(role)) {
                        // Only a Z component flips an X-basis measurement.
                        if (role - end.num_data() != a && p.z.get(q)) {
                            f.flipped_measurements++;
                        }
                        continue;
                    }
                    if (p.at(q) != to_char(g.pauli)) {
                        f.clean = false;
                    }
                    f.residual.push_back(role);
                }
                std::sort(f.residual.begin(), f.residual.end());
                for (size_t m = 0; m <= w && !f.prefix; m++) {
                    std::vector<size_t> pre(sched.begin(), sched.begin() + m);
                    std::vector<size_t> suf(sched.begin() + m, sched.end());
                    std::sort(pre.begin(), pre.end());
                    std::sort(suf.begin(), suf.end());
                    if (f.residual == pre) {
                        f.prefix = m;
                    } else if (f.residual == suf) {
                        f.prefix = m;
                        f.complemented = true;
                    }
                }
                out.push_back(f);
            }
        }
    }
    return out;
}

std::string BadHookReport::str() const {
    std::ostringstream out;
    out << (bad_hook_found ? "bad hook found" : "no bad hook") << " among " << residuals_checked
        << " residuals; extra faults searched up to " << max_extra_checked << " of " << extra_target;
    if (budget_limited) {
        out << " (budget-limited)";
    }
    if (!witness.empty()) {
        out << "; witness " << witness;
    }
    return out.str();
}

BadHookReport bad_hook_check(const CssCode &code, size_t d, uint64_t budget, int jobs) {
    BadHookReport rep;
    rep.extra_target = d >= 2 ? d - 2 : 0;
    size_t extra = 0;
    while (extra < rep.extra_target && search_volume(code.n, extra + 1) <= budget) {
        extra++;
    }
    rep.max_extra_checked = extra;
    rep.budget_limited = extra < rep.extra_target;
    std::vector<size_t> reps;
    for (Basis b : {Basis::X, Basis::Z}) {
        for (size_t a = 0; a < code.generators.size(); a++) {
            if (code.generators[a].pauli == b) {
                reps.push_back(a);
                break;
            }
        }
    }
    size_t w = code.seq.size();
    for (size_t a : reps) {
        const auto &g = code.generators[a];
        for (size_t m = 1; 2 * m < w; m++) {
            for (bool suffix : {false, true}) {
                BitVec r(code.n);
                for (size_t j = 0; j < m; j++) {
                    r.set(g.qubits[suffix ? w - 1 - j : j]);
                }
                rep.residuals_checked++;
                auto found = min_logical_completion(code, g.pauli, r, extra, budget, jobs);
                if (found.weight && !rep.bad_hook_found) {
                    rep.bad_hook_found = true;
                    std::ostringstream wit;
                    wit << to_char(g.pauli) << " " << (suffix ? "suffix" : "prefix") << " of length " << m << " at "
                        << g.anchor.str() << " plus " << *found.weight << " data faults";
                    rep.witness = wit.str();
                }
            }
        }
    }
    return rep;
}

}  // namespace dircode
