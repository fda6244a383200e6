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

#include <algorithm>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include "dircode/flow.h"
#include "json.hpp"

#ifndef DIRCODE_DATA_DIR
#define DIRCODE_DATA_DIR "data"
#endif

namespace dircode {

namespace {

struct GateInfo {
    GateKind kind;
    const char *name;
};

constexpr GateInfo GATES[] = {
    {GateKind::ResetX, "RX"},
    {GateKind::MeasureX, "MX"},
    {GateKind::CXSWAP, "CXSWAP"},
    {GateKind::CZSWAP, "CZSWAP"},
    {GateKind::ISWAP, "ISWAP"},
    {GateKind::H, "H"},
    {GateKind::S, "S"},
    {GateKind::SqrtX, "SQRT_X"},
    {GateKind::Tick, "TICK"},
    {GateKind::Depolarize1, "DEPOLARIZE1"},
    {GateKind::Depolarize2, "DEPOLARIZE2"},
    {GateKind::XError, "X_ERROR"},
    {GateKind::ZError, "Z_ERROR"},
    {GateKind::Detector, "DETECTOR"},
    {GateKind::Observable, "OBSERVABLE_INCLUDE"},
};

std::string fmt_double(double v) {
    char buf[64];
    auto r = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, r.ptr);
}

bool touches_qubits(GateKind k) {
    return is_unitary(k) || k == GateKind::ResetX || k == GateKind::MeasureX;
}

}  // namespace

const char *gate_name(GateKind kind) {
    return GATES[(int)kind].name;
}

bool is_unitary(GateKind kind) {
    switch (kind) {
        case GateKind::CXSWAP:
        case GateKind::CZSWAP:
        case GateKind::ISWAP:
        case GateKind::H:
        case GateKind::S:
        case GateKind::SqrtX:
            return true;
        default:
            return false;
    }
}

bool is_two_qubit(GateKind kind) {
    return kind == GateKind::CXSWAP || kind == GateKind::CZSWAP || kind == GateKind::ISWAP || kind == GateKind::Depolarize2;
}

bool is_noise(GateKind kind) {
    return kind == GateKind::Depolarize1 || kind == GateKind::Depolarize2 || kind == GateKind::XError ||
           kind == GateKind::ZError;
}

const CliffordRule &gate_rule(GateKind kind) {
    switch (kind) {
        case GateKind::CXSWAP:
            return clifford_rule(CliffordKind::CXSWAP);
        case GateKind::CZSWAP:
            return clifford_rule(CliffordKind::CZSWAP);
        case GateKind::ISWAP:
            return clifford_rule(CliffordKind::ISWAP);
        case GateKind::H:
            return clifford_rule(CliffordKind::H);
        case GateKind::S:
            return clifford_rule(CliffordKind::S);
        case GateKind::SqrtX:
            return clifford_rule(CliffordKind::SqrtX);
        default:
            throw UnknownGate(std::string("No Clifford table for ") + gate_name(kind) + ".");
    }
}

uint64_t Circuit::num_measurements() const {
    uint64_t m = 0;
    for (const auto &op : ops) {
        if (op.kind == GateKind::MeasureX) {
            m += op.targets.size();
        }
    }
    return m;
}

size_t Circuit::count_instructions(GateKind kind) const {
    return std::count_if(ops.begin(), ops.end(), [&](const GateOp &op) {
        return op.kind == kind;
    });
}

size_t Circuit::count_applications(GateKind kind) const {
    size_t c = 0;
    for (const auto &op : ops) {
        if (op.kind == kind) {
            c += is_two_qubit(kind) ? op.targets.size() / 2 : op.targets.size();
        }
    }
    return c;
}

QubitTracker::QubitTracker(const CssCode &code) : num_data_(code.torus.data().size()) {
    const auto &t = code.torus;
    phys_to_role_.assign(t.points().size(), UINT32_MAX);
    for (auto p : t.data()) {
        role_to_phys_.push_back(t.point_index(p));
    }
    for (auto p : t.ancillas()) {
        role_to_phys_.push_back(t.point_index(p));
    }
    for (uint32_t r = 0; r < role_to_phys_.size(); r++) {
        phys_to_role_[role_to_phys_[r]] = r;
    }
}

void QubitTracker::swap(uint32_t a, uint32_t b) {
    std::swap(phys_to_role_[a], phys_to_role_[b]);
    role_to_phys_[phys_to_role_[a]] = a;
    role_to_phys_[phys_to_role_[b]] = b;
}

bool QubitTracker::bijective() const {
    if (role_to_phys_.size() != phys_to_role_.size()) {
        return false;
    }
    for (uint32_t r = 0; r < role_to_phys_.size(); r++) {
        uint32_t p = role_to_phys_[r];
        if (p >= phys_to_role_.size() || phys_to_role_[p] != r) {
            return false;
        }
    }
    return true;
}

IVec2 layer_direction(const DirectionSequence &seq, Orientation o, size_t j) {
    if (o == Orientation::Forward) {
        return to_vec(seq[j]);
    }
    return -to_vec(seq[seq.size() - 1 - j]);
}

std::vector<GateOp> syndrome_round(const CssCode &code, Orientation o, QubitTracker &tracker, bool reset_all) {
    const auto &torus = code.torus;
    size_t num_anc = code.generators.size();
    std::vector<GateOp> ops;
    GateOp reset{GateKind::ResetX};
    if (reset_all) {
        for (uint32_t q = 0; q < torus.points().size(); q++) {
            reset.targets.push_back(q);
        }
    } else {
        for (size_t a = 0; a < num_anc; a++) {
            reset.targets.push_back(tracker.ancilla_position(a));
        }
    }
    ops.push_back(reset);
    ops.push_back(GateOp{GateKind::Tick});
    for (size_t j = 0; j < code.seq.size(); j++) {
        IVec2 dir = layer_direction(code.seq, o, j);
        GateOp cx{GateKind::CXSWAP};
        GateOp cz{GateKind::CZSWAP};
        std::vector<std::pair<uint32_t, uint32_t>> pairs;
        for (size_t a = 0; a < num_anc; a++) {
            uint32_t p = tracker.ancilla_position(a);
            uint32_t q = torus.point_index(torus.points()[p] + dir);
            if (!tracker.is_data_role(tracker.role_at(q))) {
                throw TrackerDesync("Ancilla " + std::to_string(a) + " meets another ancilla at " +
                                    torus.points()[q].str() + " in layer " + std::to_string(j + 1) + ".");
            }
            auto &op = code.generators[a].pauli == Basis::X ? cx : cz;
            op.targets.push_back(p);
            op.targets.push_back(q);
            pairs.push_back({p, q});
        }
        for (auto [p, q] : pairs) {
            tracker.swap(p, q);
        }
        for (auto *op : {&cx, &cz}) {
            if (!op->targets.empty()) {
                ops.push_back(*op);
            }
        }
        ops.push_back(GateOp{GateKind::Tick});
    }
    GateOp measure{GateKind::MeasureX};
    for (size_t a = 0; a < num_anc; a++) {
        measure.targets.push_back(tracker.ancilla_position(a));
    }
    ops.push_back(measure);
    ops.push_back(GateOp{GateKind::Tick});
    return ops;
}

std::vector<std::pair<uint32_t, uint32_t>> interaction_edges(const Circuit &c) {
    std::set<std::pair<uint32_t, uint32_t>> edges;
    for (const auto &op : c.ops) {
        if (is_unitary(op.kind) && is_two_qubit(op.kind)) {
            for (size_t k = 0; k + 1 < op.targets.size(); k += 2) {
                uint32_t a = op.targets[k], b = op.targets[k + 1];
                edges.insert({std::min(a, b), std::max(a, b)});
            }
        }
    }
    return {edges.begin(), edges.end()};
}

size_t max_interaction_degree(const Circuit &c) {
    std::vector<size_t> deg(c.num_qubits, 0);
    for (auto [a, b] : interaction_edges(c)) {
        deg[a]++;
        deg[b]++;
    }
    return deg.empty() ? 0 : *std::max_element(deg.begin(), deg.end());
}

Circuit empty_code_circuit(const CssCode &code) {
    Circuit c;
    c.num_qubits = (uint32_t)code.torus.points().size();
    for (auto p : code.torus.points()) {
        c.qubit_coords.push_back({(double)p.x, (double)p.y});
    }
    return c;
}

NoiseProfile NoiseProfile::si1000() {
    NoiseProfile p;
    p.name = "si1000";
    p.version = 1;
    p.source = "built-in SI1000 defaults";
    return p;
}

NoiseProfile NoiseProfile::load(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("Cannot open noise profile " + path + ".");
    }
    auto j = nlohmann::json::parse(in);
    NoiseProfile p;
    p.name = j.at("name").get<std::string>();
    p.version = j.at("version").get<int>();
    p.source = j.value("source", "");
    const auto &m = j.at("multipliers");
    p.two_qubit = m.at("two_qubit").get<double>();
    p.one_qubit = m.at("one_qubit").get<double>();
    p.measure = m.at("measure").get<double>();
    p.reset = m.at("reset").get<double>();
    p.idle = m.at("idle").get<double>();
    return p;
}

std::string NoiseProfile::str() const {
    return name + " v" + std::to_string(version) + " (2q " + fmt_double(two_qubit) + "p, 1q " + fmt_double(one_qubit) +
           "p, measure " + fmt_double(measure) + "p, reset " + fmt_double(reset) + "p, idle " + fmt_double(idle) + "p)";
}

std::string default_noise_profile_path() {
    return std::string(DIRCODE_DATA_DIR) + "/si1000.json";
}

Circuit add_noise(const Circuit &c, const NoiseProfile &profile, double p) {
    auto strength = [&](double mult) {
        double s = mult * p;
        if (s < 0 || s > 1) {
            throw std::invalid_argument("Noise strength " + fmt_double(s) + " is outside [0,1].");
        }
        return s;
    };
    double s2 = strength(profile.two_qubit), s1 = strength(profile.one_qubit), sm = strength(profile.measure),
           sr = strength(profile.reset), si = strength(profile.idle);
    Circuit out = c;
    out.ops.clear();
    std::vector<bool> touched(c.num_qubits, false);
    bool active = false;
    auto channel = [&](GateKind k, double s, const std::vector<uint32_t> &targets) {
        if (s > 0 && !targets.empty()) {
            GateOp n{k};
            n.arg = s;
            n.targets = targets;
            out.ops.push_back(n);
        }
    };
    for (const auto &op : c.ops) {
        if (op.kind == GateKind::Tick) {
            if (active) {
                std::vector<uint32_t> idle;
                for (uint32_t q = 0; q < c.num_qubits; q++) {
                    if (!touched[q]) {
                        idle.push_back(q);
                    }
                }
                channel(GateKind::Depolarize1, si, idle);
            }
            out.ops.push_back(op);
            std::fill(touched.begin(), touched.end(), false);
            active = false;
            continue;
        }
        if (touches_qubits(op.kind)) {
            active = true;
            for (auto q : op.targets) {
                touched[q] = true;
            }
        }
        switch (op.kind) {
            case GateKind::ResetX:
                out.ops.push_back(op);
                channel(GateKind::ZError, sr, op.targets);
                break;
            case GateKind::MeasureX:
                channel(GateKind::ZError, sm, op.targets);
                out.ops.push_back(op);
                break;
            case GateKind::CXSWAP:
            case GateKind::CZSWAP:
            case GateKind::ISWAP:
                out.ops.push_back(op);
                channel(GateKind::Depolarize2, s2, op.targets);
                break;
            case GateKind::H:
            case GateKind::S:
            case GateKind::SqrtX:
                out.ops.push_back(op);
                channel(GateKind::Depolarize1, s1, op.targets);
                break;
            default:
                out.ops.push_back(op);
                break;
        }
    }
    return out;
}

/// Records the sign of each ancilla measurement of one round started from `tracker`.
static std::vector<int> round_signs(const CssCode &code, Orientation o, const QubitTracker &tracker) {
    QubitTracker t = tracker;
    Circuit round = empty_code_circuit(code);
    round.ops = syndrome_round(code, o, t);
    auto report = verify_simultaneous_independent(code, round, tracker);
    std::vector<int> signs(code.generators.size(), 1);
    for (const auto &v : report.verdicts) {
        signs[v.ancilla] = v.sign < 0 ? -1 : 1;
    }
    return signs;
}

MemoryCircuit memory_experiment(const CssCode &code, size_t rounds, const std::vector<BitVec> &logicals,
                                const NoiseProfile *noise, double p) {
    if (rounds == 0) {
        throw std::invalid_argument("A memory experiment needs at least one round.");
    }
    if (logicals.empty()) {
        throw NoLogicals("No X logicals supplied for the memory experiment.");
    }
    for (const auto &l : logicals) {
        if (l.size() != code.n || !commutes_with_stabilizers(code, Basis::X, l) || code.hx.in_rowspace(l)) {
            throw NoLogicals("Supplied operator is not a nontrivial X logical.");
        }
    }
    MemoryCircuit mc;
    mc.rounds = rounds;
    Circuit &c = mc.circuit;
    c = empty_code_circuit(code);
    QubitTracker tracker(code);
    std::vector<int> signs[2];
    {
        signs[0] = round_signs(code, Orientation::Forward, tracker);
        QubitTracker after = tracker;
        syndrome_round(code, Orientation::Forward, after);
        signs[1] = round_signs(code, Orientation::Reverse, after);
    }
    size_t num_anc = code.generators.size();
    uint64_t m = 0;
    for (size_t r = 0; r < rounds; r++) {
        Orientation o = r % 2 == 0 ? Orientation::Forward : Orientation::Reverse;
        auto ops = syndrome_round(code, o, tracker, r == 0);
        ops.pop_back();
        auto &measure = ops.back();
        measure.inverted.assign(num_anc, false);
        bool any_inverted = false;
        for (size_t a = 0; a < num_anc; a++) {
            if (signs[r % 2][a] < 0) {
                measure.inverted[a] = true;
                any_inverted = true;
            }
        }
        if (!any_inverted) {
            measure.inverted.clear();
        }
        for (auto &op : ops) {
            c.ops.push_back(std::move(op));
        }
        std::vector<uint64_t> recs(num_anc);
        for (size_t a = 0; a < num_anc; a++) {
            recs[a] = m++;
        }
        mc.ancilla_records.push_back(recs);
        for (size_t a = 0; a < num_anc; a++) {
            const auto &g = code.generators[a];
            if (r == 0 && g.pauli != Basis::X) {
                continue;
            }
            GateOp det{GateKind::Detector};
            det.records.push_back(recs[a]);
            if (r > 0) {
                det.records.push_back(mc.ancilla_records[r - 1][a]);
            }
            det.coords = {(double)g.anchor.x, (double)g.anchor.y, (double)r};
            c.ops.push_back(det);
            mc.num_detectors++;
        }
        c.ops.push_back(GateOp{GateKind::Tick});
    }
    GateOp final_measure{GateKind::MeasureX};
    for (size_t d = 0; d < code.n; d++) {
        final_measure.targets.push_back(tracker.data_position(d));
        mc.data_records.push_back(m++);
    }
    c.ops.push_back(final_measure);
    for (size_t a = 0; a < num_anc; a++) {
        const auto &g = code.generators[a];
        if (g.pauli != Basis::X) {
            continue;
        }
        GateOp det{GateKind::Detector};
        det.records.push_back(mc.ancilla_records.back()[a]);
        for (auto q : g.qubits) {
            det.records.push_back(mc.data_records[q]);
        }
        det.coords = {(double)g.anchor.x, (double)g.anchor.y, (double)rounds};
        c.ops.push_back(det);
        mc.num_detectors++;
    }
    for (size_t k = 0; k < logicals.size(); k++) {
        GateOp obs{GateKind::Observable};
        obs.index = (uint32_t)k;
        for (auto q : logicals[k].ones()) {
            obs.records.push_back(mc.data_records[q]);
        }
        c.ops.push_back(obs);
    }
    mc.num_observables = logicals.size();
    if (noise) {
        c = add_noise(c, *noise, p);
    }
    return mc;
}

IswapDecomposition iswap_decomposition(GateKind cpswap) {
    IswapDecomposition d;
    if (cpswap == GateKind::CZSWAP) {
        // CZSWAP = ISWAP then S_DAG on both qubits, with S_DAG = H S SQRT_X.
        d.after[0] = {GateKind::H, GateKind::S, GateKind::SqrtX};
        d.after[1] = {GateKind::H, GateKind::S, GateKind::SqrtX};
    } else if (cpswap == GateKind::CXSWAP) {
        d.before[1] = {GateKind::H};
        d.after[0] = {GateKind::SqrtX, GateKind::S};
        d.after[1] = {GateKind::H, GateKind::S, GateKind::SqrtX};
    } else {
        throw UnknownGate(std::string("No ISWAP decomposition for ") + gate_name(cpswap) + ".");
    }
    return d;
}

/// Emits single-qubit sublayers: entry k of every qubit's list in sublayer k, grouped by gate kind.
static void emit_sublayers(std::vector<GateOp> &out, const std::vector<std::pair<uint32_t, std::vector<GateKind>>> &lists,
                           bool tick_after_last) {
    size_t depth = 0;
    for (const auto &[q, l] : lists) {
        depth = std::max(depth, l.size());
    }
    for (size_t k = 0; k < depth; k++) {
        for (GateKind kind : {GateKind::H, GateKind::S, GateKind::SqrtX}) {
            GateOp op{kind};
            for (const auto &[q, l] : lists) {
                if (k < l.size() && l[k] == kind) {
                    op.targets.push_back(q);
                }
            }
            if (!op.targets.empty()) {
                out.push_back(op);
            }
        }
        if (k + 1 < depth || tick_after_last) {
            out.push_back(GateOp{GateKind::Tick});
        }
    }
}

Circuit compile_to_iswap(const Circuit &c) {
    Circuit out = c;
    out.ops.clear();
    size_t k = 0;
    while (k < c.ops.size()) {
        // One TICK-delimited moment.
        size_t end = k;
        while (end < c.ops.size() && c.ops[end].kind != GateKind::Tick) {
            end++;
        }
        bool has_cpswap = false;
        for (size_t j = k; j < end; j++) {
            has_cpswap |= c.ops[j].kind == GateKind::CXSWAP || c.ops[j].kind == GateKind::CZSWAP;
        }
        if (!has_cpswap) {
            for (size_t j = k; j < end; j++) {
                out.ops.push_back(c.ops[j]);
            }
        } else {
            std::vector<std::pair<uint32_t, std::vector<GateKind>>> before, after;
            GateOp iswap{GateKind::ISWAP};
            std::vector<GateOp> rest;
            for (size_t j = k; j < end; j++) {
                const auto &op = c.ops[j];
                if (op.kind != GateKind::CXSWAP && op.kind != GateKind::CZSWAP) {
                    rest.push_back(op);
                    continue;
                }
                auto dec = iswap_decomposition(op.kind);
                for (size_t t = 0; t + 1 < op.targets.size(); t += 2) {
                    for (int s = 0; s < 2; s++) {
                        uint32_t q = op.targets[t + s];
                        if (!dec.before[s].empty()) {
                            before.push_back({q, dec.before[s]});
                        }
                        after.push_back({q, dec.after[s]});
                    }
                    iswap.targets.push_back(op.targets[t]);
                    iswap.targets.push_back(op.targets[t + 1]);
                }
            }
            emit_sublayers(out.ops, before, true);
            out.ops.push_back(iswap);
            for (auto &op : rest) {
                out.ops.push_back(op);
            }
            out.ops.push_back(GateOp{GateKind::Tick});
            emit_sublayers(out.ops, after, false);
        }
        if (end < c.ops.size()) {
            out.ops.push_back(c.ops[end]);
        }
        k = end + 1;
    }
    return out;
}

std::string to_stim_text(const Circuit &c) {
    std::ostringstream out;
    for (uint32_t q = 0; q < c.qubit_coords.size(); q++) {
        out << "QUBIT_COORDS(" << fmt_double(c.qubit_coords[q][0]) << ", " << fmt_double(c.qubit_coords[q][1]) << ") "
            << q << "\n";
    }
    uint64_t m = 0;
    for (const auto &op : c.ops) {
        out << gate_name(op.kind);
        switch (op.kind) {
            case GateKind::Tick:
                break;
            case GateKind::Detector:
            case GateKind::Observable: {
                if (op.kind == GateKind::Observable) {
                    out << "(" << op.index << ")";
                } else if (!op.coords.empty()) {
                    out << "(";
                    for (size_t k = 0; k < op.coords.size(); k++) {
                        out << (k ? ", " : "") << fmt_double(op.coords[k]);
                    }
                    out << ")";
                }
                for (auto r : op.records) {
                    if (r >= m) {
                        throw std::invalid_argument("Detector references a future measurement.");
                    }
                    out << " rec[-" << (m - r) << "]";
                }
                break;
            }
            default:
                if (is_noise(op.kind)) {
                    out << "(" << fmt_double(op.arg) << ")";
                }
                for (size_t k = 0; k < op.targets.size(); k++) {
                    out << " " << (!op.inverted.empty() && op.inverted[k] ? "!" : "") << op.targets[k];
                }
                if (op.kind == GateKind::MeasureX) {
                    m += op.targets.size();
                }
                break;
        }
        out << "\n";
    }
    return out.str();
}

Circuit parse_stim_text(const std::string &text) {
    Circuit c;
    std::istringstream in(text);
    std::string line;
    uint64_t m = 0;
    size_t line_no = 0;
    uint32_t max_q = 0;
    bool any_q = false;
    auto note_qubit = [&](uint32_t q) {
        max_q = std::max(max_q, q);
        any_q = true;
    };
    while (std::getline(in, line)) {
        line_no++;
        auto hash = line.find('#');
        if (hash != std::string::npos) {
            line.resize(hash);
        }
        size_t a = line.find_first_not_of(" \t\r");
        if (a == std::string::npos) {
            continue;
        }
        line = line.substr(a);
        size_t name_end = line.find_first_of(" \t(\r");
        std::string name = line.substr(0, name_end);
        std::vector<double> args;
        std::string rest = name_end == std::string::npos ? "" : line.substr(name_end);
        if (!rest.empty() && rest[0] == '(') {
            auto close = rest.find(')');
            if (close == std::string::npos) {
                throw std::invalid_argument("Unclosed argument list on line " + std::to_string(line_no) + ".");
            }
            std::string inner = rest.substr(1, close - 1);
            std::replace(inner.begin(), inner.end(), ',', ' ');
            std::istringstream as(inner);
            double v;
            while (as >> v) {
                args.push_back(v);
            }
            rest = rest.substr(close + 1);
        }
        std::vector<std::string> tokens;
        {
            std::istringstream ts(rest);
            std::string t;
            while (ts >> t) {
                tokens.push_back(t);
            }
        }
        auto err = [&](const std::string &msg) {
            return std::invalid_argument(msg + " on line " + std::to_string(line_no) + ".");
        };
        if (name == "QUBIT_COORDS") {
            if (tokens.size() != 1 || args.size() < 2) {
                throw err("Bad QUBIT_COORDS");
            }
            uint32_t q = (uint32_t)std::stoul(tokens[0]);
            note_qubit(q);
            if (c.qubit_coords.size() <= q) {
                c.qubit_coords.resize(q + 1, {0, 0});
            }
            c.qubit_coords[q] = {args[0], args[1]};
            continue;
        }
        const GateInfo *info = nullptr;
        for (const auto &g : GATES) {
            if (name == g.name) {
                info = &g;
            }
        }
        if (!info) {
            throw UnknownGate("Unknown instruction '" + name + "' on line " + std::to_string(line_no) + ".");
        }
        GateOp op{info->kind};
        if (op.kind == GateKind::Detector || op.kind == GateKind::Observable) {
            if (op.kind == GateKind::Observable) {
                if (args.size() != 1) {
                    throw err("OBSERVABLE_INCLUDE needs an index");
                }
                op.index = (uint32_t)args[0];
            } else {
                op.coords = args;
            }
            for (const auto &t : tokens) {
                if (t.rfind("rec[-", 0) != 0 || t.back() != ']') {
                    throw err("Bad record target '" + t + "'");
                }
                uint64_t back = std::stoull(t.substr(5, t.size() - 6));
                if (back == 0 || back > m) {
                    throw err("Record target out of range");
                }
                op.records.push_back(m - back);
            }
        } else {
            if (is_noise(op.kind)) {
                if (args.size() != 1) {
                    throw err("Noise channel needs one probability");
                }
                op.arg = args[0];
            }
            bool any_inv = false;
            for (const auto &t : tokens) {
                bool inv = !t.empty() && t[0] == '!';
                if (inv && op.kind != GateKind::MeasureX) {
                    throw err("Inverted target outside a measurement");
                }
                uint32_t q = (uint32_t)std::stoul(inv ? t.substr(1) : t);
                note_qubit(q);
                op.targets.push_back(q);
                op.inverted.push_back(inv);
                any_inv |= inv;
            }
            if (!any_inv) {
                op.inverted.clear();
            }
            if (is_two_qubit(op.kind) && op.targets.size() % 2 != 0) {
                throw err("Odd target count for a two-qubit instruction");
            }
            if (op.kind == GateKind::MeasureX) {
                m += op.targets.size();
            }
        }
        c.ops.push_back(op);
    }
    c.num_qubits = any_q ? max_q + 1 : 0;
    if (!c.qubit_coords.empty()) {
        c.qubit_coords.resize(c.num_qubits, {0, 0});
    }
    return c;
}

}  // namespace dircode
