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

#ifndef _DIRCODE_CIRCUIT_H
#define _DIRCODE_CIRCUIT_H

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dircode/css_code.h"
#include "dircode/pauli.h"

namespace dircode {

enum class GateKind {
    ResetX,
    MeasureX,
    CXSWAP,
    CZSWAP,
    ISWAP,
    H,
    S,
    SqrtX,
    Tick,
    Depolarize1,
    Depolarize2,
    XError,
    ZError,
    Detector,
    Observable,
};

const char *gate_name(GateKind kind);
bool is_unitary(GateKind kind);
bool is_two_qubit(GateKind kind);
bool is_noise(GateKind kind);
/// Clifford table of a unitary gate kind. Throws UnknownGate otherwise.
const CliffordRule &gate_rule(GateKind kind);

struct GateOp {
    GateOp() = default;
    explicit GateOp(GateKind k) : kind(k) {
    }

    GateKind kind = GateKind::Tick;
    /// Physical qubit ids. Two-qubit gates list consecutive pairs.
    std::vector<uint32_t> targets;
    /// MeasureX only: per-target result inversion, empty for none.
    std::vector<bool> inverted;
    /// Noise strength.
    double arg = 0;
    /// Observable index.
    uint32_t index = 0;
    /// Absolute measurement record indices (Detector and Observable).
    std::vector<uint64_t> records;
    /// Detector coordinates.
    std::vector<double> coords;

    bool operator==(const GateOp &o) const = default;
};

struct Circuit {
    uint32_t num_qubits = 0;
    /// Optional (x, y) per physical qubit.
    std::vector<std::array<double, 2>> qubit_coords;
    std::vector<GateOp> ops;

    uint64_t num_measurements() const;
    size_t count_instructions(GateKind kind) const;
    /// Number of gate applications (targets or pairs) of a kind.
    size_t count_applications(GateKind kind) const;
    bool operator==(const Circuit &o) const = default;
};

class TrackerDesync : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

class NoLogicals : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// Bijection between roles (data qubits 0..n-1, then ancillas n..n+a-1) and physical torus positions.
class QubitTracker {
   public:
    explicit QubitTracker(const CssCode &code);

    uint32_t data_position(size_t d) const {
        return role_to_phys_[d];
    }
    uint32_t ancilla_position(size_t a) const {
        return role_to_phys_[num_data_ + a];
    }
    /// Role at a physical qubit: a data id, or num_data() + ancilla id.
    uint32_t role_at(uint32_t phys) const {
        return phys_to_role_[phys];
    }
    bool is_data_role(uint32_t role) const {
        return role < num_data_;
    }
    size_t num_data() const {
        return num_data_;
    }
    void swap(uint32_t phys_a, uint32_t phys_b);
    bool bijective() const;
    bool operator==(const QubitTracker &o) const = default;

   private:
    size_t num_data_ = 0;
    std::vector<uint32_t> role_to_phys_;
    std::vector<uint32_t> phys_to_role_;
};

enum class Orientation { Forward, Reverse };

/// Direction used by entangling layer j (0-based) of a round.
IVec2 layer_direction(const DirectionSequence &seq, Orientation o, size_t j);

/// One syndrome-extraction round: ancilla reset, w entangling layers, ancilla measurement, each
/// followed by a TICK. The tracker follows every SWAP. Ancillas are reset and measured in ancilla-id
/// order. With reset_all the first layer resets every physical qubit.
std::vector<GateOp> syndrome_round(const CssCode &code, Orientation o, QubitTracker &tracker, bool reset_all = false);

/// The physical edges used by the entangling layers of a circuit, as (min, max) pairs.
std::vector<std::pair<uint32_t, uint32_t>> interaction_edges(const Circuit &c);
size_t max_interaction_degree(const Circuit &c);

/// Physical qubit count and coordinates for a code.
Circuit empty_code_circuit(const CssCode &code);

struct NoiseProfile {
    std::string name;
    int version = 0;
    std::string source;
    double two_qubit = 1.0;
    double one_qubit = 0.1;
    double measure = 5.0;
    double reset = 2.0;
    double idle = 0.1;

    static NoiseProfile si1000();
    static NoiseProfile load(const std::string &path);
    std::string str() const;
};
std::string default_noise_profile_path();

/// Noise channels per profile: depolarizing after gates, Z flips before X measurements and after X
/// resets, idle depolarizing on qubits untouched in a TICK-delimited layer.
Circuit add_noise(const Circuit &c, const NoiseProfile &profile, double p);

struct MemoryCircuit {
    Circuit circuit;
    size_t rounds = 0;
    /// Measurement record of ancilla a in round r, indexed [r][a].
    std::vector<std::vector<uint64_t>> ancilla_records;
    /// Final data measurement records by data id.
    std::vector<uint64_t> data_records;
    size_t num_detectors = 0;
    size_t num_observables = 0;
};

/// X-basis memory experiment with alternating forward and reverse rounds. Logicals are X-type
/// vectors over data ids.
MemoryCircuit memory_experiment(const CssCode &code, size_t rounds, const std::vector<BitVec> &logicals,
                                const NoiseProfile *noise = nullptr, double p = 0);

/// Replaces every CXSWAP and CZSWAP by single-qubit Cliffords around an ISWAP.
Circuit compile_to_iswap(const Circuit &c);
/// Single-qubit layers (before, after) surrounding the ISWAP for a CPSWAP kind, per local qubit.
struct IswapDecomposition {
    std::array<std::vector<GateKind>, 2> before;
    std::array<std::vector<GateKind>, 2> after;
};
IswapDecomposition iswap_decomposition(GateKind cpswap);

/// Stim circuit text. Byte-deterministic.
std::string to_stim_text(const Circuit &c);
/// Parses the subset of Stim emitted by to_stim_text.
Circuit parse_stim_text(const std::string &text);

}  // namespace dircode

#endif
