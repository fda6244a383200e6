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

#ifndef _DIRCODE_FLOW_H
#define _DIRCODE_FLOW_H

#include <optional>
#include <string>
#include <vector>

#include "dircode/circuit.h"

namespace dircode {

/// Heisenberg propagation of Pauli strings through the unitary part of a circuit. Only the gates
/// touching the current support are visited.
class FlowSimulator {
   public:
    explicit FlowSimulator(const Circuit &c);

    const Circuit &circuit() const {
        return c_;
    }
    uint64_t num_records() const {
        return rec_op_.size();
    }
    /// Op index and target position of a measurement record.
    size_t record_op(uint64_t r) const {
        return rec_op_[r];
    }
    uint32_t record_qubit(uint64_t r) const;
    bool record_inverted(uint64_t r) const;

    /// Preimage at circuit start of the operator measured by record r (resets ignored).
    PauliString back_propagate(uint64_t record) const;
    /// Conjugates p, located just before op `end`, back through ops [begin, end).
    PauliString back_propagate(PauliString p, size_t begin, size_t end) const;
    /// Pushes p, located just before op `begin`, forward through ops [begin, end).
    PauliString forward_propagate(PauliString p, size_t begin, size_t end) const;

    /// Applies op k (unitary) to p.
    void conjugate_op(PauliString &p, size_t k, bool inverse) const;

   private:
    const Circuit &c_;
    /// Per unitary op: qubit -> index of the first target of its pair (or the qubit's target), -1 if absent.
    std::vector<std::vector<int32_t>> slot_;
    std::vector<size_t> rec_op_;
    std::vector<uint32_t> rec_pos_;
};

struct AncillaVerdict {
    size_t ancilla = 0;
    bool ok = true;
    /// Sign of the measured operator, +1 or -1.
    int sign = 1;
    std::string reason;
};

struct FlowReport {
    bool ok = true;
    size_t failures = 0;
    std::vector<AncillaVerdict> verdicts;
    std::string str() const;
};

/// Checks that measurement a of a single round equals X on its own ancilla times the generator on
/// the data, with identity on every other ancilla. `start` is the tracker at the round start.
/// An empty ancilla list checks every ancilla.
FlowReport verify_simultaneous_independent(const CssCode &code, const Circuit &round, const QubitTracker &start,
                                           const std::vector<size_t> &ancillas = {}, int jobs = 1);

/// A single round on a fresh circuit.
Circuit round_circuit(const CssCode &code, Orientation o, QubitTracker &tracker);

/// Ancilla ids covering every translation class of the layout period: one per ancilla coset.
std::vector<size_t> layout_representatives(const CssCode &code);

struct DeterminismReport {
    bool ok = true;
    size_t detectors = 0;
    size_t observables = 0;
    /// +1 or -1 when deterministic, 0 when random.
    std::vector<int> detector_values;
    std::vector<int> observable_values;
    std::optional<std::string> counterexample;
    std::string str() const;
};

/// Noiseless flow check of every detector and observable. Initial qubit state is |0...0>.
DeterminismReport check_determinism(const Circuit &c, int jobs = 1);

struct HookFault {
    size_t ancilla = 0;
    /// Stabilizer weight.
    size_t w = 0;
    /// Fault inserted after this many entangling layers (0..w).
    size_t layer = 0;
    char pauli = 'X';
    /// Data ids of the residual of the generator's type.
    std::vector<size_t> residual;
    /// The data residual has the generator's type only.
    bool clean = true;
    /// Other ancilla measurements of the same round flipped by the spread fault.
    size_t flipped_measurements = 0;
    /// The residual is the first `prefix` schedule qubits, times the generator if `complemented`.
    std::optional<size_t> prefix;
    bool complemented = false;
    /// Weight of the smaller of the two stabilizer-equivalent forms.
    size_t reduced_weight() const;
};

/// Forward-propagates X, Y and Z faults on each listed ancilla after each layer of one round.
std::vector<HookFault> hook_error_spectrum(const CssCode &code, Orientation o, const std::vector<size_t> &ancillas);

struct BadHookReport {
    bool bad_hook_found = false;
    size_t residuals_checked = 0;
    /// Largest number of extra data faults searched exhaustively for every residual.
    size_t max_extra_checked = 0;
    /// Extra faults that would be needed for a full check (d - 2).
    size_t extra_target = 0;
    bool budget_limited = false;
    std::string witness;
    std::string str() const;
};

/// Searches prefix and suffix hook residuals of weight < w/2 on one X and one Z generator for
/// completions to a nontrivial logical with at most d-2 further data faults.
BadHookReport bad_hook_check(const CssCode &code, size_t d, uint64_t budget = DEFAULT_DISTANCE_BUDGET, int jobs = 1);

}  // namespace dircode

#endif
