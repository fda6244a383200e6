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

#ifndef _DIRCODE_CSS_CODE_H
#define _DIRCODE_CSS_CODE_H

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "dircode/gf2.h"
#include "dircode/lattice.h"
#include "dircode/layout.h"

namespace dircode {

/// Lattice points of a generalized torus with constant-time point lookup.
///
/// Physical qubit ids are positions in `points()` (row-major y then x over the fundamental domain).
/// Data qubit ids index `data()` in the same order.
class Torus {
   public:
    explicit Torus(const Parallelogram &p);

    const Parallelogram &parallelogram() const {
        return par_;
    }
    IVec2 reduce(IVec2 v) const;
    const std::vector<IVec2> &points() const {
        return points_;
    }
    const std::vector<IVec2> &data() const {
        return data_;
    }
    const std::vector<IVec2> &ancillas() const {
        return ancillas_;
    }
    /// Physical qubit id of any point (reduced first).
    uint32_t point_index(IVec2 v) const;
    /// Data qubit id of a data-sublattice point, or -1 for ancilla sites.
    int data_index(IVec2 v) const;
    /// Ancilla id (position in ancillas()) of an ancilla point, or -1 for data sites.
    int ancilla_index(IVec2 v) const;

   private:
    size_t slot(IVec2 v) const;

    Parallelogram par_;
    SublatticeBasis hnf_;
    std::vector<IVec2> points_;
    std::vector<IVec2> data_;
    std::vector<IVec2> ancillas_;
    std::vector<uint32_t> slot_to_point_;
    std::vector<int> point_to_data_;
    std::vector<int> point_to_ancilla_;
};

struct StabilizerGenerator {
    Basis pauli = Basis::X;
    /// Initial ancilla position, inside the fundamental domain.
    IVec2 anchor;
    /// Reduced support positions Q_1 ... Q_w in schedule order.
    std::vector<IVec2> support;
    /// Data qubit ids of the support in schedule order.
    std::vector<int> qubits;
};

struct WrapReport {
    bool ok = true;
    /// Subset of "i", "ii", "iii", "iv".
    std::vector<std::string> violated;
    std::string str() const;
};

class WrapViolation : public std::runtime_error {
   public:
    WrapViolation(const WrapReport &report, const std::string &what) : std::runtime_error(what), report(report) {
    }
    WrapReport report;
};

class CommutationFailure : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

class BudgetExceeded : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

class NotLogical : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

WrapReport check_wrap(const DirectionSequence &seq, const Layout &layout, const Parallelogram &p);

struct BuildOptions {
    /// When false the generators are assembled even if the layout or the wrapping is invalid. Used to
    /// compare circuit simulation against the algebraic validity tests.
    bool require_valid = true;
    /// Condition (iv) is sufficient but not necessary for the torus circuit to measure every generator.
    /// When false a violation of (iv) alone is accepted and circuit verification must stand in for it.
    bool require_plane_overlaps = true;
};

struct CssCode {
    DirectionSequence seq;
    Layout layout = Layout::standard(1);
    Parallelogram par;
    Torus torus{Parallelogram{{1, 0}, {0, 1}}};
    /// One generator per ancilla of the fundamental domain, in ancilla order.
    std::vector<StabilizerGenerator> generators;
    /// Generator indices forming the rows of hx and hz respectively.
    std::vector<int> x_rows;
    std::vector<int> z_rows;
    GF2Matrix hx;
    GF2Matrix hz;
    size_t n = 0;
    size_t k = 0;
    bool commutes = true;

    const GF2Matrix &checks(Basis b) const {
        return b == Basis::X ? hx : hz;
    }
    std::string params_str() const;
};

CssCode build_code(const DirectionSequence &seq, const Layout &layout, const Parallelogram &p, BuildOptions options = {});

/// n - rank(hx) - rank(hz).
size_t logical_count(const CssCode &code);

/// An X- or Z-type Pauli product on data positions (unreduced positions are allowed).
struct PauliOperator {
    Basis pauli = Basis::X;
    std::vector<IVec2> support;

    PauliOperator shifted(IVec2 offset) const;
    /// Same support with the other Pauli type.
    PauliOperator flipped() const;
};

/// Indicator vector over data qubits. Positions coinciding on the torus cancel in pairs.
BitVec operator_vector(const CssCode &code, const PauliOperator &op);

/// A basis of nontrivial logical representatives for each Pauli type (no pairing is imposed).
struct LogicalBasis {
    std::vector<BitVec> xs;
    std::vector<BitVec> zs;
};
LogicalBasis logical_basis(const CssCode &code);

bool commutes_with_stabilizers(const CssCode &code, Basis pauli, const BitVec &v);

/// Minimum weight among operators checked to be nontrivial logicals. Throws NotLogical otherwise.
size_t distance_upper_bound(const CssCode &code, const std::vector<PauliOperator> &logicals);

struct DistanceSearch {
    /// Least weight of a nontrivial logical found, if any, at most max_weight.
    std::optional<size_t> weight;
    /// The Pauli type of the witness.
    Basis witness_type = Basis::X;
    std::vector<size_t> witness;
    size_t max_weight = 0;
    uint64_t visits = 0;
};

inline constexpr uint64_t DEFAULT_DISTANCE_BUDGET = 100000000;

/// Exhaustive search for nontrivial logicals of weight at most max_weight, on both Pauli types.
/// Throws BudgetExceeded when sum_{t <= max_weight} C(n, t) exceeds the budget.
DistanceSearch distance_exact(const CssCode &code, size_t max_weight, uint64_t budget = DEFAULT_DISTANCE_BUDGET, int jobs = 1);

/// Low weight completions. Searches e with |e| <= max_extra such that start + e is a nontrivial
/// logical of the given type. Returns the least such |e|.
DistanceSearch min_logical_completion(const CssCode &code, Basis pauli, const BitVec &start, size_t max_extra,
                                      uint64_t budget = DEFAULT_DISTANCE_BUDGET, int jobs = 1);

/// Number of supports visited by an exhaustive search up to max_weight (sum of binomials, saturating).
uint64_t search_volume(size_t n, size_t max_weight);

/// Randomized information-set probe. Heuristic upper bound only; it never certifies a distance.
struct DistanceProbe {
    size_t upper_bound = 0;
    Basis witness_type = Basis::X;
    uint64_t iterations = 0;
};
DistanceProbe distance_probe(const CssCode &code, uint64_t iterations, uint64_t seed);

struct Rational {
    int64_t num = 0;
    int64_t den = 1;
    bool operator==(const Rational &o) const = default;
    std::string str() const;
};

/// k / (2n), reduced.
Rational net_encoding_rate(const CssCode &code);

/// MacKay alist text for a parity-check matrix.
std::string to_alist(const GF2Matrix &m);
GF2Matrix parse_alist(const std::string &text);
/// One row per line, characters '0' and '1'.
std::string to_dense_text(const GF2Matrix &m);
GF2Matrix parse_dense_text(const std::string &text);

}  // namespace dircode

#endif
