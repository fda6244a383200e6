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

#ifndef _DIRCODE_LAYOUT_H
#define _DIRCODE_LAYOUT_H

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dircode/lattice.h"

namespace dircode {

enum class Basis : uint8_t { X, Z };

constexpr Basis flip(Basis b) {
    return b == Basis::X ? Basis::Z : Basis::X;
}
inline char to_char(Basis b) {
    return b == Basis::X ? 'X' : 'Z';
}

/// Version tag of the X/Z phase convention of the standard layouts. Recorded in every manifest.
inline constexpr const char *LAYOUT_CONVENTION = "layout-convention-v1 (L1: X iff y even; L2: X iff x-y=1 mod 4; L3: X iff x+y=1 mod 4)";

class NotAnAncilla : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

class ZeroDelta : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// An assignment of a Pauli type to every ancilla site.
///
/// Every layout is periodic. It is stored as a full-rank period lattice (contained in the even-sum
/// lattice) together with the type of each ancilla coset representative.
class Layout {
   public:
    enum class Kind : uint8_t { Layout1 = 1, Layout2 = 2, Layout3 = 3, Custom = 0 };

    /// One of the three standard layouts, numbered 1, 2, 3.
    static Layout standard(int number);
    /// Every ancilla has the same type.
    static Layout uniform(Basis b);
    /// Custom periodic layout. `types` maps ancilla representatives (any point of each coset) to types.
    static Layout custom(const std::vector<IVec2> &period, const std::map<IVec2, Basis> &types, std::string name = "custom");

    Kind kind() const {
        return kind_;
    }
    /// 1, 2, 3 for the standard layouts, 0 for custom ones.
    int number() const {
        return static_cast<int>(kind_);
    }
    const std::string &name() const {
        return name_;
    }
    const SublatticeBasis &period() const {
        return period_;
    }

    /// Type of the ancilla at `a`. Throws NotAnAncilla on data sites.
    Basis value(IVec2 a) const;

    /// One ancilla site per coset of the period lattice, sorted.
    std::vector<IVec2> ancilla_representatives() const;

    /// True when both X and Z occur.
    bool has_both_types() const;

   private:
    Kind kind_ = Kind::Custom;
    std::string name_;
    SublatticeBasis period_;
    std::map<IVec2, Basis> table_;  // Keyed by hnf_reduce of the site.
};

Basis layout_value(const Layout &layout, IVec2 a);

/// The layout is constant on cosets of span(Delta_odd). Throws ZeroDelta when the sequence revisits a qubit.
bool theorem1_valid(const DirectionSequence &seq, const Layout &layout);

/// Independent check of the same property. For every pair of ancillas of different type within the
/// overlap window it counts coinciding support pairs directly from the support formula and checks
/// that the coincidences scheduled earlier and later are both even, and that no qubit is shared in the
/// same layer.
bool pairwise_conditions_valid(const DirectionSequence &seq, const Layout &layout);

/// Subset of {1,2,3} whose standard layouts pass theorem1_valid and contain both Pauli types.
std::vector<int> valid_standard_layouts(const DirectionSequence &seq);

enum class Grid : uint8_t { Hex, Square };

struct ConnectivityClass {
    Grid grid = Grid::Square;
    int max_degree = 0;
    std::string str() const {
        return grid == Grid::Hex ? "hex-grid" : "square-grid";
    }
};

/// Classifies the union of grid edges used by one forward and one reversed syndrome round.
ConnectivityClass connectivity_class(const DirectionSequence &seq);

struct SequenceReport {
    DirectionSequence sequence;
    std::vector<int> valid_layouts;
    ConnectivityClass connectivity;
};

/// Every sequence of length w starting with N, whose first non-N step is E, revisiting no qubit, and
/// with a nonempty set of valid standard layouts. Ordered lexicographically by step (N < E < S < W).
std::vector<SequenceReport> enumerate_sequences(int w, int jobs = 1);

/// Every candidate sequence of length w satisfying the two canonicalization rules (first N, first non-N is E).
std::vector<DirectionSequence> canonical_candidates(int w);

std::string layouts_str(const std::vector<int> &layouts);
std::string format_sequence_table(const std::vector<SequenceReport> &rows);
std::string format_sequence_csv(const std::vector<SequenceReport> &rows);

}  // namespace dircode

#endif
