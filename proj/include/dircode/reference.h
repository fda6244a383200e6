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

#ifndef _DIRCODE_REFERENCE_H
#define _DIRCODE_REFERENCE_H

#include <optional>
#include <string>
#include <vector>

#include "dircode/logicals.h"

namespace dircode {

/// A published direction sequence with its valid standard layouts and grid class.
struct CatalogRow {
    int w = 0;
    std::string seq;
    std::vector<int> layouts;
    Grid grid = Grid::Square;
};

/// Published sequences of weight 4 to 7.
const std::vector<CatalogRow> &sequence_catalog();
std::vector<CatalogRow> sequence_catalog(int w);

/// Comparison of an enumeration against the catalog for one weight.
struct CatalogDiff {
    int w = 0;
    std::vector<CatalogRow> matched;
    /// Listed and produced, but with a different layout set or grid class: (listed, produced).
    std::vector<std::pair<CatalogRow, SequenceReport>> mismatched;
    /// Listed but not produced.
    std::vector<CatalogRow> missing;
    /// Produced but not listed.
    std::vector<SequenceReport> extra;
    bool listed_rows_reproduced() const {
        return mismatched.empty() && missing.empty();
    }
    std::string str() const;
};
CatalogDiff compare_with_catalog(int w, const std::vector<SequenceReport> &rows);

/// A published code instance with its printed parameters. The printed rate is 1/rate_den.
struct CodeRow {
    std::string group;
    std::string seq;
    Parallelogram par;
    int n = 0;
    int k = 0;
    int d = 0;
    int rate_den = 0;
};

/// The ten headline instances and the twelve further instances.
const std::vector<CodeRow> &code_catalog();

/// Printed 1/m is accepted for the exact rate k/(2n) when floor(2n/k) <= m <= ceil(2n/k); the printed
/// values round inconsistently.
bool printed_rate_matches(const Rational &exact, int rate_den);

/// Published anti-commutation patterns. An entry of -1 is left unspecified.
const std::vector<std::vector<int>> &ne3n_pairing();
const std::vector<std::vector<int>> &n2e2n2_pairing();
const std::vector<std::vector<int>> &n2e3n2_pairing();
/// Mask of the unspecified entries of a pattern.
std::vector<std::vector<bool>> unspecified_mask(const std::vector<std::vector<int>> &pattern);

/// A family instance whose torus equals the given one, searching d up to max_d.
std::optional<LogicalFamily> find_family(const DirectionSequence &seq, const Parallelogram &p, int max_d = 24);

/// Logical representatives for a code: the explicit family when one matches its torus (Layout 1),
/// otherwise a kernel basis.
struct CodeLogicals {
    std::vector<BitVec> xs;
    std::vector<BitVec> zs;
    /// "family NAME d=D" or "kernel basis".
    std::string source;
    std::optional<LogicalFamily> family;
};
CodeLogicals code_logicals(const CssCode &code);

}  // namespace dircode

#endif
