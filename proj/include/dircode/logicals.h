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

#ifndef _DIRCODE_LOGICALS_H
#define _DIRCODE_LOGICALS_H

#include <string>
#include <vector>

#include "dircode/css_code.h"

namespace dircode {

class BadDistanceClass : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// The linear map sending (2,0) to (1,0) and (3,1) to (0,1). It maps the data sublattice onto Z^2.
struct TransformMap {
    /// Original coordinates of a transformed point.
    static IVec2 to_original(IVec2 t) {
        return {2 * t.x + 3 * t.y, t.y};
    }
    /// Transformed coordinates of an original data point.
    static IVec2 to_transformed(IVec2 p);
};

/// A parallelogram together with explicit X and Z logical representatives.
struct LogicalFamily {
    std::string name;
    DirectionSequence seq;
    Parallelogram par;
    int d = 0;
    /// Original-coordinate position of the transformed origin (always a data qubit).
    IVec2 anchor;
    std::vector<PauliOperator> xs;
    std::vector<PauliOperator> zs;
    /// Mask of anti-commutation entries the construction leaves unspecified.
    std::vector<std::vector<bool>> unspecified;
    /// Weight of each X (and Z) operator as stated by the construction.
    std::vector<size_t> stated_weights;
};

enum class Ne3nCase { A, B1, B2 };

/// NE3N codes with four logical qubits. Case A needs 4 | d+2; cases B1 and B2 need 4 | d.
LogicalFamily ne3n_family(Ne3nCase c, int d);

/// N2E2N2 codes on the rectangle (2d,0),(0,4d) with six logical qubits; d even, d >= 4.
LogicalFamily n2e2n2_family(int d);

/// N2E3N2 codes with twelve logical qubits. Family 1 (d = 4, 6, ...) lives on (3d,0),(3d-6,4d-8);
/// family 2 (d = 2, 4, ...) on the rectangle (3d,0),(0,4d).
LogicalFamily n2e3n2_family(int family, int d);

/// Literal instances without a closed-form pattern, read from the shipped data file.
struct LiteralInstance {
    DirectionSequence seq;
    Parallelogram par;
    int n = 0;
    int k = 0;
    int d = 0;
};
std::vector<LiteralInstance> load_literal_instances(const std::string &path);
/// Path of the shipped N2E3N2 literal-instance file.
std::string default_family3_path();

/// Entry (i,j) is 1 iff xs[i] and zs[j] anticommute on the code.
GF2Matrix anticommutation_matrix(const CssCode &code, const std::vector<PauliOperator> &xs, const std::vector<PauliOperator> &zs);

struct LogicalReport {
    bool commute = true;
    bool invertible = true;
    bool nontrivial = true;
    std::vector<std::string> failures;
    GF2Matrix m;
    std::vector<size_t> x_weights;
    std::vector<size_t> z_weights;
    bool ok() const {
        return commute && invertible && nontrivial;
    }
};

/// Checks that every operator commutes with the stabilizers, is not itself a stabilizer, and that
/// the anti-commutation matrix is invertible.
LogicalReport verify_logicals(const CssCode &code, const std::vector<PauliOperator> &xs, const std::vector<PauliOperator> &zs);

/// Compares a matrix against an expected one, ignoring masked entries.
bool matches_outside_mask(const GF2Matrix &m, const std::vector<std::vector<int>> &expected,
                          const std::vector<std::vector<bool>> &mask = {});

/// True iff a and b differ by a product of stabilizers of their (common) type.
bool stabilizer_equivalent(const CssCode &code, const PauliOperator &a, const PauliOperator &b);

/// Builds the code a family lives on (Layout 1). Condition (iv) is not enforced.
CssCode build_family_code(const LogicalFamily &family);

}  // namespace dircode

#endif
