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

#ifndef _DIRCODE_LATTICE_H
#define _DIRCODE_LATTICE_H

#include <compare>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace dircode {

/// An integer vector in the plane.
struct IVec2 {
    int64_t x = 0;
    int64_t y = 0;

    constexpr IVec2 operator+(IVec2 o) const {
        return {x + o.x, y + o.y};
    }
    constexpr IVec2 operator-(IVec2 o) const {
        return {x - o.x, y - o.y};
    }
    constexpr IVec2 operator-() const {
        return {-x, -y};
    }
    constexpr IVec2 operator*(int64_t s) const {
        return {x * s, y * s};
    }
    IVec2 &operator+=(IVec2 o) {
        x += o.x;
        y += o.y;
        return *this;
    }
    constexpr bool operator==(const IVec2 &o) const = default;
    constexpr auto operator<=>(const IVec2 &o) const = default;
    constexpr bool is_zero() const {
        return x == 0 && y == 0;
    }

    /// Prints as "(x,y)".
    std::string str() const;
};

/// Orders points row-major with y as the major key. This is the ordering used for qubit indices.
struct YXLess {
    bool operator()(IVec2 a, IVec2 b) const {
        return a.y != b.y ? a.y < b.y : a.x < b.x;
    }
};

constexpr int64_t cross(IVec2 a, IVec2 b) {
    return a.x * b.y - a.y * b.x;
}

/// Floor division for a positive divisor.
constexpr int64_t floor_div(int64_t a, int64_t b) {
    int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) {
        q -= 1;
    }
    return q;
}

/// Non-negative remainder for a positive modulus.
constexpr int64_t pos_mod(int64_t a, int64_t m) {
    int64_t r = a % m;
    return r < 0 ? r + m : r;
}

enum class Direction : uint8_t { N = 0, E = 1, S = 2, W = 3 };

constexpr IVec2 to_vec(Direction d) {
    switch (d) {
        case Direction::N:
            return {0, 1};
        case Direction::E:
            return {1, 0};
        case Direction::S:
            return {0, -1};
        default:
            return {-1, 0};
    }
}

constexpr Direction negate(Direction d) {
    return static_cast<Direction>((static_cast<uint8_t>(d) + 2) & 3);
}

char to_char(Direction d);

/// An ordered list of unit steps defining the shape of a stabilizer and the schedule measuring it.
class DirectionSequence {
   public:
    DirectionSequence() = default;
    explicit DirectionSequence(std::vector<Direction> steps);

    /// Parses either the expanded form ("NEEEN") or the exponent form ("NE3N", "N^2E^3N^2").
    static DirectionSequence parse(std::string_view text);

    /// Exponent form, for example "NE3N".
    std::string str() const;
    /// One character per step, for example "NEEEN".
    std::string expanded() const;

    size_t size() const {
        return steps_.size();
    }
    Direction operator[](size_t j) const {
        return steps_[j];
    }
    const std::vector<Direction> &steps() const {
        return steps_;
    }

    /// Sum of all step vectors.
    IVec2 total() const;

    /// Support offsets Q_j - A_0 = d_j + 2 * sum_{l<j} d_l, in schedule order.
    std::vector<IVec2> support_offsets() const;

    bool operator==(const DirectionSequence &o) const = default;
    auto operator<=>(const DirectionSequence &o) const = default;

   private:
    std::vector<Direction> steps_;
};

/// Pairwise offsets between the support qubits of one stabilizer, split by pair-count parity.
struct DeltaSets {
    std::set<IVec2> all;
    std::set<IVec2> odd;
    std::set<IVec2> even;
    /// How many pairs (i<j) produce each vector.
    std::map<IVec2, int> counts;
};

DeltaSets delta_sets(const DirectionSequence &seq);

/// True when the sequence revisits a data qubit.
bool contains_zero(const DeltaSets &ds);

/// Canonical basis of an integer sublattice of Z^2.
///
/// Rank 2 bases have rows (a,0),(b,c) with a,c > 0 and 0 <= b < a. A rank 1 basis holds a single
/// primitive-multiple generator normalized to y > 0, or y == 0 and x > 0.
struct SublatticeBasis {
    int rank = 0;
    IVec2 basis[2]{};

    std::vector<IVec2> vectors() const {
        return std::vector<IVec2>(basis, basis + rank);
    }
    /// Absolute covolume (only meaningful for rank 2).
    int64_t determinant() const {
        return rank == 2 ? basis[0].x * basis[1].y : 0;
    }
    bool operator==(const SublatticeBasis &o) const;
    std::string str() const;
};

SublatticeBasis span_hnf(const std::vector<IVec2> &vectors);
SublatticeBasis span_hnf(const std::set<IVec2> &vectors);
bool lattice_contains(const SublatticeBasis &basis, IVec2 v);

/// Reduces v into the box [0,a) x [0,c) of a rank 2 HNF basis. Equal outputs iff congruent mod the lattice.
IVec2 hnf_reduce(const SublatticeBasis &basis, IVec2 v);

class DegenerateParallelogram : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// The half-open parallelogram {a*v1 + b*v2 : 0 <= a,b < 1} and the torus Z^2 / span{v1,v2}.
struct Parallelogram {
    IVec2 v1;
    IVec2 v2;

    int64_t det() const {
        return cross(v1, v2);
    }
    /// Number of lattice points in the fundamental domain.
    int64_t area() const {
        int64_t d = det();
        return d < 0 ? -d : d;
    }
    SublatticeBasis lattice() const;
    bool operator==(const Parallelogram &o) const = default;
    std::string str() const;
};

/// HNF representative of the sublattice. Equal outputs iff the parallelograms define the same torus.
Parallelogram canonical_parallelogram(const Parallelogram &p);

/// Representative of v inside the fundamental domain of p.
IVec2 torus_reduce(const Parallelogram &p, IVec2 v);

/// All lattice points of the fundamental domain, sorted row-major (y then x).
std::vector<IVec2> fundamental_domain(const Parallelogram &p);

enum class Sublattice : uint8_t { Data, Ancilla };

constexpr Sublattice sublattice_parity(IVec2 v) {
    return ((v.x - v.y) & 1) == 0 ? Sublattice::Data : Sublattice::Ancilla;
}

}  // namespace dircode

#endif
