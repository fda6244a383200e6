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

#include "dircode/lattice.h"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace dircode {

std::string IVec2::str() const {
    return "(" + std::to_string(x) + "," + std::to_string(y) + ")";
}

char to_char(Direction d) {
    static constexpr char chars[] = {'N', 'E', 'S', 'W'};
    return chars[static_cast<uint8_t>(d)];
}

DirectionSequence::DirectionSequence(std::vector<Direction> steps) : steps_(std::move(steps)) {
    if (steps_.empty()) {
        throw std::invalid_argument("A direction sequence needs at least one step.");
    }
}

DirectionSequence DirectionSequence::parse(std::string_view text) {
    std::vector<Direction> steps;
    size_t k = 0;
    while (k < text.size()) {
        char c = text[k++];
        Direction d;
        switch (c) {
            case 'N':
            case 'n':
                d = Direction::N;
                break;
            case 'E':
            case 'e':
                d = Direction::E;
                break;
            case 'S':
            case 's':
                d = Direction::S;
                break;
            case 'W':
            case 'w':
                d = Direction::W;
                break;
            default:
                throw std::invalid_argument("Bad direction character '" + std::string(1, c) + "' in '" + std::string(text) + "'.");
        }
        if (k < text.size() && text[k] == '^') {
            k++;
        }
        size_t repeat = 0;
        bool has_digits = false;
        while (k < text.size() && text[k] >= '0' && text[k] <= '9') {
            repeat = repeat * 10 + (text[k] - '0');
            has_digits = true;
            k++;
        }
        if (!has_digits) {
            repeat = 1;
        }
        if (repeat == 0) {
            throw std::invalid_argument("Zero exponent in '" + std::string(text) + "'.");
        }
        steps.insert(steps.end(), repeat, d);
    }
    return DirectionSequence(std::move(steps));
}

std::string DirectionSequence::str() const {
    std::string out;
    size_t k = 0;
    while (k < steps_.size()) {
        size_t run = 1;
        while (k + run < steps_.size() && steps_[k + run] == steps_[k]) {
            run++;
        }
        out.push_back(to_char(steps_[k]));
        if (run > 1) {
            out += std::to_string(run);
        }
        k += run;
    }
    return out;
}

std::string DirectionSequence::expanded() const {
    std::string out;
    for (auto d : steps_) {
        out.push_back(to_char(d));
    }
    return out;
}

IVec2 DirectionSequence::total() const {
    IVec2 t;
    for (auto d : steps_) {
        t += to_vec(d);
    }
    return t;
}

std::vector<IVec2> DirectionSequence::support_offsets() const {
    std::vector<IVec2> out;
    out.reserve(steps_.size());
    IVec2 acc;
    for (auto d : steps_) {
        out.push_back(to_vec(d) + acc * 2);
        acc += to_vec(d);
    }
    return out;
}

DeltaSets delta_sets(const DirectionSequence &seq) {
    auto q = seq.support_offsets();
    DeltaSets result;
    for (size_t i = 0; i < q.size(); i++) {
        for (size_t j = i + 1; j < q.size(); j++) {
            result.counts[q[j] - q[i]] += 1;
        }
    }
    for (const auto &[v, c] : result.counts) {
        result.all.insert(v);
        if (c & 1) {
            result.odd.insert(v);
        } else {
            result.even.insert(v);
        }
    }
    return result;
}

bool contains_zero(const DeltaSets &ds) {
    return ds.all.contains(IVec2{0, 0});
}

bool SublatticeBasis::operator==(const SublatticeBasis &o) const {
    if (rank != o.rank) {
        return false;
    }
    for (int k = 0; k < rank; k++) {
        if (basis[k] != o.basis[k]) {
            return false;
        }
    }
    return true;
}

std::string SublatticeBasis::str() const {
    std::string out = "{";
    for (int k = 0; k < rank; k++) {
        if (k) {
            out += ",";
        }
        out += basis[k].str();
    }
    return out + "}";
}

SublatticeBasis span_hnf(const std::vector<IVec2> &vectors) {
    std::vector<IVec2> vs;
    for (auto v : vectors) {
        if (!v.is_zero()) {
            vs.push_back(v);
        }
    }

    // Euclid on the y column until at most one vector has a nonzero y.
    while (true) {
        size_t best = vs.size();
        size_t nonzero = 0;
        for (size_t k = 0; k < vs.size(); k++) {
            if (vs[k].y != 0) {
                nonzero++;
                if (best == vs.size() || std::abs(vs[k].y) < std::abs(vs[best].y)) {
                    best = k;
                }
            }
        }
        if (nonzero <= 1) {
            break;
        }
        for (size_t k = 0; k < vs.size(); k++) {
            if (k != best && vs[k].y != 0) {
                vs[k] = vs[k] - vs[best] * (vs[k].y / vs[best].y);
            }
        }
    }

    int64_t a = 0;
    bool has_pivot = false;
    IVec2 pivot;
    for (auto v : vs) {
        if (v.y != 0) {
            pivot = v.y < 0 ? -v : v;
            has_pivot = true;
        } else {
            a = std::gcd(a, v.x < 0 ? -v.x : v.x);
        }
    }

    SublatticeBasis result;
    if (has_pivot && a > 0) {
        result.rank = 2;
        result.basis[0] = {a, 0};
        result.basis[1] = {pos_mod(pivot.x, a), pivot.y};
    } else if (has_pivot) {
        result.rank = 1;
        result.basis[0] = pivot;
    } else if (a > 0) {
        result.rank = 1;
        result.basis[0] = {a, 0};
    }
    return result;
}

SublatticeBasis span_hnf(const std::set<IVec2> &vectors) {
    return span_hnf(std::vector<IVec2>(vectors.begin(), vectors.end()));
}

bool lattice_contains(const SublatticeBasis &basis, IVec2 v) {
    if (basis.rank == 0) {
        return v.is_zero();
    }
    if (basis.rank == 1) {
        IVec2 g = basis.basis[0];
        if (cross(g, v) != 0) {
            return false;
        }
        return g.x != 0 ? v.x % g.x == 0 : v.y % g.y == 0;
    }
    IVec2 row0 = basis.basis[0];
    IVec2 row1 = basis.basis[1];
    if (v.y % row1.y != 0) {
        return false;
    }
    int64_t rest = v.x - (v.y / row1.y) * row1.x;
    return rest % row0.x == 0;
}

IVec2 hnf_reduce(const SublatticeBasis &basis, IVec2 v) {
    if (basis.rank != 2) {
        throw std::invalid_argument("hnf_reduce needs a full-rank lattice.");
    }
    int64_t t = floor_div(v.y, basis.basis[1].y);
    v = v - basis.basis[1] * t;
    v.x = pos_mod(v.x, basis.basis[0].x);
    return v;
}

SublatticeBasis Parallelogram::lattice() const {
    return span_hnf(std::vector<IVec2>{v1, v2});
}

std::string Parallelogram::str() const {
    return "P(" + v1.str() + "," + v2.str() + ")";
}

static void require_nondegenerate(const Parallelogram &p) {
    if (p.det() == 0) {
        throw DegenerateParallelogram("Parallelogram " + p.str() + " has zero determinant.");
    }
}

Parallelogram canonical_parallelogram(const Parallelogram &p) {
    require_nondegenerate(p);
    auto h = p.lattice();
    return Parallelogram{h.basis[0], h.basis[1]};
}

IVec2 torus_reduce(const Parallelogram &p, IVec2 v) {
    require_nondegenerate(p);
    // Coordinates of v in the (v1, v2) basis are (na/det, nb/det) by Cramer's rule.
    int64_t det = p.det();
    int64_t na = cross(v, p.v2);
    int64_t nb = cross(p.v1, v);
    if (det < 0) {
        det = -det;
        na = -na;
        nb = -nb;
    }
    int64_t fa = floor_div(na, det);
    int64_t fb = floor_div(nb, det);
    return v - p.v1 * fa - p.v2 * fb;
}

std::vector<IVec2> fundamental_domain(const Parallelogram &p) {
    require_nondegenerate(p);
    IVec2 corners[] = {{0, 0}, p.v1, p.v2, p.v1 + p.v2};
    int64_t x0 = corners[0].x, x1 = corners[0].x, y0 = corners[0].y, y1 = corners[0].y;
    for (auto c : corners) {
        x0 = std::min(x0, c.x);
        x1 = std::max(x1, c.x);
        y0 = std::min(y0, c.y);
        y1 = std::max(y1, c.y);
    }
    std::vector<IVec2> out;
    out.reserve(p.area());
    for (int64_t y = y0; y <= y1; y++) {
        for (int64_t x = x0; x <= x1; x++) {
            IVec2 v{x, y};
            if (torus_reduce(p, v) == v) {
                out.push_back(v);
            }
        }
    }
    if ((int64_t)out.size() != p.area()) {
        throw std::logic_error("Fundamental domain size mismatch for " + p.str() + ".");
    }
    return out;
}

}  // namespace dircode
