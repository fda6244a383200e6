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

#include "dircode/logicals.h"

#include <fstream>
#include <sstream>

#ifndef DIRCODE_DATA_DIR
#define DIRCODE_DATA_DIR "data"
#endif

namespace dircode {

namespace {

constexpr IVec2 CROSS[] = {{0, 1}, {1, 0}, {-1, 0}, {0, -1}};

/// X-type operator from transformed coordinates.
PauliOperator from_transformed(const std::vector<IVec2> &pts) {
    PauliOperator op{Basis::X, {}};
    for (auto p : pts) {
        op.support.push_back(TransformMap::to_original(p));
    }
    return op;
}

/// Horizontal XX pairs on row y: (3l+x0, y), (3l+x0+1, y) for l < count.
void add_pairs(std::vector<IVec2> &pts, int64_t x0, int64_t y, int64_t count) {
    for (int64_t l = 0; l < count; l++) {
        pts.push_back({3 * l + x0, y});
        pts.push_back({3 * l + x0 + 1, y});
    }
}

std::vector<PauliOperator> shifted_partners(const std::vector<PauliOperator> &xs, IVec2 offset) {
    std::vector<PauliOperator> zs;
    for (const auto &x : xs) {
        zs.push_back(x.shifted(offset).flipped());
    }
    return zs;
}

}  // namespace

IVec2 TransformMap::to_transformed(IVec2 p) {
    if (sublattice_parity(p) != Sublattice::Data) {
        throw std::invalid_argument(p.str() + " is not a data site.");
    }
    // p = u*(2,0) + v*(3,1).
    int64_t v = p.y;
    int64_t twice_u = p.x - 3 * v;
    return {twice_u / 2, v};
}

LogicalFamily ne3n_family(Ne3nCase c, int d) {
    if (d <= 0 || d % 2 != 0) {
        throw BadDistanceClass("NE3N families need a positive even d.");
    }
    int64_t alpha, beta, gamma;
    switch (c) {
        case Ne3nCase::A:
            if ((d + 2) % 4 != 0) {
                throw BadDistanceClass("Case A needs 4 | d+2.");
            }
            alpha = d / 2;
            beta = (d + 2) / 4;
            gamma = d / 2 + 1;
            break;
        case Ne3nCase::B1:
            if (d % 4 != 0) {
                throw BadDistanceClass("Case B1 needs 4 | d.");
            }
            alpha = d / 2;
            beta = d / 4;
            gamma = d / 2;
            break;
        default:
            if (d % 4 != 0) {
                throw BadDistanceClass("Case B2 needs 4 | d.");
            }
            alpha = d / 2 + 1;
            beta = d / 4 + 1;
            gamma = d / 2;
            break;
    }
    LogicalFamily f;
    f.name = std::string("NE3N-") + (c == Ne3nCase::A ? "a" : c == Ne3nCase::B1 ? "b1" : "b2") + "-d" + std::to_string(d);
    f.seq = DirectionSequence::parse("NE3N");
    f.d = d;
    // In transformed coordinates v1 = alpha*(3,0) and v2 = -beta*(3,0) + gamma*(0,2).
    f.par = Parallelogram{TransformMap::to_original({3 * alpha, 0}), TransformMap::to_original({-3 * beta, 2 * gamma})};
    f.anchor = {0, 0};

    std::vector<IVec2> x1, x2, x3;
    add_pairs(x1, -1, 1, alpha);
    add_pairs(x2, 1, 1, alpha);
    // A vertical chain of single qubits closed by horizontal pairs.
    int64_t top = c == Ne3nCase::A ? d / 2 - 1 : d / 2 - 2;
    for (int64_t m = -1; m <= top; m++) {
        x3.push_back({0, 2 * m});
    }
    if (c == Ne3nCase::A) {
        add_pairs(x3, 1, d - 1, (d - 2) / 4);
    } else {
        add_pairs(x3, 1, d - 3, d / 4);
    }
    std::vector<IVec2> x4;
    for (auto p : x3) {
        x4.push_back(p + IVec2{2, 0});
    }
    for (const auto &pts : {x1, x2, x3, x4}) {
        f.xs.push_back(from_transformed(pts));
    }
    // The Z partners are the X operators moved by (0,1) in transformed coordinates.
    f.zs = shifted_partners(f.xs, TransformMap::to_original({0, 1}));
    f.unspecified.assign(4, std::vector<bool>(4, false));
    size_t dd = d;
    f.stated_weights = c == Ne3nCase::B2 ? std::vector<size_t>{dd + 2, dd + 2, dd, dd} : std::vector<size_t>(4, dd);
    return f;
}

LogicalFamily n2e2n2_family(int d) {
    if (d < 4 || d % 2 != 0) {
        throw BadDistanceClass("N2E2N2 family needs an even d >= 4.");
    }
    LogicalFamily f;
    f.name = "N2E2N2-d" + std::to_string(d);
    f.seq = DirectionSequence::parse("N2E2N2");
    f.d = d;
    f.par = Parallelogram{{2 * d, 0}, {0, 4 * d}};
    f.anchor = {0, 0};
    for (int64_t y : {1, 3, 5}) {
        PauliOperator op{Basis::X, {}};
        for (int64_t l = 0; l < d; l++) {
            op.support.push_back({2 * l + 1, y});
        }
        f.xs.push_back(op);
    }
    for (int64_t y0 : {0, 2}) {
        PauliOperator op{Basis::X, {}};
        for (int64_t l = 0; l < d; l++) {
            op.support.push_back({4 * l, 4 * l + y0});
        }
        f.xs.push_back(op);
    }
    // Crosses of four qubits repeated along (4,8). Half of d crosses close the cycle on the torus.
    PauliOperator cross{Basis::X, {}};
    for (int64_t l = 0; l < d / 2; l++) {
        for (auto dir : CROSS) {
            cross.support.push_back(IVec2{2, 1} + IVec2{4, 8} * l + dir);
        }
    }
    f.xs.push_back(cross);
    f.zs = shifted_partners(f.xs, {1, 1});
    f.unspecified.assign(6, std::vector<bool>(6, false));
    f.unspecified[5][3] = true;
    f.unspecified[5][4] = true;
    f.stated_weights.assign(5, d);
    f.stated_weights.push_back(2 * d);
    return f;
}

LogicalFamily n2e3n2_family(int family, int d) {
    if (family == 1) {
        if (d < 4 || d % 2 != 0) {
            throw BadDistanceClass("N2E3N2 family 1 needs an even d >= 4.");
        }
    } else if (family == 2) {
        if (d < 2 || d % 2 != 0) {
            throw BadDistanceClass("N2E3N2 family 2 needs an even d >= 2.");
        }
    } else {
        throw BadDistanceClass("N2E3N2 closed-form families are numbered 1 and 2.");
    }
    LogicalFamily f;
    f.name = "N2E3N2-f" + std::to_string(family) + "-d" + std::to_string(d);
    f.seq = DirectionSequence::parse("N2E3N2");
    f.d = d;
    f.par = family == 1 ? Parallelogram{{3 * d, 0}, {3 * d - 6, 4 * d - 8}} : Parallelogram{{3 * d, 0}, {0, 4 * d}};
    f.anchor = {0, 0};

    PauliOperator row{Basis::X, {}};
    for (int64_t l = 0; l < d / 2; l++) {
        row.support.push_back({6 * l + 1, 1});
        row.support.push_back({6 * l + 3, 1});
    }
    PauliOperator chain{Basis::X, {}};
    int64_t links = family == 1 ? d / 2 - 1 : d / 2;
    for (int64_t l = 0; l < links; l++) {
        for (auto dir : CROSS) {
            chain.support.push_back(IVec2{8, 1} + dir + IVec2{6, 8} * l);
        }
    }
    std::vector<PauliOperator> xs(12);
    for (int64_t i = 1; i <= 2; i++) {
        for (int64_t j = 0; j <= 2; j++) {
            xs[i + 2 * j - 1] = row.shifted({2 * j + 2 * i - 2, 2 * j});
        }
    }
    for (int64_t i = 0; i <= 1; i++) {
        for (int64_t j = 0; j <= 2; j++) {
            xs[7 + i + 2 * j - 1] = chain.shifted({2 * i, 2 * j});
        }
    }
    f.xs = xs;
    f.zs = shifted_partners(f.xs, {1, 1});
    f.unspecified.assign(12, std::vector<bool>(12, false));
    f.stated_weights.assign(6, d);
    f.stated_weights.resize(12, family == 1 ? 2 * d - 4 : 2 * d);
    return f;
}

std::vector<LiteralInstance> load_literal_instances(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("Cannot open " + path + ".");
    }
    std::vector<LiteralInstance> out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') {
            continue;
        }
        for (auto &ch : line) {
            if (ch == ',') {
                ch = ' ';
            }
        }
        std::istringstream fields(line);
        std::string seq;
        LiteralInstance inst;
        if (!(fields >> seq >> inst.par.v1.x >> inst.par.v1.y >> inst.par.v2.x >> inst.par.v2.y >> inst.n >> inst.k >> inst.d)) {
            throw std::runtime_error("Malformed line in " + path + ": " + line);
        }
        inst.seq = DirectionSequence::parse(seq);
        out.push_back(inst);
    }
    return out;
}

std::string default_family3_path() {
    return std::string(DIRCODE_DATA_DIR) + "/n2e3n2_literal_instances.csv";
}

GF2Matrix anticommutation_matrix(const CssCode &code, const std::vector<PauliOperator> &xs, const std::vector<PauliOperator> &zs) {
    GF2Matrix m(xs.size(), zs.size());
    std::vector<BitVec> zv;
    for (const auto &z : zs) {
        zv.push_back(operator_vector(code, z));
    }
    for (size_t i = 0; i < xs.size(); i++) {
        auto xv = operator_vector(code, xs[i]);
        for (size_t j = 0; j < zs.size(); j++) {
            // Same-type operators always commute.
            if (xs[i].pauli != zs[j].pauli && xv.dot(zv[j])) {
                m.set(i, j);
            }
        }
    }
    return m;
}

LogicalReport verify_logicals(const CssCode &code, const std::vector<PauliOperator> &xs, const std::vector<PauliOperator> &zs) {
    LogicalReport r;
    auto check_all = [&](const std::vector<PauliOperator> &ops, std::vector<size_t> &weights, const char *tag) {
        for (size_t k = 0; k < ops.size(); k++) {
            auto v = operator_vector(code, ops[k]);
            weights.push_back(v.popcount());
            if (!commutes_with_stabilizers(code, ops[k].pauli, v)) {
                r.commute = false;
                r.failures.push_back(std::string(tag) + std::to_string(k + 1) + " anticommutes with a stabilizer");
            }
            if (code.checks(ops[k].pauli).in_rowspace(v)) {
                r.nontrivial = false;
                r.failures.push_back(std::string(tag) + std::to_string(k + 1) + " is a stabilizer product");
            }
        }
    };
    check_all(xs, r.x_weights, "X");
    check_all(zs, r.z_weights, "Z");
    r.m = anticommutation_matrix(code, xs, zs);
    if (!r.m.invertible()) {
        r.invertible = false;
        r.failures.push_back("anti-commutation matrix is singular");
    }
    return r;
}

bool matches_outside_mask(const GF2Matrix &m, const std::vector<std::vector<int>> &expected,
                          const std::vector<std::vector<bool>> &mask) {
    if (m.rows() != expected.size()) {
        return false;
    }
    for (size_t i = 0; i < expected.size(); i++) {
        if (expected[i].size() != m.cols()) {
            return false;
        }
        for (size_t j = 0; j < expected[i].size(); j++) {
            bool masked = !mask.empty() && mask[i][j];
            if (!masked && m.get(i, j) != (expected[i][j] != 0)) {
                return false;
            }
        }
    }
    return true;
}

bool stabilizer_equivalent(const CssCode &code, const PauliOperator &a, const PauliOperator &b) {
    if (a.pauli != b.pauli) {
        return false;
    }
    return code.checks(a.pauli).in_rowspace(operator_vector(code, a) ^ operator_vector(code, b));
}

CssCode build_family_code(const LogicalFamily &family) {
    BuildOptions options;
    options.require_plane_overlaps = false;
    return build_code(family.seq, Layout::standard(1), family.par, options);
}

}  // namespace dircode
