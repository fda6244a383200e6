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

#include "dircode/reference.h"

#include <functional>
#include <sstream>

namespace dircode {

namespace {

constexpr Grid HEX = Grid::Hex;
constexpr Grid SQ = Grid::Square;
const std::vector<int> ALL = {1, 2, 3};

std::string grid_str(Grid g) {
    return g == Grid::Hex ? "hex-grid" : "square-grid";
}

std::string row_str(const CatalogRow &r) {
    return r.seq + " {" + layouts_str(r.layouts) + "} " + grid_str(r.grid);
}

std::string report_str(const SequenceReport &r) {
    return r.sequence.str() + " {" + layouts_str(r.valid_layouts) + "} " + r.connectivity.str() + " (max degree " +
           std::to_string(r.connectivity.max_degree) + ")";
}

}  // namespace

const std::vector<CatalogRow> &sequence_catalog() {
    static const std::vector<CatalogRow> rows = {
        {4, "NE2N", {1}, SQ},
        {5, "NE3N", ALL, HEX},
        {5, "NESEN", ALL, HEX},
        {5, "N2EN2", ALL, HEX},
        {6, "NE4N", {1}, SQ},
        {6, "NEN2EN", {1}, SQ},
        {6, "NENWSW", {3}, SQ},
        {6, "NES2EN", {1}, SQ},
        {6, "N2E2N2", {1}, SQ},
        {7, "NE5N", ALL, HEX},
        {7, "NE3NEN", ALL, HEX},
        {7, "NE2NE2N", ALL, SQ},
        {7, "NE2SE2N", ALL, HEX},
        {7, "NEN3EN", ALL, SQ},
        {7, "NENWNEN", ALL, HEX},
        {7, "NESESEN", ALL, SQ},
        {7, "NES3EN", ALL, SQ},
        {7, "NES2WNE", {1}, SQ},
        {7, "NESWSEN", ALL, SQ},
        {7, "NESW2NE", {1}, SQ},
        {7, "N2E3N2", ALL, SQ},
        {7, "N2ENEN2", ALL, SQ},
        {7, "N2ESEN2", ALL, SQ},
        {7, "N3EN3", ALL, SQ},
    };
    return rows;
}

std::vector<CatalogRow> sequence_catalog(int w) {
    std::vector<CatalogRow> out;
    for (const auto &r : sequence_catalog()) {
        if (r.w == w) {
            out.push_back(r);
        }
    }
    return out;
}

std::string CatalogDiff::str() const {
    std::ostringstream out;
    out << "weight " << w << ": " << matched.size() << " listed rows reproduced, " << mismatched.size()
        << " differ, " << missing.size() << " missing, " << extra.size() << " unlisted\n";
    for (const auto &[listed, got] : mismatched) {
        out << "  differs: listed " << row_str(listed) << ", computed " << report_str(got) << "\n";
    }
    for (const auto &r : missing) {
        out << "  missing: listed " << row_str(r) << " is not produced\n";
    }
    for (const auto &r : extra) {
        out << "  unlisted: " << report_str(r) << "\n";
    }
    return out.str();
}

CatalogDiff compare_with_catalog(int w, const std::vector<SequenceReport> &rows) {
    CatalogDiff diff;
    diff.w = w;
    auto listed = sequence_catalog(w);
    std::vector<bool> used(rows.size(), false);
    for (const auto &l : listed) {
        auto seq = DirectionSequence::parse(l.seq);
        bool found = false;
        for (size_t k = 0; k < rows.size(); k++) {
            if (rows[k].sequence == seq) {
                used[k] = true;
                found = true;
                if (rows[k].valid_layouts == l.layouts && rows[k].connectivity.grid == l.grid) {
                    diff.matched.push_back(l);
                } else {
                    diff.mismatched.push_back({l, rows[k]});
                }
            }
        }
        if (!found) {
            diff.missing.push_back(l);
        }
    }
    for (size_t k = 0; k < rows.size(); k++) {
        if (!used[k]) {
            diff.extra.push_back(rows[k]);
        }
    }
    return diff;
}

const std::vector<CodeRow> &code_catalog() {
    static const std::vector<CodeRow> rows = {
        {"headline", "NE3N", {{18, 0}, {0, 4}}, 36, 4, 4, 18},
        {"headline", "NE3N", {{18, 0}, {12, 8}}, 72, 4, 6, 36},
        {"headline", "NE3N", {{30, 0}, {6, 8}}, 120, 4, 8, 60},
        {"headline", "NE3N", {{30, 0}, {18, 12}}, 180, 4, 10, 90},
        {"headline", "N2E2N2", {{8, 0}, {0, 16}}, 64, 6, 4, 21},
        {"headline", "N2E2N2", {{12, 0}, {0, 24}}, 144, 6, 6, 48},
        {"headline", "N2E2N2", {{16, 0}, {0, 32}}, 256, 6, 8, 85},
        {"headline", "N2E3N2", {{12, 0}, {6, 8}}, 48, 12, 4, 8},
        {"headline", "N2E3N2", {{18, 0}, {12, 16}}, 144, 12, 6, 24},
        {"headline", "N2E3N2", {{24, 0}, {18, 24}}, 288, 12, 8, 48},
        {"further", "NE3N", {{12, 0}, {6, 4}}, 24, 4, 4, 12},
        {"further", "NE3N", {{24, 0}, {12, 8}}, 120, 4, 8, 60},
        {"further", "N2E2N2", {{-2, 8}, {6, 8}}, 32, 6, 3, 11},
        {"further", "N2E2N2", {{-4, 8}, {14, 8}}, 72, 6, 5, 24},
        {"further", "N2E2N2", {{-12, 8}, {8, 16}}, 128, 6, 7, 42},
        {"further", "N2E2N2", {{-10, 16}, {20, 8}}, 200, 6, 9, 67},
        {"further", "N2E3N2", {{12, 0}, {0, 16}}, 96, 12, 4, 16},
        {"further", "N2E3N2", {{18, 0}, {0, 24}}, 216, 12, 6, 36},
        {"further", "N2E3N2", {{24, 0}, {0, 32}}, 384, 12, 8, 64},
        {"further", "N2E3N2", {{18, 8}, {-6, 8}}, 96, 12, 6, 16},
        {"further", "N2E3N2", {{-12, 8}, {24, 8}}, 144, 12, 8, 24},
        {"further", "N2E3N2", {{0, 16}, {-30, 8}}, 240, 12, 10, 40},
    };
    return rows;
}

bool printed_rate_matches(const Rational &exact, int rate_den) {
    if (exact.num <= 0 || rate_den <= 0) {
        return false;
    }
    // exact = num/den, so 2n/k = den/num.
    int64_t lo = exact.den / exact.num;
    int64_t hi = lo + (exact.den % exact.num != 0 ? 1 : 0);
    return lo <= rate_den && rate_den <= hi;
}

const std::vector<std::vector<int>> &ne3n_pairing() {
    static const std::vector<std::vector<int>> m = {
        {0, 0, 1, 1},
        {0, 0, 0, 1},
        {1, 0, 0, 0},
        {1, 1, 0, 0},
    };
    return m;
}

const std::vector<std::vector<int>> &n2e2n2_pairing() {
    static const std::vector<std::vector<int>> m = {
        {0, 0, 0, 1, 0, 1},
        {0, 0, 0, 0, 1, 1},
        {0, 0, 0, 1, 0, 0},
        {0, 1, 0, 0, 0, 0},
        {1, 0, 1, 0, 0, 0},
        {1, 0, 0, -1, -1, 0},
    };
    return m;
}

const std::vector<std::vector<int>> &n2e3n2_pairing() {
    static const std::vector<std::vector<int>> m = [] {
        const char *rows[] = {
            "000000100000", "000000110000", "000000111100", "000000010100", "000000000101", "000000001010",
            "100000000000", "110000000000", "100100000000", "111000000000", "000111000000", "001001000000",
        };
        std::vector<std::vector<int>> out;
        for (const char *r : rows) {
            std::vector<int> row;
            for (const char *c = r; *c; c++) {
                row.push_back(*c - '0');
            }
            out.push_back(row);
        }
        return out;
    }();
    return m;
}

std::vector<std::vector<bool>> unspecified_mask(const std::vector<std::vector<int>> &pattern) {
    std::vector<std::vector<bool>> mask;
    for (const auto &row : pattern) {
        std::vector<bool> r;
        for (int v : row) {
            r.push_back(v < 0);
        }
        mask.push_back(r);
    }
    return mask;
}

std::optional<LogicalFamily> find_family(const DirectionSequence &seq, const Parallelogram &p, int max_d) {
    Parallelogram target = canonical_parallelogram(p);
    std::vector<std::function<LogicalFamily(int)>> makers;
    std::string s = seq.str();
    if (s == "NE3N") {
        for (auto c : {Ne3nCase::A, Ne3nCase::B1, Ne3nCase::B2}) {
            makers.push_back([c](int d) {
                return ne3n_family(c, d);
            });
        }
    } else if (s == "N2E2N2") {
        makers.push_back(n2e2n2_family);
    } else if (s == "N2E3N2") {
        for (int fam : {1, 2}) {
            makers.push_back([fam](int d) {
                return n2e3n2_family(fam, d);
            });
        }
    }
    for (int d = 2; d <= max_d; d += 2) {
        for (const auto &make : makers) {
            try {
                auto f = make(d);
                if (canonical_parallelogram(f.par) == target) {
                    return f;
                }
            } catch (const BadDistanceClass &) {
            }
        }
    }
    return std::nullopt;
}

CodeLogicals code_logicals(const CssCode &code) {
    CodeLogicals out;
    if (code.layout.number() == 1) {
        out.family = find_family(code.seq, code.par);
    }
    if (out.family) {
        // Supports are reduced on the code's own torus, so any equivalent parallelogram works.
        for (const auto &x : out.family->xs) {
            out.xs.push_back(operator_vector(code, x));
        }
        for (const auto &z : out.family->zs) {
            out.zs.push_back(operator_vector(code, z));
        }
        out.source = "family " + out.family->name;
        return out;
    }
    auto basis = logical_basis(code);
    out.xs = basis.xs;
    out.zs = basis.zs;
    out.source = "kernel basis";
    return out;
}

}  // namespace dircode
