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

#include "gtest/gtest.h"

#include "dircode/reference.h"

using namespace dircode;

TEST(transform_map, maps_data_sublattice_onto_the_plane) {
    ASSERT_EQ(TransformMap::to_original({1, 0}), (IVec2{2, 0}));
    ASSERT_EQ(TransformMap::to_original({0, 1}), (IVec2{3, 1}));
    for (int64_t x = -4; x <= 4; x++) {
        for (int64_t y = -4; y <= 4; y++) {
            ASSERT_EQ(TransformMap::to_transformed(TransformMap::to_original({x, y})), (IVec2{x, y}));
        }
    }
}

TEST(ne3n_family, pairing_matrix_and_weights) {
    for (auto [c, d] : std::vector<std::pair<Ne3nCase, int>>{{Ne3nCase::A, 6}, {Ne3nCase::B1, 8}, {Ne3nCase::B2, 4}}) {
        auto f = ne3n_family(c, d);
        auto code = build_family_code(f);
        auto rep = verify_logicals(code, f.xs, f.zs);
        ASSERT_TRUE(rep.ok()) << f.name;
        ASSERT_TRUE(matches_outside_mask(rep.m, ne3n_pairing())) << f.name;
        ASSERT_EQ(rep.x_weights, f.stated_weights);
        ASSERT_EQ(rep.z_weights, f.stated_weights);
    }
    ASSERT_THROW(ne3n_family(Ne3nCase::A, 4), BadDistanceClass);
    ASSERT_THROW(ne3n_family(Ne3nCase::B1, 6), BadDistanceClass);
}

TEST(ne3n_family, horizontal_shift_gives_second_operator) {
    auto f = ne3n_family(Ne3nCase::A, 10);
    auto code = build_family_code(f);
    ASSERT_EQ(code.params_str(), "[[180,4]]");
    auto shifted = f.xs[0].shifted(TransformMap::to_original({-1, 0}));
    ASSERT_TRUE(stabilizer_equivalent(code, shifted, f.xs[1]));
    ASSERT_FALSE(stabilizer_equivalent(code, f.xs[0], f.xs[1]));
}

TEST(n2e2n2_family, matrix_outside_unspecified_entries) {
    auto f = n2e2n2_family(6);
    auto code = build_family_code(f);
    ASSERT_EQ(code.params_str(), "[[144,6]]");
    auto rep = verify_logicals(code, f.xs, f.zs);
    ASSERT_TRUE(rep.ok());
    ASSERT_EQ(rep.x_weights, f.stated_weights);
    // Every displayed entry but (5,6) is reproduced.
    auto expected = n2e2n2_pairing();
    expected[4][5] = 1;
    ASSERT_TRUE(matches_outside_mask(rep.m, expected, unspecified_mask(n2e2n2_pairing())));
}

TEST(n2e3n2_family, both_families) {
    auto f1 = n2e3n2_family(1, 4);
    ASSERT_EQ(canonical_parallelogram(f1.par), canonical_parallelogram(Parallelogram{{12, 0}, {6, 8}}));
    auto f2 = n2e3n2_family(2, 6);
    ASSERT_EQ(canonical_parallelogram(f2.par), canonical_parallelogram(Parallelogram{{18, 0}, {0, 24}}));
    for (const auto &f : {f1, f2}) {
        auto code = build_family_code(f);
        auto rep = verify_logicals(code, f.xs, f.zs);
        ASSERT_TRUE(rep.ok()) << f.name;
        ASSERT_TRUE(matches_outside_mask(rep.m, n2e3n2_pairing())) << f.name;
        ASSERT_EQ(rep.x_weights, f.stated_weights) << f.name;
    }
}

TEST(verify_logicals, detects_stabilizer_and_non_commuting_operators) {
    auto f = ne3n_family(Ne3nCase::B1, 4);
    auto code = build_family_code(f);
    const auto &g = code.generators[code.x_rows[0]];
    PauliOperator stab{Basis::X, g.support};
    auto xs = f.xs;
    xs[0] = stab;
    auto rep = verify_logicals(code, xs, f.zs);
    ASSERT_FALSE(rep.nontrivial);
    ASSERT_FALSE(rep.ok());
    PauliOperator single{Basis::X, {f.xs[0].support[0]}};
    xs[0] = single;
    ASSERT_FALSE(verify_logicals(code, xs, f.zs).commute);
}

TEST(literal_instances, shipped_file) {
    auto rows = load_literal_instances(default_family3_path());
    ASSERT_EQ(rows.size(), 3u);
    for (const auto &r : rows) {
        auto code = build_code(r.seq, Layout::standard(1), r.par);
        ASSERT_EQ((int)code.n, r.n);
        ASSERT_EQ((int)code.k, r.k);
    }
    ASSERT_THROW(load_literal_instances("/nonexistent/file.csv"), std::runtime_error);
}
