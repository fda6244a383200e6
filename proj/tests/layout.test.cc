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


#include "dircode/layout.h"

#include "gtest/gtest.h"

using namespace dircode;

TEST(layout, standard_values) {
    auto l1 = Layout::standard(1);
    ASSERT_EQ(l1.value({1, 0}), Basis::X);
    ASSERT_EQ(l1.value({0, 1}), Basis::Z);
    auto l2 = Layout::standard(2);
    ASSERT_EQ(l2.value({1, 0}), Basis::X);
    ASSERT_EQ(l2.value({0, 1}), Basis::Z);
    ASSERT_EQ(l2.value({3, 0}), Basis::Z);
    auto l3 = Layout::standard(3);
    ASSERT_EQ(l3.value({1, 0}), Basis::X);
    ASSERT_EQ(l3.value({0, 1}), Basis::X);
    ASSERT_EQ(l3.value({2, 1}), Basis::Z);
    ASSERT_THROW(l1.value({0, 0}), NotAnAncilla);
    ASSERT_TRUE(l1.has_both_types());
    ASSERT_FALSE(Layout::uniform(Basis::X).has_both_types());
}

TEST(layout, sublattice_validity) {
    auto ne2n = DirectionSequence::parse("NE2N");
    ASSERT_TRUE(theorem1_valid(ne2n, Layout::standard(1)));
    ASSERT_FALSE(theorem1_valid(ne2n, Layout::standard(2)));
    ASSERT_FALSE(theorem1_valid(ne2n, Layout::standard(3)));
    ASSERT_EQ(valid_standard_layouts(DirectionSequence::parse("NE3N")), (std::vector<int>{1, 2, 3}));
    // NESW forces a single Pauli type.
    ASSERT_TRUE(valid_standard_layouts(DirectionSequence::parse("NESW")).empty());
    ASSERT_THROW(theorem1_valid(DirectionSequence::parse("NS"), Layout::standard(1)), ZeroDelta);
}

TEST(layout, sublattice_test_matches_direct_conditions) {
    for (int w = 1; w <= 6; w++) {
        for (const auto &seq : canonical_candidates(w)) {
            for (int l = 1; l <= 3; l++) {
                auto layout = Layout::standard(l);
                try {
                    ASSERT_EQ(theorem1_valid(seq, layout), pairwise_conditions_valid(seq, layout)) << seq.str() << " " << l;
                } catch (const ZeroDelta &) {
                }
            }
        }
    }
}

TEST(layout, connectivity_classes) {
    auto ne3n = connectivity_class(DirectionSequence::parse("NE3N"));
    ASSERT_EQ(ne3n.grid, Grid::Hex);
    ASSERT_EQ(ne3n.max_degree, 3);
    auto n2e2n2 = connectivity_class(DirectionSequence::parse("N2E2N2"));
    ASSERT_EQ(n2e2n2.grid, Grid::Square);
    ASSERT_EQ(n2e2n2.max_degree, 4);
}

TEST(enumerate_sequences, low_weights) {
    auto w4 = enumerate_sequences(4);
    bool has_ne2n = false;
    for (const auto &r : w4) {
        if (r.sequence.str() == "NE2N") {
            has_ne2n = true;
            ASSERT_EQ(r.valid_layouts, std::vector<int>{1});
            ASSERT_EQ(r.connectivity.grid, Grid::Square);
        }
        ASSERT_EQ(r.sequence[0], Direction::N);
    }
    ASSERT_TRUE(has_ne2n);
    auto a = format_sequence_table(enumerate_sequences(6, 1));
    auto b = format_sequence_table(enumerate_sequences(6, 4));
    ASSERT_EQ(a, b);
    ASSERT_NE(format_sequence_csv(w4).find("NE2N"), std::string::npos);
}
