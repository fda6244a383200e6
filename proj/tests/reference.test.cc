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

#include "gtest/gtest.h"

using namespace dircode;

TEST(sequence_catalog, row_counts) {
    ASSERT_EQ(sequence_catalog(4).size(), 1u);
    ASSERT_EQ(sequence_catalog(5).size(), 3u);
    ASSERT_EQ(sequence_catalog(6).size(), 5u);
    ASSERT_EQ(sequence_catalog(7).size(), 15u);
    for (const auto &r : sequence_catalog()) {
        ASSERT_EQ((int)DirectionSequence::parse(r.seq).size(), r.w) << r.seq;
    }
}

TEST(compare_with_catalog, low_weights_reproduce_listed_rows) {
    for (int w = 4; w <= 6; w++) {
        auto diff = compare_with_catalog(w, enumerate_sequences(w));
        ASSERT_TRUE(diff.listed_rows_reproduced()) << diff.str();
        ASSERT_EQ(diff.matched.size(), sequence_catalog(w).size());
    }
    auto w5 = compare_with_catalog(5, enumerate_sequences(5));
    ASSERT_EQ(w5.extra.size(), 1u);
    ASSERT_EQ(w5.extra[0].sequence.str(), "NENEN");
}

TEST(compare_with_catalog, reports_missing_and_changed_rows) {
    auto rows = enumerate_sequences(6);
    rows.erase(rows.begin());
    for (auto &r : rows) {
        if (r.sequence.str() == "NE4N") {
            r.valid_layouts = {1, 2};
        }
    }
    auto diff = compare_with_catalog(6, rows);
    ASSERT_FALSE(diff.listed_rows_reproduced());
    ASSERT_EQ(diff.mismatched.size(), 1u);
    ASSERT_NE(diff.str().find("differs: listed NE4N"), std::string::npos);
}

TEST(printed_rate, rounding_window) {
    ASSERT_TRUE(printed_rate_matches({1, 18}, 18));
    ASSERT_TRUE(printed_rate_matches({3, 32}, 11));
    ASSERT_TRUE(printed_rate_matches({3, 32}, 10));
    ASSERT_FALSE(printed_rate_matches({3, 32}, 12));
    ASSERT_FALSE(printed_rate_matches({1, 48}, 60));
}

TEST(code_catalog, groups) {
    size_t headline = 0;
    std::vector<std::string> inconsistent;
    for (const auto &r : code_catalog()) {
        headline += r.group == "headline";
        if (r.par.area() != 2 * r.n) {
            inconsistent.push_back(r.seq + " " + r.par.str());
        }
    }
    // The listed n of this row does not match its torus area; the row is kept verbatim.
    ASSERT_EQ(inconsistent, std::vector<std::string>{"NE3N P((24,0),(12,8))"});
    ASSERT_EQ(headline, 10u);
    ASSERT_EQ(code_catalog().size(), 22u);
}

TEST(find_family, matches_listed_tori) {
    auto f = find_family(DirectionSequence::parse("NE3N"), Parallelogram{{18, 0}, {0, 4}});
    ASSERT_TRUE(f.has_value());
    ASSERT_EQ(f->name, "NE3N-b2-d4");
    auto g = find_family(DirectionSequence::parse("N2E3N2"), Parallelogram{{24, 0}, {18, 24}});
    ASSERT_TRUE(g.has_value());
    ASSERT_EQ(g->d, 8);
    ASSERT_FALSE(find_family(DirectionSequence::parse("N2E2N2"), Parallelogram{{-2, 8}, {6, 8}}).has_value());
    ASSERT_FALSE(find_family(DirectionSequence::parse("NE2N"), Parallelogram{{6, 0}, {0, 6}}).has_value());
}

TEST(code_logicals, family_or_kernel) {
    auto code = build_code(DirectionSequence::parse("NE3N"), Layout::standard(1), Parallelogram{{6, -4}, {0, 8}});
    auto l = code_logicals(code);
    ASSERT_EQ(l.source, "family NE3N-b1-d4");
    ASSERT_EQ(l.xs.size(), 4u);
    for (const auto &x : l.xs) {
        ASSERT_EQ(x.popcount(), 4u);
        ASSERT_TRUE(commutes_with_stabilizers(code, Basis::X, x));
    }
    auto toric = build_code(DirectionSequence::parse("NEEN"), Layout::standard(1), Parallelogram{{6, 0}, {0, 6}});
    ASSERT_EQ(code_logicals(toric).source, "kernel basis");
}
