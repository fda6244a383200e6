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


#include "dircode/gf2.h"

#include "gtest/gtest.h"

using namespace dircode;

namespace {

GF2Matrix from_strings(const std::vector<std::string> &rows) {
    GF2Matrix m(rows.size(), rows[0].size());
    for (size_t r = 0; r < rows.size(); r++) {
        for (size_t c = 0; c < rows[r].size(); c++) {
            m.set(r, c, rows[r][c] == '1');
        }
    }
    return m;
}

}  // namespace

TEST(bitvec, basic_operations) {
    BitVec v(130);
    v.set(0);
    v.set(64);
    v.set(129);
    ASSERT_EQ(v.popcount(), 3u);
    ASSERT_EQ(v.ones(), (std::vector<size_t>{0, 64, 129}));
    BitVec w(130);
    w.set(64);
    ASSERT_TRUE(v.dot(w));
    v ^= w;
    ASSERT_FALSE(v.get(64));
    ASSERT_FALSE(v.dot(w));
}

TEST(gf2_matrix, rank_nullspace_and_rowspace) {
    auto m = from_strings({"1100", "0110", "1010"});
    ASSERT_EQ(m.rank(), 2u);
    auto kernel = m.nullspace();
    ASSERT_EQ(kernel.size(), 2u);
    for (const auto &k : kernel) {
        ASSERT_FALSE(m.mul_vec(k).any());
    }
    BitVec v(4);
    v.set(0);
    v.set(2);
    ASSERT_TRUE(m.in_rowspace(v));
    v.set(3);
    ASSERT_FALSE(m.in_rowspace(v));
}

TEST(gf2_matrix, product_transpose_and_inverse) {
    auto a = from_strings({"10", "11"});
    ASSERT_TRUE(a.invertible());
    ASSERT_EQ(a * a, GF2Matrix::identity(2));
    ASSERT_EQ(a.transpose(), from_strings({"11", "01"}));
    ASSERT_FALSE(from_strings({"11", "11"}).invertible());
    ASSERT_TRUE((from_strings({"11"}) * from_strings({"11"}).transpose()).is_zero());
}

TEST(gf2_span, incremental_membership) {
    GF2Span span(3);
    BitVec a(3), b(3);
    a.set(0);
    a.set(1);
    b.set(1);
    ASSERT_TRUE(span.add(a));
    ASSERT_TRUE(span.add(b));
    ASSERT_FALSE(span.add(a ^ b));
    ASSERT_EQ(span.dim(), 2u);
    BitVec c(3);
    c.set(2);
    ASSERT_FALSE(span.contains(c));
}
