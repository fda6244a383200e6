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


#include "dircode/css_code.h"

#include "gtest/gtest.h"

using namespace dircode;

namespace {

CssCode make(const char *seq, Parallelogram p, int layout = 1) {
    return build_code(DirectionSequence::parse(seq), Layout::standard(layout), p);
}

}  // namespace

TEST(build_code, toric_example) {
    auto code = make("NEEN", {{6, 0}, {0, 6}});
    ASSERT_EQ(code.n, 18u);
    ASSERT_EQ(code.k, 2u);
    ASSERT_EQ(code.hx.rows() + code.hz.rows(), 18u);
    ASSERT_EQ(net_encoding_rate(code), (Rational{1, 18}));
    auto d = distance_exact(code, 4);
    ASSERT_TRUE(d.weight.has_value());
    ASSERT_EQ(*d.weight, 3u);
}

TEST(build_code, generators_are_well_formed) {
    auto code = make("NE3N", {{18, 0}, {0, 4}});
    ASSERT_TRUE((code.hx * code.hz.transpose()).is_zero());
    ASSERT_EQ(code.hx.rank(), code.hz.rank());
    std::set<std::vector<int>> supports;
    for (const auto &g : code.generators) {
        ASSERT_EQ(g.qubits.size(), 5u);
        std::set<int> distinct(g.qubits.begin(), g.qubits.end());
        ASSERT_EQ(distinct.size(), 5u);
        auto sorted = g.qubits;
        std::sort(sorted.begin(), sorted.end());
        ASSERT_TRUE(supports.insert(sorted).second);
    }
}

TEST(build_code, parameters_of_listed_instances) {
    auto a = make("N2E3N2", {{18, 0}, {12, 16}});
    ASSERT_EQ(a.params_str(), "[[144,12]]");
    auto b = make("NE3N", {{30, 0}, {18, 12}});
    ASSERT_EQ(b.n, 180u);
    ASSERT_EQ(b.k, 4u);
    ASSERT_EQ(net_encoding_rate(b), (Rational{1, 90}));
}

TEST(build_code, wrap_violations_name_conditions) {
    try {
        make("NE3N", {{4, 0}, {0, 2}});
        FAIL() << "expected WrapViolation";
    } catch (const WrapViolation &e) {
        const auto &v = e.report.violated;
        ASSERT_NE(std::find(v.begin(), v.end(), "iii"), v.end());
    }
    auto odd = check_wrap(DirectionSequence::parse("NE3N"), Layout::standard(1), {{3, 0}, {0, 4}});
    ASSERT_FALSE(odd.ok);
    ASSERT_EQ(odd.violated[0], "i");
    ASSERT_THROW(make("NE2N", {{8, 0}, {0, 8}}, 2), WrapViolation);
}

TEST(build_code, overlap_condition_can_be_relaxed) {
    Parallelogram p{{12, 0}, {6, 8}};
    auto seq = DirectionSequence::parse("N2E3N2");
    auto wrap = check_wrap(seq, Layout::standard(1), p);
    ASSERT_EQ(wrap.violated, std::vector<std::string>{"iv"});
    BuildOptions options;
    options.require_plane_overlaps = false;
    auto code = build_code(seq, Layout::standard(1), p, options);
    ASSERT_EQ(code.params_str(), "[[48,12]]");
    ASSERT_TRUE(code.commutes);
}

TEST(build_code, rebasing_preserves_parameters) {
    auto a = make("NE3N", {{12, 0}, {6, 4}});
    auto b = make("NE3N", {{6, -4}, {0, 8}});
    auto c = make("NE3N", {{18, -4}, {24, -8}});
    ASSERT_EQ(a.n, b.n);
    ASSERT_EQ(a.k, b.k);
    ASSERT_EQ(a.k, c.k);
    ASSERT_EQ(a.hx.rank(), c.hx.rank());
}

TEST(logical_basis, commutes_and_pairs) {
    auto code = make("NE3N", {{18, 0}, {0, 4}});
    auto basis = logical_basis(code);
    ASSERT_EQ(basis.xs.size(), code.k);
    ASSERT_EQ(basis.zs.size(), code.k);
    GF2Matrix m(code.k, code.k);
    for (size_t i = 0; i < code.k; i++) {
        ASSERT_TRUE(commutes_with_stabilizers(code, Basis::X, basis.xs[i]));
        ASSERT_TRUE(commutes_with_stabilizers(code, Basis::Z, basis.zs[i]));
        for (size_t j = 0; j < code.k; j++) {
            m.set(i, j, basis.xs[i].dot(basis.zs[j]));
        }
    }
    ASSERT_TRUE(m.invertible());
}

TEST(distance, exact_never_exceeds_upper_bound) {
    auto code = make("NE3N", {{12, 0}, {6, 4}});
    auto probe = distance_probe(code, 50, 7);
    auto exact = distance_exact(code, 4);
    ASSERT_TRUE(exact.weight.has_value());
    ASSERT_EQ(*exact.weight, 4u);
    ASSERT_LE(*exact.weight, probe.upper_bound);
    ASSERT_EQ(distance_probe(code, 50, 7).upper_bound, probe.upper_bound);
}

TEST(distance, budget_is_enforced) {
    auto code = make("NE3N", {{30, 0}, {18, 12}});
    ASSERT_THROW(distance_exact(code, 8, 1000), BudgetExceeded);
    // The empty start plus C(n, t-1) prefixes per weight t.
    ASSERT_EQ(search_volume(10, 1), 2u);
    ASSERT_EQ(search_volume(10, 2), 12u);
    ASSERT_EQ(search_volume(10, 3), 57u);
}

TEST(matrix_text, alist_and_dense_round_trip) {
    auto code = make("NE3N", {{18, 0}, {0, 4}});
    auto alist = to_alist(code.hx);
    ASSERT_EQ(parse_alist(alist), code.hx);
    ASSERT_EQ(to_alist(parse_alist(alist)), alist);
    ASSERT_EQ(parse_dense_text(to_dense_text(code.hz)), code.hz);
    ASSERT_THROW(parse_alist("garbage"), std::invalid_argument);
}

TEST(torus, index_maps) {
    Torus t(Parallelogram{{6, 0}, {0, 6}});
    ASSERT_EQ(t.data().size(), 18u);
    ASSERT_EQ(t.ancillas().size(), 18u);
    ASSERT_EQ(t.data_index({0, 0}), 0);
    ASSERT_EQ(t.data_index({6, 6}), 0);
    ASSERT_EQ(t.data_index({1, 0}), -1);
    ASSERT_EQ(t.ancilla_index({1, 0}), 0);
    ASSERT_EQ(t.data_index({2, 0}), 1);
    ASSERT_EQ(t.data_index({1, 1}), 3);
}
