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


#include "dircode/pauli.h"

#include "gtest/gtest.h"

#include "dircode/circuit.h"

using namespace dircode;

namespace {

LocalPauli lp(const char *text) {
    return LocalPauli::parse(text);
}

CliffordRule identity2() {
    return compose(clifford_rule(CliffordKind::SWAP), clifford_rule(CliffordKind::SWAP));
}

/// A single-qubit rule acting on local qubit q of a pair.
CliffordRule lift(CliffordKind kind, int q) {
    const auto &r = clifford_rule(kind);
    CliffordRule lifted = identity2();
    for (int j = 0; j < 2; j++) {
        LocalPauli img = r.forward[j];
        img.x <<= q;
        img.z <<= q;
        lifted.forward[2 * q + j] = img;
    }
    // Composing with the identity recomputes the inverse table.
    return compose(lifted, identity2());
}

/// Applies the steps in order. A qubit of -1 marks a two-qubit gate.
CliffordRule chain(const std::vector<std::pair<CliffordKind, int>> &steps) {
    CliffordRule out = identity2();
    for (auto [kind, q] : steps) {
        out = compose(out, q < 0 ? clifford_rule(kind) : lift(kind, q));
    }
    return out;
}

}  // namespace

TEST(pauli_string, products_and_phases) {
    auto x = PauliString::parse("X");
    auto z = PauliString::parse("Z");
    auto xz = x;
    xz *= z;
    // XZ = -iY.
    ASSERT_EQ(xz.at(0), 'Y');
    ASSERT_EQ(xz.str(), "-iY");
    auto y = PauliString::parse("Y");
    ASSERT_EQ(y.sign(), 1);
    auto yy = y;
    yy *= y;
    ASSERT_TRUE(yy.is_identity());
    ASSERT_EQ(yy.sign(), 1);
    ASSERT_FALSE(x.commutes(z));
    ASSERT_TRUE(PauliString::parse("XX").commutes(PauliString::parse("ZZ")));
    ASSERT_EQ(PauliString::parse("-X_Z").str(), "-X_Z");
}

TEST(clifford_rule, single_qubit_tables) {
    const auto &h = clifford_rule(CliffordKind::H);
    ASSERT_EQ(h.apply(lp("X")), lp("Z"));
    ASSERT_EQ(h.apply(lp("Z")), lp("X"));
    ASSERT_EQ(h.apply(lp("Y")), lp("-Y"));
    const auto &s = clifford_rule(CliffordKind::S);
    ASSERT_EQ(s.apply(lp("X")), lp("Y"));
    ASSERT_EQ(s.apply_inverse(lp("Y")), lp("X"));
    ASSERT_EQ(clifford_rule(CliffordKind::SDag).apply(lp("X")), lp("-Y"));
    ASSERT_EQ(clifford_rule(CliffordKind::SqrtX).apply(lp("Z")), lp("-Y"));
}

TEST(clifford_rule, two_qubit_tables) {
    const auto &cx = clifford_rule(CliffordKind::CX);
    ASSERT_EQ(cx.apply(lp("X_")), lp("XX"));
    ASSERT_EQ(cx.apply(lp("_Z")), lp("ZZ"));
    const auto &cz = clifford_rule(CliffordKind::CZ);
    ASSERT_EQ(cz.apply(lp("X_")), lp("XZ"));
    const auto &iswap = clifford_rule(CliffordKind::ISWAP);
    ASSERT_EQ(iswap.apply(lp("X_")), lp("ZY"));
    ASSERT_EQ(iswap.apply(lp("Z_")), lp("_Z"));
    const auto &cxswap = clifford_rule(CliffordKind::CXSWAP);
    ASSERT_EQ(cxswap.apply(lp("X_")), lp("XX"));
    ASSERT_EQ(cxswap.apply(lp("_X")), lp("X_"));
    ASSERT_EQ(cxswap.apply(lp("Z_")), lp("_Z"));
    ASSERT_EQ(cxswap.apply(lp("_Z")), lp("ZZ"));
    for (auto k : {CliffordKind::H, CliffordKind::S, CliffordKind::SDag, CliffordKind::SqrtX, CliffordKind::CX, CliffordKind::CZ,
                   CliffordKind::SWAP, CliffordKind::ISWAP, CliffordKind::CXSWAP, CliffordKind::CZSWAP}) {
        const auto &r = clifford_rule(k);
        ASSERT_TRUE(r.is_symplectic()) << clifford_name(k);
        for (int j = 0; j < 2 * r.arity; j++) {
            LocalPauli g;
            if (j % 2 == 0) {
                g.x = 1 << (j / 2);
            } else {
                g.z = 1 << (j / 2);
            }
            ASSERT_EQ(r.apply_inverse(r.apply(g)), g) << clifford_name(k);
        }
    }
}

TEST(clifford_rule, cpswap_is_controlled_pauli_then_swap) {
    auto a = compose(clifford_rule(CliffordKind::CX), clifford_rule(CliffordKind::SWAP));
    auto b = compose(clifford_rule(CliffordKind::CZ), clifford_rule(CliffordKind::SWAP));
    ASSERT_EQ(a.forward, clifford_rule(CliffordKind::CXSWAP).forward);
    ASSERT_EQ(b.forward, clifford_rule(CliffordKind::CZSWAP).forward);
}

TEST(clifford_rule, iswap_decompositions_reproduce_cpswap) {
    auto kind_of = [](GateKind g) {
        switch (g) {
            case GateKind::H:
                return CliffordKind::H;
            case GateKind::S:
                return CliffordKind::S;
            default:
                return CliffordKind::SqrtX;
        }
    };
    for (auto [cp, target] : {std::pair{GateKind::CXSWAP, CliffordKind::CXSWAP}, std::pair{GateKind::CZSWAP, CliffordKind::CZSWAP}}) {
        auto dec = iswap_decomposition(cp);
        std::vector<std::pair<CliffordKind, int>> steps;
        for (int q = 0; q < 2; q++) {
            for (auto g : dec.before[q]) {
                steps.push_back({kind_of(g), q});
            }
        }
        steps.push_back({CliffordKind::ISWAP, -1});
        for (int q = 0; q < 2; q++) {
            for (auto g : dec.after[q]) {
                steps.push_back({kind_of(g), q});
            }
        }
        ASSERT_EQ(chain(steps).forward, clifford_rule(target).forward) << gate_name(cp);
    }
}

TEST(conjugate, acts_on_selected_qubits) {
    auto p = PauliString::parse("_X_");
    conjugate(p, clifford_rule(CliffordKind::CX), 1, 2, false);
    ASSERT_EQ(p.str(), "+_XX");
    conjugate(p, clifford_rule(CliffordKind::CX), 1, 2, true);
    ASSERT_EQ(p.str(), "+_X_");
    conjugate(p, clifford_rule(CliffordKind::H), 1, 0, false);
    ASSERT_EQ(p.str(), "+_Z_");
}
