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

#ifndef _DIRCODE_PAULI_H
#define _DIRCODE_PAULI_H

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "dircode/gf2.h"

namespace dircode {

/// Pauli product i^phase * prod_q X_q^{x_q} Z_q^{z_q}. A Hermitian Y is stored as phase 1 with x=z=1.
struct PauliString {
    BitVec x;
    BitVec z;
    uint8_t phase = 0;

    PauliString() = default;
    explicit PauliString(size_t n) : x(n), z(n) {
    }
    size_t size() const {
        return x.size();
    }
    /// One of 'I', 'X', 'Y', 'Z' for the Hermitian factor on q.
    char at(size_t q) const;
    /// Multiplies a Hermitian single-qubit Pauli onto q from the right.
    void mul_single(size_t q, char p);
    /// Number of Y factors.
    size_t y_count() const;
    /// +1 or -1 when the string is Hermitian under the Y convention, 0 otherwise.
    int sign() const;
    bool is_identity() const {
        return !x.any() && !z.any();
    }
    bool commutes(const PauliString &o) const;
    /// Right multiplication: *this = *this * o.
    PauliString &operator*=(const PauliString &o);
    bool operator==(const PauliString &o) const = default;
    /// "+X_Z" style, '_' for identity.
    std::string str() const;
    static PauliString parse(const std::string &text);
};

/// A Pauli on at most two local qubits, same convention as PauliString. Bit j of x/z is local qubit j.
struct LocalPauli {
    uint8_t x = 0;
    uint8_t z = 0;
    uint8_t phase = 0;
    bool operator==(const LocalPauli &o) const = default;
    LocalPauli operator*(const LocalPauli &o) const;
    std::string str(int arity) const;
    static LocalPauli parse(const std::string &text);
};

enum class CliffordKind { H, S, SDag, SqrtX, CX, CZ, SWAP, ISWAP, CXSWAP, CZSWAP };

class UnknownGate : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// Conjugation table of a Clifford gate: images of X_0, Z_0 (and X_1, Z_1) under U P U^dagger.
struct CliffordRule {
    CliffordKind kind = CliffordKind::H;
    int arity = 1;
    std::array<LocalPauli, 4> forward{};
    std::array<LocalPauli, 4> backward{};

    /// U P U^dagger.
    LocalPauli apply(const LocalPauli &p) const;
    /// U^dagger P U.
    LocalPauli apply_inverse(const LocalPauli &p) const;
    /// True iff the generator images pairwise commute exactly as the generators do.
    bool is_symplectic() const;
};

const CliffordRule &clifford_rule(CliffordKind kind);
const char *clifford_name(CliffordKind kind);

/// Rule of the circuit applying `first` and then `second` to the same qubits.
CliffordRule compose(const CliffordRule &first, const CliffordRule &second);

/// Conjugates the factors of p on qubits (a) or (a, b) through the gate.
void conjugate(PauliString &p, const CliffordRule &rule, uint32_t a, uint32_t b, bool inverse);

}  // namespace dircode

#endif
