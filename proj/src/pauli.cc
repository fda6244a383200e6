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

#include <bit>
#include <vector>

namespace dircode {

namespace {

const char *SIGN_PREFIX[] = {"+", "+i", "-", "-i"};

LocalPauli single(char p) {
    switch (p) {
        case 'I':
        case '_':
            return {0, 0, 0};
        case 'X':
            return {1, 0, 0};
        case 'Z':
            return {0, 1, 0};
        case 'Y':
            return {1, 1, 1};
        default:
            throw std::invalid_argument(std::string("Not a Pauli character: ") + p);
    }
}

}  // namespace

char PauliString::at(size_t q) const {
    static const char table[] = {'I', 'X', 'Z', 'Y'};
    return table[x.get(q) | (z.get(q) << 1)];
}

void PauliString::mul_single(size_t q, char p) {
    LocalPauli s = single(p);
    phase = (phase + s.phase + 2 * (z.get(q) & s.x)) & 3;
    if (s.x) {
        x.flip(q);
    }
    if (s.z) {
        z.flip(q);
    }
}

size_t PauliString::y_count() const {
    size_t c = 0;
    for (size_t k = 0; k < x.words().size(); k++) {
        c += std::popcount(x.words()[k] & z.words()[k]);
    }
    return c;
}

int PauliString::sign() const {
    int s = (phase - (int)(y_count() & 3) + 4) & 3;
    return s == 0 ? 1 : s == 2 ? -1 : 0;
}

bool PauliString::commutes(const PauliString &o) const {
    size_t c = 0;
    for (size_t k = 0; k < x.words().size(); k++) {
        c += std::popcount((x.words()[k] & o.z.words()[k]) ^ (z.words()[k] & o.x.words()[k]));
    }
    return (c & 1) == 0;
}

PauliString &PauliString::operator*=(const PauliString &o) {
    if (o.size() != size()) {
        throw std::invalid_argument("Pauli strings of different sizes.");
    }
    size_t c = 0;
    for (size_t k = 0; k < x.words().size(); k++) {
        c += std::popcount(z.words()[k] & o.x.words()[k]);
    }
    phase = (phase + o.phase + 2 * (c & 1)) & 3;
    x ^= o.x;
    z ^= o.z;
    return *this;
}

std::string PauliString::str() const {
    int s = (phase - (int)(y_count() & 3) + 4) & 3;
    std::string out = SIGN_PREFIX[s];
    for (size_t q = 0; q < size(); q++) {
        char c = at(q);
        out.push_back(c == 'I' ? '_' : c);
    }
    return out;
}

PauliString PauliString::parse(const std::string &text) {
    size_t k = 0;
    uint8_t ph = 0;
    if (k < text.size() && (text[k] == '+' || text[k] == '-')) {
        ph = text[k] == '-' ? 2 : 0;
        k++;
    }
    if (k < text.size() && text[k] == 'i') {
        ph = (ph + 1) & 3;
        k++;
    }
    PauliString p(text.size() - k);
    for (size_t q = 0; k < text.size(); k++, q++) {
        p.mul_single(q, text[k]);
    }
    p.phase = (p.phase + ph) & 3;
    return p;
}

LocalPauli LocalPauli::operator*(const LocalPauli &o) const {
    uint8_t ph = phase + o.phase + 2 * (std::popcount((unsigned)(z & o.x)) & 1);
    return {(uint8_t)(x ^ o.x), (uint8_t)(z ^ o.z), (uint8_t)(ph & 3)};
}

std::string LocalPauli::str(int arity) const {
    int ys = std::popcount((unsigned)(x & z));
    std::string out = SIGN_PREFIX[(phase - ys + 8) & 3];
    for (int j = 0; j < arity; j++) {
        int v = ((x >> j) & 1) | (((z >> j) & 1) << 1);
        out.push_back("_XZY"[v]);
    }
    return out;
}

LocalPauli LocalPauli::parse(const std::string &text) {
    size_t k = 0;
    LocalPauli out;
    if (k < text.size() && (text[k] == '+' || text[k] == '-')) {
        out.phase = text[k] == '-' ? 2 : 0;
        k++;
    }
    for (int j = 0; k < text.size(); k++, j++) {
        LocalPauli s = single(text[k]);
        s.x <<= j;
        s.z <<= j;
        out = out * s;
    }
    return out;
}

LocalPauli CliffordRule::apply(const LocalPauli &p) const {
    LocalPauli out;
    for (int j = 0; j < arity; j++) {
        if ((p.x >> j) & 1) {
            out = out * forward[2 * j];
        }
        if ((p.z >> j) & 1) {
            out = out * forward[2 * j + 1];
        }
    }
    out.phase = (out.phase + p.phase) & 3;
    return out;
}

LocalPauli CliffordRule::apply_inverse(const LocalPauli &p) const {
    LocalPauli out;
    for (int j = 0; j < arity; j++) {
        if ((p.x >> j) & 1) {
            out = out * backward[2 * j];
        }
        if ((p.z >> j) & 1) {
            out = out * backward[2 * j + 1];
        }
    }
    out.phase = (out.phase + p.phase) & 3;
    return out;
}

static bool local_commute(const LocalPauli &a, const LocalPauli &b) {
    return ((std::popcount((unsigned)(a.x & b.z)) + std::popcount((unsigned)(a.z & b.x))) & 1) == 0;
}

bool CliffordRule::is_symplectic() const {
    int g = 2 * arity;
    std::vector<LocalPauli> gens;
    for (int j = 0; j < arity; j++) {
        gens.push_back({(uint8_t)(1 << j), 0, 0});
        gens.push_back({0, (uint8_t)(1 << j), 0});
    }
    for (int a = 0; a < g; a++) {
        for (int b = 0; b < g; b++) {
            if (local_commute(gens[a], gens[b]) != local_commute(forward[a], forward[b])) {
                return false;
            }
        }
        // Hermitian generators map to Hermitian images.
        int ys = std::popcount((unsigned)(forward[a].x & forward[a].z));
        if (((forward[a].phase - ys) & 1) != 0) {
            return false;
        }
    }
    return true;
}

static void fill_backward(CliffordRule &r) {
    int count = 1 << (2 * r.arity);
    for (int g = 0; g < 2 * r.arity; g++) {
        LocalPauli target{0, 0, 0};
        if (g % 2 == 0) {
            target.x = 1 << (g / 2);
        } else {
            target.z = 1 << (g / 2);
        }
        bool found = false;
        for (int v = 0; v < count && !found; v++) {
            LocalPauli q{(uint8_t)(v & ((1 << r.arity) - 1)), (uint8_t)(v >> r.arity), 0};
            LocalPauli img = r.apply(q);
            if (img.x == target.x && img.z == target.z) {
                q.phase = (4 - img.phase) & 3;
                r.backward[g] = q;
                found = true;
            }
        }
        if (!found) {
            throw std::logic_error("Clifford table is not invertible.");
        }
    }
}

static CliffordRule make_rule(CliffordKind kind, std::initializer_list<const char *> images) {
    CliffordRule r;
    r.kind = kind;
    r.arity = (int)images.size() / 2;
    size_t k = 0;
    for (auto s : images) {
        r.forward[k++] = LocalPauli::parse(s);
    }
    fill_backward(r);
    return r;
}

CliffordRule compose(const CliffordRule &first, const CliffordRule &second) {
    if (first.arity != second.arity) {
        throw std::invalid_argument("Cannot compose rules of different arity.");
    }
    CliffordRule r;
    r.kind = first.kind;
    r.arity = first.arity;
    for (int g = 0; g < 2 * r.arity; g++) {
        r.forward[g] = second.apply(first.forward[g]);
    }
    fill_backward(r);
    return r;
}

static std::vector<CliffordRule> build_rules() {
    std::vector<CliffordRule> rules;
    rules.push_back(make_rule(CliffordKind::H, {"+Z", "+X"}));
    rules.push_back(make_rule(CliffordKind::S, {"+Y", "+Z"}));
    rules.push_back(make_rule(CliffordKind::SDag, {"-Y", "+Z"}));
    rules.push_back(make_rule(CliffordKind::SqrtX, {"+X", "-Y"}));
    rules.push_back(make_rule(CliffordKind::CX, {"+XX", "+Z_", "+_X", "+ZZ"}));
    rules.push_back(make_rule(CliffordKind::CZ, {"+XZ", "+Z_", "+ZX", "+_Z"}));
    rules.push_back(make_rule(CliffordKind::SWAP, {"+_X", "+_Z", "+X_", "+Z_"}));
    rules.push_back(make_rule(CliffordKind::ISWAP, {"+ZY", "+_Z", "+YZ", "+Z_"}));
    // A controlled Pauli followed by a SWAP.
    CliffordRule cxswap = compose(rules[(int)CliffordKind::CX], rules[(int)CliffordKind::SWAP]);
    cxswap.kind = CliffordKind::CXSWAP;
    rules.push_back(cxswap);
    CliffordRule czswap = compose(rules[(int)CliffordKind::CZ], rules[(int)CliffordKind::SWAP]);
    czswap.kind = CliffordKind::CZSWAP;
    rules.push_back(czswap);
    return rules;
}

const CliffordRule &clifford_rule(CliffordKind kind) {
    static const std::vector<CliffordRule> rules = build_rules();
    return rules[(int)kind];
}

const char *clifford_name(CliffordKind kind) {
    static const char *names[] = {"H", "S", "S_DAG", "SQRT_X", "CX", "CZ", "SWAP", "ISWAP", "CXSWAP", "CZSWAP"};
    return names[(int)kind];
}

void conjugate(PauliString &p, const CliffordRule &rule, uint32_t a, uint32_t b, bool inverse) {
    LocalPauli local;
    local.x = p.x.get(a);
    local.z = p.z.get(a);
    if (rule.arity == 2) {
        local.x |= p.x.get(b) << 1;
        local.z |= p.z.get(b) << 1;
    }
    if (!local.x && !local.z) {
        return;
    }
    LocalPauli img = inverse ? rule.apply_inverse(local) : rule.apply(local);
    p.x.set(a, img.x & 1);
    p.z.set(a, img.z & 1);
    if (rule.arity == 2) {
        p.x.set(b, (img.x >> 1) & 1);
        p.z.set(b, (img.z >> 1) & 1);
    }
    p.phase = (p.phase + img.phase) & 3;
}

}  // namespace dircode
