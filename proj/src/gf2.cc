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

#include <stdexcept>

namespace dircode {

std::vector<size_t> BitVec::ones() const {
    std::vector<size_t> out;
    for (size_t w = 0; w < words_.size(); w++) {
        uint64_t bits = words_[w];
        while (bits) {
            out.push_back(w * 64 + std::countr_zero(bits));
            bits &= bits - 1;
        }
    }
    return out;
}

std::string BitVec::str() const {
    std::string out(n_, '0');
    for (size_t k = 0; k < n_; k++) {
        if (get(k)) {
            out[k] = '1';
        }
    }
    return out;
}

GF2Matrix::GF2Matrix(size_t rows, size_t cols) : cols_(cols), rows_(rows, BitVec(cols)) {
}

GF2Matrix GF2Matrix::from_rows(const std::vector<BitVec> &rows, size_t cols) {
    GF2Matrix m(0, cols);
    for (const auto &r : rows) {
        m.append_row(r);
    }
    return m;
}

GF2Matrix GF2Matrix::identity(size_t n) {
    GF2Matrix m(n, n);
    for (size_t k = 0; k < n; k++) {
        m.set(k, k);
    }
    return m;
}

void GF2Matrix::append_row(const BitVec &v) {
    if (v.size() != cols_) {
        throw std::invalid_argument("Row length mismatch.");
    }
    rows_.push_back(v);
}

GF2Matrix GF2Matrix::transpose() const {
    GF2Matrix t(cols_, rows());
    for (size_t r = 0; r < rows(); r++) {
        for (auto c : rows_[r].ones()) {
            t.set(c, r);
        }
    }
    return t;
}

GF2Matrix GF2Matrix::operator*(const GF2Matrix &o) const {
    if (cols_ != o.rows()) {
        throw std::invalid_argument("Shape mismatch in GF(2) product.");
    }
    GF2Matrix out(rows(), o.cols());
    for (size_t r = 0; r < rows(); r++) {
        for (auto k : rows_[r].ones()) {
            out.rows_[r] ^= o.rows_[k];
        }
    }
    return out;
}

BitVec GF2Matrix::mul_vec(const BitVec &v) const {
    BitVec out(rows());
    for (size_t r = 0; r < rows(); r++) {
        if (rows_[r].dot(v)) {
            out.set(r);
        }
    }
    return out;
}

bool GF2Matrix::is_zero() const {
    for (const auto &r : rows_) {
        if (r.any()) {
            return false;
        }
    }
    return true;
}

GF2Matrix GF2Matrix::rref(std::vector<size_t> *pivots) const {
    GF2Matrix m = *this;
    std::vector<size_t> piv;
    size_t lead = 0;
    for (size_t c = 0; c < cols_ && lead < m.rows(); c++) {
        size_t p = lead;
        while (p < m.rows() && !m.get(p, c)) {
            p++;
        }
        if (p == m.rows()) {
            continue;
        }
        std::swap(m.rows_[p], m.rows_[lead]);
        for (size_t r = 0; r < m.rows(); r++) {
            if (r != lead && m.get(r, c)) {
                m.rows_[r] ^= m.rows_[lead];
            }
        }
        piv.push_back(c);
        lead++;
    }
    if (pivots) {
        *pivots = piv;
    }
    return m;
}

size_t GF2Matrix::rank() const {
    std::vector<size_t> piv;
    rref(&piv);
    return piv.size();
}

std::vector<BitVec> GF2Matrix::nullspace() const {
    std::vector<size_t> piv;
    GF2Matrix r = rref(&piv);
    std::vector<bool> is_pivot(cols_, false);
    for (auto p : piv) {
        is_pivot[p] = true;
    }
    std::vector<BitVec> out;
    for (size_t free = 0; free < cols_; free++) {
        if (is_pivot[free]) {
            continue;
        }
        BitVec v(cols_);
        v.set(free);
        for (size_t k = 0; k < piv.size(); k++) {
            if (r.get(k, free)) {
                v.set(piv[k]);
            }
        }
        out.push_back(std::move(v));
    }
    return out;
}

bool GF2Matrix::in_rowspace(const BitVec &v) const {
    GF2Span span(cols_);
    for (const auto &r : rows_) {
        span.add(r);
    }
    return span.contains(v);
}

bool GF2Matrix::invertible() const {
    return rows() == cols_ && rank() == cols_;
}

std::string GF2Matrix::str() const {
    std::string out;
    for (const auto &r : rows_) {
        for (size_t c = 0; c < cols_; c++) {
            if (c) {
                out.push_back(' ');
            }
            out.push_back(r.get(c) ? '1' : '0');
        }
        out.push_back('\n');
    }
    return out;
}

BitVec GF2Span::reduce(BitVec v) const {
    for (size_t k = 0; k < basis_.size(); k++) {
        if (v.get(pivots_[k])) {
            v ^= basis_[k];
        }
    }
    return v;
}

bool GF2Span::add(const BitVec &v) {
    BitVec r = reduce(v);
    auto ones = r.ones();
    if (ones.empty()) {
        return false;
    }
    size_t p = ones.front();
    // Keep the basis fully reduced so that reduce() is a single pass.
    for (size_t k = 0; k < basis_.size(); k++) {
        if (basis_[k].get(p)) {
            basis_[k] ^= r;
        }
    }
    basis_.push_back(std::move(r));
    pivots_.push_back(p);
    return true;
}

}  // namespace dircode
