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

#ifndef _DIRCODE_GF2_H
#define _DIRCODE_GF2_H

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace dircode {

/// A bit-packed vector over the two-element field.
class BitVec {
   public:
    BitVec() = default;
    explicit BitVec(size_t n) : n_(n), words_((n + 63) / 64, 0) {
    }

    size_t size() const {
        return n_;
    }
    bool get(size_t k) const {
        return (words_[k >> 6] >> (k & 63)) & 1;
    }
    void set(size_t k, bool v = true) {
        uint64_t m = uint64_t{1} << (k & 63);
        if (v) {
            words_[k >> 6] |= m;
        } else {
            words_[k >> 6] &= ~m;
        }
    }
    void flip(size_t k) {
        words_[k >> 6] ^= uint64_t{1} << (k & 63);
    }
    BitVec &operator^=(const BitVec &o) {
        for (size_t k = 0; k < words_.size(); k++) {
            words_[k] ^= o.words_[k];
        }
        return *this;
    }
    BitVec operator^(const BitVec &o) const {
        BitVec r = *this;
        r ^= o;
        return r;
    }
    bool operator==(const BitVec &o) const = default;

    size_t popcount() const {
        size_t c = 0;
        for (auto w : words_) {
            c += std::popcount(w);
        }
        return c;
    }
    bool any() const {
        for (auto w : words_) {
            if (w) {
                return true;
            }
        }
        return false;
    }
    /// Parity of the overlap with another vector.
    bool dot(const BitVec &o) const {
        uint64_t acc = 0;
        for (size_t k = 0; k < words_.size(); k++) {
            acc ^= words_[k] & o.words_[k];
        }
        return std::popcount(acc) & 1;
    }
    std::vector<size_t> ones() const;
    std::string str() const;

    const std::vector<uint64_t> &words() const {
        return words_;
    }
    std::vector<uint64_t> &words() {
        return words_;
    }

   private:
    size_t n_ = 0;
    std::vector<uint64_t> words_;
};

/// A dense matrix over the two-element field, stored as bit-packed rows.
class GF2Matrix {
   public:
    GF2Matrix() = default;
    GF2Matrix(size_t rows, size_t cols);
    static GF2Matrix from_rows(const std::vector<BitVec> &rows, size_t cols);
    static GF2Matrix identity(size_t n);

    size_t rows() const {
        return rows_.size();
    }
    size_t cols() const {
        return cols_;
    }
    bool get(size_t r, size_t c) const {
        return rows_[r].get(c);
    }
    void set(size_t r, size_t c, bool v = true) {
        rows_[r].set(c, v);
    }
    const BitVec &row(size_t r) const {
        return rows_[r];
    }
    BitVec &row(size_t r) {
        return rows_[r];
    }
    const std::vector<BitVec> &row_vectors() const {
        return rows_;
    }
    void append_row(const BitVec &v);

    GF2Matrix transpose() const;
    GF2Matrix operator*(const GF2Matrix &o) const;
    BitVec mul_vec(const BitVec &v) const;
    bool is_zero() const;
    bool operator==(const GF2Matrix &o) const = default;

    size_t rank() const;
    /// Basis of {v : M v = 0}.
    std::vector<BitVec> nullspace() const;
    /// Reduced row echelon form and the pivot column of each nonzero row.
    GF2Matrix rref(std::vector<size_t> *pivots = nullptr) const;
    bool in_rowspace(const BitVec &v) const;
    bool invertible() const;

    std::string str() const;

   private:
    size_t cols_ = 0;
    std::vector<BitVec> rows_;
};

/// Incremental membership tests against a growing span.
class GF2Span {
   public:
    explicit GF2Span(size_t cols) : cols_(cols) {
    }
    /// Reduces v against the current basis.
    BitVec reduce(BitVec v) const;
    bool contains(const BitVec &v) const {
        return !reduce(v).any();
    }
    /// Adds v if independent; returns whether it was.
    bool add(const BitVec &v);
    size_t dim() const {
        return basis_.size();
    }

   private:
    size_t cols_;
    std::vector<BitVec> basis_;
    std::vector<size_t> pivots_;
};

}  // namespace dircode

#endif
