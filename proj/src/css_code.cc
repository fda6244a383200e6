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

#include <algorithm>
#include <atomic>
#include <future>
#include <mutex>
#include <numeric>
#include <random>
#include <sstream>
#include <unordered_map>

namespace dircode {

Torus::Torus(const Parallelogram &p) : par_(p), hnf_(p.lattice()), points_(fundamental_domain(p)) {
    slot_to_point_.assign(points_.size(), 0);
    point_to_data_.assign(points_.size(), -1);
    point_to_ancilla_.assign(points_.size(), -1);
    for (uint32_t k = 0; k < points_.size(); k++) {
        slot_to_point_[slot(points_[k])] = k;
        if (sublattice_parity(points_[k]) == Sublattice::Data) {
            point_to_data_[k] = (int)data_.size();
            data_.push_back(points_[k]);
        } else {
            point_to_ancilla_[k] = (int)ancillas_.size();
            ancillas_.push_back(points_[k]);
        }
    }
}

size_t Torus::slot(IVec2 v) const {
    IVec2 r = hnf_reduce(hnf_, v);
    return (size_t)(r.y * hnf_.basis[0].x + r.x);
}

uint32_t Torus::point_index(IVec2 v) const {
    return slot_to_point_[slot(v)];
}

IVec2 Torus::reduce(IVec2 v) const {
    return points_[point_index(v)];
}

int Torus::data_index(IVec2 v) const {
    return point_to_data_[point_index(v)];
}

int Torus::ancilla_index(IVec2 v) const {
    return point_to_ancilla_[point_index(v)];
}

std::string WrapReport::str() const {
    if (ok) {
        return "ok";
    }
    std::string out = "violated:";
    for (const auto &v : violated) {
        out += " (" + v + ")";
    }
    return out;
}

WrapReport check_wrap(const DirectionSequence &seq, const Layout &layout, const Parallelogram &p) {
    if (p.det() == 0) {
        throw DegenerateParallelogram("Parallelogram " + p.str() + " has zero determinant.");
    }
    auto ds = delta_sets(seq);
    if (contains_zero(ds)) {
        throw ZeroDelta("Sequence " + seq.str() + " visits a data qubit twice.");
    }
    auto k = p.lattice();
    WrapReport report;
    auto mark = [&](const char *c) {
        report.ok = false;
        if (std::find(report.violated.begin(), report.violated.end(), c) == report.violated.end()) {
            report.violated.push_back(c);
        }
    };

    // (i) A lattice vector with odd coordinate sum identifies data sites with ancilla sites.
    for (auto v : {p.v1, p.v2}) {
        if (((v.x + v.y) & 1) != 0) {
            mark("i");
        }
    }
    // (ii) The layout must be invariant under the lattice.
    for (auto rep : layout.ancilla_representatives()) {
        for (auto v : {p.v1, p.v2}) {
            IVec2 shifted = rep + v;
            if (sublattice_parity(shifted) == Sublattice::Ancilla && layout.value(shifted) != layout.value(rep)) {
                mark("ii");
            }
        }
    }
    // (iii) No stabilizer touches the same torus qubit twice.
    for (auto d : ds.all) {
        if (lattice_contains(k, d)) {
            mark("iii");
        }
    }
    // (iv) Overlaps on the torus are exactly those on the plane.
    for (auto u : ds.all) {
        for (auto w : ds.all) {
            for (auto s : {u - w, u + w}) {
                if (!s.is_zero() && lattice_contains(k, s)) {
                    mark("iv");
                }
            }
        }
    }
    std::sort(report.violated.begin(), report.violated.end(), [](const std::string &a, const std::string &b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    return report;
}

std::string CssCode::params_str() const {
    return "[[" + std::to_string(n) + "," + std::to_string(k) + "]]";
}

CssCode build_code(const DirectionSequence &seq, const Layout &layout, const Parallelogram &p, BuildOptions options) {
    if (options.require_valid) {
        auto wrap = check_wrap(seq, layout, p);
        bool only_iv = wrap.violated.size() == 1 && wrap.violated[0] == "iv";
        if (!wrap.ok && (options.require_plane_overlaps || !only_iv)) {
            throw WrapViolation(wrap, "Cannot wrap " + seq.str() + " on " + p.str() + ": " + wrap.str());
        }
        if (!theorem1_valid(seq, layout)) {
            throw WrapViolation(wrap, "Layout " + layout.name() + " is not valid for " + seq.str() + ".");
        }
    }
    CssCode code;
    code.seq = seq;
    code.layout = layout;
    code.par = p;
    code.torus = Torus(p);
    const auto &torus = code.torus;
    code.n = torus.data().size();
    auto offsets = seq.support_offsets();
    for (auto a : torus.ancillas()) {
        StabilizerGenerator g;
        g.anchor = a;
        g.pauli = layout.value(a);
        for (auto off : offsets) {
            IVec2 q = torus.reduce(a + off);
            g.support.push_back(q);
            g.qubits.push_back(torus.data_index(q));
        }
        (g.pauli == Basis::X ? code.x_rows : code.z_rows).push_back((int)code.generators.size());
        code.generators.push_back(std::move(g));
    }
    code.hx = GF2Matrix(code.x_rows.size(), code.n);
    code.hz = GF2Matrix(code.z_rows.size(), code.n);
    for (int pass = 0; pass < 2; pass++) {
        const auto &rows = pass == 0 ? code.x_rows : code.z_rows;
        auto &m = pass == 0 ? code.hx : code.hz;
        for (size_t r = 0; r < rows.size(); r++) {
            for (int q : code.generators[rows[r]].qubits) {
                m.row(r).flip(q);
            }
        }
    }
    code.commutes = (code.hx * code.hz.transpose()).is_zero();
    if (options.require_valid) {
        for (const auto &g : code.generators) {
            auto sorted = g.qubits;
            std::sort(sorted.begin(), sorted.end());
            if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
                throw CommutationFailure("Generator at " + g.anchor.str() + " repeats a data qubit.");
            }
        }
        if (!code.commutes) {
            throw CommutationFailure("hx * hz^T != 0 for " + seq.str() + " on " + p.str() + ".");
        }
    }
    size_t rx = code.hx.rank();
    size_t rz = code.hz.rank();
    code.k = code.n >= rx + rz ? code.n - rx - rz : 0;
    return code;
}

size_t logical_count(const CssCode &code) {
    return code.n - code.hx.rank() - code.hz.rank();
}

PauliOperator PauliOperator::shifted(IVec2 offset) const {
    PauliOperator out{pauli, {}};
    for (auto s : support) {
        out.support.push_back(s + offset);
    }
    return out;
}

PauliOperator PauliOperator::flipped() const {
    return PauliOperator{flip(pauli), support};
}

BitVec operator_vector(const CssCode &code, const PauliOperator &op) {
    BitVec v(code.n);
    for (auto s : op.support) {
        int d = code.torus.data_index(s);
        if (d < 0) {
            throw std::invalid_argument("Operator support " + s.str() + " is not a data site.");
        }
        v.flip(d);
    }
    return v;
}

static std::vector<BitVec> nontrivial_kernel(const GF2Matrix &kernel_of, const GF2Matrix &modulo) {
    GF2Span span(kernel_of.cols());
    for (const auto &r : modulo.row_vectors()) {
        span.add(r);
    }
    std::vector<BitVec> out;
    for (auto &v : kernel_of.nullspace()) {
        if (span.add(v)) {
            out.push_back(v);
        }
    }
    return out;
}

LogicalBasis logical_basis(const CssCode &code) {
    return LogicalBasis{nontrivial_kernel(code.hz, code.hx), nontrivial_kernel(code.hx, code.hz)};
}

bool commutes_with_stabilizers(const CssCode &code, Basis pauli, const BitVec &v) {
    return !code.checks(flip(pauli)).mul_vec(v).any();
}

size_t distance_upper_bound(const CssCode &code, const std::vector<PauliOperator> &logicals) {
    if (logicals.empty()) {
        throw NotLogical("No logical operators supplied.");
    }
    size_t best = SIZE_MAX;
    for (size_t k = 0; k < logicals.size(); k++) {
        auto v = operator_vector(code, logicals[k]);
        if (!commutes_with_stabilizers(code, logicals[k].pauli, v)) {
            throw NotLogical("Operator " + std::to_string(k) + " anticommutes with a stabilizer.");
        }
        if (code.checks(logicals[k].pauli).in_rowspace(v)) {
            throw NotLogical("Operator " + std::to_string(k) + " is a stabilizer.");
        }
        best = std::min(best, v.popcount());
    }
    return best;
}

uint64_t search_volume(size_t n, size_t max_weight) {
    // The last support element is resolved by a syndrome lookup, so weight t explores C(n, t-1) prefixes.
    uint64_t total = 1;
    long double binom = 1;
    for (size_t t = 1; t <= max_weight; t++) {
        total += (uint64_t)std::min<long double>(binom, 1e18L);
        if (total > (uint64_t)1e18) {
            return UINT64_MAX;
        }
        binom = binom * (long double)(n - (t - 1)) / (long double)t;
    }
    return total;
}

namespace {

struct VecHash {
    size_t operator()(const std::vector<uint64_t> &v) const {
        uint64_t h = 1469598103934665603ull;
        for (auto w : v) {
            h = (h ^ w) * 1099511628211ull;
            h ^= h >> 29;
        }
        return (size_t)h;
    }
};

/// Finds e with |e| = t such that init + e has zero syndrome and a nonzero logical part.
class CompletionSearch {
   public:
    CompletionSearch(const GF2Matrix &checks, const std::vector<BitVec> &partners, BitVec init_syn, BitVec init_log)
        : n_(checks.cols()), init_syn_(std::move(init_syn)), init_log_(std::move(init_log)) {
        auto cols = checks.transpose();
        for (size_t q = 0; q < n_; q++) {
            syn_.push_back(cols.row(q));
            max_col_ = std::max(max_col_, syn_.back().popcount());
            BitVec l(partners.size());
            for (size_t i = 0; i < partners.size(); i++) {
                if (partners[i].get(q)) {
                    l.set(i);
                }
            }
            log_.push_back(std::move(l));
            by_syn_[syn_.back().words()].push_back(q);
        }
    }

    size_t n() const {
        return n_;
    }

    /// Searches supports of size t whose smallest element is `first` (t >= 1).
    bool search_from(size_t t, size_t first, std::vector<size_t> &out, std::atomic<uint64_t> &visits,
                     const std::atomic<size_t> &cutoff) const {
        std::vector<size_t> picks{first};
        BitVec syn = init_syn_ ^ syn_[first];
        BitVec log = init_log_ ^ log_[first];
        bool found = dfs(t - 1, first + 1, syn, log, picks, visits, cutoff, first);
        if (found) {
            out = picks;
        }
        return found;
    }

    bool trivial_start_is_logical() const {
        return !init_syn_.any() && init_log_.any();
    }

   private:
    bool dfs(size_t remaining, size_t start, BitVec &syn, BitVec &log, std::vector<size_t> &picks,
             std::atomic<uint64_t> &visits, const std::atomic<size_t> &cutoff, size_t first) const {
        visits.fetch_add(1, std::memory_order_relaxed);
        if (remaining == 0) {
            return !syn.any() && log.any();
        }
        if (syn.popcount() > remaining * max_col_) {
            return false;
        }
        if (first > cutoff.load(std::memory_order_relaxed)) {
            return false;
        }
        if (remaining == 1) {
            auto it = by_syn_.find(syn.words());
            if (it == by_syn_.end()) {
                return false;
            }
            for (auto q : it->second) {
                if (q >= start && (log ^ log_[q]).any()) {
                    picks.push_back(q);
                    return true;
                }
            }
            return false;
        }
        for (size_t q = start; q + remaining <= n_; q++) {
            syn ^= syn_[q];
            log ^= log_[q];
            picks.push_back(q);
            if (dfs(remaining - 1, q + 1, syn, log, picks, visits, cutoff, first)) {
                return true;
            }
            picks.pop_back();
            syn ^= syn_[q];
            log ^= log_[q];
        }
        return false;
    }

    size_t n_;
    BitVec init_syn_;
    BitVec init_log_;
    std::vector<BitVec> syn_;
    std::vector<BitVec> log_;
    size_t max_col_ = 0;
    std::unordered_map<std::vector<uint64_t>, std::vector<size_t>, VecHash> by_syn_;
};

/// Runs the weight-t search in parallel over the first support element. Deterministic: the witness
/// with the smallest first element is returned.
std::optional<std::vector<size_t>> search_weight(const CompletionSearch &s, size_t t, int jobs, std::atomic<uint64_t> &visits) {
    std::atomic<size_t> next{0};
    std::atomic<size_t> cutoff{SIZE_MAX};
    std::mutex mu;
    std::optional<std::vector<size_t>> best;
    size_t best_first = SIZE_MAX;
    auto worker = [&]() {
        while (true) {
            size_t first = next.fetch_add(1);
            if (first + t > s.n() || first > cutoff.load()) {
                return;
            }
            std::vector<size_t> out;
            if (s.search_from(t, first, out, visits, cutoff)) {
                std::lock_guard<std::mutex> lock(mu);
                if (first < best_first) {
                    best_first = first;
                    best = out;
                    size_t cur = cutoff.load();
                    while (first < cur && !cutoff.compare_exchange_weak(cur, first)) {
                    }
                }
            }
        }
    };
    jobs = std::max(1, jobs);
    std::vector<std::future<void>> fs;
    for (int k = 1; k < jobs; k++) {
        fs.push_back(std::async(std::launch::async, worker));
    }
    worker();
    for (auto &f : fs) {
        f.get();
    }
    return best;
}

BitVec logical_parities(const std::vector<BitVec> &partners, const BitVec &v) {
    BitVec out(partners.size());
    for (size_t i = 0; i < partners.size(); i++) {
        if (partners[i].dot(v)) {
            out.set(i);
        }
    }
    return out;
}

}  // namespace

DistanceSearch min_logical_completion(const CssCode &code, Basis pauli, const BitVec &start, size_t max_extra,
                                      uint64_t budget, int jobs) {
    if (search_volume(code.n, max_extra) > budget) {
        throw BudgetExceeded("Search to weight " + std::to_string(max_extra) + " on n=" + std::to_string(code.n) +
                             " exceeds the budget of " + std::to_string(budget) + " visits.");
    }
    auto basis = logical_basis(code);
    const auto &partners = pauli == Basis::X ? basis.zs : basis.xs;
    const auto &checks = code.checks(flip(pauli));
    CompletionSearch s(checks, partners, checks.mul_vec(start), logical_parities(partners, start));
    DistanceSearch result;
    result.max_weight = max_extra;
    result.witness_type = pauli;
    std::atomic<uint64_t> visits{0};
    if (s.trivial_start_is_logical()) {
        result.weight = 0;
        return result;
    }
    for (size_t t = 1; t <= max_extra && t <= code.n; t++) {
        auto found = search_weight(s, t, jobs, visits);
        if (found) {
            result.weight = t;
            result.witness = *found;
            break;
        }
    }
    result.visits = visits.load();
    return result;
}

DistanceSearch distance_exact(const CssCode &code, size_t max_weight, uint64_t budget, int jobs) {
    if (2 * search_volume(code.n, max_weight) > budget) {
        throw BudgetExceeded("Distance search to weight " + std::to_string(max_weight) + " on n=" + std::to_string(code.n) +
                             " exceeds the budget of " + std::to_string(budget) + " visits.");
    }
    BitVec zero(code.n);
    DistanceSearch best;
    best.max_weight = max_weight;
    for (Basis b : {Basis::X, Basis::Z}) {
        size_t cap = best.weight ? *best.weight - 1 : max_weight;
        auto r = min_logical_completion(code, b, zero, cap, budget, jobs);
        best.visits += r.visits;
        if (r.weight && (!best.weight || *r.weight < *best.weight)) {
            best.weight = r.weight;
            best.witness = r.witness;
            best.witness_type = b;
        }
    }
    return best;
}

DistanceProbe distance_probe(const CssCode &code, uint64_t iterations, uint64_t seed) {
    std::mt19937_64 rng(seed);
    auto basis = logical_basis(code);
    DistanceProbe result;
    result.upper_bound = code.n;
    result.iterations = iterations;
    for (Basis b : {Basis::X, Basis::Z}) {
        const auto &partners = b == Basis::X ? basis.zs : basis.xs;
        auto kernel = code.checks(flip(b)).nullspace();
        std::vector<size_t> perm(code.n);
        std::iota(perm.begin(), perm.end(), 0);
        for (uint64_t it = 0; it < iterations; it++) {
            std::shuffle(perm.begin(), perm.end(), rng);
            GF2Matrix g(kernel.size(), code.n);
            for (size_t r = 0; r < kernel.size(); r++) {
                for (size_t c = 0; c < code.n; c++) {
                    if (kernel[r].get(perm[c])) {
                        g.set(r, c);
                    }
                }
            }
            auto red = g.rref();
            std::vector<BitVec> words;
            for (size_t r = 0; r < red.rows(); r++) {
                BitVec v(code.n);
                for (auto c : red.row(r).ones()) {
                    v.set(perm[c]);
                }
                words.push_back(std::move(v));
            }
            auto consider = [&](const BitVec &v) {
                size_t w = v.popcount();
                if (w > 0 && w < result.upper_bound && logical_parities(partners, v).any()) {
                    result.upper_bound = w;
                    result.witness_type = b;
                }
            };
            for (size_t i = 0; i < words.size(); i++) {
                consider(words[i]);
                for (size_t j = i + 1; j < words.size(); j++) {
                    consider(words[i] ^ words[j]);
                }
            }
        }
    }
    return result;
}

std::string Rational::str() const {
    return std::to_string(num) + "/" + std::to_string(den);
}

Rational net_encoding_rate(const CssCode &code) {
    int64_t num = (int64_t)code.k;
    int64_t den = 2 * (int64_t)code.n;
    int64_t g = std::gcd(num, den);
    if (g == 0) {
        return {0, 1};
    }
    return {num / g, den / g};
}

std::string to_alist(const GF2Matrix &m) {
    auto t = m.transpose();
    size_t max_col = 0, max_row = 0;
    for (size_t c = 0; c < t.rows(); c++) {
        max_col = std::max(max_col, t.row(c).popcount());
    }
    for (size_t r = 0; r < m.rows(); r++) {
        max_row = std::max(max_row, m.row(r).popcount());
    }
    std::ostringstream out;
    out << m.cols() << " " << m.rows() << "\n" << max_col << " " << max_row << "\n";
    auto weights = [&](const GF2Matrix &mm) {
        for (size_t k = 0; k < mm.rows(); k++) {
            out << (k ? " " : "") << mm.row(k).popcount();
        }
        out << "\n";
    };
    weights(t);
    weights(m);
    auto lists = [&](const GF2Matrix &mm, size_t width) {
        for (size_t k = 0; k < mm.rows(); k++) {
            auto ones = mm.row(k).ones();
            for (size_t j = 0; j < width; j++) {
                out << (j ? " " : "") << (j < ones.size() ? ones[j] + 1 : 0);
            }
            out << "\n";
        }
    };
    lists(t, max_col);
    lists(m, max_row);
    return out.str();
}

GF2Matrix parse_alist(const std::string &text) {
    std::istringstream in(text);
    size_t cols, rows, max_col, max_row;
    if (!(in >> cols >> rows >> max_col >> max_row)) {
        throw std::invalid_argument("Bad alist header.");
    }
    std::vector<size_t> col_w(cols), row_w(rows);
    for (auto &w : col_w) {
        in >> w;
    }
    for (auto &w : row_w) {
        in >> w;
    }
    GF2Matrix m(rows, cols);
    for (size_t c = 0; c < cols; c++) {
        for (size_t j = 0; j < max_col; j++) {
            size_t r;
            in >> r;
            if (r) {
                m.set(r - 1, c);
            }
        }
    }
    GF2Matrix check(rows, cols);
    for (size_t r = 0; r < rows; r++) {
        for (size_t j = 0; j < max_row; j++) {
            size_t c;
            in >> c;
            if (c) {
                check.set(r, c - 1);
            }
        }
    }
    if (!in || !(check == m)) {
        throw std::invalid_argument("Inconsistent alist body.");
    }
    return m;
}

std::string to_dense_text(const GF2Matrix &m) {
    std::string out;
    for (size_t r = 0; r < m.rows(); r++) {
        out += m.row(r).str();
        out.push_back('\n');
    }
    return out;
}

GF2Matrix parse_dense_text(const std::string &text) {
    std::istringstream in(text);
    std::string line;
    std::vector<BitVec> rows;
    size_t cols = 0;
    while (std::getline(in, line)) {
        if (line.empty()) {
            continue;
        }
        if (!rows.empty() && line.size() != cols) {
            throw std::invalid_argument("Ragged dense matrix.");
        }
        cols = line.size();
        BitVec v(cols);
        for (size_t c = 0; c < cols; c++) {
            if (line[c] == '1') {
                v.set(c);
            } else if (line[c] != '0') {
                throw std::invalid_argument("Dense matrix entries must be 0 or 1.");
            }
        }
        rows.push_back(std::move(v));
    }
    return GF2Matrix::from_rows(rows, cols);
}

}  // namespace dircode
