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

#include <algorithm>
#include <future>
#include <sstream>

namespace dircode {

static Basis standard_value(int number, IVec2 a) {
    switch (number) {
        case 1:
            return pos_mod(a.y, 2) == 0 ? Basis::X : Basis::Z;
        case 2:
            return pos_mod(a.x - a.y, 4) == 1 ? Basis::X : Basis::Z;
        default:
            return pos_mod(a.x + a.y, 4) == 1 ? Basis::X : Basis::Z;
    }
}

Layout Layout::standard(int number) {
    Layout out;
    switch (number) {
        case 1:
            out.period_ = span_hnf(std::vector<IVec2>{{2, 0}, {0, 2}});
            break;
        case 2:
            out.period_ = span_hnf(std::vector<IVec2>{{1, 1}, {2, -2}});
            break;
        case 3:
            out.period_ = span_hnf(std::vector<IVec2>{{1, -1}, {2, 2}});
            break;
        default:
            throw std::invalid_argument("Standard layouts are numbered 1, 2, 3.");
    }
    out.kind_ = static_cast<Kind>(number);
    out.name_ = "Layout" + std::to_string(number);
    for (auto r : out.ancilla_representatives()) {
        out.table_[r] = standard_value(number, r);
    }
    return out;
}

Layout Layout::uniform(Basis b) {
    return custom({{1, 1}, {1, -1}}, {{IVec2{1, 0}, b}}, std::string("uniform-") + to_char(b));
}

Layout Layout::custom(const std::vector<IVec2> &period, const std::map<IVec2, Basis> &types, std::string name) {
    Layout out;
    out.name_ = std::move(name);
    out.period_ = span_hnf(period);
    if (out.period_.rank != 2) {
        throw std::invalid_argument("A layout period lattice must have rank 2.");
    }
    for (auto v : period) {
        if (((v.x + v.y) & 1) != 0) {
            throw std::invalid_argument("Layout period vectors must have even coordinate sum.");
        }
    }
    for (const auto &[site, b] : types) {
        if (sublattice_parity(site) != Sublattice::Ancilla) {
            throw NotAnAncilla("Layout type assigned to data site " + site.str() + ".");
        }
        auto key = hnf_reduce(out.period_, site);
        auto it = out.table_.find(key);
        if (it != out.table_.end() && it->second != b) {
            throw std::invalid_argument("Conflicting layout types for the coset of " + site.str() + ".");
        }
        out.table_[key] = b;
    }
    for (auto r : out.ancilla_representatives()) {
        if (!out.table_.contains(r)) {
            throw std::invalid_argument("Custom layout leaves the coset of " + r.str() + " unassigned.");
        }
    }
    return out;
}

Basis Layout::value(IVec2 a) const {
    if (sublattice_parity(a) != Sublattice::Ancilla) {
        throw NotAnAncilla(a.str() + " is a data site.");
    }
    if (kind_ != Kind::Custom) {
        return standard_value(number(), a);
    }
    return table_.at(hnf_reduce(period_, a));
}

std::vector<IVec2> Layout::ancilla_representatives() const {
    std::vector<IVec2> out;
    for (int64_t y = 0; y < period_.basis[1].y; y++) {
        for (int64_t x = 0; x < period_.basis[0].x; x++) {
            if (sublattice_parity({x, y}) == Sublattice::Ancilla) {
                out.push_back({x, y});
            }
        }
    }
    return out;
}

bool Layout::has_both_types() const {
    bool x = false, z = false;
    for (auto r : ancilla_representatives()) {
        (value(r) == Basis::X ? x : z) = true;
    }
    return x && z;
}

Basis layout_value(const Layout &layout, IVec2 a) {
    return layout.value(a);
}

static DeltaSets checked_deltas(const DirectionSequence &seq) {
    auto ds = delta_sets(seq);
    if (contains_zero(ds)) {
        throw ZeroDelta("Sequence " + seq.str() + " visits a data qubit twice.");
    }
    return ds;
}

bool theorem1_valid(const DirectionSequence &seq, const Layout &layout) {
    auto ds = checked_deltas(seq);
    auto span = span_hnf(ds.odd);
    // The layout is periodic, so shifting every coset representative by every generator of the span
    // covers the whole (infinite) constancy condition.
    for (auto rep : layout.ancilla_representatives()) {
        Basis b = layout.value(rep);
        for (auto g : span.vectors()) {
            if (layout.value(rep + g) != b) {
                return false;
            }
        }
    }
    return true;
}

bool pairwise_conditions_valid(const DirectionSequence &seq, const Layout &layout) {
    checked_deltas(seq);
    auto offsets = seq.support_offsets();
    const int64_t w = (int64_t)offsets.size();
    const int64_t window = 4 * w;
    for (auto a : layout.ancilla_representatives()) {
        Basis ba = layout.value(a);
        for (int64_t ty = -window; ty <= window; ty++) {
            for (int64_t tx = -window; tx <= window; tx++) {
                if (((tx + ty) & 1) != 0 || (tx == 0 && ty == 0)) {
                    continue;
                }
                IVec2 a2 = a + IVec2{tx, ty};
                for (int64_t j = 0; j < w; j++) {
                    if (a + offsets[j] == a2 + offsets[j]) {
                        return false;
                    }
                }
                if (layout.value(a2) == ba) {
                    continue;
                }
                int earlier = 0, later = 0;
                for (int64_t i = 0; i < w; i++) {
                    for (int64_t j = 0; j < w; j++) {
                        if (a + offsets[i] == a2 + offsets[j]) {
                            (i < j ? earlier : later) += 1;
                        }
                    }
                }
                if ((earlier & 1) || (later & 1)) {
                    return false;
                }
            }
        }
    }
    return true;
}

std::vector<int> valid_standard_layouts(const DirectionSequence &seq) {
    std::vector<int> out;
    for (int k = 1; k <= 3; k++) {
        auto layout = Layout::standard(k);
        if (layout.has_both_types() && theorem1_valid(seq, layout)) {
            out.push_back(k);
        }
    }
    return out;
}

ConnectivityClass connectivity_class(const DirectionSequence &seq) {
    checked_deltas(seq);
    const int64_t w = (int64_t)seq.size();
    const int64_t radius = 2 * w + 2;
    std::set<std::pair<IVec2, IVec2>> edges;
    auto add_edge = [&](IVec2 p, IVec2 q) {
        edges.insert(p < q ? std::make_pair(p, q) : std::make_pair(q, p));
    };
    for (int64_t y = -radius; y <= radius; y++) {
        for (int64_t x = -radius; x <= radius; x++) {
            IVec2 pos{x, y};
            if (sublattice_parity(pos) != Sublattice::Ancilla) {
                continue;
            }
            for (auto d : seq.steps()) {
                add_edge(pos, pos + to_vec(d));
                pos += to_vec(d);
            }
            for (size_t j = seq.size(); j-- > 0;) {
                add_edge(pos, pos - to_vec(seq[j]));
                pos = pos - to_vec(seq[j]);
            }
        }
    }
    std::map<IVec2, int> degree;
    for (const auto &[p, q] : edges) {
        degree[p]++;
        degree[q]++;
    }
    ConnectivityClass out;
    for (const auto &[_, k] : degree) {
        out.max_degree = std::max(out.max_degree, k);
    }
    out.grid = out.max_degree <= 3 ? Grid::Hex : Grid::Square;
    return out;
}

std::vector<DirectionSequence> canonical_candidates(int w) {
    std::vector<DirectionSequence> out;
    if (w < 1) {
        return out;
    }
    size_t total = 1;
    for (int k = 1; k < w; k++) {
        total *= 4;
    }
    // Counting in base 4 with the most significant digit first gives lexicographic order.
    for (size_t code = 0; code < total; code++) {
        std::vector<Direction> steps(w, Direction::N);
        size_t c = code;
        for (int k = w - 1; k >= 1; k--) {
            steps[k] = static_cast<Direction>(c & 3);
            c >>= 2;
        }
        auto first_other = std::find_if(steps.begin(), steps.end(), [](Direction d) {
            return d != Direction::N;
        });
        if (first_other == steps.end() || *first_other != Direction::E) {
            continue;
        }
        out.emplace_back(std::move(steps));
    }
    return out;
}

static std::optional<SequenceReport> classify(const DirectionSequence &seq) {
    if (contains_zero(delta_sets(seq))) {
        return std::nullopt;
    }
    auto layouts = valid_standard_layouts(seq);
    if (layouts.empty()) {
        return std::nullopt;
    }
    return SequenceReport{seq, layouts, connectivity_class(seq)};
}

std::vector<SequenceReport> enumerate_sequences(int w, int jobs) {
    auto candidates = canonical_candidates(w);
    jobs = std::max(1, jobs);
    std::vector<std::optional<SequenceReport>> slots(candidates.size());
    std::vector<std::future<void>> workers;
    for (int t = 0; t < jobs; t++) {
        workers.push_back(std::async(std::launch::async, [&, t]() {
            for (size_t k = t; k < candidates.size(); k += jobs) {
                slots[k] = classify(candidates[k]);
            }
        }));
    }
    for (auto &f : workers) {
        f.get();
    }
    std::vector<SequenceReport> out;
    for (auto &s : slots) {
        if (s.has_value()) {
            out.push_back(std::move(*s));
        }
    }
    return out;
}

std::string layouts_str(const std::vector<int> &layouts) {
    std::string out;
    for (size_t k = 0; k < layouts.size(); k++) {
        if (k) {
            out += ",";
        }
        out += std::to_string(layouts[k]);
    }
    return out;
}

std::string format_sequence_table(const std::vector<SequenceReport> &rows) {
    std::ostringstream out;
    out << "Direction   Valid Layouts  Connectivity\n";
    for (const auto &r : rows) {
        std::string s = r.sequence.str();
        std::string l = layouts_str(r.valid_layouts);
        out << s << std::string(s.size() < 12 ? 12 - s.size() : 1, ' ') << l
            << std::string(l.size() < 15 ? 15 - l.size() : 1, ' ') << r.connectivity.str() << "\n";
    }
    return out.str();
}

std::string format_sequence_csv(const std::vector<SequenceReport> &rows) {
    std::ostringstream out;
    out << "direction,valid_layouts,connectivity,max_degree\n";
    for (const auto &r : rows) {
        out << r.sequence.str() << ",\"" << layouts_str(r.valid_layouts) << "\"," << r.connectivity.str() << ","
            << r.connectivity.max_degree << "\n";
    }
    return out.str();
}

}  // namespace dircode
