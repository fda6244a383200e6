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


// Command-line front end: enumerate, build, circuit, report.

#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "dircode/circuit.h"
#include "dircode/css_code.h"
#include "dircode/flow.h"
#include "dircode/io.h"
#include "dircode/layout.h"
#include "dircode/logicals.h"
#include "dircode/reference.h"

using namespace dircode;
namespace fs = std::filesystem;

namespace {

constexpr int MAX_TABLE_WEIGHT = 7;
constexpr uint64_t DEFAULT_SEED = 20260101;

struct Globals {
    uint64_t seed = DEFAULT_SEED;
    int jobs = 1;
    uint64_t budget = DEFAULT_DISTANCE_BUDGET;
    std::vector<std::string> argv;
};

class UsageError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

uint64_t distance_budget() {
    const char *env = std::getenv("DIRCODE_DISTANCE_BUDGET");
    if (env == nullptr || *env == 0) {
        return DEFAULT_DISTANCE_BUDGET;
    }
    uint64_t v = 0;
    auto end = env + std::strlen(env);
    auto [ptr, ec] = std::from_chars(env, end, v);
    if (ec != std::errc() || ptr != end || v == 0) {
        throw UsageError("DIRCODE_DISTANCE_BUDGET must be a positive integer.");
    }
    return v;
}

IVec2 parse_vec(const std::string &text) {
    auto comma = text.find(',');
    if (comma == std::string::npos) {
        throw UsageError("Expected a vector X,Y but got '" + text + "'.");
    }
    IVec2 v;
    auto parse = [&](std::string_view s, int64_t &out) {
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
        if (ec != std::errc() || ptr != s.data() + s.size()) {
            throw UsageError("Expected a vector X,Y but got '" + text + "'.");
        }
    };
    std::string_view sv(text);
    parse(sv.substr(0, comma), v.x);
    parse(sv.substr(comma + 1), v.y);
    return v;
}

std::string command_line(const Globals &g) {
    std::string out;
    for (const auto &a : g.argv) {
        if (!out.empty()) {
            out += ' ';
        }
        out += a;
    }
    return out;
}

std::string distance_line(const CssCode &code, const CodeLogicals &logicals, const Globals &g) {
    std::ostringstream out;
    if (code.k == 0) {
        out << "[[" << code.n << ",0]] encodes no logical qubits";
        return out.str();
    }
    if (logicals.family) {
        size_t bound = distance_upper_bound(code, logicals.family->xs);
        bound = std::min(bound, distance_upper_bound(code, logicals.family->zs));
        out << "[[" << code.n << "," << code.k << ",≤" << bound << "?]] upper bound from " << logicals.source
            << " (not certified)";
        return out.str();
    }
    auto probe = distance_probe(code, 64, g.seed);
    out << "[[" << code.n << "," << code.k << ",≤" << probe.upper_bound
        << "?]] heuristic upper bound from a randomized information-set probe, seed " << g.seed << " (not certified)";
    return out.str();
}

int cmd_enumerate(const Globals &g, int weight, bool force, const std::string &csv) {
    if (weight < 4) {
        throw UsageError("--weight must be at least 4 (the shortest valid sequences have weight 4).");
    }
    if (weight > MAX_TABLE_WEIGHT && !force) {
        throw UsageError("--weight above " + std::to_string(MAX_TABLE_WEIGHT) + " needs --force.");
    }
    auto rows = enumerate_sequences(weight, g.jobs);
    std::cout << format_sequence_table(rows);
    if (weight <= MAX_TABLE_WEIGHT) {
        auto diff = compare_with_catalog(weight, rows);
        std::cout << "\n== diff against the published catalog ==\n" << diff.str();
    } else {
        std::cout << "\n== diff against the published catalog ==\nweight " << weight << ": no published rows\n";
    }
    if (!csv.empty()) {
        auto text = format_sequence_csv(rows);
        auto dir = fs::path(csv).parent_path();
        RunManifest m;
        m.command = command_line(g);
        m.inputs = {{"weight", weight}, {"force", force}};
        auto name = fs::path(csv).filename().string();
        write_artifacts(dir.empty() ? "." : dir.string(), m, {{name, text}}, name + ".manifest.json");
    }
    return 0;
}

int cmd_build(const Globals &g, const std::string &dirs, const std::string &v1, const std::string &v2, int layout_number,
              const std::string &out_dir, int exact_weight, bool skip_overlap_check) {
    if (layout_number < 1 || layout_number > 3) {
        throw UsageError("--layout must be 1, 2 or 3.");
    }
    auto seq = DirectionSequence::parse(dirs);
    Parallelogram par{parse_vec(v1), parse_vec(v2)};
    CssCode code;
    try {
        BuildOptions options;
        options.require_plane_overlaps = !skip_overlap_check;
        code = build_code(seq, Layout::standard(layout_number), par, options);
    } catch (const WrapViolation &e) {
        std::cerr << "error: " << e.what() << "\n";
        if (!e.report.violated.empty()) {
            std::cerr << "violated conditions:";
            for (const auto &v : e.report.violated) {
                std::cerr << " (" << v << ")";
            }
            std::cerr << "\n";
        }
        return 1;
    }
    if (skip_overlap_check && !check_wrap(seq, code.layout, par).ok) {
        std::cout << "warning: wrap condition (iv) not met; run the circuit command to verify the syndrome rounds\n";
    }
    auto logicals = code_logicals(code);
    std::cout << "[[" << code.n << "," << code.k << "]]\n";
    std::cout << distance_line(code, logicals, g) << "\n";
    auto rate = net_encoding_rate(code);
    std::cout << "net encoding rate " << rate.str() << "\n";
    if (exact_weight > 0) {
        auto r = distance_exact(code, (size_t)exact_weight, g.budget, g.jobs);
        if (r.weight) {
            std::cout << "d = " << *r.weight << " (exhaustive, " << to_char(r.witness_type) << "-type witness)\n";
        } else {
            std::cout << "no nontrivial logical of weight ≤ " << exact_weight << " (exhaustive), so d > "
                      << exact_weight << "\n";
        }
    }
    if (!out_dir.empty()) {
        RunManifest m;
        m.command = command_line(g);
        m.inputs = {{"dirs", seq.str()}, {"v1", {par.v1.x, par.v1.y}}, {"v2", {par.v2.x, par.v2.y}}, {"layout", layout_number}};
        m.metadata = {{"n", code.n}, {"k", code.k}, {"logicals", logicals.source}, {"seed", g.seed}};
        write_code_dir(out_dir, code, logicals.xs, logicals.zs, logicals.source, m);
        std::cout << "wrote " << out_dir << "\n";
    }
    return 0;
}

int cmd_circuit(const Globals &g, const std::string &code_dir, int rounds, const std::string &noise, double p, bool iswap,
                const std::string &out_dir) {
    if (rounds < 1) {
        throw UsageError("--rounds must be at least 1.");
    }
    auto loaded = load_code_dir(code_dir);
    const auto &code = loaded.code;
    auto clean = memory_experiment(code, (size_t)rounds, loaded.x_logicals);
    Circuit noiseless = iswap ? compile_to_iswap(clean.circuit) : clean.circuit;
    auto det = check_determinism(noiseless, g.jobs);
    if (!det.ok) {
        std::cerr << "error: noiseless circuit is not deterministic; nothing written.\n" << det.str() << "\n";
        return 1;
    }
    std::cout << det.str() << "\n";
    Circuit out = noiseless;
    std::string noise_tag = "none";
    if (!noise.empty()) {
        auto profile = NoiseProfile::load(noise == "si1000" ? default_noise_profile_path() : noise);
        out = add_noise(noiseless, profile, p);
        noise_tag = profile.name + " v" + std::to_string(profile.version);
        std::cout << "noise " << profile.str() << " at p=" << p << "\n";
    }
    auto text = to_stim_text(out);
    if (out_dir.empty()) {
        std::cout << text;
        return 0;
    }
    RunManifest m;
    m.command = command_line(g);
    auto code_manifest = read_file((fs::path(code_dir) / MANIFEST_NAME).string());
    m.inputs = {{"code_dir", code_dir},
                {"code_manifest_sha256", sha256_hex(code_manifest)},
                {"rounds", rounds},
                {"noise", noise.empty() ? "none" : noise},
                {"p", p},
                {"iswap", iswap}};
    m.noise_profile = noise_tag;
    m.metadata = {{"code", loaded.meta},
                  {"tracker_seed", "identity: role r sits at data_index / ancilla order at the start"},
                  {"detectors", det.detectors},
                  {"observables", det.observables},
                  {"deterministic", true}};
    write_artifacts(out_dir, m, {{"circuit.stim", text}});
    std::cout << "wrote " << (fs::path(out_dir) / "circuit.stim").string() << "\n";
    return 0;
}

int report_tables(const Globals &g) {
    size_t fails = 0;
    std::cout << "== sequence catalog ==\n";
    for (int w = 4; w <= MAX_TABLE_WEIGHT; w++) {
        auto diff = compare_with_catalog(w, enumerate_sequences(w, g.jobs));
        bool ok = diff.listed_rows_reproduced();
        fails += ok ? 0 : 1;
        std::cout << (ok ? "PASS " : "FAIL ") << diff.str();
    }
    std::cout << "\n== code instances ==\n";
    for (const auto &row : code_catalog()) {
        std::ostringstream line;
        bool ok = true;
        line << row.group << " " << row.seq << " " << row.par.str() << " listed [[" << row.n << "," << row.k << "," << row.d
             << "]] rate 1/" << row.rate_den << ": ";
        try {
            auto seq = DirectionSequence::parse(row.seq);
            auto wrap = check_wrap(seq, Layout::standard(1), row.par);
            BuildOptions options;
            options.require_plane_overlaps = false;
            auto code = build_code(seq, Layout::standard(1), row.par, options);
            auto rate = net_encoding_rate(code);
            bool n_ok = (int)code.n == row.n;
            bool k_ok = (int)code.k == row.k;
            bool rate_ok = printed_rate_matches(rate, row.rate_den);
            bool hz_ok = (code.hx * code.hz.transpose()).is_zero();
            ok = wrap.ok && n_ok && k_ok && rate_ok && hz_ok;
            line << "wrap " << wrap.str() << ", built [[" << code.n << "," << code.k << "]] rate " << rate.str() << " n " << (n_ok ? "ok" : "FAIL")
                 << ", k " << (k_ok ? "ok" : "FAIL") << ", rate " << (rate_ok ? "ok" : "FAIL") << ", hx*hz^T "
                 << (hz_ok ? "ok" : "FAIL");
            auto fam = find_family(code.seq, code.par);
            if (fam) {
                size_t bound = std::min(distance_upper_bound(code, fam->xs), distance_upper_bound(code, fam->zs));
                bool b_ok = (int)bound == row.d;
                ok = ok && b_ok;
                line << ", distance bound " << bound << " from " << fam->name << " " << (b_ok ? "ok" : "FAIL");
            } else {
                line << ", distance bound n/a";
            }
        } catch (const std::exception &e) {
            ok = false;
            line << "error: " << e.what();
        }
        fails += ok ? 0 : 1;
        std::cout << (ok ? "PASS " : "FAIL ") << line.str() << "\n";
    }
    std::cout << "\n" << fails << " failing rows\n";
    return 0;
}

int report_manifest(const std::string &dir) {
    auto check = verify_manifest(dir);
    std::cout << check.str() << "\n";
    return check.ok ? 0 : 1;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Directional CSS codes: enumeration, construction and circuit export."};
    app.require_subcommand(1);
    Globals g;
    for (int k = 0; k < argc; k++) {
        g.argv.push_back(k == 0 ? "dircode" : argv[k]);
    }
    g.jobs = std::max(1u, std::thread::hardware_concurrency());
    app.add_option("--seed", g.seed, "Seed for randomized probes")->capture_default_str();
    app.add_option("--jobs", g.jobs, "Worker threads")->check(CLI::PositiveNumber);

    auto *enumerate = app.add_subcommand("enumerate", "List valid direction sequences of one weight");
    int weight = 0;
    bool force = false;
    std::string csv;
    enumerate->add_option("--weight", weight, "Sequence weight")->required();
    enumerate->add_flag("--force", force, "Allow weights above the published range");
    enumerate->add_option("--csv", csv, "Also write the rows as CSV");

    auto *build = app.add_subcommand("build", "Build a directional code on a torus");
    std::string dirs, v1, v2, out_dir;
    int layout = 1;
    int exact = 0;
    build->add_option("--dirs", dirs, "Direction sequence, e.g. NE3N")->required();
    build->add_option("--v1", v1, "First torus vector X,Y (use --v1=-2,8 for negative X)")->required();
    build->add_option("--v2", v2, "Second torus vector X,Y")->required();
    build->add_option("--layout", layout, "Standard layout 1, 2 or 3")->capture_default_str();
    build->add_option("--out", out_dir, "Output directory for matrices and manifest");
    build->add_option("--exact-distance", exact, "Exhaustively search logicals up to this weight");
    bool skip_overlap = false;
    build->add_flag("--skip-overlap-check", skip_overlap, "Accept a torus that violates only wrap condition (iv)");

    auto *circuit = app.add_subcommand("circuit", "Export an X-memory circuit for a built code");
    std::string code_dir, noise, circuit_out;
    int rounds = 5;
    double p = 0;
    bool iswap = false;
    circuit->add_option("--code", code_dir, "Code directory written by build")->required();
    circuit->add_option("--rounds", rounds, "Syndrome rounds")->capture_default_str();
    circuit->add_option("--noise", noise, "Noise profile: si1000 or a profile JSON path");
    circuit->add_option("--p", p, "Base noise strength")->check(CLI::Range(0.0, 1.0));
    circuit->add_flag("--iswap", iswap, "Compile CXSWAP/CZSWAP to ISWAP with single-qubit gates");
    circuit->add_option("--out", circuit_out, "Output directory (default: print to stdout)");

    auto *report = app.add_subcommand("report", "Reproduction report and manifest checks");
    bool tables = false;
    std::string manifest_dir;
    report->add_flag("--tables", tables, "Rebuild every catalog sequence and code instance");
    report->add_option("--manifest", manifest_dir, "Verify the manifest in a directory");

    CLI11_PARSE(app, argc, argv);
    try {
        g.budget = distance_budget();
        if (enumerate->parsed()) {
            return cmd_enumerate(g, weight, force, csv);
        }
        if (build->parsed()) {
            return cmd_build(g, dirs, v1, v2, layout, out_dir, exact, skip_overlap);
        }
        if (circuit->parsed()) {
            if (!noise.empty() && p <= 0) {
                throw UsageError("--noise needs --p > 0.");
            }
            return cmd_circuit(g, code_dir, rounds, noise, p, iswap, circuit_out);
        }
        if (report->parsed()) {
            if (!tables && manifest_dir.empty()) {
                throw UsageError("report needs --tables or --manifest DIR.");
            }
            int rc = 0;
            if (tables) {
                rc |= report_tables(g);
            }
            if (!manifest_dir.empty()) {
                rc |= report_manifest(manifest_dir);
            }
            return rc;
        }
    } catch (const UsageError &e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
