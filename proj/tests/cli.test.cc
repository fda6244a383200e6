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


#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>

#include "gtest/gtest.h"

#include "dircode/circuit.h"
#include "dircode/flow.h"
#include "dircode/io.h"

using namespace dircode;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code = -1;
    std::string out;
};

Run run(const std::string &args) {
    std::string cmd = std::string(DIRCODE_CLI_PATH) + " " + args + " 2>&1";
    Run r;
    FILE *pipe = popen(cmd.c_str(), "r");
    if (pipe == nullptr) {
        return r;
    }
    std::array<char, 4096> buf;
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) {
        r.out.append(buf.data(), got);
    }
    int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string temp_dir(const std::string &name) {
    auto p = fs::temp_directory_path() / ("dircode_cli_" + name + "_" + std::to_string(::getpid()));
    fs::remove_all(p);
    return p.string();
}

size_t count_lines_starting(const std::string &text, const std::string &prefix) {
    size_t n = 0, pos = 0;
    while (pos < text.size()) {
        size_t end = text.find('\n', pos);
        if (text.compare(pos, prefix.size(), prefix) == 0) {
            n++;
        }
        pos = end == std::string::npos ? text.size() : end + 1;
    }
    return n;
}

}  // namespace

TEST(cli_enumerate, weight_ranges) {
    auto w5 = run("enumerate --weight 5");
    ASSERT_EQ(w5.code, 0) << w5.out;
    ASSERT_NE(w5.out.find("weight 5: 3 listed rows reproduced"), std::string::npos) << w5.out;
    for (const char *s : {"NE3N ", "NESEN ", "N2EN2 "}) {
        ASSERT_EQ(count_lines_starting(w5.out, s), 1u) << s;
    }
    auto w4 = run("enumerate --weight 4");
    ASSERT_EQ(w4.code, 0);
    ASSERT_EQ(count_lines_starting(w4.out, "NE2N "), 1u);
    ASSERT_NE(w4.out.find("== diff against the published catalog =="), std::string::npos);
    ASSERT_NE(run("enumerate --weight 3").code, 0);
    ASSERT_NE(run("enumerate --weight 8").code, 0);
}

TEST(cli_enumerate, csv_export) {
    auto dir = temp_dir("csv");
    auto r = run("enumerate --weight 6 --csv " + dir + "/w6.csv");
    ASSERT_EQ(r.code, 0) << r.out;
    auto csv = read_file(dir + "/w6.csv");
    ASSERT_NE(csv.find("N2E2N2"), std::string::npos);
    ASSERT_TRUE(verify_manifest(dir, "w6.csv.manifest.json").ok);
    fs::remove_all(dir);
}

TEST(cli_build, listed_examples) {
    auto a = run("build --dirs NE3N --v1 18,0 --v2 0,4 --layout 1");
    ASSERT_EQ(a.code, 0) << a.out;
    ASSERT_EQ(a.out.rfind("[[36,4]]\n", 0), 0u) << a.out;
    ASSERT_NE(a.out.find("[[36,4,≤4?]]"), std::string::npos);
    auto b = run("build --dirs NE3N --v1 4,0 --v2 0,2");
    ASSERT_NE(b.code, 0);
    ASSERT_NE(b.out.find("(iii)"), std::string::npos) << b.out;
    auto c = run("build --dirs NEEN --v1 6,0 --v2 0,6 --exact-distance 3");
    ASSERT_EQ(c.code, 0) << c.out;
    ASSERT_EQ(c.out.rfind("[[18,2]]\n", 0), 0u);
    ASSERT_NE(c.out.find("d = 3 (exhaustive"), std::string::npos);
    auto d = run("build --dirs N2E2N2 --v1=-2,8 --v2 6,8");
    ASSERT_EQ(d.code, 0) << d.out;
    ASSERT_EQ(d.out.rfind("[[32,6]]\n", 0), 0u);
    ASSERT_EQ(run("build --dirs NE3N --v1 18 --v2 0,4").code, 2);
    ASSERT_NE(run("build --dirs N2E3N2 --v1 12,0 --v2 6,8").code, 0);
    ASSERT_EQ(run("build --dirs N2E3N2 --v1 12,0 --v2 6,8 --skip-overlap-check").code, 0);
}

TEST(cli_build, distance_budget_from_environment) {
    auto r = run("build --dirs NE3N --v1 30,0 --v2 18,12 --exact-distance 6");
    auto limited = std::string("DIRCODE_DISTANCE_BUDGET=1000 ") + DIRCODE_CLI_PATH +
                   " build --dirs NE3N --v1 18,0 --v2 0,4 --exact-distance 3 2>&1";
    FILE *pipe = popen(limited.c_str(), "r");
    ASSERT_NE(pipe, nullptr);
    std::string out;
    std::array<char, 4096> buf;
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) {
        out.append(buf.data(), got);
    }
    int status = pclose(pipe);
    ASSERT_NE(WEXITSTATUS(status), 0);
    ASSERT_NE(out.find("exceeds the budget"), std::string::npos) << out;
    (void)r;
}

TEST(cli_circuit, noiseless_noisy_and_iswap) {
    auto dir = temp_dir("circuit");
    ASSERT_EQ(run("build --dirs NE3N --v1 18,0 --v2 0,4 --layout 1 --out " + dir + "/code").code, 0);
    auto clean = run("circuit --code " + dir + "/code --rounds 5 --out " + dir + "/clean");
    ASSERT_EQ(clean.code, 0) << clean.out;
    ASSERT_NE(clean.out.find("PASS: 180 detectors, 4 observables"), std::string::npos);
    auto c = parse_stim_text(read_file(dir + "/clean/circuit.stim"));
    ASSERT_TRUE(check_determinism(c).ok);
    ASSERT_TRUE(verify_manifest(dir + "/clean").ok);
    auto m = read_manifest(dir + "/clean");
    ASSERT_EQ(m.noise_profile, "none");
    ASSERT_EQ(m.inputs.at("rounds"), 5);

    auto noisy = run("circuit --code " + dir + "/code --rounds 5 --noise si1000 --p 1e-3 --out " + dir + "/noisy");
    ASSERT_EQ(noisy.code, 0) << noisy.out;
    auto text = read_file(dir + "/noisy/circuit.stim");
    ASSERT_NE(text.find("DEPOLARIZE2(0.001)"), std::string::npos);
    ASSERT_NE(text.find("Z_ERROR(0.005)"), std::string::npos);
    ASSERT_EQ(read_manifest(dir + "/noisy").noise_profile, "si1000 v1");

    auto iswap = run("circuit --code " + dir + "/code --rounds 5 --iswap --out " + dir + "/iswap");
    ASSERT_EQ(iswap.code, 0) << iswap.out;
    auto itext = read_file(dir + "/iswap/circuit.stim");
    ASSERT_EQ(itext.find("CXSWAP"), std::string::npos);
    ASSERT_EQ(itext.find("CZSWAP"), std::string::npos);
    ASSERT_NE(itext.find("ISWAP"), std::string::npos);

    ASSERT_NE(run("circuit --code " + dir + "/code --noise si1000").code, 0);
    fs::remove_all(dir);
}

TEST(cli_outputs, byte_identical_reruns) {
    auto a = temp_dir("rerun_a");
    auto b = temp_dir("rerun_b");
    for (const auto &d : {a, b}) {
        ASSERT_EQ(run("build --dirs N2E2N2 --v1 8,0 --v2 0,16 --out " + d + "/code").code, 0);
        ASSERT_EQ(run("circuit --code " + d + "/code --rounds 3 --noise si1000 --p 2e-3 --out " + d + "/circ").code, 0);
    }
    for (const char *f : {"code/hx.alist", "code/hz.txt", "code/code.json", "circ/circuit.stim"}) {
        ASSERT_EQ(read_file(a + "/" + f), read_file(b + "/" + f)) << f;
    }
    fs::remove_all(a);
    fs::remove_all(b);
}

TEST(cli_report, tables_and_manifest) {
    auto r = run("report --tables");
    ASSERT_EQ(r.code, 0);
    ASSERT_NE(r.out.find("PASS headline NE3N P((18,0),(0,4))"), std::string::npos) << r.out;
    ASSERT_NE(r.out.find("PASS further N2E2N2 P((-2,8),(6,8))"), std::string::npos);
    ASSERT_NE(r.out.find("PASS weight 5"), std::string::npos);

    auto dir = temp_dir("report");
    ASSERT_EQ(run("build --dirs NE3N --v1 18,0 --v2 0,4 --out " + dir).code, 0);
    auto ok = run("report --manifest " + dir);
    ASSERT_EQ(ok.code, 0);
    write_file(dir + "/hz.txt", "tampered\n");
    auto bad = run("report --manifest " + dir);
    ASSERT_NE(bad.code, 0);
    ASSERT_NE(bad.out.find("hz.txt: hash"), std::string::npos) << bad.out;
    ASSERT_NE(run("circuit --code " + dir + " --rounds 2").code, 0);
    fs::remove_all(dir);
}
