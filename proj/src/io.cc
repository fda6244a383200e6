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


#include "dircode/io.h"

#include <openssl/evp.h>

#include <filesystem>
#include <fstream>
#include <sstream>

namespace dircode {

namespace fs = std::filesystem;

std::string sha256_hex(std::string_view data) {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (!EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr)) {
        throw std::runtime_error("SHA-256 failed.");
    }
    static const char *hex = "0123456789abcdef";
    std::string out;
    for (unsigned int k = 0; k < len; k++) {
        out.push_back(hex[digest[k] >> 4]);
        out.push_back(hex[digest[k] & 15]);
    }
    return out;
}

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("Cannot open " + path + ".");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string &path, std::string_view content) {
    fs::path p(path);
    if (p.has_parent_path()) {
        fs::create_directories(p.parent_path());
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw std::runtime_error("Cannot write " + path + ".");
    }
    out.write(content.data(), (std::streamsize)content.size());
}

nlohmann::json RunManifest::to_json() const {
    nlohmann::json j;
    j["format"] = MANIFEST_FORMAT;
    j["command"] = command;
    j["inputs"] = inputs;
    j["layout_convention"] = layout_convention;
    j["noise_profile"] = noise_profile;
    j["outputs"] = outputs;
    j["metadata"] = metadata;
    return j;
}

RunManifest RunManifest::from_json(const nlohmann::json &j) {
    RunManifest m;
    m.command = j.at("command").get<std::string>();
    m.inputs = j.value("inputs", nlohmann::json::object());
    m.layout_convention = j.at("layout_convention").get<std::string>();
    m.noise_profile = j.value("noise_profile", "none");
    m.outputs = j.at("outputs").get<std::map<std::string, std::string>>();
    m.metadata = j.value("metadata", nlohmann::json::object());
    return m;
}

void write_artifacts(const std::string &dir, RunManifest manifest, const std::vector<std::pair<std::string, std::string>> &files,
                     const std::string &manifest_name) {
    fs::create_directories(dir);
    for (const auto &[name, content] : files) {
        write_file((fs::path(dir) / name).string(), content);
        manifest.outputs[name] = sha256_hex(content);
    }
    write_file((fs::path(dir) / manifest_name).string(), manifest.to_json().dump(2) + "\n");
}

RunManifest read_manifest(const std::string &dir, const std::string &manifest_name) {
    auto text = read_file((fs::path(dir) / manifest_name).string());
    return RunManifest::from_json(nlohmann::json::parse(text));
}

std::string ManifestCheck::str() const {
    if (ok) {
        return "manifest ok";
    }
    std::string out = "manifest mismatch:";
    for (const auto &m : mismatches) {
        out += "\n  " + m;
    }
    return out;
}

ManifestCheck verify_manifest(const std::string &dir, const std::string &manifest_name) {
    ManifestCheck check;
    RunManifest m;
    try {
        m = read_manifest(dir, manifest_name);
    } catch (const std::exception &e) {
        check.ok = false;
        check.mismatches.push_back(std::string("unreadable manifest: ") + e.what());
        return check;
    }
    if (m.layout_convention != LAYOUT_CONVENTION) {
        check.ok = false;
        check.mismatches.push_back("layout convention differs: " + m.layout_convention);
    }
    for (const auto &[name, hash] : m.outputs) {
        auto path = (fs::path(dir) / name).string();
        if (!fs::exists(path)) {
            check.ok = false;
            check.mismatches.push_back(name + ": missing");
            continue;
        }
        auto got = sha256_hex(read_file(path));
        if (got != hash) {
            check.ok = false;
            check.mismatches.push_back(name + ": hash " + got + " != recorded " + hash);
        }
    }
    return check;
}

namespace {

nlohmann::json vec_json(IVec2 v) {
    return nlohmann::json::array({v.x, v.y});
}

IVec2 json_vec(const nlohmann::json &j) {
    return {j.at(0).get<int64_t>(), j.at(1).get<int64_t>()};
}

nlohmann::json index_lists(const std::vector<BitVec> &vs) {
    auto out = nlohmann::json::array();
    for (const auto &v : vs) {
        out.push_back(v.ones());
    }
    return out;
}

std::vector<BitVec> from_index_lists(const nlohmann::json &j, size_t n) {
    std::vector<BitVec> out;
    for (const auto &list : j) {
        BitVec v(n);
        for (const auto &k : list) {
            auto q = k.get<size_t>();
            if (q >= n) {
                throw std::invalid_argument("Logical index out of range.");
            }
            v.set(q);
        }
        out.push_back(v);
    }
    return out;
}

}  // namespace

nlohmann::json code_json(const CssCode &code, const std::vector<BitVec> &x_logicals, const std::vector<BitVec> &z_logicals,
                         const std::string &logical_source) {
    if (code.layout.number() == 0) {
        throw std::invalid_argument("Only the standard layouts can be serialized.");
    }
    nlohmann::json j;
    j["sequence"] = code.seq.str();
    j["layout"] = code.layout.number();
    j["layout_convention"] = LAYOUT_CONVENTION;
    j["v1"] = vec_json(code.par.v1);
    j["v2"] = vec_json(code.par.v2);
    j["wrap"] = check_wrap(code.seq, code.layout, code.par).str();
    j["n"] = code.n;
    j["k"] = code.k;
    auto data = nlohmann::json::array();
    for (auto p : code.torus.data()) {
        data.push_back(vec_json(p));
    }
    j["data_index"] = data;
    auto gens = nlohmann::json::array();
    for (const auto &g : code.generators) {
        gens.push_back({{"type", std::string(1, to_char(g.pauli))}, {"anchor", vec_json(g.anchor)}, {"qubits", g.qubits}});
    }
    j["generators"] = gens;
    j["logicals"] = {{"source", logical_source}, {"x", index_lists(x_logicals)}, {"z", index_lists(z_logicals)}};
    return j;
}

void write_code_dir(const std::string &dir, const CssCode &code, const std::vector<BitVec> &x_logicals,
                    const std::vector<BitVec> &z_logicals, const std::string &logical_source, const RunManifest &manifest) {
    auto meta = code_json(code, x_logicals, z_logicals, logical_source);
    write_artifacts(dir, manifest,
                    {
                        {"hx.alist", to_alist(code.hx)},
                        {"hz.alist", to_alist(code.hz)},
                        {"hx.txt", to_dense_text(code.hx)},
                        {"hz.txt", to_dense_text(code.hz)},
                        {"code.json", meta.dump(2) + "\n"},
                    });
}

LoadedCode load_code_dir(const std::string &dir) {
    auto check = verify_manifest(dir);
    if (!check.ok) {
        throw ManifestMismatch(check.str());
    }
    LoadedCode out;
    out.meta = nlohmann::json::parse(read_file((fs::path(dir) / "code.json").string()));
    const auto &j = out.meta;
    if (j.at("layout_convention").get<std::string>() != LAYOUT_CONVENTION) {
        throw ManifestMismatch("code.json uses a different layout convention.");
    }
    auto seq = DirectionSequence::parse(j.at("sequence").get<std::string>());
    Parallelogram par{json_vec(j.at("v1")), json_vec(j.at("v2"))};
    BuildOptions options;
    // A code written despite a violation of (iv) alone is rebuilt the same way.
    options.require_plane_overlaps = j.value("wrap", "ok") == "ok";
    out.code = build_code(seq, Layout::standard(j.at("layout").get<int>()), par, options);
    for (auto name : {"hx", "hz"}) {
        auto stored = parse_alist(read_file((fs::path(dir) / (std::string(name) + ".alist")).string()));
        const auto &built = std::string(name) == "hx" ? out.code.hx : out.code.hz;
        if (!(stored == built)) {
            throw ManifestMismatch(std::string(name) + ".alist does not match the rebuilt code.");
        }
    }
    out.x_logicals = from_index_lists(j.at("logicals").at("x"), out.code.n);
    out.z_logicals = from_index_lists(j.at("logicals").at("z"), out.code.n);
    return out;
}

}  // namespace dircode
