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


#ifndef _DIRCODE_IO_H
#define _DIRCODE_IO_H

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dircode/circuit.h"
#include "dircode/css_code.h"
#include "json.hpp"

namespace dircode {

/// Lowercase hex SHA-256 digest.
std::string sha256_hex(std::string_view data);

std::string read_file(const std::string &path);
/// Writes a file, creating parent directories.
void write_file(const std::string &path, std::string_view content);

inline constexpr const char *MANIFEST_NAME = "manifest.json";
inline constexpr int MANIFEST_FORMAT = 1;

/// Provenance record written next to every artifact.
struct RunManifest {
    std::string command;
    nlohmann::json inputs = nlohmann::json::object();
    std::string layout_convention = LAYOUT_CONVENTION;
    /// "name vN", or "none" for noiseless outputs.
    std::string noise_profile = "none";
    /// File name (relative to the manifest directory) -> SHA-256.
    std::map<std::string, std::string> outputs;
    /// Command-specific metadata.
    nlohmann::json metadata = nlohmann::json::object();

    nlohmann::json to_json() const;
    static RunManifest from_json(const nlohmann::json &j);
};

/// Writes each named file into dir, hashes it into the manifest, then writes the manifest.
void write_artifacts(const std::string &dir, RunManifest manifest, const std::vector<std::pair<std::string, std::string>> &files,
                     const std::string &manifest_name = MANIFEST_NAME);

RunManifest read_manifest(const std::string &dir, const std::string &manifest_name = MANIFEST_NAME);

struct ManifestCheck {
    bool ok = true;
    std::vector<std::string> mismatches;
    std::string str() const;
};

/// Re-hashes every output listed by the manifest in dir.
ManifestCheck verify_manifest(const std::string &dir, const std::string &manifest_name = MANIFEST_NAME);

/// Code metadata: sequence, layout, torus, data index map, generators and logical index lists.
nlohmann::json code_json(const CssCode &code, const std::vector<BitVec> &x_logicals, const std::vector<BitVec> &z_logicals,
                         const std::string &logical_source);

/// A code directory written by write_code_dir.
struct LoadedCode {
    CssCode code;
    std::vector<BitVec> x_logicals;
    std::vector<BitVec> z_logicals;
    nlohmann::json meta;
};

/// Writes hx/hz (alist and dense), code.json and manifest.json.
void write_code_dir(const std::string &dir, const CssCode &code, const std::vector<BitVec> &x_logicals,
                    const std::vector<BitVec> &z_logicals, const std::string &logical_source, const RunManifest &manifest);

class ManifestMismatch : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Verifies the manifest, rebuilds the code from code.json and checks it against the stored matrices.
LoadedCode load_code_dir(const std::string &dir);

}  // namespace dircode

#endif
