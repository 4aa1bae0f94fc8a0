// Copyright 2026 The gadepth Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "gadepth/compare.hpp"
#include "gadepth/error.hpp"
#include "gadepth/parallel.hpp"
#include "gadepth/qasm.hpp"

namespace gadepth {

/// Which compiled files belong to which base circuit:
/// {"bases": [{"name": str, "versions": [{"compiler": str, "file": path}]}]}
/// Relative file paths are resolved against the manifest's directory.
struct Manifest {
  struct Version {
    std::string compiler;
    std::string file;
  };
  struct Base {
    std::string name;
    std::vector<Version> versions;
  };
  std::vector<Base> bases;
};

inline Manifest manifest_from_json(const nlohmann::json& doc,
                                   const std::filesystem::path& base_dir = {}) {
  auto bad = [](const std::string& where, const std::string& msg) {
    return ManifestError("manifest " + where + ": " + msg);
  };
  if (!doc.is_object()) throw bad("/", "expected an object");
  auto bases = doc.find("bases");
  if (bases == doc.end() || !bases->is_array()) {
    throw bad("/bases", "expected an array");
  }
  Manifest out;
  std::set<std::string> seen;
  for (std::size_t i = 0; i < bases->size(); ++i) {
    const std::string where = "/bases/" + std::to_string(i);
    const auto& b = (*bases)[i];
    if (!b.is_object()) throw bad(where, "expected an object");
    auto name = b.find("name");
    if (name == b.end() || !name->is_string() || name->get<std::string>().empty()) {
      throw bad(where + "/name", "expected a non-empty string");
    }
    Manifest::Base base{name->get<std::string>(), {}};
    if (!seen.insert(base.name).second) {
      throw bad(where + "/name", "base '" + base.name + "' listed twice");
    }
    auto versions = b.find("versions");
    if (versions == b.end() || !versions->is_array()) {
      throw bad(where + "/versions", "expected an array");
    }
    std::set<std::string> compilers;
    for (std::size_t k = 0; k < versions->size(); ++k) {
      const std::string vwhere = where + "/versions/" + std::to_string(k);
      const auto& v = (*versions)[k];
      if (!v.is_object()) throw bad(vwhere, "expected an object");
      auto compiler = v.find("compiler");
      auto file = v.find("file");
      if (compiler == v.end() || !compiler->is_string() ||
          compiler->get<std::string>().empty()) {
        throw bad(vwhere + "/compiler", "expected a non-empty string");
      }
      if (file == v.end() || !file->is_string() || file->get<std::string>().empty()) {
        throw bad(vwhere + "/file", "expected a non-empty string");
      }
      const std::string id = compiler->get<std::string>();
      if (!compilers.insert(id).second) {
        throw bad(vwhere + "/compiler", "compiler '" + id + "' listed twice for '" +
                                            base.name + "'");
      }
      std::filesystem::path path = file->get<std::string>();
      if (path.is_relative() && !base_dir.empty()) path = base_dir / path;
      base.versions.push_back({id, path.string()});
    }
    out.bases.push_back(std::move(base));
  }
  return out;
}

inline Manifest load_manifest(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ManifestError("cannot read manifest '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(buf.str());
  } catch (const nlohmann::json::parse_error& e) {
    throw ManifestError("manifest '" + path + "' is not valid JSON: " + e.what());
  }
  return manifest_from_json(doc, std::filesystem::path(path).parent_path());
}

/// Parses every file named by `manifest`. Throws ParseError (QasmError) for
/// the first file that does not parse.
inline Corpus load_corpus(const Manifest& manifest) {
  std::vector<const Manifest::Version*> files;
  for (const auto& b : manifest.bases) {
    for (const auto& v : b.versions) files.push_back(&v);
  }
  auto circuits =
      parallel_map(files.size(), [&](std::size_t i) { return load_qasm(files[i]->file); });

  Corpus out;
  std::size_t next = 0;
  for (const auto& b : manifest.bases) {
    BaseCircuit base{b.name, {}};
    for (const auto& v : b.versions) {
      base.versions.push_back({v.compiler, std::move(circuits[next++]), v.file});
    }
    out.push_back(std::move(base));
  }
  return out;
}

}  // namespace gadepth
