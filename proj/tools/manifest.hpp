// Copyright 2026 The mbqc developers
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

#include <chrono>
#include <filesystem>
#include <nlohmann/json.hpp>
#include <optional>
#include <string>
#include <vector>

namespace mbqc::cli {

std::string sha256_file(const std::filesystem::path& path);

/// Every CLI run emits exactly one manifest.json into the output directory:
/// subcommand, parameters, seed, tool version, wall time and output digests.
/// Timing is the only field allowed to differ between identical runs.
class RunManifest {
 public:
  RunManifest(std::string subcommand, int argc, char** argv,
              std::filesystem::path out_dir);

  void set_seed(std::uint64_t seed) { seed_ = seed; }
  void set_parameter(const std::string& key, nlohmann::json value);
  void add_output(const std::filesystem::path& path);

  const std::filesystem::path& out_dir() const { return out_dir_; }
  std::filesystem::path resolve(const std::string& filename) const {
    return out_dir_ / filename;
  }

  /// Writes manifest.json; returns the exit code unchanged for tail calls.
  int finish(int exit_code);

 private:
  std::string subcommand_;
  std::vector<std::string> argv_;
  std::filesystem::path out_dir_;
  std::optional<std::uint64_t> seed_;
  nlohmann::json parameters_ = nlohmann::json::object();
  std::vector<std::filesystem::path> outputs_;
  std::chrono::steady_clock::time_point start_;
};

}  // namespace mbqc::cli
