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

#include "manifest.hpp"

#include <openssl/evp.h>

#include <cstdlib>
#include <fstream>
#include <stdexcept>

#include "mbqc/common.hpp"

namespace mbqc::cli {

std::string sha256_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot hash missing file: " + path.string());
  EVP_MD_CTX* ctx = EVP_MD_CTX_new();
  EVP_DigestInit_ex(ctx, EVP_sha256(), nullptr);
  char buf[65536];
  while (in.good()) {
    in.read(buf, sizeof buf);
    EVP_DigestUpdate(ctx, buf, static_cast<std::size_t>(in.gcount()));
  }
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_DigestFinal_ex(ctx, digest, &len);
  EVP_MD_CTX_free(ctx);
  static const char* hex = "0123456789abcdef";
  std::string out;
  out.reserve(2 * len);
  for (unsigned int i = 0; i < len; ++i) {
    out += hex[digest[i] >> 4];
    out += hex[digest[i] & 0xf];
  }
  return out;
}

RunManifest::RunManifest(std::string subcommand, int argc, char** argv,
                         std::filesystem::path out_dir)
    : subcommand_(std::move(subcommand)),
      out_dir_(std::move(out_dir)),
      start_(std::chrono::steady_clock::now()) {
  for (int i = 0; i < argc; ++i) argv_.emplace_back(argv[i]);
  std::filesystem::create_directories(out_dir_);
}

void RunManifest::set_parameter(const std::string& key, nlohmann::json value) {
  parameters_[key] = std::move(value);
}

void RunManifest::add_output(const std::filesystem::path& path) {
  outputs_.push_back(path);
}

int RunManifest::finish(int exit_code) {
  const auto wall = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - start_)
                        .count();
  nlohmann::json j;
  j["subcommand"] = subcommand_;
  j["argv"] = argv_;
  j["parameters"] = parameters_;
  if (seed_) j["seed"] = *seed_;
  j["rng"] = kRngName;
  j["version"] = kVersion;
  j["wall_ms"] = wall;
  j["exit_code"] = exit_code;
  if (const char* threads = std::getenv("MBQC_THREADS"))
    j["mbqc_threads"] = threads;
  nlohmann::json outs = nlohmann::json::array();
  for (const auto& p : outputs_)
    outs.push_back({{"path", p.string()}, {"sha256", sha256_file(p)}});
  j["outputs"] = outs;
  std::ofstream out(out_dir_ / "manifest.json");
  out << j.dump(2) << '\n';
  return exit_code;
}

}  // namespace mbqc::cli
