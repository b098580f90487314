#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace shadowlab::cli {

std::string sha256_hex(std::string_view data);
std::string file_sha256(const std::filesystem::path& path);

struct ManifestOutput {
  std::string path;  // "<stdout>" for captured standard output
  std::string sha256;
};

struct RunManifest {
  std::vector<std::string> command;
  unsigned long long seed = 0;
  std::string version;
  std::vector<ManifestOutput> outputs;

  void add_file(const std::filesystem::path& p);
  void add_stdout(std::string_view text);

  std::string to_json(bool pretty = true) const;
  static RunManifest parse(std::string_view text);
};

}  // namespace shadowlab::cli
