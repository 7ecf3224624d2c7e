#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace citemetrics::cli {

std::string sha256_file(const std::filesystem::path& path);

struct FileDigest {
  std::string role;
  std::string path;
  std::string sha256;
};

/// Written next to every command's outputs. Contains nothing that varies
/// between runs (no timestamps, hostnames, or absolute paths beyond what
/// the caller passed), so identical inputs and flags give identical bytes.
struct RunManifest {
  std::string command;
  nlohmann::ordered_json parameters = nlohmann::ordered_json::object();
  std::optional<std::uint64_t> seed;
  std::vector<FileDigest> inputs;
  std::vector<FileDigest> outputs;

  void add_input(std::string role, const std::filesystem::path& path);
  void add_output(std::string role, const std::filesystem::path& path);

  std::string dump() const;
};

}  // namespace citemetrics::cli
