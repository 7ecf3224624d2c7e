#include "cli/manifest.hpp"

#include <array>
#include <fstream>
#include <memory>
#include <stdexcept>

#include <openssl/evp.h>

#ifndef CITEMETRICS_VERSION
#define CITEMETRICS_VERSION "unknown"
#endif

namespace citemetrics::cli {

std::string sha256_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path.string() + "'");

  std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(),
                                                              EVP_MD_CTX_free);
  if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("sha256 initialisation failed");
  }
  std::array<char, 1 << 16> buffer{};
  while (in) {
    in.read(buffer.data(), buffer.size());
    const auto n = in.gcount();
    if (n > 0) EVP_DigestUpdate(ctx.get(), buffer.data(), static_cast<size_t>(n));
  }
  std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
  unsigned int length = 0;
  EVP_DigestFinal_ex(ctx.get(), digest.data(), &length);

  static constexpr char kHex[] = "0123456789abcdef";
  std::string hex;
  hex.reserve(length * 2);
  for (unsigned int i = 0; i < length; ++i) {
    hex.push_back(kHex[digest[i] >> 4]);
    hex.push_back(kHex[digest[i] & 0xf]);
  }
  return hex;
}

void RunManifest::add_input(std::string role,
                            const std::filesystem::path& path) {
  inputs.push_back({std::move(role), path.string(), sha256_file(path)});
}

void RunManifest::add_output(std::string role,
                             const std::filesystem::path& path) {
  outputs.push_back(
      {std::move(role), path.filename().string(), sha256_file(path)});
}

std::string RunManifest::dump() const {
  using nlohmann::ordered_json;
  const auto files = [](const std::vector<FileDigest>& list) {
    ordered_json out = ordered_json::array();
    for (const auto& f : list) {
      out.push_back({{"role", f.role}, {"path", f.path}, {"sha256", f.sha256}});
    }
    return out;
  };
  ordered_json doc;
  doc["command"] = command;
  doc["version"] = CITEMETRICS_VERSION;
  doc["parameters"] = parameters;
  doc["seed"] = seed ? ordered_json(*seed) : ordered_json(nullptr);
  doc["inputs"] = files(inputs);
  doc["outputs"] = files(outputs);
  return doc.dump(2) + "\n";
}

}  // namespace citemetrics::cli
