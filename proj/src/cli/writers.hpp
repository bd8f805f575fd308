#pragma once

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "json.hpp"

namespace isb::cli {

/// Shortest-round-trip decimal with 17 significant digits, locale free.
std::string fmt17(double v);

std::uint64_t fnv1a64(const std::string& bytes);
std::string fnv1a64_hex(const std::string& bytes);

std::string iso8601_now();

/// Collects output files of one command run and finishes with an
/// atomically renamed manifest.json recording the config echo, code
/// version, timestamps and per-output checksums.
class OutputSet {
 public:
  OutputSet(const std::filesystem::path& outdir, std::string command,
            nlohmann::json config_echo);

  void write_text(const std::string& filename, const std::string& content);
  void write_json(const std::string& filename, const nlohmann::json& j);
  void finalize();

  const std::filesystem::path& dir() const { return dir_; }

 private:
  std::filesystem::path dir_;
  std::string command_;
  nlohmann::json config_;
  std::string started_;
  nlohmann::json outputs_ = nlohmann::json::array();
};

}  // namespace isb::cli
