#include "writers.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <stdexcept>

#include "isb/version.hpp"

namespace isb::cli {

std::string fmt17(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res =
      std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

std::uint64_t fnv1a64(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

std::string fnv1a64_hex(const std::string& bytes) {
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(fnv1a64(bytes)));
  return buf;
}

std::string iso8601_now() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  char buf[32];
  std::tm tm{};
  gmtime_r(&t, &tm);
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

OutputSet::OutputSet(const std::filesystem::path& outdir, std::string command,
                     nlohmann::json config_echo)
    : dir_(outdir),
      command_(std::move(command)),
      config_(std::move(config_echo)),
      started_(iso8601_now()) {
  std::filesystem::create_directories(dir_);
}

void OutputSet::write_text(const std::string& filename, const std::string& content) {
  const auto path = dir_ / filename;
  {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open output file " + path.string());
    out << content;
    if (!out) throw std::runtime_error("write failed for " + path.string());
  }
  outputs_.push_back({{"file", filename}, {"fnv1a64", fnv1a64_hex(content)}});
}

void OutputSet::write_json(const std::string& filename, const nlohmann::json& j) {
  write_text(filename, j.dump(2) + "\n");
}

void OutputSet::finalize() {
  nlohmann::json manifest = {{"command", command_},
                             {"code_version", kVersion},
                             {"config", config_},
                             {"started_at", started_},
                             {"finished_at", iso8601_now()},
                             {"outputs", outputs_}};
  const auto tmp = dir_ / "manifest.json.tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + tmp.string());
    out << manifest.dump(2) << "\n";
  }
  std::filesystem::rename(tmp, dir_ / "manifest.json");
}

}  // namespace isb::cli
