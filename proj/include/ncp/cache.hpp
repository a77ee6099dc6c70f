#pragma once

#include <filesystem>
#include <optional>
#include <ostream>
#include <string>

#include <json.hpp>

namespace ncp {

/// NCP_CACHE_DIR, else $XDG_CACHE_HOME/ncp, else ~/.cache/ncp.
std::filesystem::path default_cache_dir();

/// One JSON file per key holding {"key", "checksum", "payload"}. Corrupt or
/// unreadable entries are reported on `warn` and treated as misses; write
/// failures are reported and otherwise ignored.
class ResultCache {
 public:
  ResultCache(std::filesystem::path dir, std::ostream& warn);

  const std::filesystem::path& dir() const noexcept { return dir_; }
  std::filesystem::path path_for(const std::string& key) const;

  std::optional<nlohmann::json> load(const std::string& key);
  void store(const std::string& key, const nlohmann::json& payload);

 private:
  std::filesystem::path dir_;
  std::ostream* warn_;
};

/// CRC-32 of the compact dump, as 8 hex digits.
std::string payload_checksum(const nlohmann::json& payload);

}  // namespace ncp
