#include "ncp/cache.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <boost/crc.hpp>

namespace ncp {

namespace fs = std::filesystem;

fs::path default_cache_dir() {
  if (const char* d = std::getenv("NCP_CACHE_DIR"); d && *d) return d;
  if (const char* x = std::getenv("XDG_CACHE_HOME"); x && *x) return fs::path(x) / "ncp";
  if (const char* h = std::getenv("HOME"); h && *h) return fs::path(h) / ".cache" / "ncp";
  return fs::temp_directory_path() / "ncp-cache";
}

std::string payload_checksum(const nlohmann::json& payload) {
  const std::string s = payload.dump();
  boost::crc_32_type crc;
  crc.process_bytes(s.data(), s.size());
  char buf[9];
  std::snprintf(buf, sizeof buf, "%08x", static_cast<unsigned>(crc.checksum()));
  return buf;
}

ResultCache::ResultCache(fs::path dir, std::ostream& warn) : dir_(std::move(dir)), warn_(&warn) {}

fs::path ResultCache::path_for(const std::string& key) const { return dir_ / (key + ".json"); }

std::optional<nlohmann::json> ResultCache::load(const std::string& key) {
  const fs::path p = path_for(key);
  std::error_code ec;
  if (!fs::exists(p, ec)) return std::nullopt;
  std::ifstream in(p);
  if (!in) {
    *warn_ << "warning: cannot read cache entry " << p << "; recomputing\n";
    return std::nullopt;
  }
  try {
    const auto entry = nlohmann::json::parse(in);
    if (entry.at("key").get<std::string>() != key || entry.at("checksum").get<std::string>() != payload_checksum(entry.at("payload")))
      throw std::runtime_error("checksum mismatch");
    return entry.at("payload");
  } catch (const std::exception& e) {
    *warn_ << "warning: discarding corrupt cache entry " << p << " (" << e.what() << "); recomputing\n";
    fs::remove(p, ec);
    return std::nullopt;
  }
}

void ResultCache::store(const std::string& key, const nlohmann::json& payload) {
  std::error_code ec;
  fs::create_directories(dir_, ec);
  const fs::path p = path_for(key);
  fs::path tmp = p;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (out) {
      out << nlohmann::json{{"key", key}, {"checksum", payload_checksum(payload)}, {"payload", payload}}.dump() << '\n';
      out.close();
    }
    if (!out) {
      *warn_ << "warning: cache directory " << dir_ << " is not writable; result not cached\n";
      fs::remove(tmp, ec);
      return;
    }
  }
  fs::rename(tmp, p, ec);
  if (ec) {
    *warn_ << "warning: cannot write cache entry " << p << ": " << ec.message() << '\n';
    fs::remove(tmp, ec);
  }
}

}  // namespace ncp
