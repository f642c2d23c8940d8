#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <optional>
#include <string>
#include <unordered_map>

#include <json.hpp>

#include "ddseq/laurent.hpp"

namespace ddseq {

/// Append-only JSON-lines store of command results.
///
/// Line 1 is a header naming the schema version and the polynomial hash.
/// Every further line is {"key": ..., "value": ...}. Lines that fail to
/// parse (a partial trailing write) are skipped on load.
class ResultCache {
 public:
  static constexpr int kVersion = 1;
  static constexpr const char* kHashName = "fnv1a64";

  /// Opens or creates <dir>/ddseq-cache.jsonl.
  explicit ResultCache(const std::filesystem::path& dir);

  std::optional<nlohmann::json> lookup(const std::string& key) const;
  void store(const std::string& key, const nlohmann::json& value);
  std::size_t size() const { return index_.size(); }
  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
  std::unordered_map<std::string, nlohmann::json> index_;
  std::ofstream out_;
};

/// Hex FNV-1a 64 of the canonical polynomial text.
std::string poly_hash(const LaurentPoly& f);

/// Cache key: polynomial hash, subgroup serialization ("-" if none), operation tag.
std::string cache_key(const std::string& poly_hash, const std::string& group, const std::string& op);

}  // namespace ddseq
