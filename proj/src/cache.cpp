#include "ddseq/cache.hpp"

#include <cstdio>

namespace ddseq {

ResultCache::ResultCache(const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  path_ = dir / "ddseq-cache.jsonl";
  const bool fresh = !std::filesystem::exists(path_) || std::filesystem::file_size(path_) == 0;
  bool needs_newline = false;
  if (!fresh) {
    std::ifstream in(path_, std::ios::binary);
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
      needs_newline = in.eof();
      auto j = nlohmann::json::parse(line, nullptr, false);
      if (first) {
        first = false;
        if (j.is_discarded() || j.value("version", 0) != kVersion || j.value("hash", "") != kHashName)
          throw DomainError("cache file " + path_.string() + " has an unknown header");
        continue;
      }
      if (j.is_discarded() || !j.is_object() || !j.contains("key") || !j.contains("value")) continue;
      index_[j["key"].get<std::string>()] = j["value"];
    }
  }
  out_.open(path_, std::ios::app | std::ios::binary);
  if (!out_) throw DomainError("cannot open cache file " + path_.string());
  // A torn last line must not swallow the next record.
  if (needs_newline) out_ << '\n';
  if (fresh) out_ << nlohmann::json{{"format", "ddseq-cache"}, {"version", kVersion}, {"hash", kHashName}}.dump() << '\n';
  out_.flush();
}

std::optional<nlohmann::json> ResultCache::lookup(const std::string& key) const {
  auto it = index_.find(key);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

void ResultCache::store(const std::string& key, const nlohmann::json& value) {
  if (index_.count(key)) return;
  index_[key] = value;
  out_ << nlohmann::json{{"key", key}, {"value", value}}.dump() << '\n';
  out_.flush();
}

std::string poly_hash(const LaurentPoly& f) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a64(f.str())));
  return buf;
}

std::string cache_key(const std::string& poly_hash, const std::string& group, const std::string& op) {
  return poly_hash + "|" + group + "|" + op;
}

}  // namespace ddseq
