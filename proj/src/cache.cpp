#include <chrono>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "partpat/enumeration.hpp"
#include "partpat/error.hpp"

namespace partpat {

using nlohmann::json;

namespace {

constexpr const char* kFormat = "partpat-count-cache";

std::string now_utc() {
  std::time_t t = std::time(nullptr);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
  return buf;
}

}  // namespace

std::string CountCache::default_path() {
  if (const char* env = std::getenv("PARTPAT_CACHE"); env && *env) return env;
  if (const char* home = std::getenv("HOME"); home && *home) return std::string(home) + "/.cache/partpat/counts.json";
  return "partpat-counts.json";
}

CountCache::CountCache(std::string path) : path_(std::move(path)) {
  std::ifstream in(path_);
  if (!in) {
    created_ = now_utc();
    return;
  }
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ParseError("cache " + path_ + ": " + e.what());
  }
  if (j.value("format", "") != kFormat) throw ParseError("cache " + path_ + ": unknown format");
  if (j.value("version", -1) != kVersion)
    throw ParseError("cache " + path_ + ": unsupported version " + std::to_string(j.value("version", -1)));
  created_ = j.value("created", now_utc());
  for (auto& [pat, row] : j.at("counts").items())
    for (auto& [n, c] : row.items()) counts_[pat][std::stoi(n)] = c.get<count_t>();
  if (j.contains("blocks"))
    for (auto& [pat, row] : j.at("blocks").items())
      for (auto& [n, v] : row.items()) blocks_[pat][std::stoi(n)] = v.get<std::vector<count_t>>();
}

std::optional<count_t> CountCache::get(const std::string& pattern, int n) const {
  std::lock_guard lock(mu_);
  auto it = counts_.find(pattern);
  if (it == counts_.end()) return std::nullopt;
  auto jt = it->second.find(n);
  if (jt == it->second.end()) return std::nullopt;
  return jt->second;
}

std::optional<std::vector<count_t>> CountCache::get_blocks(const std::string& pattern, int n) const {
  std::lock_guard lock(mu_);
  auto it = blocks_.find(pattern);
  if (it == blocks_.end()) return std::nullopt;
  auto jt = it->second.find(n);
  if (jt == it->second.end()) return std::nullopt;
  return jt->second;
}

void CountCache::put(const std::string& pattern, int n, count_t c) {
  std::lock_guard lock(mu_);
  auto& slot = counts_[pattern];
  auto it = slot.find(n);
  if (it != slot.end() && it->second != c) throw InvariantError("cache disagreement for " + pattern + " at n=" + std::to_string(n));
  if (it == slot.end()) {
    slot[n] = c;
    dirty_ = true;
  }
}

void CountCache::put_blocks(const std::string& pattern, int n, const std::vector<count_t>& by_m) {
  std::lock_guard lock(mu_);
  auto& slot = blocks_[pattern];
  if (!slot.count(n)) {
    slot[n] = by_m;
    dirty_ = true;
  }
}

std::size_t CountCache::size() const {
  std::lock_guard lock(mu_);
  std::size_t s = 0;
  for (auto& [p, row] : counts_) s += row.size();
  return s;
}

void CountCache::save() {
  std::lock_guard lock(mu_);
  if (!dirty_) return;
  json j;
  j["format"] = kFormat;
  j["version"] = kVersion;
  j["created"] = created_;
  j["counts"] = json::object();
  for (auto& [pat, row] : counts_) {
    json r = json::object();
    for (auto& [n, c] : row) r[std::to_string(n)] = c;
    j["counts"][pat] = r;
  }
  j["blocks"] = json::object();
  for (auto& [pat, row] : blocks_) {
    json r = json::object();
    for (auto& [n, v] : row) r[std::to_string(n)] = v;
    j["blocks"][pat] = r;
  }
  namespace fs = std::filesystem;
  fs::path p(path_);
  if (p.has_parent_path()) fs::create_directories(p.parent_path());
  fs::path tmp = p;
  tmp += ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) throw Error("cannot write cache " + tmp.string());
    out << j.dump(1) << '\n';
  }
  fs::rename(tmp, p);
  dirty_ = false;
}

}  // namespace partpat
