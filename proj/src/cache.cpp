#include "khecke/cache.hpp"

#include <zlib.h>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "khecke/errors.hpp"
#include "khecke/render.hpp"

namespace khecke {

namespace fs = std::filesystem;

namespace {

std::uint32_t checksum(const std::string& text) {
  uLong crc = crc32(0L, Z_NULL, 0);
  return static_cast<std::uint32_t>(crc32(crc, reinterpret_cast<const Bytef*>(text.data()), static_cast<uInt>(text.size())));
}

}  // namespace

ExpansionCache::ExpansionCache(fs::path dir, Warn warn) : dir_(std::move(dir)), warn_(std::move(warn)) {}

fs::path ExpansionCache::resolve_dir(const std::string& flag) {
  if (const char* env = std::getenv("KHECKE_CACHE"); env && *env) return env;
  return flag;
}

fs::path ExpansionCache::path_for(int n, std::string_view kind, const Partition& label, int degree) const {
  std::string name = std::string(kind) + "_n" + std::to_string(n) + "_" +
                     (label.empty() ? std::string("0") : label.comma_label()) + "_d" + std::to_string(degree) + ".json";
  std::replace(name.begin(), name.end(), ',', '-');
  return dir_ / name;
}

std::optional<SymFunc> ExpansionCache::load(int n, std::string_view kind, const Partition& label, int degree) const {
  if (!enabled()) return std::nullopt;
  fs::path path = path_for(n, kind, label, degree);
  std::ifstream in(path);
  if (!in) return std::nullopt;
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    Json record = Json::parse(buf.str());
    std::string payload = record.at("value").dump();
    if (record.at("crc32").get<std::uint32_t>() != checksum(payload)) {
      if (warn_) warn_("cache record " + path.string() + " failed its checksum; recomputing");
      return std::nullopt;
    }
    const Json& key = record.at("key");
    if (key.at("n") != n || key.at("kind") != kind || key.at("degree") != degree ||
        partition_from_json(key.at("label")) != label) {
      if (warn_) warn_("cache record " + path.string() + " has a foreign key; recomputing");
      return std::nullopt;
    }
    return symfunc_from_json(record.at("value"));
  } catch (const std::exception&) {
    if (warn_) warn_("cache record " + path.string() + " is unreadable; recomputing");
    return std::nullopt;
  }
}

void ExpansionCache::store(int n, std::string_view kind, const Partition& label, int degree, const SymFunc& value) const {
  if (!enabled()) return;
  std::error_code ec;
  fs::create_directories(dir_, ec);
  if (ec) throw IoError("cannot create cache directory " + dir_.string() + ": " + ec.message());
  Json payload = to_json(value);
  Json record = {{"key", {{"n", n}, {"kind", kind}, {"label", partition_json(label)}, {"degree", degree}}},
                 {"value", payload},
                 {"crc32", checksum(payload.dump())}};
  fs::path path = path_for(n, kind, label, degree);
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw IoError("cannot write cache record " + tmp.string());
    out << record.dump() << "\n";
    if (!out) throw IoError("cannot write cache record " + tmp.string());
  }
  fs::rename(tmp, path, ec);
  if (ec) throw IoError("cannot move cache record into place at " + path.string() + ": " + ec.message());
}

SymFunc ExpansionCache::get(int n, std::string_view kind, const Partition& label, int degree,
                            const std::function<SymFunc()>& compute) const {
  if (auto hit = load(n, kind, label, degree)) return *hit;
  SymFunc value = compute();
  store(n, kind, label, degree, value);
  return value;
}

}  // namespace khecke
