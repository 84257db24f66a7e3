#pragma once

#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <string_view>

#include "khecke/symfunc.hpp"

namespace khecke {

// On-disk store of basis expansions keyed by (n, kind, label, degree). Each
// record carries a crc32 of its payload; damaged records are reported through
// the warning sink and recomputed. A default-constructed cache is disabled.
class ExpansionCache {
 public:
  using Warn = std::function<void(const std::string&)>;

  ExpansionCache() = default;
  ExpansionCache(std::filesystem::path dir, Warn warn = {});

  // KHECKE_CACHE if set, else `flag` (possibly empty).
  static std::filesystem::path resolve_dir(const std::string& flag);

  bool enabled() const { return !dir_.empty(); }
  const std::filesystem::path& dir() const { return dir_; }
  std::filesystem::path path_for(int n, std::string_view kind, const Partition& label, int degree) const;

  std::optional<SymFunc> load(int n, std::string_view kind, const Partition& label, int degree) const;
  void store(int n, std::string_view kind, const Partition& label, int degree, const SymFunc& value) const;
  SymFunc get(int n, std::string_view kind, const Partition& label, int degree,
              const std::function<SymFunc()>& compute) const;

 private:
  std::filesystem::path dir_;
  Warn warn_;
};

}  // namespace khecke
