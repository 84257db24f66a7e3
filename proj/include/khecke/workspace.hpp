#pragma once

#include <map>
#include <memory>
#include <mutex>

#include "khecke/cache.hpp"
#include "khecke/peterson.hpp"

namespace khecke {

// Engines per n plus the expansion cache. Engines are created on first use and
// shared; all methods are thread-safe.
class Workspace {
 public:
  explicit Workspace(ExpansionCache cache = {}) : cache_(std::move(cache)) {}

  const Peterson& peterson(int n);
  const AffineEngine& engine(int n) { return peterson(n).engine(); }
  const ExpansionCache& cache() const { return cache_; }

  // Cached h expansions.
  SymFunc g(int n, const Partition& lambda);
  SymFunc kschur(int n, const Partition& lambda);
  // Cached m expansion of G for a Grassmannian element.
  SymFunc G(int n, const Partition& lambda, int max_degree);

 private:
  ExpansionCache cache_;
  std::mutex mutex_;
  std::map<int, std::unique_ptr<Peterson>> petersons_;
};

}  // namespace khecke
