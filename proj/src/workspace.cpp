#include "khecke/workspace.hpp"

namespace khecke {

const Peterson& Workspace::peterson(int n) {
  std::lock_guard lock(mutex_);
  auto& slot = petersons_[n];
  if (!slot) slot = std::make_unique<Peterson>(n);
  return *slot;
}

SymFunc Workspace::g(int n, const Partition& lambda) {
  const AffineEngine& e = engine(n);
  return cache_.get(n, "g", lambda, lambda.size(), [&] { return e.g(lambda); });
}

SymFunc Workspace::kschur(int n, const Partition& lambda) {
  const AffineEngine& e = engine(n);
  return cache_.get(n, "kschur", lambda, lambda.size(), [&] { return e.kschur(lambda); });
}

SymFunc Workspace::G(int n, const Partition& lambda, int max_degree) {
  const AffineEngine& e = engine(n);
  e.check_label(lambda);
  return cache_.get(n, "G", lambda, max_degree, [&] { return e.G(e.element(lambda), max_degree); });
}

}  // namespace khecke
