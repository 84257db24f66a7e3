#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "khecke/grothendieck.hpp"
#include "khecke/hecke.hpp"

namespace khecke {

// Expansion over Grassmannian elements, indexed by their bounded partitions.
using GrassExpansion = std::map<Partition, std::int64_t>;

// Non-equivariant layer over affine A_{n-1}: phi_0(k_w), membership in the
// commutative subalgebra, Pieri rule and structure constants.
class Peterson {
 public:
  explicit Peterson(int n);
  explicit Peterson(std::shared_ptr<const AffineEngine> engine);

  int n() const { return engine_->n(); }
  const AffineEngine& engine() const { return *engine_; }
  const HeckeRing& ring() const { return ring_; }

  // phi(g_w); checked to have T_w as its only Grassmannian term.
  const IntHecke& fomin_stanley_elt(const Partition& w) const;
  // Same element, from the linear system imposed by l0_membership on the
  // unknown non-Grassmannian coefficients of length <= |w|.
  IntHecke fomin_stanley_by_linear_system(const Partition& w) const;

  // phi_0(b (e^{+-omega_j} - 1)) = 0 for j = 1..n-1.
  bool l0_membership(const IntHecke& b) const;
  // Strips Grassmannian terms of minimal length; throws DomainError if b is not
  // in the span of the phi_0(k_w).
  GrassExpansion expand_in_fs_basis(const IntHecke& b) const;

  // phi_0(d^w_{sigma_i, v}) from signed counts of cyclically decreasing x.
  GrassExpansion pieri(int i, const Partition& v) const;
  // phi_0(d^w_{uv}) from the sum over x with T_x T_v = +-T_w.
  GrassExpansion structure_by_sum(const Partition& u, const Partition& v) const;
  // phi_0(d^w_{uv}) by expanding phi_0(k_u) phi_0(k_v).
  GrassExpansion structure_by_product(const Partition& u, const Partition& v) const;
  // Both of the above; throws VerificationError when they differ.
  GrassExpansion structure_d(const Partition& u, const Partition& v) const;

 private:
  std::shared_ptr<const AffineEngine> engine_;
  HeckeRing ring_;
  std::vector<LaurentPoly> probes_;  // e^{+-omega_j} - 1
  mutable std::mutex mutex_;
  mutable std::map<Partition, IntHecke> fs_memo_;
};

// Equivariant k_w for affine sl_2 over the level-zero torus, w Grassmannian.
// Support is searched up to length `cutoff`; throws TruncationError when the
// result does not close within it.
HeckeElt equivariant_k_sl2(const RootDatum::Ptr& affine_sl2, const WeylElt& w, int cutoff);

struct ConjectureReport {
  std::string id;
  int n = 0;
  int bound = 0;
  std::int64_t checked = 0;
  std::vector<std::string> violations;

  bool pass() const { return violations.empty(); }
};

// Scans at a single n with labels, lengths and degrees up to `bound`.
std::vector<ConjectureReport> conjecture_scan(const Peterson& p, int bound);
// g^{(n-1)} in g^{(n)}, and G^{(n)} in G^{(n-1)}, through degree `bound`.
std::vector<ConjectureReport> cross_rank_scan(const AffineEngine& lower, const AffineEngine& upper, int bound);

}  // namespace khecke
