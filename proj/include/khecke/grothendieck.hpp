#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <unordered_map>
#include <vector>

#include "khecke/hecke.hpp"
#include "khecke/symfunc.hpp"
#include "khecke/weyl.hpp"

namespace khecke {

// Integer combination of T_w over affine permutations: the affine 0-Hecke ring.
class IntHecke {
 public:
  using Map = std::unordered_map<AffinePerm, std::int64_t, AffinePermHash>;

  IntHecke() = default;
  static IntHecke T(const AffinePerm& w, std::int64_t c = 1);

  const Map& terms() const& { return terms_; }
  Map terms() && { return std::move(terms_); }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  std::int64_t coefficient(const AffinePerm& w) const;
  void add(const AffinePerm& w, std::int64_t c);
  IntHecke& operator+=(const IntHecke& o);
  IntHecke& operator-=(const IntHecke& o);
  IntHecke& operator*=(std::int64_t k);
  friend IntHecke operator+(IntHecke a, const IntHecke& b) { return a += b; }
  friend IntHecke operator-(IntHecke a, const IntHecke& b) { return a -= b; }
  friend IntHecke operator*(std::int64_t k, IntHecke a) { return a *= k; }
  friend bool operator==(const IntHecke&, const IntHecke&) = default;

  // Terms ordered by (length, word).
  std::vector<std::pair<AffinePerm, std::int64_t>> sorted() const;

 private:
  Map terms_;
};

IntHecke operator*(const IntHecke& a, const IntHecke& b);
// T_x T_v = sign * T_{result}
struct HeckeMonomial {
  AffinePerm element;
  int sign;
};
HeckeMonomial zero_hecke_product(const AffinePerm& x, const AffinePerm& v);

// Conversions to the generic ring (constant coefficients in the level-zero lattice).
HeckeElt to_hecke(const HeckeRing& ring, const IntHecke& a);
IntHecke from_hecke(const HeckeElt& a);

// Symmetric-function side of affine type A_{n-1}: kappa products, G, F, g,
// k-Schur. Grassmannian elements are labelled by (n-1)-bounded partitions.
// Safe to share between threads.
class AffineEngine {
 public:
  explicit AffineEngine(int n);

  int n() const { return n_; }
  const RootDatum& datum() const { return *datum_; }
  RootDatum::Ptr datum_ptr() const { return datum_; }

  AffinePerm element(const Partition& lambda) const;  // Grassmannian element
  Partition label(const AffinePerm& w) const;         // inverse bijection
  std::vector<Partition> labels(int max_degree) const;  // bounded partitions, graded order
  std::vector<Partition> labels_of_degree(int d) const;
  void check_label(const Partition& lambda) const;

  IntHecke kappa(int i) const;
  // kappa_{mu_1} kappa_{mu_2} ... (memoized)
  const IntHecke& kappa_product(const Partition& mu) const;
  // [T_w] kappa_mu
  std::int64_t kappa_coefficient(const Partition& mu, const AffinePerm& w) const;

  // Expansions in the m basis through degree max_degree.
  SymFunc G(const AffinePerm& w, int max_degree) const;
  SymFunc F(const AffinePerm& w) const;

  // h-basis expansions of the dual bases.
  SymFunc g(const Partition& lambda) const;
  SymFunc kschur(const Partition& lambda) const;

  // Images of an h expansion.
  IntHecke phi(const SymFunc& f) const;
  SymFunc h_to_g(const SymFunc& f) const;
  SymFunc h_to_kschur(const SymFunc& f) const;

  // G_w through degree max_degree in the F basis; the result must be exact
  // through that degree.
  SymFunc G_in_F(const AffinePerm& w, int max_degree) const;
  // G_w = sum_v c_v G_v, by peeling lowest-degree parts; only v of length <= max_length.
  SymFunc G_in_G(const AffinePerm& w, int max_length) const;
  // Peels an m expansion (terms with a part >= n dropped) into G_v through max_degree.
  SymFunc m_to_G(const SymFunc& f, int max_degree) const;
  // G_a G_b in the G basis through max_degree.
  SymFunc G_product(const Partition& a, const Partition& b, int max_degree) const;

  SymTensor g_coproduct(const Partition& lambda) const;
  SymFunc g_multiply(const Partition& a, const Partition& b) const;

  // sum h_lambda(x) m_lambda(y) = sum_v g_v(x) G_v(y) through degree D.
  bool cauchy_check(int max_degree) const;

 private:
  // Inverse of the block [T_u] kappa_mu over all labels of degree <= d (full)
  // or exactly d (top); rows indexed by u, columns by mu.
  using Matrix = std::map<Partition, SymFunc>;
  const Matrix& dual_rows(int d, bool top) const;

  int n_;
  RootDatum::Ptr datum_;
  mutable std::mutex mutex_;
  mutable std::map<Partition, IntHecke> kappa_memo_;
  mutable std::map<std::pair<int, bool>, Matrix> dual_memo_;
};

}  // namespace khecke
