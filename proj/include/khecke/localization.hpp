#pragma once

#include <functional>
#include <map>
#include <span>
#include <unordered_map>
#include <vector>

#include "khecke/cartan.hpp"
#include "khecke/weyl.hpp"

namespace khecke {

// big: coefficients in the datum's own lattice. small: affine data only,
// coefficients in the level-zero lattice (delta -> 0).
enum class Torus { big, small };

using PsiFunction = std::function<LaurentPoly(const WeylElt&)>;

struct PsiTable {
  Torus torus = Torus::big;
  std::map<std::pair<WeylElt, WeylElt>, LaurentPoly> values;  // (v, w) -> psi^v(w)

  LaurentPoly at(const WeylElt& v, const WeylElt& w) const;
};

// Memoizing evaluator for psi^v(w). Not thread-safe; use one per thread.
class Localizer {
 public:
  explicit Localizer(RootDatum::Ptr weyl, Torus torus = Torus::big);

  const RootDatum& weyl_datum() const { return *weyl_; }
  const RootDatum& coeff_datum() const { return *coeffs_; }
  Torus torus() const { return torus_; }

  // w(alpha_i) in the coefficient lattice
  Weight image_root(const WeylElt& w, int i) const;

  LaurentPoly psi(const WeylElt& v, const WeylElt& w) { return psi_right(v, w); }
  LaurentPoly psi_right(const WeylElt& v, const WeylElt& w);
  LaurentPoly psi_left(const WeylElt& v, const WeylElt& w);
  // Sum over 0/1 subwords of `word` (a reduced word of w) whose 0-Hecke product is +-T_v.
  LaurentPoly psi_graham_willems(const WeylElt& v, std::span<const int> word) const;
  // prod over Inv(v) of (1 - e^beta)
  LaurentPoly psi_diagonal(const WeylElt& v) const;

  LaurentPoly psi_kk(const WeylElt& v, const WeylElt& w);
  LaurentPoly psi_kk_closed(const WeylElt& v, const WeylElt& w);

  PsiTable table(const std::vector<WeylElt>& vs, const std::vector<WeylElt>& ws);
  PsiFunction function(const WeylElt& v);

 private:
  using Key = std::pair<Weight, Weight>;
  struct KeyHash {
    std::size_t operator()(const Key& k) const {
      return WeightHash{}(k.first) * 1000003u ^ WeightHash{}(k.second);
    }
  };

  RootDatum::Ptr weyl_;
  RootDatum::Ptr coeffs_;
  Torus torus_;
  std::unordered_map<Key, LaurentPoly, KeyHash> right_memo_;
  std::unordered_map<Key, LaurentPoly, KeyHash> left_memo_;
};

// psi(r_alpha w) - psi(w) in (1 - e^alpha) R(T) for every root and every w.
// Roots must live in the coefficient lattice of psi.
bool gkm_check_big(const PsiFunction& psi, const std::vector<weyl::RealRoot>& roots,
                   const std::vector<WeylElt>& ws);

// Affine type A, small torus. alpha = e_a - e_b (a != b, 1-based) in the
// level-zero lattice of `d`.
struct FiniteRoot {
  int a;
  int b;
};
std::vector<FiniteRoot> finite_roots(int n);  // all of Phi, positive and negative
Weight finite_root_weight(const RootDatum& affine, FiniteRoot alpha);
// psi((1 - t_{alpha^vee})^d w) in (1 - e^alpha)^d R(T)
bool small_grass_gkm(const PsiFunction& psi, const RootDatum& affine, FiniteRoot alpha, int d, const WeylElt& w);
// psi((1 - t_{alpha^vee})^{d-1} (1 - r_alpha) w) in (1 - e^alpha)^d R(T)
bool small_gkm(const PsiFunction& psi, const RootDatum& affine, FiniteRoot alpha, int d, const WeylElt& w);

// affine sl_2, delta = 0: the element sigma_j, and psi^{sigma_m}(sigma_j) from
// the closed formulas, as a polynomial over the level-zero lattice.
WeylElt sl2_sigma(const RootDatum& affine_sl2, int j);
LaurentPoly sl2_psi_closed(const RootDatum& affine_sl2, int m, int j);

// w -> psi(t_lambda) where wW = t_lambda W
PsiFunction wrongway(const RootDatum& affine, PsiFunction psi);

}  // namespace khecke
