#pragma once

#include <map>
#include <utility>

#include "khecke/cartan.hpp"
#include "khecke/weyl.hpp"

namespace khecke {

// Sum of a_w T_w with coefficients on the left.
class HeckeElt {
 public:
  using Map = std::map<WeylElt, LaurentPoly>;

  HeckeElt() = default;
  const Map& terms() const& { return terms_; }
  Map terms() && { return std::move(terms_); }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  LaurentPoly coefficient(const WeylElt& w) const;
  void add(const WeylElt& w, const LaurentPoly& c);

  HeckeElt& operator+=(const HeckeElt& o);
  HeckeElt& operator-=(const HeckeElt& o);
  friend HeckeElt operator+(HeckeElt a, const HeckeElt& b) { return a += b; }
  friend HeckeElt operator-(HeckeElt a, const HeckeElt& b) { return a -= b; }
  friend bool operator==(const HeckeElt&, const HeckeElt&) = default;

 private:
  Map terms_;
};

// Sum of c_{u,v} T_u (x) T_v, scalars kept in the left factor.
class TensorElt {
 public:
  using Key = std::pair<WeylElt, WeylElt>;
  using Map = std::map<Key, LaurentPoly>;

  const Map& terms() const& { return terms_; }
  Map terms() && { return std::move(terms_); }
  bool is_zero() const { return terms_.empty(); }
  LaurentPoly coefficient(const WeylElt& u, const WeylElt& v) const;
  void add(const WeylElt& u, const WeylElt& v, const LaurentPoly& c);
  TensorElt& operator+=(const TensorElt& o);
  friend bool operator==(const TensorElt&, const TensorElt&) = default;

 private:
  Map terms_;
};

enum class Coefficients { native, level_zero };

// The (affine) K-NilHecke ring over a Weyl datum. Affine data default to the
// level-zero coefficient ring.
class HeckeRing {
 public:
  explicit HeckeRing(RootDatum::Ptr weyl);
  HeckeRing(RootDatum::Ptr weyl, Coefficients c);

  const RootDatum& weyl_datum() const { return *weyl_; }
  const RootDatum& coeff_datum() const { return *coeffs_; }
  RootDatum::Ptr weyl_ptr() const { return weyl_; }

  LaurentPoly constant(std::int64_t c) const { return LaurentPoly::constant(*coeffs_, c); }
  const Weight& root(int i) const { return coeffs_->simple_root(i); }
  LaurentPoly act(const WeylElt& w, const LaurentPoly& p) const;

  HeckeElt one() const;
  HeckeElt T(const WeylElt& w, std::int64_t c = 1) const;
  HeckeElt T(std::string_view word) const;
  HeckeElt scalar(const LaurentPoly& q) const;

  HeckeElt mul(const HeckeElt& a, const HeckeElt& b) const;
  HeckeElt T_i_times(int i, const HeckeElt& a) const;
  HeckeElt times_scalar(const HeckeElt& a, const LaurentPoly& q) const;
  HeckeElt scalar_times(const LaurentPoly& q, const HeckeElt& a) const;

  // w = sum_v psi^v(w) T_v
  HeckeElt group_element(const WeylElt& w) const;
  HeckeElt y_element(const WeylElt& w) const;
  // sum_w a_w (T_w . p)
  LaurentPoly act_on(const HeckeElt& a, const LaurentPoly& p) const;

  TensorElt coproduct(const HeckeElt& a) const;
  // Delta(a) acting componentwise on t
  TensorElt act_on_tensor(const HeckeElt& a, const TensorElt& t) const;
  TensorElt structure_constants(const WeylElt& w) const;

 private:
  TensorElt T_i_on_tensor(int i, const TensorElt& t) const;
  HeckeElt T_word_times(std::span<const int> word, const HeckeElt& a) const;

  RootDatum::Ptr weyl_;
  RootDatum::Ptr coeffs_;
};

HeckeElt phi0(const HeckeElt& a);
TensorElt phi0(const TensorElt& t);

}  // namespace khecke
