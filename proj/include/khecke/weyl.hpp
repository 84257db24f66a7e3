#pragma once

#include <array>
#include <compare>
#include <span>
#include <string>
#include <vector>

#include "khecke/cartan.hpp"
#include "khecke/partition.hpp"

namespace khecke {

// Element of the Weyl group of a finite or (big-lattice) affine datum, stored by
// its action on rho. The canonical word is derived from the key on construction.
class WeylElt {
 public:
  WeylElt() = default;
  WeylElt(const RootDatum& d, const Weight& key);

  const RootDatum& datum() const { return *datum_; }
  const Weight& key() const { return key_; }
  const std::vector<int>& word() const { return word_; }
  int length() const { return static_cast<int>(word_.size()); }
  bool is_identity() const { return word_.empty(); }

  friend bool operator==(const WeylElt& a, const WeylElt& b) { return a.key_ == b.key_; }
  // (length, word) order; used for all deterministic output.
  friend std::strong_ordering operator<=>(const WeylElt& a, const WeylElt& b);

 private:
  const RootDatum* datum_ = nullptr;
  Weight key_;
  std::vector<int> word_;
};

struct WeylEltHash {
  std::size_t operator()(const WeylElt& w) const { return WeightHash{}(w.key()); }
};

// Affine permutation f: Z -> Z with f(i+n) = f(i)+n, stored by its window.
class AffinePerm {
 public:
  static constexpr int kMaxN = 10;

  AffinePerm() = default;
  static AffinePerm identity(int n);
  static AffinePerm from_window(std::span<const int> window);
  static AffinePerm from_word(int n, std::span<const int> word);
  static AffinePerm translation(std::span<const int> lambda);

  int n() const { return n_; }
  int operator()(int i) const;
  std::span<const int> window() const { return {w_.data(), static_cast<std::size_t>(n_)}; }
  int length() const;
  bool right_descent(int i) const;
  bool left_descent(int i) const;
  AffinePerm times_simple(int i) const;  // w r_i
  AffinePerm simple_times(int i) const;  // r_i w
  AffinePerm operator*(const AffinePerm& o) const;
  AffinePerm inverse() const;
  std::vector<int> word() const;
  bool is_grassmannian() const;
  // Minimal representative of wW and the coweight lambda with wW = t_lambda W.
  AffinePerm grassmannian_rep() const;
  std::vector<int> translation_part() const;

  friend bool operator==(const AffinePerm&, const AffinePerm&) = default;
  friend auto operator<=>(const AffinePerm&, const AffinePerm&) = default;

 private:
  std::array<int, kMaxN> w_{};
  int n_ = 0;
};

struct AffinePermHash {
  std::size_t operator()(const AffinePerm& p) const;
};

std::string word_label(std::span<const int> word);  // "210", "" for identity
std::vector<int> parse_word(std::string_view text);

namespace weyl {

WeylElt identity(const RootDatum& d);
WeylElt simple(const RootDatum& d, int i);
WeylElt from_word(const RootDatum& d, std::span<const int> word);
WeylElt from_word(const RootDatum& d, std::string_view word);
WeylElt multiply(const WeylElt& u, const WeylElt& v);
WeylElt inverse(const WeylElt& w);
WeylElt lmul(int i, const WeylElt& w);
WeylElt rmul(const WeylElt& w, int i);
// Acts on weights of w's datum, or of its level-zero realization.
Weight apply(const WeylElt& w, const Weight& lambda);
LaurentPoly apply(const WeylElt& w, const LaurentPoly& p);

bool has_left_descent(const WeylElt& w, int i);
bool has_right_descent(const WeylElt& w, int i);
int first_left_descent(const WeylElt& w);
int first_right_descent(const WeylElt& w);
bool bruhat_leq(const WeylElt& v, const WeylElt& w);
std::vector<WeylElt> bruhat_ideal(const WeylElt& w);  // all v <= w, sorted
bool is_reduced(const RootDatum& d, std::span<const int> word);
std::vector<std::vector<int>> reduced_words(const WeylElt& w);

// r_{i1}...r_{i(k-1)}(alpha_ik) along the canonical word, in `realization`
// (w's datum by default, or its level-zero realization).
std::vector<Weight> inversions(const WeylElt& w);
std::vector<Weight> inversions(const WeylElt& w, const RootDatum& realization);

// All elements of length <= max_len, sorted.
std::vector<WeylElt> enumerate(const RootDatum& d, int max_len);

// Reflection in the positive real root `root` (a root of d), given as u r_i u^{-1}.
struct RealRoot {
  Weight root;
  WeylElt reflection;
};
// Positive real roots that occur as inversions of elements up to max_len
// (all of them for finite types once max_len reaches the longest element).
std::vector<RealRoot> positive_roots(const RootDatum& d, int max_len);

// ---- affine type A ----
AffinePerm to_perm(const WeylElt& w);
WeylElt from_perm(const RootDatum& d, const AffinePerm& p);
WeylElt translation(const RootDatum& d, std::span<const int> lambda);
struct GrassmannianPart {
  WeylElt element;
  std::vector<int> lambda;
};
GrassmannianPart grassmannian_part(const WeylElt& w);
bool is_grassmannian(const WeylElt& w);

AffinePerm grassmannian_from_partition(int n, const Partition& lambda);
WeylElt grassmannian_from_partition(const RootDatum& d, const Partition& lambda);
Partition partition_of(const AffinePerm& w);
// All affine permutations of length <= max_len, by (length, word).
std::vector<AffinePerm> enumerate_perms(int n, int max_len);
std::vector<AffinePerm> cyclically_decreasing(int n, int len);
std::vector<WeylElt> cyclically_decreasing(const RootDatum& d, int len);

}  // namespace weyl
}  // namespace khecke
