#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace khecke {

std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

inline constexpr std::size_t kMaxLatticeRank = 12;

// A lattice vector tagged with the id of the root datum it lives in.
class Weight {
 public:
  Weight() = default;
  Weight(std::uint32_t datum, std::span<const std::int32_t> coords);

  std::uint32_t datum() const { return datum_; }
  std::size_t size() const { return size_; }
  std::int32_t operator[](std::size_t i) const { return c_[i]; }
  std::span<const std::int32_t> coords() const { return {c_.data(), size_}; }
  bool is_zero() const;

  Weight operator+(const Weight& o) const;
  Weight operator-(const Weight& o) const;
  Weight operator-() const;
  Weight scaled(std::int32_t k) const;

  friend bool operator==(const Weight&, const Weight&) = default;
  friend std::strong_ordering operator<=>(const Weight& a, const Weight& b);

 private:
  std::array<std::int32_t, kMaxLatticeRank> c_{};
  std::uint8_t size_ = 0;
  std::uint32_t datum_ = 0;
};

struct WeightHash {
  std::size_t operator()(const Weight& w) const;
};

enum class Flavor { finite, affine, level_zero };

// Cartan matrix plus an integral realization. Node labels are 1..r for finite
// data and 0..r for affine data; the Cartan matrix is indexed by position.
class RootDatum {
 public:
  using Ptr = std::shared_ptr<const RootDatum>;

  // SL_n in e-coordinates: lattice Z^n modulo (1,...,1), nodes 1..n-1.
  static Ptr sl(int n);
  // Untwisted affine A_{n-1}: coordinates (x_1..x_n, level, degree), nodes 0..n-1.
  static Ptr affine_sl(int n);
  // Invertible Cartan matrix realized in the fundamental-weight basis.
  static Ptr from_cartan(const std::vector<std::vector<int>>& a, std::string name = "");
  // "A2", "B3", "C2", "D4", "G2" (finite) or "A~1", "A~2", ... (affine type A).
  static Ptr parse_type(std::string_view type);

  std::uint32_t id() const { return id_; }
  const std::string& name() const { return name_; }
  Flavor flavor() const { return flavor_; }
  bool is_affine() const { return flavor_ != Flavor::finite; }

  const std::vector<int>& nodes() const { return labels_; }
  std::size_t rank() const { return labels_.size(); }
  std::size_t index_of(int label) const;
  int cartan(int i, int j) const { return cartan_[index_of(i)][index_of(j)]; }
  std::size_t lattice_rank() const { return lattice_rank_; }

  const Weight& simple_root(int label) const { return roots_[index_of(label)]; }
  std::span<const std::int32_t> coroot(int label) const { return coroots_[index_of(label)]; }
  int pairing(int label, const Weight& w) const;
  bool has_fundamental_weight(int label) const;
  const Weight& fundamental_weight(int label) const;
  const Weight& rho() const { return rho_; }
  const std::vector<int>& marks() const { return marks_; }
  Weight null_root() const;

  Weight weight(std::span<const std::int32_t> coords) const;
  Weight weight(std::initializer_list<std::int32_t> coords) const;
  Weight zero() const;
  void check(const Weight& w) const;

  // Affine type A only: the level-zero realization (finite lattice, alpha_0 = -theta)
  // and the finite SL_n datum used for naming weights.
  const RootDatum& level_zero() const;
  Ptr level_zero_ptr() const;
  const RootDatum& finite_part() const;
  Ptr finite_part_ptr() const;
  Weight project(const Weight& w) const;

  // Integer coordinates of w in the simple roots, if it lies in their span and the
  // roots are independent.
  std::optional<std::vector<std::int64_t>> root_coordinates(const Weight& w) const;
  // Positive root test for (real) roots of this datum.
  bool is_positive_root(const Weight& w) const;

  // Affine type A: n of SL_n (0 otherwise).
  int sl_n() const { return sl_n_; }

 private:
  RootDatum() = default;
  Weight canonical(std::span<const std::int32_t> coords) const;
  void finish();

  std::uint32_t id_ = 0;
  std::string name_;
  Flavor flavor_ = Flavor::finite;
  std::vector<int> labels_;
  int first_label_ = 1;
  std::vector<std::vector<int>> cartan_;
  std::size_t lattice_rank_ = 0;
  std::vector<Weight> roots_;
  std::vector<std::vector<std::int32_t>> coroots_;
  std::vector<std::optional<Weight>> fundamental_;
  std::vector<std::int32_t> quotient_;
  std::vector<int> marks_;
  Weight rho_;
  int sl_n_ = 0;
  Ptr level_zero_;
  Ptr finite_;
  std::vector<std::vector<std::int64_t>> linv_num_;
  std::int64_t linv_den_ = 1;
};

Weight reflect(const RootDatum& d, int i, const Weight& w);

// Element of Z[P]: sorted terms with nonzero coefficients.
class LaurentPoly {
 public:
  struct Term {
    Weight exponent;
    std::int64_t coeff;
    friend bool operator==(const Term&, const Term&) = default;
  };

  LaurentPoly() = default;
  static LaurentPoly monomial(const Weight& w, std::int64_t c = 1);
  static LaurentPoly constant(const RootDatum& d, std::int64_t c);
  static LaurentPoly from_terms(std::vector<Term> terms);
  // 1 - e^w
  static LaurentPoly one_minus(const Weight& w);

  const std::vector<Term>& terms() const& { return terms_; }
  std::vector<Term> terms() && { return std::move(terms_); }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  std::int64_t coefficient(const Weight& w) const;
  // The integer c if this equals c * e^0.
  std::optional<std::int64_t> as_constant() const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(std::int64_t k);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(LaurentPoly a, std::int64_t k) { return a *= k; }
  friend LaurentPoly operator*(std::int64_t k, LaurentPoly a) { return a *= k; }
  LaurentPoly operator-() const { return LaurentPoly(*this) *= -1; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly shifted(const Weight& w) const;  // e^w * this

  template <class F>
  LaurentPoly map_exponents(F f) const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) out.push_back({f(t.exponent), t.coeff});
    return from_terms(std::move(out));
  }

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

 private:
  std::vector<Term> terms_;
};

LaurentPoly reflect(const RootDatum& d, int i, const LaurentPoly& p);
// T_i acting on R(T).
LaurentPoly demazure(const RootDatum& d, int i, const LaurentPoly& p);
std::int64_t phi0(const LaurentPoly& p);
LaurentPoly eta(const LaurentPoly& p);
// p / (1 - e^alpha)^d if the division is exact.
std::optional<LaurentPoly> divide_one_minus(const LaurentPoly& p, const Weight& alpha, int d = 1);
Weight level_zero_project(const RootDatum& affine, const Weight& w);
LaurentPoly level_zero_project(const RootDatum& affine, const LaurentPoly& p);

}  // namespace khecke
