#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>

#include "khecke/partition.hpp"

namespace khecke {

enum class Basis { m, h, s, F, G, g, kschur };

std::string_view basis_name(Basis b);
Basis parse_basis(std::string_view text);

// Finite integer combination of basis elements indexed by partitions. The
// affine bases (F, G, g, kschur) carry the n they were built for.
class SymFunc {
 public:
  using Map = std::map<Partition, std::int64_t>;

  SymFunc() = default;
  explicit SymFunc(Basis b, int n = 0) : basis_(b), n_(n) {}
  static SymFunc single(Basis b, const Partition& p, std::int64_t c = 1, int n = 0);

  Basis basis() const { return basis_; }
  int n() const { return n_; }
  const Map& terms() const& { return terms_; }
  Map terms() && { return std::move(terms_); }
  bool is_zero() const { return terms_.empty(); }
  std::int64_t coefficient(const Partition& p) const;
  void add(const Partition& p, std::int64_t c);

  SymFunc& operator+=(const SymFunc& o);
  SymFunc& operator-=(const SymFunc& o);
  SymFunc& operator*=(std::int64_t k);
  friend SymFunc operator+(SymFunc a, const SymFunc& b) { return a += b; }
  friend SymFunc operator-(SymFunc a, const SymFunc& b) { return a -= b; }
  friend SymFunc operator*(std::int64_t k, SymFunc a) { return a *= k; }
  friend bool operator==(const SymFunc&, const SymFunc&) = default;

  SymFunc homogeneous_part(int d) const;
  SymFunc up_to_degree(int d) const;
  int max_degree() const;  // -1 for zero
  int min_degree() const;

 private:
  void check_compatible(const SymFunc& o) const;

  Basis basis_ = Basis::m;
  int n_ = 0;
  Map terms_;
};

// Sum of c T_a (x) T_b over a fixed pair of bases.
class SymTensor {
 public:
  using Key = std::pair<Partition, Partition>;
  using Map = std::map<Key, std::int64_t>;

  SymTensor() = default;
  SymTensor(Basis left, Basis right, int n = 0) : left_(left), right_(right), n_(n) {}

  Basis left() const { return left_; }
  Basis right() const { return right_; }
  int n() const { return n_; }
  const Map& terms() const& { return terms_; }
  Map terms() && { return std::move(terms_); }
  std::int64_t coefficient(const Partition& a, const Partition& b) const;
  void add(const Partition& a, const Partition& b, std::int64_t c);
  friend bool operator==(const SymTensor&, const SymTensor&) = default;

 private:
  Basis left_ = Basis::h;
  Basis right_ = Basis::h;
  int n_ = 0;
  Map terms_;
};

// Number of semistandard tableaux of shape lambda and content mu.
std::int64_t kostka(const Partition& lambda, const Partition& mu);

// Change of basis among m, h, s.
SymFunc convert(const SymFunc& f, Basis target);
// Hall pairing of an h (resp. s) expansion with an m (resp. s) expansion, either order.
std::int64_t hall_pair(const SymFunc& f, const SymFunc& g);
// Product; the result is in the basis of f (m, h or s).
SymFunc multiply(const SymFunc& f, const SymFunc& g);
// Image in Lambda / <m_lambda : lambda_1 >= n>, returned in the m basis.
SymFunc truncate(const SymFunc& f, int n);
// Delta h_i = sum_j h_j (x) h_{i-j}, extended multiplicatively; input in h.
SymTensor coproduct_h(const SymFunc& f);

}  // namespace khecke
