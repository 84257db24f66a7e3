#pragma once

#include <doctest.h>

#include <random>
#include <string>
#include <vector>

#include "khecke/cartan.hpp"
#include "khecke/errors.hpp"
#include "khecke/hecke.hpp"
#include "khecke/weyl.hpp"

namespace khecke::test {

inline std::mt19937& rng() {
  static std::mt19937 g(20240611u);
  return g;
}

inline int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng()); }

inline Weight random_weight(const RootDatum& d, int spread = 2) {
  std::vector<std::int32_t> c(d.lattice_rank());
  for (auto& x : c) x = uniform(-spread, spread);
  return d.weight(c);
}

inline LaurentPoly random_poly(const RootDatum& d, int max_terms = 3) {
  std::vector<LaurentPoly::Term> t;
  int k = uniform(1, max_terms);
  for (int i = 0; i < k; ++i) {
    int c = 0;
    while (c == 0) c = uniform(-3, 3);
    t.push_back({random_weight(d), c});
  }
  return LaurentPoly::from_terms(std::move(t));
}

inline LaurentPoly mono(const Weight& w, std::int64_t c = 1) { return LaurentPoly::monomial(w, c); }

inline LaurentPoly one(const RootDatum& d) { return LaurentPoly::constant(d, 1); }

// 1 - e^w
inline LaurentPoly om(const Weight& w) { return LaurentPoly::one_minus(w); }

inline WeylElt W(const RootDatum& d, const std::string& word) { return weyl::from_word(d, std::string_view(word)); }

}  // namespace khecke::test
