#include "khecke/localization.hpp"

#include "khecke/errors.hpp"

namespace khecke {

LaurentPoly PsiTable::at(const WeylElt& v, const WeylElt& w) const {
  auto it = values.find({v, w});
  if (it == values.end()) domain_fail("psi table has no entry for (" + word_label(v.word()) + ", " + word_label(w.word()) + ")");
  return it->second;
}

Localizer::Localizer(RootDatum::Ptr weyl, Torus torus) : weyl_(std::move(weyl)), torus_(torus) {
  if (weyl_->flavor() == Flavor::level_zero) domain_fail("localization needs a faithful Weyl datum");
  if (torus_ == Torus::small) {
    if (weyl_->flavor() != Flavor::affine) domain_fail("the small torus needs an affine datum");
    coeffs_ = weyl_->level_zero_ptr();
  } else {
    coeffs_ = weyl_;
  }
}

Weight Localizer::image_root(const WeylElt& w, int i) const { return weyl::apply(w, coeffs_->simple_root(i)); }

LaurentPoly Localizer::psi_right(const WeylElt& v, const WeylElt& w) {
  if (w.is_identity()) return v.is_identity() ? LaurentPoly::constant(*coeffs_, 1) : LaurentPoly{};
  if (v.length() > w.length()) return {};
  Key key{v.key(), w.key()};
  if (auto it = right_memo_.find(key); it != right_memo_.end()) return it->second;

  int i = weyl::first_right_descent(w);
  WeylElt wr = weyl::rmul(w, i);
  LaurentPoly out;
  if (!weyl::has_right_descent(v, i)) {
    out = psi_right(v, wr);
  } else {
    LaurentPoly e = LaurentPoly::monomial(-image_root(w, i));
    out = LaurentPoly::one_minus(-image_root(w, i)) * psi_right(weyl::rmul(v, i), w) + e * psi_right(v, wr);
  }
  right_memo_.emplace(key, out);
  return out;
}

LaurentPoly Localizer::psi_left(const WeylElt& v, const WeylElt& w) {
  if (w.is_identity()) return v.is_identity() ? LaurentPoly::constant(*coeffs_, 1) : LaurentPoly{};
  if (v.length() > w.length()) return {};
  Key key{v.key(), w.key()};
  if (auto it = left_memo_.find(key); it != left_memo_.end()) return it->second;

  int i = weyl::first_left_descent(w);
  WeylElt rw = weyl::lmul(i, w);
  const Weight& a = coeffs_->simple_root(i);
  LaurentPoly out = reflect(*coeffs_, i, psi_left(v, rw));
  if (weyl::has_left_descent(v, i)) {
    out = LaurentPoly::monomial(a) * out + LaurentPoly::one_minus(a) * reflect(*coeffs_, i, psi_left(weyl::lmul(i, v), rw));
  }
  left_memo_.emplace(key, out);
  return out;
}

LaurentPoly Localizer::psi_graham_willems(const WeylElt& v, std::span<const int> word) const {
  const RootDatum& d = *weyl_;
  if (!weyl::is_reduced(d, word)) domain_fail("word '" + word_label(word) + "' is not reduced");
  const std::size_t n = word.size();
  if (n > 24) domain_fail("word too long for subword enumeration");

  std::vector<Weight> beta;
  WeylElt prefix = weyl::identity(d);
  for (int i : word) {
    beta.push_back(weyl::apply(prefix, coeffs_->simple_root(i)));
    prefix = weyl::rmul(prefix, i);
  }

  LaurentPoly out;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    WeylElt cur = weyl::identity(d);
    int collapses = 0;
    for (std::size_t k = 0; k < n; ++k) {
      if (!(mask & (1u << k))) continue;
      if (weyl::has_right_descent(cur, word[k])) ++collapses;
      else cur = weyl::rmul(cur, word[k]);
    }
    if (!(cur == v)) continue;
    LaurentPoly term = LaurentPoly::constant(*coeffs_, collapses % 2 ? -1 : 1);
    for (std::size_t k = 0; k < n; ++k)
      if (mask & (1u << k)) term = term * LaurentPoly::one_minus(beta[k]);
    out += term;
  }
  return out;
}

LaurentPoly Localizer::psi_diagonal(const WeylElt& v) const {
  LaurentPoly out = LaurentPoly::constant(*coeffs_, 1);
  for (const auto& b : weyl::inversions(v, *coeffs_)) out = out * LaurentPoly::one_minus(b);
  return out;
}

LaurentPoly Localizer::psi_kk(const WeylElt& v, const WeylElt& w) {
  LaurentPoly out;
  for (const auto& u : weyl::bruhat_ideal(w)) {
    if (!weyl::bruhat_leq(v, u)) continue;
    LaurentPoly p = psi_right(u, w);
    if ((u.length() - v.length()) % 2) out -= p;
    else out += p;
  }
  return out;
}

LaurentPoly Localizer::psi_kk_closed(const WeylElt& v, const WeylElt& w) {
  const Weight& rho = coeffs_->rho();
  LaurentPoly out = LaurentPoly::monomial(rho - weyl::apply(w, rho)) * eta(psi_right(v, w));
  return v.length() % 2 ? -out : out;
}

PsiTable Localizer::table(const std::vector<WeylElt>& vs, const std::vector<WeylElt>& ws) {
  PsiTable t;
  t.torus = torus_;
  for (const auto& w : ws)
    for (const auto& v : vs) t.values.emplace(std::make_pair(v, w), psi_right(v, w));
  return t;
}

PsiFunction Localizer::function(const WeylElt& v) {
  return [this, v](const WeylElt& w) { return psi_right(v, w); };
}

// ---- GKM conditions ----

bool gkm_check_big(const PsiFunction& psi, const std::vector<weyl::RealRoot>& roots, const std::vector<WeylElt>& ws) {
  for (const auto& r : roots)
    for (const auto& w : ws) {
      LaurentPoly diff = psi(weyl::multiply(r.reflection, w)) - psi(w);
      if (!divide_one_minus(diff, r.root)) return false;
    }
  return true;
}

std::vector<FiniteRoot> finite_roots(int n) {
  std::vector<FiniteRoot> out;
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b)
      if (a != b) out.push_back({a, b});
  return out;
}

static void check_root(const RootDatum& affine, FiniteRoot alpha) {
  int n = affine.sl_n();
  if (affine.flavor() != Flavor::affine || n == 0) domain_fail("small torus GKM needs an affine type A datum");
  if (alpha.a < 1 || alpha.b < 1 || alpha.a > n || alpha.b > n || alpha.a == alpha.b) domain_fail("not a root of SL_n");
}

static std::vector<int> coroot_vector(int n, FiniteRoot alpha, int k) {
  std::vector<int> v(static_cast<std::size_t>(n), 0);
  v[static_cast<std::size_t>(alpha.a - 1)] = k;
  v[static_cast<std::size_t>(alpha.b - 1)] = -k;
  return v;
}

Weight finite_root_weight(const RootDatum& affine, FiniteRoot alpha) {
  check_root(affine, alpha);
  std::vector<std::int32_t> c(static_cast<std::size_t>(affine.sl_n()), 0);
  c[static_cast<std::size_t>(alpha.a - 1)] = 1;
  c[static_cast<std::size_t>(alpha.b - 1)] = -1;
  return affine.level_zero().weight(c);
}

static std::int64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// sum_k (-1)^k C(e, k) psi(t_{k alpha^vee} x)
static LaurentPoly alternating_translates(const PsiFunction& psi, const RootDatum& affine, FiniteRoot alpha, int e,
                                          const AffinePerm& x) {
  LaurentPoly out;
  for (int k = 0; k <= e; ++k) {
    auto lam = coroot_vector(affine.sl_n(), alpha, k);
    AffinePerm y = AffinePerm::translation(lam) * x;
    LaurentPoly val = psi(weyl::from_perm(affine, y)) * binomial(e, k);
    if (k % 2) out -= val;
    else out += val;
  }
  return out;
}

bool small_grass_gkm(const PsiFunction& psi, const RootDatum& affine, FiniteRoot alpha, int d, const WeylElt& w) {
  check_root(affine, alpha);
  if (d < 1) domain_fail("GKM degree must be positive");
  LaurentPoly sum = alternating_translates(psi, affine, alpha, d, weyl::to_perm(w));
  return divide_one_minus(sum, finite_root_weight(affine, alpha), d).has_value();
}

bool small_gkm(const PsiFunction& psi, const RootDatum& affine, FiniteRoot alpha, int d, const WeylElt& w) {
  check_root(affine, alpha);
  if (d < 1) domain_fail("GKM degree must be positive");
  int n = affine.sl_n();
  std::vector<int> swap(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) swap[static_cast<std::size_t>(i)] = i + 1;
  std::swap(swap[static_cast<std::size_t>(alpha.a - 1)], swap[static_cast<std::size_t>(alpha.b - 1)]);
  AffinePerm x = weyl::to_perm(w);
  AffinePerm rx = AffinePerm::from_window(swap) * x;
  LaurentPoly sum = alternating_translates(psi, affine, alpha, d - 1, x) - alternating_translates(psi, affine, alpha, d - 1, rx);
  return divide_one_minus(sum, finite_root_weight(affine, alpha), d).has_value();
}

// ---- affine sl_2 ----

static void require_sl2(const RootDatum& d) {
  if (d.flavor() != Flavor::affine || d.sl_n() != 2) domain_fail("operation needs the affine sl_2 datum");
}

WeylElt sl2_sigma(const RootDatum& d, int j) {
  require_sl2(d);
  int m = j < 0 ? -j : j;
  std::vector<int> word;
  // sigma_{2i} = (r1 r0)^i, sigma_{2i+1} = r0 sigma_{2i}; negative indices swap the nodes.
  int first = j >= 0 ? 1 : 0;
  if (m % 2) word.push_back(1 - first);
  for (int k = 0; k < m / 2; ++k) {
    word.push_back(first);
    word.push_back(1 - first);
  }
  return weyl::from_word(d, word);
}

// (1 - x)^m * sum_{t <= a} x^t C(t+m-1, m-1), with x = e^{sign * alpha}
static LaurentPoly sl2_piece(const RootDatum& lz, int m, int a, int sign) {
  Weight x = lz.simple_root(1).scaled(sign);
  LaurentPoly s;
  for (int t = 0; t <= a; ++t) {
    std::int64_t c = m == 0 ? (t == 0 ? 1 : 0) : binomial(t + m - 1, m - 1);
    s += LaurentPoly::monomial(x.scaled(t), c);
  }
  LaurentPoly f = LaurentPoly::one_minus(x);
  for (int k = 0; k < m; ++k) s = s * f;
  return s;
}

LaurentPoly sl2_psi_closed(const RootDatum& d, int m, int j) {
  require_sl2(d);
  const RootDatum& lz = d.level_zero();
  if (m < 0) return eta(sl2_psi_closed(d, -m, -j));
  bool even_m = m % 2 == 0;
  bool even_j = j % 2 == 0;
  int i1 = even_m ? m / 2 : (m + 1) / 2;
  int i2 = even_m ? m / 2 : (m - 1) / 2;
  if (even_j && j >= 0 && j >= 2 * i1) return sl2_piece(lz, m, (j - 2 * i1) / 2, 1);
  if (!even_j && j < 0 && -j - 1 - 2 * i1 >= 0) return sl2_piece(lz, m, (-j - 1 - 2 * i1) / 2, 1);
  if (!even_j && j > 0 && j - 1 - 2 * i2 >= 0) return sl2_piece(lz, m, (j - 1 - 2 * i2) / 2, -1);
  if (even_j && j < 0 && -j - 2 - 2 * i2 >= 0) return sl2_piece(lz, m, (-j - 2 - 2 * i2) / 2, -1);
  return {};
}

PsiFunction wrongway(const RootDatum& affine, PsiFunction psi) {
  if (affine.flavor() != Flavor::affine || affine.sl_n() == 0) domain_fail("the wrong-way map needs an affine type A datum");
  const RootDatum* d = &affine;
  return [d, psi = std::move(psi)](const WeylElt& w) {
    auto part = weyl::grassmannian_part(w);
    return psi(weyl::translation(*d, part.lambda));
  };
}

}  // namespace khecke
