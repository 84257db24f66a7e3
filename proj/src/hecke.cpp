#include "khecke/hecke.hpp"

#include "khecke/errors.hpp"

namespace khecke {

// ---- HeckeElt / TensorElt ----

LaurentPoly HeckeElt::coefficient(const WeylElt& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? LaurentPoly{} : it->second;
}

void HeckeElt::add(const WeylElt& w, const LaurentPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

HeckeElt& HeckeElt::operator+=(const HeckeElt& o) {
  for (const auto& [w, c] : o.terms_) add(w, c);
  return *this;
}

HeckeElt& HeckeElt::operator-=(const HeckeElt& o) {
  for (const auto& [w, c] : o.terms_) add(w, -c);
  return *this;
}

LaurentPoly TensorElt::coefficient(const WeylElt& u, const WeylElt& v) const {
  auto it = terms_.find({u, v});
  return it == terms_.end() ? LaurentPoly{} : it->second;
}

void TensorElt::add(const WeylElt& u, const WeylElt& v, const LaurentPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace({u, v}, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

TensorElt& TensorElt::operator+=(const TensorElt& o) {
  for (const auto& [k, c] : o.terms_) add(k.first, k.second, c);
  return *this;
}

// ---- HeckeRing ----

HeckeRing::HeckeRing(RootDatum::Ptr weyl)
    : HeckeRing(weyl, weyl->flavor() == Flavor::affine ? Coefficients::level_zero : Coefficients::native) {}

HeckeRing::HeckeRing(RootDatum::Ptr weyl, Coefficients c) : weyl_(std::move(weyl)) {
  if (weyl_->flavor() == Flavor::level_zero) domain_fail("Hecke ring needs a faithful Weyl datum");
  coeffs_ = (c == Coefficients::level_zero) ? weyl_->level_zero_ptr() : weyl_;
}

LaurentPoly HeckeRing::act(const WeylElt& w, const LaurentPoly& p) const { return weyl::apply(w, p); }

HeckeElt HeckeRing::one() const { return T(weyl::identity(*weyl_)); }

HeckeElt HeckeRing::T(const WeylElt& w, std::int64_t c) const {
  HeckeElt a;
  a.add(w, constant(c));
  return a;
}

HeckeElt HeckeRing::T(std::string_view word) const {
  auto letters = parse_word(word);
  WeylElt w = weyl::from_word(*weyl_, letters);
  if (w.length() != static_cast<int>(letters.size())) domain_fail("word '" + std::string(word) + "' is not reduced");
  return T(w);
}

HeckeElt HeckeRing::scalar(const LaurentPoly& q) const {
  HeckeElt a;
  a.add(weyl::identity(*weyl_), q);
  return a;
}

HeckeElt HeckeRing::T_i_times(int i, const HeckeElt& a) const {
  // T_i c T_v = (T_i . c) T_v + (r_i c) T_i T_v
  HeckeElt out;
  const RootDatum& cd = *coeffs_;
  for (const auto& [v, c] : a.terms()) {
    out.add(v, demazure(cd, i, c));
    LaurentPoly rc = reflect(cd, i, c);
    if (weyl::has_left_descent(v, i)) out.add(v, -rc);
    else out.add(weyl::lmul(i, v), rc);
  }
  return out;
}

HeckeElt HeckeRing::T_word_times(std::span<const int> word, const HeckeElt& a) const {
  HeckeElt cur = a;
  for (auto it = word.rbegin(); it != word.rend(); ++it) cur = T_i_times(*it, cur);
  return cur;
}

HeckeElt HeckeRing::mul(const HeckeElt& a, const HeckeElt& b) const {
  HeckeElt out;
  for (const auto& [u, c] : a.terms()) out += scalar_times(c, T_word_times(u.word(), b));
  return out;
}

HeckeElt HeckeRing::times_scalar(const HeckeElt& a, const LaurentPoly& q) const { return mul(a, scalar(q)); }

HeckeElt HeckeRing::scalar_times(const LaurentPoly& q, const HeckeElt& a) const {
  HeckeElt out;
  for (const auto& [w, c] : a.terms()) out.add(w, q * c);
  return out;
}

HeckeElt HeckeRing::group_element(const WeylElt& w) const {
  HeckeElt cur = one();
  for (auto it = w.word().rbegin(); it != w.word().rend(); ++it) {
    // r_i = 1 + (1 - e^{alpha_i}) T_i
    HeckeElt next = cur;
    next += scalar_times(LaurentPoly::one_minus(root(*it)), T_i_times(*it, cur));
    cur = std::move(next);
  }
  return cur;
}

HeckeElt HeckeRing::y_element(const WeylElt& w) const {
  HeckeElt cur = one();
  for (auto it = w.word().rbegin(); it != w.word().rend(); ++it) cur = cur + T_i_times(*it, cur);
  return cur;
}

LaurentPoly HeckeRing::act_on(const HeckeElt& a, const LaurentPoly& p) const {
  LaurentPoly out;
  for (const auto& [w, c] : a.terms()) {
    LaurentPoly x = p;
    for (auto it = w.word().rbegin(); it != w.word().rend(); ++it) x = demazure(*coeffs_, *it, x);
    out += c * x;
  }
  return out;
}

TensorElt HeckeRing::T_i_on_tensor(int i, const TensorElt& t) const {
  TensorElt out;
  LaurentPoly f = LaurentPoly::one_minus(root(i));
  for (const auto& [key, c] : t.terms()) {
    const auto& [u, v] = key;
    HeckeElt x;
    x.add(u, c);
    HeckeElt tx = T_i_times(i, x);
    bool v_descends = weyl::has_left_descent(v, i);
    WeylElt tv = v_descends ? v : weyl::lmul(i, v);
    LaurentPoly sign = constant(v_descends ? -1 : 1);
    for (const auto& [u2, c2] : tx.terms()) {
      out.add(u2, v, c2);
      out.add(u2, tv, f * c2 * sign);
    }
    out.add(u, tv, c * sign);
  }
  return out;
}

TensorElt HeckeRing::act_on_tensor(const HeckeElt& a, const TensorElt& t) const {
  TensorElt out;
  for (const auto& [w, c] : a.terms()) {
    TensorElt cur = t;
    for (auto it = w.word().rbegin(); it != w.word().rend(); ++it) cur = T_i_on_tensor(*it, cur);
    for (const auto& [key, x] : cur.terms()) out.add(key.first, key.second, c * x);
  }
  return out;
}

TensorElt HeckeRing::coproduct(const HeckeElt& a) const {
  TensorElt unit;
  WeylElt e = weyl::identity(*weyl_);
  unit.add(e, e, constant(1));
  return act_on_tensor(a, unit);
}

TensorElt HeckeRing::structure_constants(const WeylElt& w) const { return coproduct(T(w)); }

// ---- phi0 ----

static LaurentPoly constant_like(const LaurentPoly& c, std::int64_t value) {
  if (value == 0 || c.is_zero()) return {};
  return LaurentPoly::monomial(c.terms().front().exponent.scaled(0), value);
}

HeckeElt phi0(const HeckeElt& a) {
  HeckeElt out;
  for (const auto& [w, c] : a.terms()) out.add(w, constant_like(c, phi0(c)));
  return out;
}

TensorElt phi0(const TensorElt& t) {
  TensorElt out;
  for (const auto& [k, c] : t.terms()) out.add(k.first, k.second, constant_like(c, phi0(c)));
  return out;
}

}  // namespace khecke
