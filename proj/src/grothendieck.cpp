#include "khecke/grothendieck.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>

#include "khecke/errors.hpp"

namespace khecke {

using boost::multiprecision::cpp_rational;

// ---- IntHecke ----

IntHecke IntHecke::T(const AffinePerm& w, std::int64_t c) {
  IntHecke a;
  a.add(w, c);
  return a;
}

std::int64_t IntHecke::coefficient(const AffinePerm& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? 0 : it->second;
}

void IntHecke::add(const AffinePerm& w, std::int64_t c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second = checked_add(it->second, c);
    if (it->second == 0) terms_.erase(it);
  }
}

IntHecke& IntHecke::operator+=(const IntHecke& o) {
  for (const auto& [w, c] : o.terms_) add(w, c);
  return *this;
}

IntHecke& IntHecke::operator-=(const IntHecke& o) {
  for (const auto& [w, c] : o.terms_) add(w, checked_mul(-1, c));
  return *this;
}

IntHecke& IntHecke::operator*=(std::int64_t k) {
  if (k == 0) terms_.clear();
  for (auto& [w, c] : terms_) c = checked_mul(c, k);
  return *this;
}

std::vector<std::pair<AffinePerm, std::int64_t>> IntHecke::sorted() const {
  std::vector<std::tuple<int, std::vector<int>, AffinePerm, std::int64_t>> keyed;
  for (const auto& [w, c] : terms_) keyed.emplace_back(w.length(), w.word(), w, c);
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
    return std::tie(std::get<0>(a), std::get<1>(a)) < std::tie(std::get<0>(b), std::get<1>(b));
  });
  std::vector<std::pair<AffinePerm, std::int64_t>> out;
  for (auto& [len, word, w, c] : keyed) out.emplace_back(w, c);
  return out;
}

HeckeMonomial zero_hecke_product(const AffinePerm& x, const AffinePerm& v) {
  AffinePerm cur = x;
  int sign = 1;
  for (int j : v.word()) {
    if (cur.right_descent(j)) sign = -sign;
    else cur = cur.times_simple(j);
  }
  return {cur, sign};
}

IntHecke operator*(const IntHecke& a, const IntHecke& b) {
  IntHecke out;
  std::vector<std::pair<std::vector<int>, std::int64_t>> right;
  for (const auto& [v, c] : b.terms()) right.emplace_back(v.word(), c);
  for (const auto& [u, c] : a.terms())
    for (const auto& [word, d] : right) {
      AffinePerm cur = u;
      int sign = 1;
      for (int j : word) {
        if (cur.right_descent(j)) sign = -sign;
        else cur = cur.times_simple(j);
      }
      out.add(cur, checked_mul(checked_mul(c, d), sign));
    }
  return out;
}

HeckeElt to_hecke(const HeckeRing& ring, const IntHecke& a) {
  HeckeElt out;
  for (const auto& [w, c] : a.terms()) out.add(weyl::from_perm(ring.weyl_datum(), w), ring.constant(c));
  return out;
}

IntHecke from_hecke(const HeckeElt& a) {
  IntHecke out;
  for (const auto& [w, c] : a.terms()) {
    auto k = c.as_constant();
    if (!k) domain_fail("Hecke element has non-constant coefficients");
    out.add(weyl::to_perm(w), *k);
  }
  return out;
}

// ---- AffineEngine ----

AffineEngine::AffineEngine(int n) : n_(n) {
  if (n < 2 || n > AffinePerm::kMaxN) domain_fail("n must be between 2 and " + std::to_string(AffinePerm::kMaxN));
  datum_ = RootDatum::affine_sl(n);
}

void AffineEngine::check_label(const Partition& lambda) const {
  if (lambda.largest() >= n_)
    domain_fail("partition " + lambda.comma_label() + " is not " + std::to_string(n_ - 1) + "-bounded");
}

AffinePerm AffineEngine::element(const Partition& lambda) const {
  return weyl::grassmannian_from_partition(n_, lambda);
}

Partition AffineEngine::label(const AffinePerm& w) const { return weyl::partition_of(w); }

std::vector<Partition> AffineEngine::labels(int max_degree) const { return partitions_up_to(max_degree, n_ - 1); }

std::vector<Partition> AffineEngine::labels_of_degree(int d) const { return partitions_of(d, n_ - 1); }

IntHecke AffineEngine::kappa(int i) const {
  IntHecke out;
  for (const auto& x : weyl::cyclically_decreasing(n_, i)) out.add(x, 1);
  return out;
}

const IntHecke& AffineEngine::kappa_product(const Partition& mu) const {
  {
    std::lock_guard lock(mutex_);
    if (auto it = kappa_memo_.find(mu); it != kappa_memo_.end()) return it->second;
  }
  check_label(mu);
  IntHecke value;
  if (mu.empty()) {
    value = IntHecke::T(AffinePerm::identity(n_));
  } else {
    std::vector<int> rest(mu.parts().begin(), mu.parts().end() - 1);
    value = kappa_product(Partition(rest)) * kappa(mu.parts().back());
  }
  std::lock_guard lock(mutex_);
  return kappa_memo_.try_emplace(mu, std::move(value)).first->second;
}

std::int64_t AffineEngine::kappa_coefficient(const Partition& mu, const AffinePerm& w) const {
  if (mu.size() < w.length()) return 0;
  return kappa_product(mu).coefficient(w);
}

SymFunc AffineEngine::G(const AffinePerm& w, int max_degree) const {
  SymFunc out(Basis::m, n_);
  for (int d = w.length(); d <= max_degree; ++d)
    for (const auto& mu : labels_of_degree(d)) out.add(mu, kappa_coefficient(mu, w));
  return out;
}

SymFunc AffineEngine::F(const AffinePerm& w) const { return G(w, w.length()); }

namespace {

// Gauss-Jordan inverse over Q; the caller checks integrality.
std::vector<std::vector<cpp_rational>> invert(std::vector<std::vector<cpp_rational>> a) {
  const std::size_t n = a.size();
  std::vector<std::vector<cpp_rational>> inv(n, std::vector<cpp_rational>(n));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) throw VerificationError("pairing matrix is singular");
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    cpp_rational p = a[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      a[col][j] /= p;
      inv[col][j] /= p;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      cpp_rational f = a[r][col];
      for (std::size_t j = 0; j < n; ++j) {
        a[r][j] -= f * a[col][j];
        inv[r][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

}  // namespace

const AffineEngine::Matrix& AffineEngine::dual_rows(int d, bool top) const {
  {
    std::lock_guard lock(mutex_);
    if (auto it = dual_memo_.find({d, top}); it != dual_memo_.end()) return it->second;
  }
  std::vector<Partition> labs = top ? labels_of_degree(d) : labels(d);
  std::vector<AffinePerm> elems;
  for (const auto& l : labs) elems.push_back(element(l));
  const std::size_t n = labs.size();
  // P[mu][u] = <h_mu, G_u> = [T_u] kappa_mu. We want X with X P = 1.
  std::vector<std::vector<cpp_rational>> p(n, std::vector<cpp_rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) p[i][j] = kappa_coefficient(labs[i], elems[j]);
  auto x = invert(p);
  Matrix rows;
  for (std::size_t u = 0; u < n; ++u) {
    SymFunc f(Basis::h, n_);
    for (std::size_t mu = 0; mu < n; ++mu) {
      const cpp_rational& v = x[u][mu];
      if (denominator(v) != 1) throw VerificationError("dual basis has a non-integral coefficient");
      f.add(labs[mu], static_cast<std::int64_t>(numerator(v)));
    }
    rows.emplace(labs[u], std::move(f));
  }
  std::lock_guard lock(mutex_);
  return dual_memo_.try_emplace({d, top}, std::move(rows)).first->second;
}

SymFunc AffineEngine::g(const Partition& lambda) const {
  check_label(lambda);
  return dual_rows(lambda.size(), false).at(lambda);
}

SymFunc AffineEngine::kschur(const Partition& lambda) const {
  check_label(lambda);
  return dual_rows(lambda.size(), true).at(lambda);
}

IntHecke AffineEngine::phi(const SymFunc& f) const {
  if (f.basis() != Basis::h) domain_fail("phi needs an h expansion");
  IntHecke out;
  for (const auto& [mu, c] : f.terms()) {
    check_label(mu);
    IntHecke term = kappa_product(mu);
    out += c * term;
  }
  return out;
}

SymFunc AffineEngine::h_to_g(const SymFunc& f) const {
  SymFunc out(Basis::g, n_);
  IntHecke image = phi(f);
  for (const auto& [w, c] : image.terms())
    if (w.is_grassmannian()) out.add(label(w), c);
  return out;
}

SymFunc AffineEngine::h_to_kschur(const SymFunc& f) const {
  if (f.basis() != Basis::h) domain_fail("h_to_kschur needs an h expansion");
  SymFunc out(Basis::kschur, n_);
  for (const auto& [mu, c] : f.terms()) {
    check_label(mu);
    for (const auto& u : labels_of_degree(mu.size())) out.add(u, checked_mul(c, kappa_coefficient(mu, element(u))));
  }
  return out;
}

SymFunc AffineEngine::G_in_F(const AffinePerm& w, int max_degree) const {
  SymFunc gm = G(w, max_degree);
  SymFunc out(Basis::F, n_);
  for (const auto& u : labels(max_degree))
    if (u.size() >= w.length()) out.add(u, hall_pair(kschur(u), gm.homogeneous_part(u.size())));
  return out;
}

SymFunc AffineEngine::G_in_G(const AffinePerm& w, int max_length) const {
  return m_to_G(G(w, max_length), max_length);
}

SymFunc AffineEngine::m_to_G(const SymFunc& f, int max_degree) const {
  if (f.basis() != Basis::m) domain_fail("m_to_G needs an m expansion");
  SymFunc rest(Basis::m, n_);
  for (const auto& [p, c] : f.terms())
    if (p.largest() < n_ && p.size() <= max_degree) rest.add(p, c);
  SymFunc out(Basis::G, n_);
  for (int d = std::max(rest.min_degree(), 0); !rest.is_zero() && d <= max_degree; ++d) {
    SymFunc part = rest.homogeneous_part(d);
    for (const auto& u : labels_of_degree(d)) {
      std::int64_t c = hall_pair(kschur(u), part);
      if (c == 0) continue;
      out.add(u, c);
      rest -= c * G(element(u), max_degree);
    }
    if (!rest.homogeneous_part(d).is_zero()) throw VerificationError("G peeling left a remainder");
  }
  return out;
}

SymFunc AffineEngine::G_product(const Partition& a, const Partition& b, int max_degree) const {
  SymFunc x = G(element(a), max_degree), y = G(element(b), max_degree);
  SymFunc prod(Basis::m, n_);
  for (int i = x.min_degree(); i >= 0 && i <= max_degree; ++i)
    for (int j = y.min_degree(); j >= 0 && i + j <= max_degree; ++j) {
      SymFunc xi = x.homogeneous_part(i), yj = y.homogeneous_part(j);
      if (!xi.is_zero() && !yj.is_zero()) prod += multiply(xi, yj);
    }
  return m_to_G(prod, max_degree);
}

SymTensor AffineEngine::g_coproduct(const Partition& lambda) const {
  SymTensor dh = coproduct_h(g(lambda));
  // h_mu (x) h_nu -> (grassmannian part of kappa_mu) (x) (same for kappa_nu)
  std::map<Partition, SymFunc> cache;
  auto expand = [&](const Partition& mu) -> const SymFunc& {
    auto it = cache.find(mu);
    if (it == cache.end()) it = cache.emplace(mu, h_to_g(SymFunc::single(Basis::h, mu, 1, n_))).first;
    return it->second;
  };
  SymTensor out(Basis::g, Basis::g, n_);
  for (const auto& [key, c] : dh.terms()) {
    const SymFunc& a = expand(key.first);
    const SymFunc& b = expand(key.second);
    for (const auto& [p, x] : a.terms())
      for (const auto& [q, y] : b.terms()) out.add(p, q, checked_mul(c, checked_mul(x, y)));
  }
  return out;
}

SymFunc AffineEngine::g_multiply(const Partition& a, const Partition& b) const {
  return h_to_g(multiply(g(a), g(b)));
}

bool AffineEngine::cauchy_check(int max_degree) const {
  auto labs = labels(max_degree);
  for (const auto& lam : labs)
    for (const auto& mu : labs) {
      std::int64_t rhs = 0;
      for (const auto& v : labs) {
        std::int64_t gv = g(v).coefficient(lam);
        if (gv == 0) continue;
        rhs = checked_add(rhs, checked_mul(gv, kappa_coefficient(mu, element(v))));
      }
      if (rhs != (lam == mu ? 1 : 0)) return false;
    }
  return true;
}

}  // namespace khecke
