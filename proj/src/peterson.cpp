#include "khecke/peterson.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>

#include "khecke/errors.hpp"
#include "khecke/localization.hpp"

namespace khecke {

using boost::multiprecision::cpp_rational;

namespace {

std::int64_t parity_sign(int k) { return k % 2 == 0 ? 1 : -1; }

void add_to(GrassExpansion& e, const Partition& p, std::int64_t c) {
  if (c == 0) return;
  auto& slot = e[p];
  slot = checked_add(slot, c);
  if (slot == 0) e.erase(p);
}

bool grass_less(const AffinePerm& a, const AffinePerm& b) {
  if (a.length() != b.length()) return a.length() < b.length();
  return a.word() < b.word();
}

}  // namespace

Peterson::Peterson(int n) : Peterson(std::make_shared<const AffineEngine>(n)) {}

Peterson::Peterson(std::shared_ptr<const AffineEngine> engine)
    : engine_(std::move(engine)), ring_(engine_->datum_ptr()) {
  const RootDatum& lz = ring_.coeff_datum();
  for (int j = 1; j < engine_->n(); ++j) {
    const Weight& w = lz.fundamental_weight(j);
    probes_.push_back(LaurentPoly::monomial(w) - ring_.constant(1));
    probes_.push_back(LaurentPoly::monomial(-w) - ring_.constant(1));
  }
}

const IntHecke& Peterson::fomin_stanley_elt(const Partition& w) const {
  {
    std::lock_guard lock(mutex_);
    if (auto it = fs_memo_.find(w); it != fs_memo_.end()) return it->second;
  }
  IntHecke value = engine_->phi(engine_->g(w));
  AffinePerm lead = engine_->element(w);
  for (const auto& [x, c] : value.terms())
    if (x.is_grassmannian() && (x != lead || c != 1))
      throw VerificationError("phi(g_" + w.label() + ") has an unexpected Grassmannian term");
  if (value.coefficient(lead) != 1) throw VerificationError("phi(g_" + w.label() + ") lacks its leading term");
  std::lock_guard lock(mutex_);
  return fs_memo_.try_emplace(w, std::move(value)).first->second;
}

bool Peterson::l0_membership(const IntHecke& b) const {
  HeckeElt hb = to_hecke(ring_, b);
  for (const auto& q : probes_)
    if (!phi0(ring_.times_scalar(hb, q)).is_zero()) return false;
  return true;
}

IntHecke Peterson::fomin_stanley_by_linear_system(const Partition& w) const {
  engine_->check_label(w);
  const int len = w.size();
  AffinePerm lead = engine_->element(w);
  std::vector<AffinePerm> unknowns;
  for (const auto& x : weyl::enumerate_perms(n(), len))
    if (!x.is_grassmannian()) unknowns.push_back(x);

  // Column for T_x: the probes' images phi_0(T_x q), flattened.
  std::map<std::pair<std::size_t, AffinePerm>, std::size_t> row_of;
  auto column = [&](const AffinePerm& x) {
    std::vector<std::pair<std::size_t, std::int64_t>> col;
    HeckeElt tx = to_hecke(ring_, IntHecke::T(x));
    for (std::size_t k = 0; k < probes_.size(); ++k)
      for (const auto& [y, c] : from_hecke(phi0(ring_.times_scalar(tx, probes_[k]))).terms()) {
        auto [it, fresh] = row_of.try_emplace({k, y}, row_of.size());
        col.emplace_back(it->second, c);
      }
    return col;
  };
  std::vector<std::vector<std::pair<std::size_t, std::int64_t>>> cols;
  for (const auto& x : unknowns) cols.push_back(column(x));
  auto rhs_col = column(lead);

  const std::size_t rows = row_of.size(), m = unknowns.size();
  std::vector<std::vector<cpp_rational>> a(rows, std::vector<cpp_rational>(m + 1));
  for (std::size_t j = 0; j < m; ++j)
    for (auto [r, c] : cols[j]) a[r][j] += c;
  for (auto [r, c] : rhs_col) a[r][m] -= c;

  std::size_t rank = 0;
  std::vector<std::size_t> pivot_col;
  for (std::size_t j = 0; j < m && rank < rows; ++j) {
    std::size_t p = rank;
    while (p < rows && a[p][j] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[rank]);
    cpp_rational inv = 1 / a[rank][j];
    for (auto& v : a[rank]) v *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || a[r][j] == 0) continue;
      cpp_rational f = a[r][j];
      for (std::size_t k = j; k <= m; ++k) a[r][k] -= f * a[rank][k];
    }
    pivot_col.push_back(j);
    ++rank;
  }
  for (std::size_t r = rank; r < rows; ++r)
    if (a[r][m] != 0) throw VerificationError("membership system for " + w.label() + " is inconsistent");
  if (rank != m) throw VerificationError("membership system for " + w.label() + " is underdetermined");

  IntHecke out = IntHecke::T(lead);
  for (std::size_t r = 0; r < rank; ++r) {
    const cpp_rational& v = a[r][m];
    if (denominator(v) != 1) throw VerificationError("membership system has a non-integral solution");
    out.add(unknowns[pivot_col[r]], static_cast<std::int64_t>(numerator(v)));
  }
  return out;
}

GrassExpansion Peterson::expand_in_fs_basis(const IntHecke& b) const {
  GrassExpansion out;
  IntHecke rest = b;
  while (!rest.is_zero()) {
    const AffinePerm* best = nullptr;
    for (const auto& [x, c] : rest.terms())
      if (x.is_grassmannian() && (!best || grass_less(x, *best))) best = &x;
    if (!best) domain_fail("element is not in the span of the phi_0(k_w)");
    AffinePerm x = *best;
    std::int64_t c = rest.coefficient(x);
    Partition lab = engine_->label(x);
    if (lab.largest() >= n()) domain_fail("element is not in the span of the phi_0(k_w)");
    add_to(out, lab, c);
    rest -= c * fomin_stanley_elt(lab);
  }
  return out;
}

GrassExpansion Peterson::pieri(int i, const Partition& v) const {
  if (i < 1 || i >= n()) domain_fail("Pieri index must lie in 1.." + std::to_string(n() - 1));
  AffinePerm vv = engine_->element(v);
  std::map<AffinePerm, std::int64_t> counts;
  for (const auto& x : weyl::cyclically_decreasing(n(), i)) {
    HeckeMonomial p = zero_hecke_product(x, vv);
    if (p.element.is_grassmannian()) ++counts[p.element];
  }
  GrassExpansion out;
  for (const auto& [w, count] : counts)
    add_to(out, engine_->label(w), parity_sign(w.length() - v.size() - i) * count);
  return out;
}

GrassExpansion Peterson::structure_by_sum(const Partition& u, const Partition& v) const {
  AffinePerm vv = engine_->element(v);
  GrassExpansion out;
  for (const auto& [x, k] : fomin_stanley_elt(u).terms()) {
    HeckeMonomial p = zero_hecke_product(x, vv);
    if (!p.element.is_grassmannian()) continue;
    add_to(out, engine_->label(p.element),
           checked_mul(parity_sign(p.element.length() - v.size() - x.length()), k));
  }
  return out;
}

GrassExpansion Peterson::structure_by_product(const Partition& u, const Partition& v) const {
  return expand_in_fs_basis(fomin_stanley_elt(u) * fomin_stanley_elt(v));
}

GrassExpansion Peterson::structure_d(const Partition& u, const Partition& v) const {
  GrassExpansion a = structure_by_sum(u, v);
  if (a != structure_by_product(u, v))
    throw VerificationError("structure constants for (" + u.label() + ", " + v.label() + ") disagree");
  return a;
}

// ---- affine sl_2, equivariant ----

HeckeElt equivariant_k_sl2(const RootDatum::Ptr& d, const WeylElt& w, int cutoff) {
  if (d->flavor() != Flavor::affine || d->sl_n() != 2) domain_fail("equivariant k_w is available for affine sl_2 only");
  if (!weyl::is_grassmannian(w)) domain_fail("k_w needs a Grassmannian element");
  if (cutoff <= w.length()) throw TruncationError("cutoff " + std::to_string(cutoff) + " does not exceed the length of w");

  Localizer loc(d, Torus::small);
  std::vector<WeylElt> points;  // the Grassmannian chain up to w
  for (int m = 0; m <= w.length(); ++m) points.push_back(sl2_sigma(*d, m));

  // psi^u(y) for Grassmannian u, y, and the diagonal divisors.
  const std::size_t np = points.size();
  std::vector<std::vector<LaurentPoly>> grass(np, std::vector<LaurentPoly>(np));
  for (std::size_t a = 0; a < np; ++a)
    for (std::size_t b = a; b < np; ++b) grass[a][b] = loc.psi(points[a], points[b]);
  std::vector<std::vector<Weight>> divisors;
  for (const auto& y : points) divisors.push_back(weyl::inversions(y, d->level_zero()));

  HeckeRing ring(d);
  HeckeElt out;
  for (const auto& x : weyl::enumerate(*d, cutoff)) {
    PsiFunction f = wrongway(*d, loc.function(x));
    std::vector<LaurentPoly> c(np);
    for (std::size_t b = 0; b < np; ++b) {
      LaurentPoly r = f(points[b]);
      for (std::size_t a = 0; a < b; ++a) r -= c[a] * grass[a][b];
      for (const auto& beta : divisors[b]) {
        auto q = divide_one_minus(r, beta);
        if (!q) throw VerificationError("wrong-way expansion is not integral");
        r = std::move(*q);
      }
      c[b] = std::move(r);
    }
    if (c.back().is_zero()) continue;
    if (x.length() == cutoff)
      throw TruncationError("k_" + word_label(w.word()) + " has support at the cutoff length " + std::to_string(cutoff));
    out.add(x, c.back());
  }

  // Centralizer check: k commutes with e^omega.
  LaurentPoly ew = LaurentPoly::monomial(d->level_zero().fundamental_weight(1));
  if (ring.times_scalar(out, ew) != ring.scalar_times(ew, out))
    throw TruncationError("k_" + word_label(w.word()) + " does not close below length " + std::to_string(cutoff));
  for (const auto& [x, c] : out.terms())
    if (weyl::is_grassmannian(x) && !(x == w && c == ring.constant(1)))
      throw VerificationError("k_" + word_label(w.word()) + " has an unexpected Grassmannian term");
  return out;
}

// ---- conjecture scans ----

namespace {

std::string sym_term(Basis b, const Partition& p) { return std::string(basis_name(b)) + "_" + (p.empty() ? "0" : p.label()); }

void check_sign(ConjectureReport& r, std::int64_t c, int parity, const std::string& where) {
  if (c != 0 && parity_sign(parity) * c < 0) r.violations.push_back(where + ": coefficient " + std::to_string(c));
}

}  // namespace

std::vector<ConjectureReport> conjecture_scan(const Peterson& p, int bound) {
  const AffineEngine& e = p.engine();
  const int n = p.n();
  auto report = [&](std::string id) {
    ConjectureReport r;
    r.id = std::move(id);
    r.n = n;
    r.bound = bound;
    return r;
  };
  const auto labs = e.labels(bound);

  ConjectureReport cj = report("k-homology-signs");
  for (const auto& u : labs) {
    for (const auto& [x, c] : p.fomin_stanley_elt(u).terms())
      check_sign(cj, c, x.length() - u.size(), "k_" + u.label() + " at T_" + word_label(x.word()));
    ++cj.checked;
  }
  for (std::size_t i = 0; i < labs.size(); ++i)
    for (std::size_t j = i; j < labs.size(); ++j) {
      const auto &u = labs[i], &v = labs[j];
      if (u.empty() || v.empty() || u.size() + v.size() > bound) continue;
      for (const auto& [w, c] : e.g_multiply(u, v).terms())
        check_sign(cj, c, w.size() - u.size() - v.size(), "d(" + u.label() + "," + v.label() + ")^" + w.label());
      ++cj.checked;
    }

  ConjectureReport g1 = report("g-kschur-positive");
  for (const auto& lam : labs) {
    for (const auto& [mu, c] : e.h_to_kschur(e.g(lam)).terms())
      if (c <= 0) g1.violations.push_back("g_" + lam.label() + ": coefficient " + std::to_string(c) + " on kschur_" + mu.label());
    ++g1.checked;
  }

  ConjectureReport g2 = report("g-coproduct-alternating");
  for (const auto& lam : labs) {
    for (const auto& [key, c] : e.g_coproduct(lam).terms()) {
      std::string where = "Delta(g_" + lam.label() + ") at " + sym_term(Basis::g, key.first) + "(x)" + sym_term(Basis::g, key.second);
      if (key.first.size() + key.second.size() > lam.size()) g2.violations.push_back(where + ": degree too large");
      check_sign(g2, c, lam.size() - key.first.size() - key.second.size(), where);
    }
    ++g2.checked;
  }

  ConjectureReport G1 = report("G-expansion-alternating");
  for (const auto& w : weyl::enumerate_perms(n, bound)) {
    for (const auto& [v, c] : e.G_in_G(w, bound).terms())
      check_sign(G1, c, v.size() - w.length(), "G_" + word_label(w.word()) + " at G_" + v.label());
    ++G1.checked;
  }

  ConjectureReport G2 = report("G-in-F-alternating");
  for (const auto& lam : labs) {
    for (const auto& [mu, c] : e.G_in_F(e.element(lam), bound).terms())
      check_sign(G2, c, mu.size() - lam.size(), "G_" + lam.label() + " at F_" + mu.label());
    ++G2.checked;
  }

  // Same constants as the g coproduct; both the sign pattern and the equality are checked.
  ConjectureReport G3 = report("G-product-alternating");
  std::map<std::pair<Partition, Partition>, GrassExpansion> from_coproduct;
  for (const auto& lam : labs)
    for (const auto& [key, c] : e.g_coproduct(lam).terms()) from_coproduct[key][lam] = c;
  for (std::size_t i = 0; i < labs.size(); ++i)
    for (std::size_t j = i; j < labs.size(); ++j) {
      const auto &a = labs[i], &b = labs[j];
      if (a.size() + b.size() > bound) continue;
      GrassExpansion got;
      for (const auto& [lam, c] : e.G_product(a, b, bound).terms()) {
        std::string where = "G_" + a.label() + " G_" + b.label() + " at G_" + lam.label();
        if (lam.size() < a.size() + b.size()) G3.violations.push_back(where + ": degree too small");
        check_sign(G3, c, lam.size() - a.size() - b.size(), where);
        got[lam] = c;
      }
      if (got != from_coproduct[{a, b}])
        G3.violations.push_back("G_" + a.label() + " G_" + b.label() + ": differs from the g coproduct constants");
      ++G3.checked;
    }

  return {cj, g1, g2, G1, G2, G3};
}

std::vector<ConjectureReport> cross_rank_scan(const AffineEngine& lower, const AffineEngine& upper, int bound) {
  if (upper.n() != lower.n() + 1) domain_fail("cross-rank scan needs engines for n and n+1");
  ConjectureReport g3{"g-cross-rank-alternating", lower.n(), bound, 0, {}};
  for (const auto& lam : lower.labels(bound)) {
    for (const auto& [mu, c] : upper.h_to_g(lower.g(lam)).terms())
      check_sign(g3, c, lam.size() - mu.size(), "g^(" + std::to_string(lower.n() - 1) + ")_" + lam.label() + " at g_" + mu.label());
    ++g3.checked;
  }
  ConjectureReport G4{"G-cross-rank-alternating", lower.n(), bound, 0, {}};
  for (const auto& mu : upper.labels(bound)) {
    SymFunc series = upper.G(upper.element(mu), bound);
    for (const auto& [lam, c] : lower.m_to_G(series, bound).terms())
      check_sign(G4, c, lam.size() - mu.size(), "G^(" + std::to_string(upper.n() - 1) + ")_" + mu.label() + " at G_" + lam.label());
    ++G4.checked;
  }
  return {g3, G4};
}

}  // namespace khecke
