#include "khecke/cartan.hpp"

#include <algorithm>
#include <atomic>
#include <boost/multiprecision/cpp_int.hpp>
#include <cctype>
#include <charconv>
#include <map>

#include "khecke/errors.hpp"

namespace khecke {

using boost::multiprecision::cpp_rational;

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer overflow in addition");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer overflow in product");
  return r;
}

// ---- Weight ----

Weight::Weight(std::uint32_t datum, std::span<const std::int32_t> coords) : datum_(datum) {
  if (coords.size() > kMaxLatticeRank) domain_fail("lattice rank too large");
  size_ = static_cast<std::uint8_t>(coords.size());
  std::copy(coords.begin(), coords.end(), c_.begin());
}

bool Weight::is_zero() const {
  return std::all_of(c_.begin(), c_.begin() + size_, [](std::int32_t x) { return x == 0; });
}

static void same_datum(const Weight& a, const Weight& b) {
  if (a.datum() != b.datum()) domain_fail("weights belong to different root data");
}

Weight Weight::operator+(const Weight& o) const {
  same_datum(*this, o);
  Weight r = *this;
  for (std::size_t i = 0; i < size_; ++i) r.c_[i] += o.c_[i];
  return r;
}

Weight Weight::operator-(const Weight& o) const {
  same_datum(*this, o);
  Weight r = *this;
  for (std::size_t i = 0; i < size_; ++i) r.c_[i] -= o.c_[i];
  return r;
}

Weight Weight::operator-() const { return scaled(-1); }

Weight Weight::scaled(std::int32_t k) const {
  Weight r = *this;
  for (std::size_t i = 0; i < size_; ++i) r.c_[i] *= k;
  return r;
}

std::strong_ordering operator<=>(const Weight& a, const Weight& b) {
  if (auto c = a.datum_ <=> b.datum_; c != 0) return c;
  for (std::size_t i = 0; i < kMaxLatticeRank; ++i)
    if (auto c = a.c_[i] <=> b.c_[i]; c != 0) return c;
  return a.size_ <=> b.size_;
}

std::size_t WeightHash::operator()(const Weight& w) const {
  std::size_t h = w.datum() * 0x9e3779b97f4a7c15ULL;
  for (auto x : w.coords()) h = (h ^ static_cast<std::size_t>(x + 0x40000000)) * 0x100000001b3ULL;
  return h;
}

// ---- RootDatum ----

namespace {

std::uint32_t next_datum_id() {
  static std::atomic<std::uint32_t> counter{1};
  return counter++;
}

std::vector<std::vector<int>> finite_cartan(char family, int r) {
  std::vector<std::vector<int>> a(r, std::vector<int>(r, 0));
  for (int i = 0; i < r; ++i) a[i][i] = 2;
  auto link = [&](int i, int j) { a[i][j] = a[j][i] = -1; };
  switch (family) {
    case 'A':
      for (int i = 0; i + 1 < r; ++i) link(i, i + 1);
      break;
    case 'B':
    case 'C':
      if (r < 2) domain_fail("type B/C needs rank >= 2");
      for (int i = 0; i + 1 < r; ++i) link(i, i + 1);
      if (family == 'B') a[r - 1][r - 2] = -2;
      else a[r - 2][r - 1] = -2;
      break;
    case 'D':
      if (r < 4) domain_fail("type D needs rank >= 4");
      for (int i = 0; i + 2 < r; ++i) link(i, i + 1);
      link(r - 3, r - 1);
      break;
    case 'G':
      if (r != 2) domain_fail("type G exists only in rank 2");
      a[0][1] = -1;
      a[1][0] = -3;
      break;
    default:
      domain_fail(std::string("unsupported Cartan type ") + family);
  }
  return a;
}

void validate_gcm(const std::vector<std::vector<int>>& a) {
  const std::size_t r = a.size();
  for (std::size_t i = 0; i < r; ++i) {
    if (a[i].size() != r) domain_fail("Cartan matrix must be square");
    if (a[i][i] != 2) domain_fail("Cartan matrix diagonal must be 2");
    for (std::size_t j = 0; j < r; ++j) {
      if (i == j) continue;
      if (a[i][j] > 0) domain_fail("off-diagonal Cartan entries must be <= 0");
      if ((a[i][j] == 0) != (a[j][i] == 0)) domain_fail("Cartan matrix zero pattern must be symmetric");
    }
  }
}

// Rational left inverse of the column matrix of simple roots, or empty if the
// roots are dependent.
std::vector<std::vector<cpp_rational>> left_inverse(const std::vector<Weight>& roots, std::size_t dim) {
  const std::size_t r = roots.size();
  // Row-reduce [R | I]; the pivot rows of the right block form the left inverse.
  std::vector<std::vector<cpp_rational>> m(dim, std::vector<cpp_rational>(r + dim));
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < r; ++j) m[i][j] = roots[j][i];
    m[i][r + i] = 1;
  }
  std::size_t row = 0;
  std::vector<std::size_t> pivot_row(r);
  for (std::size_t col = 0; col < r; ++col) {
    std::size_t p = row;
    while (p < dim && m[p][col] == 0) ++p;
    if (p == dim) return {};
    std::swap(m[p], m[row]);
    cpp_rational inv = 1 / m[row][col];
    for (auto& x : m[row]) x *= inv;
    for (std::size_t i = 0; i < dim; ++i) {
      if (i == row || m[i][col] == 0) continue;
      cpp_rational f = m[i][col];
      for (std::size_t j = 0; j < r + dim; ++j) m[i][j] -= f * m[row][j];
    }
    pivot_row[col] = row++;
  }
  std::vector<std::vector<cpp_rational>> out(r, std::vector<cpp_rational>(dim));
  for (std::size_t c = 0; c < r; ++c)
    for (std::size_t j = 0; j < dim; ++j) out[c][j] = m[pivot_row[c]][r + j];
  return out;
}

}  // namespace

std::size_t RootDatum::index_of(int label) const {
  int idx = label - first_label_;
  if (idx < 0 || idx >= static_cast<int>(labels_.size()))
    domain_fail("node " + std::to_string(label) + " is not a node of " + name_);
  return static_cast<std::size_t>(idx);
}

int RootDatum::pairing(int label, const Weight& w) const {
  check(w);
  const auto& cv = coroots_[index_of(label)];
  int s = 0;
  for (std::size_t k = 0; k < lattice_rank_; ++k) s += cv[k] * w[k];
  return s;
}

bool RootDatum::has_fundamental_weight(int label) const {
  return fundamental_[index_of(label)].has_value();
}

const Weight& RootDatum::fundamental_weight(int label) const {
  const auto& f = fundamental_[index_of(label)];
  if (!f) domain_fail("no fundamental weight for node " + std::to_string(label) + " in " + name_);
  return *f;
}

Weight RootDatum::null_root() const {
  if (flavor_ == Flavor::finite) domain_fail(name_ + " has no null root");
  Weight d = zero();
  for (std::size_t i = 0; i < roots_.size(); ++i) d = d + roots_[i].scaled(marks_[i]);
  return d;
}

Weight RootDatum::canonical(std::span<const std::int32_t> coords) const {
  if (coords.size() != lattice_rank_)
    domain_fail("weight has " + std::to_string(coords.size()) + " coordinates, " + name_ + " needs " +
                std::to_string(lattice_rank_));
  std::array<std::int32_t, kMaxLatticeRank> c{};
  std::copy(coords.begin(), coords.end(), c.begin());
  if (!quotient_.empty()) {
    // The last nonzero quotient entry is 1 by construction.
    std::size_t k = lattice_rank_;
    while (k > 0 && quotient_[k - 1] == 0) --k;
    std::int32_t t = c[k - 1];
    for (std::size_t i = 0; i < lattice_rank_; ++i) c[i] -= t * quotient_[i];
  }
  return Weight(id_, std::span<const std::int32_t>(c.data(), lattice_rank_));
}

Weight RootDatum::weight(std::span<const std::int32_t> coords) const { return canonical(coords); }

Weight RootDatum::weight(std::initializer_list<std::int32_t> coords) const {
  return canonical(std::span<const std::int32_t>(coords.begin(), coords.size()));
}

Weight RootDatum::zero() const {
  std::vector<std::int32_t> z(lattice_rank_, 0);
  return canonical(z);
}

void RootDatum::check(const Weight& w) const {
  if (w.datum() != id_) domain_fail("weight does not belong to " + name_);
}

const RootDatum& RootDatum::level_zero() const {
  if (!level_zero_) domain_fail(name_ + " has no level-zero realization");
  return *level_zero_;
}

RootDatum::Ptr RootDatum::level_zero_ptr() const {
  if (!level_zero_) domain_fail(name_ + " has no level-zero realization");
  return level_zero_;
}

const RootDatum& RootDatum::finite_part() const { return *finite_part_ptr(); }

RootDatum::Ptr RootDatum::finite_part_ptr() const {
  if (!finite_) domain_fail(name_ + " has no finite part");
  return finite_;
}

Weight RootDatum::project(const Weight& w) const {
  if (flavor_ != Flavor::affine) domain_fail("projection needs an affine datum");
  check(w);
  return level_zero_->weight(w.coords().first(level_zero_->lattice_rank()));
}

void RootDatum::finish() {
  auto inv = left_inverse(roots_, lattice_rank_);
  if (inv.empty()) return;
  boost::multiprecision::cpp_int den = 1;
  for (const auto& row : inv)
    for (const auto& x : row) den = boost::multiprecision::lcm(den, denominator(x));
  linv_den_ = static_cast<std::int64_t>(den);
  linv_num_.assign(inv.size(), std::vector<std::int64_t>(lattice_rank_));
  for (std::size_t i = 0; i < inv.size(); ++i)
    for (std::size_t j = 0; j < lattice_rank_; ++j)
      linv_num_[i][j] = static_cast<std::int64_t>(numerator(boost::multiprecision::cpp_rational(inv[i][j] * den)));
}

std::optional<std::vector<std::int64_t>> RootDatum::root_coordinates(const Weight& w) const {
  check(w);
  if (linv_num_.empty()) return std::nullopt;
  std::vector<std::int64_t> c(roots_.size());
  for (std::size_t i = 0; i < roots_.size(); ++i) {
    std::int64_t s = 0;
    for (std::size_t j = 0; j < lattice_rank_; ++j) s += linv_num_[i][j] * w[j];
    if (s % linv_den_ != 0) return std::nullopt;
    c[i] = s / linv_den_;
  }
  Weight back = zero();
  for (std::size_t i = 0; i < roots_.size(); ++i) back = back + roots_[i].scaled(static_cast<std::int32_t>(c[i]));
  if (back != w) return std::nullopt;
  return c;
}

bool RootDatum::is_positive_root(const Weight& w) const {
  auto c = root_coordinates(w);
  if (!c) domain_fail("not in the root lattice of " + name_);
  bool nonneg = std::all_of(c->begin(), c->end(), [](std::int64_t x) { return x >= 0; });
  bool nonpos = std::all_of(c->begin(), c->end(), [](std::int64_t x) { return x <= 0; });
  if (!nonneg && !nonpos) domain_fail("weight is not a root of " + name_);
  return nonneg && !w.is_zero();
}

RootDatum::Ptr RootDatum::sl(int n) {
  if (n < 2 || n + 0u > kMaxLatticeRank) domain_fail("SL_n needs 2 <= n <= 12");
  auto d = std::shared_ptr<RootDatum>(new RootDatum());
  d->id_ = next_datum_id();
  d->name_ = "A" + std::to_string(n - 1);
  d->flavor_ = Flavor::finite;
  d->first_label_ = 1;
  d->lattice_rank_ = n;
  d->quotient_.assign(n, 1);
  d->cartan_ = finite_cartan('A', n - 1);
  std::vector<std::int32_t> rho(n, 0);
  for (int i = 1; i < n; ++i) {
    d->labels_.push_back(i);
    std::vector<std::int32_t> a(n, 0), w(n, 0);
    a[i - 1] = 1;
    a[i] = -1;
    for (int k = 0; k < i; ++k) w[k] = 1;
    for (int k = 0; k < i; ++k) rho[k] += 1;
    d->roots_.push_back(d->canonical(a));
    d->coroots_.push_back(a);
    d->fundamental_.push_back(d->canonical(w));
  }
  d->rho_ = d->canonical(rho);
  d->finish();
  return d;
}

RootDatum::Ptr RootDatum::affine_sl(int n) {
  if (n < 2 || n + 2u > kMaxLatticeRank) domain_fail("affine SL_n needs 2 <= n <= 10");
  auto finite = sl(n);

  auto lz = std::shared_ptr<RootDatum>(new RootDatum());
  lz->id_ = next_datum_id();
  lz->name_ = "A~" + std::to_string(n - 1) + "(level 0)";
  lz->flavor_ = Flavor::level_zero;
  lz->first_label_ = 0;
  lz->lattice_rank_ = n;
  lz->quotient_.assign(n, 1);
  lz->sl_n_ = n;
  lz->finite_ = finite;

  auto d = std::shared_ptr<RootDatum>(new RootDatum());
  d->id_ = next_datum_id();
  d->name_ = "A~" + std::to_string(n - 1);
  d->flavor_ = Flavor::affine;
  d->first_label_ = 0;
  d->lattice_rank_ = n + 2;
  d->quotient_.assign(n + 2, 1);
  d->quotient_[n] = d->quotient_[n + 1] = 0;
  d->sl_n_ = n;
  d->finite_ = finite;

  std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) {
    a[i][i] = 2;
    int j = (i + 1) % n;
    a[i][j] += -1;
    a[j][i] += -1;
  }
  if (n == 2) a = {{2, -2}, {-2, 2}};
  d->cartan_ = lz->cartan_ = a;
  d->marks_ = lz->marks_ = std::vector<int>(n, 1);

  std::vector<std::int32_t> rho(n + 2, 0);
  for (int i = 0; i < n; ++i) {
    d->labels_.push_back(i);
    lz->labels_.push_back(i);
    std::vector<std::int32_t> root(n + 2, 0), cor(n + 2, 0), fw(n + 2, 0);
    if (i == 0) {
      root[n - 1] = 1;
      root[0] -= 1;
      root[n + 1] = 1;
      cor[0] = -1;
      cor[n - 1] += 1;
      cor[n] = 1;
    } else {
      root[i - 1] = 1;
      root[i] = -1;
      cor[i - 1] = 1;
      cor[i] = -1;
      for (int k = 0; k < i; ++k) fw[k] = 1;
    }
    fw[n] = 1;
    for (int k = 0; k < n + 2; ++k) rho[k] += fw[k];
    d->roots_.push_back(d->canonical(root));
    d->coroots_.push_back(cor);
    d->fundamental_.push_back(d->canonical(fw));

    std::vector<std::int32_t> lroot(root.begin(), root.begin() + n), lcor(cor.begin(), cor.begin() + n);
    lz->roots_.push_back(lz->canonical(lroot));
    lz->coroots_.push_back(lcor);
    if (i == 0) lz->fundamental_.push_back(std::nullopt);
    else lz->fundamental_.push_back(lz->canonical(std::vector<std::int32_t>(fw.begin(), fw.begin() + n)));
  }
  d->rho_ = d->canonical(rho);
  std::vector<std::int32_t> frho(n, 0);
  for (int i = 1; i < n; ++i)
    for (int k = 0; k < i; ++k) frho[k] += 1;
  lz->rho_ = lz->canonical(frho);
  d->level_zero_ = lz;
  d->finish();
  lz->finish();
  return d;
}

RootDatum::Ptr RootDatum::from_cartan(const std::vector<std::vector<int>>& a, std::string name) {
  validate_gcm(a);
  const std::size_t r = a.size();
  if (r == 0 || r > kMaxLatticeRank) domain_fail("Cartan matrix rank out of range");
  auto d = std::shared_ptr<RootDatum>(new RootDatum());
  d->id_ = next_datum_id();
  d->name_ = name.empty() ? "GCM" + std::to_string(r) : std::move(name);
  d->flavor_ = Flavor::finite;
  d->first_label_ = 1;
  d->lattice_rank_ = r;
  d->cartan_ = a;
  std::vector<std::int32_t> rho(r, 1);
  for (std::size_t j = 0; j < r; ++j) {
    d->labels_.push_back(static_cast<int>(j) + 1);
    std::vector<std::int32_t> col(r), unit(r, 0);
    for (std::size_t i = 0; i < r; ++i) col[i] = a[i][j];
    unit[j] = 1;
    d->roots_.push_back(d->canonical(col));
    d->coroots_.push_back(unit);
    d->fundamental_.push_back(d->canonical(unit));
  }
  d->rho_ = d->canonical(rho);
  d->finish();
  if (d->linv_num_.empty()) domain_fail("singular Cartan matrix: only invertible ones are supported here");
  return d;
}

RootDatum::Ptr RootDatum::parse_type(std::string_view type) {
  if (type.empty()) domain_fail("empty Cartan type");
  char family = static_cast<char>(std::toupper(static_cast<unsigned char>(type[0])));
  bool affine = false;
  std::string_view rest = type.substr(1);
  if (!rest.empty() && rest.front() == '~') {
    affine = true;
    rest.remove_prefix(1);
  } else if (!rest.empty() && rest.back() == '~') {
    affine = true;
    rest.remove_suffix(1);
  }
  int rank = 0;
  auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), rank);
  if (ec != std::errc() || ptr != rest.data() + rest.size() || rank < 1)
    domain_fail("cannot parse Cartan type '" + std::string(type) + "'");
  if (affine) {
    if (family != 'A') domain_fail("only affine type A is supported");
    return affine_sl(rank + 1);
  }
  if (family == 'A') return sl(rank + 1);
  return from_cartan(finite_cartan(family, rank), std::string(1, family) + std::to_string(rank));
}

// ---- free functions on weights ----

Weight reflect(const RootDatum& d, int i, const Weight& w) {
  int k = d.pairing(i, w);
  if (k == 0) return w;
  return w - d.simple_root(i).scaled(k);
}

Weight level_zero_project(const RootDatum& affine, const Weight& w) { return affine.project(w); }

LaurentPoly level_zero_project(const RootDatum& affine, const LaurentPoly& p) {
  return p.map_exponents([&](const Weight& w) { return affine.project(w); });
}

// ---- LaurentPoly ----

LaurentPoly LaurentPoly::monomial(const Weight& w, std::int64_t c) {
  LaurentPoly p;
  if (c != 0) p.terms_.push_back({w, c});
  return p;
}

LaurentPoly LaurentPoly::constant(const RootDatum& d, std::int64_t c) { return monomial(d.zero(), c); }

LaurentPoly LaurentPoly::one_minus(const Weight& w) {
  Weight z = w.scaled(0);
  if (w.is_zero()) return {};
  LaurentPoly p;
  p.terms_.push_back({z, 1});
  p.terms_.push_back({w, -1});
  if (w < z) std::swap(p.terms_[0], p.terms_[1]);
  return p;
}

LaurentPoly LaurentPoly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.exponent < b.exponent; });
  LaurentPoly p;
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().exponent == t.exponent) {
      p.terms_.back().coeff = checked_add(p.terms_.back().coeff, t.coeff);
      if (p.terms_.back().coeff == 0) p.terms_.pop_back();
    } else if (t.coeff != 0) {
      p.terms_.push_back(t);
    }
  }
  return p;
}

std::int64_t LaurentPoly::coefficient(const Weight& w) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), w,
                             [](const Term& t, const Weight& x) { return t.exponent < x; });
  return (it != terms_.end() && it->exponent == w) ? it->coeff : 0;
}

std::optional<std::int64_t> LaurentPoly::as_constant() const {
  if (terms_.empty()) return 0;
  if (terms_.size() == 1 && terms_[0].exponent.is_zero()) return terms_[0].coeff;
  return std::nullopt;
}

static LaurentPoly merge(const std::vector<LaurentPoly::Term>& a, const std::vector<LaurentPoly::Term>& b, int sign) {
  std::vector<LaurentPoly::Term> out;
  out.reserve(a.size() + b.size());
  if (!a.empty() && !b.empty()) same_datum(a[0].exponent, b[0].exponent);
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].exponent < b[j].exponent)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].exponent < a[i].exponent) {
      out.push_back({b[j].exponent, checked_mul(sign, b[j].coeff)});
      ++j;
    } else {
      std::int64_t c = checked_add(a[i].coeff, checked_mul(sign, b[j].coeff));
      if (c != 0) out.push_back({a[i].exponent, c});
      ++i;
      ++j;
    }
  }
  return LaurentPoly::from_terms(std::move(out));
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (o.terms_.empty()) return *this;
  if (terms_.empty()) return *this = o;
  *this = merge(terms_, o.terms_, 1);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  if (o.terms_.empty()) return *this;
  *this = merge(terms_, o.terms_, -1);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(std::int64_t k) {
  if (k == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coeff = checked_mul(t.coeff, k);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  same_datum(a.terms_[0].exponent, b.terms_[0].exponent);
  std::vector<LaurentPoly::Term> out;
  out.reserve(a.size() * b.size());
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_) out.push_back({s.exponent + t.exponent, checked_mul(s.coeff, t.coeff)});
  return LaurentPoly::from_terms(std::move(out));
}

LaurentPoly LaurentPoly::shifted(const Weight& w) const {
  LaurentPoly p = *this;
  for (auto& t : p.terms_) t.exponent = t.exponent + w;
  return p;
}

LaurentPoly reflect(const RootDatum& d, int i, const LaurentPoly& p) {
  return p.map_exponents([&](const Weight& w) { return reflect(d, i, w); });
}

LaurentPoly demazure(const RootDatum& d, int i, const LaurentPoly& p) {
  const Weight& a = d.simple_root(i);
  std::vector<LaurentPoly::Term> out;
  for (const auto& t : p.terms()) {
    int k = d.pairing(i, t.exponent);
    // (e^{r_i x} - e^x) / (1 - e^a) written as a finite geometric sum
    if (k > 0) {
      for (int j = 1; j <= k; ++j) out.push_back({t.exponent - a.scaled(j), t.coeff});
    } else if (k < 0) {
      for (int j = 0; j < -k; ++j) out.push_back({t.exponent + a.scaled(j), -t.coeff});
    }
  }
  return LaurentPoly::from_terms(std::move(out));
}

std::int64_t phi0(const LaurentPoly& p) {
  std::int64_t s = 0;
  for (const auto& t : p.terms()) s = checked_add(s, t.coeff);
  return s;
}

LaurentPoly eta(const LaurentPoly& p) {
  return p.map_exponents([](const Weight& w) { return -w; });
}

static std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::optional<LaurentPoly> divide_one_minus(const LaurentPoly& p, const Weight& alpha, int d) {
  if (alpha.is_zero()) domain_fail("cannot divide by 1 - e^0");
  if (p.is_zero() || d <= 0) return p;
  same_datum(p.terms().front().exponent, alpha);
  std::size_t j = 0;
  while (alpha[j] == 0) ++j;
  // Split the support into cosets of Z alpha; on each one p is x^base * f(x) with x = e^alpha.
  std::map<Weight, std::map<std::int64_t, std::int64_t>> cosets;
  for (const auto& t : p.terms()) {
    std::int64_t k = floor_div(t.exponent[j], alpha[j]);
    Weight base = t.exponent - alpha.scaled(static_cast<std::int32_t>(k));
    cosets[base][k] += t.coeff;
  }
  std::vector<LaurentPoly::Term> out;
  for (auto& [base, f] : cosets) {
    std::vector<std::int64_t> c;
    std::int64_t lo = f.begin()->first;
    for (auto& [k, v] : f) {
      c.resize(static_cast<std::size_t>(k - lo + 1), 0);
      c.back() = v;
    }
    for (int step = 0; step < d; ++step) {
      // f = (1 - x) q: q_k = f_k + q_{k-1}, and the top coefficient must cancel.
      std::vector<std::int64_t> q(c.size() - 1);
      std::int64_t run = 0;
      for (std::size_t k = 0; k + 1 < c.size(); ++k) q[k] = run = checked_add(run, c[k]);
      if (c.size() < 2 || checked_add(run, c.back()) != 0) return std::nullopt;
      c = std::move(q);
    }
    for (std::size_t k = 0; k < c.size(); ++k)
      if (c[k] != 0) out.push_back({base + alpha.scaled(static_cast<std::int32_t>(lo + static_cast<std::int64_t>(k))), c[k]});
  }
  return LaurentPoly::from_terms(std::move(out));
}

}  // namespace khecke
