#include "khecke/weyl.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <set>
#include <unordered_set>

#include "khecke/errors.hpp"

namespace khecke {

namespace {

int floor_div(int a, int b) {
  int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

int mod(int a, int b) {
  int r = a % b;
  return r < 0 ? r + b : r;
}

void require_faithful(const RootDatum& d) {
  if (d.flavor() == Flavor::level_zero) domain_fail("Weyl elements need a faithful realization, not " + d.name());
}

}  // namespace

// ---- WeylElt ----

WeylElt::WeylElt(const RootDatum& d, const Weight& key) : datum_(&d), key_(key) {
  require_faithful(d);
  d.check(key);
  Weight k = key;
  const auto& nodes = d.nodes();
  for (;;) {
    int found = -1;
    for (int i : nodes) {
      if (d.pairing(i, k) < 0) {
        found = i;
        break;
      }
    }
    if (found < 0) break;
    word_.push_back(found);
    k = reflect(d, found, k);
  }
  if (k != d.rho()) domain_fail("key is not in the Weyl orbit of rho");
}

std::strong_ordering operator<=>(const WeylElt& a, const WeylElt& b) {
  if (auto c = a.word_.size() <=> b.word_.size(); c != 0) return c;
  return a.word_ <=> b.word_;
}

// ---- AffinePerm ----

AffinePerm AffinePerm::identity(int n) {
  if (n < 1 || n > kMaxN) domain_fail("affine permutations need 1 <= n <= 10");
  AffinePerm p;
  p.n_ = n;
  for (int i = 0; i < n; ++i) p.w_[i] = i + 1;
  return p;
}

AffinePerm AffinePerm::from_window(std::span<const int> window) {
  const int n = static_cast<int>(window.size());
  AffinePerm p = identity(n);
  std::vector<bool> seen(n, false);
  long sum = 0;
  for (int i = 0; i < n; ++i) {
    int r = mod(window[i], n);
    if (seen[r]) domain_fail("window entries must be distinct mod n");
    seen[r] = true;
    sum += window[i];
    p.w_[i] = window[i];
  }
  if (sum != static_cast<long>(n) * (n + 1) / 2) domain_fail("window entries must sum to n(n+1)/2");
  return p;
}

AffinePerm AffinePerm::from_word(int n, std::span<const int> word) {
  AffinePerm p = identity(n);
  for (int i : word) {
    if (i < 0 || i >= n) domain_fail("letter " + std::to_string(i) + " is not a node of affine A" + std::to_string(n - 1));
    p = p.times_simple(i);
  }
  return p;
}

AffinePerm AffinePerm::translation(std::span<const int> lambda) {
  const int n = static_cast<int>(lambda.size());
  if (std::accumulate(lambda.begin(), lambda.end(), 0) != 0) domain_fail("translation vector must sum to zero");
  AffinePerm p = identity(n);
  for (int i = 0; i < n; ++i) p.w_[i] = i + 1 + n * lambda[i];
  return p;
}

int AffinePerm::operator()(int i) const {
  int q = floor_div(i - 1, n_);
  int r = i - 1 - q * n_;
  return w_[r] + q * n_;
}

int AffinePerm::length() const {
  int len = 0;
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j) len += std::abs(floor_div(w_[j] - w_[i], n_));
  return len;
}

bool AffinePerm::right_descent(int i) const { return (*this)(i) > (*this)(i + 1); }

bool AffinePerm::left_descent(int i) const {
  AffinePerm inv = inverse();
  return inv(i) > inv(i + 1);
}

AffinePerm AffinePerm::times_simple(int i) const {
  AffinePerm p = *this;
  if (i == 0) {
    p.w_[0] = w_[n_ - 1] - n_;
    p.w_[n_ - 1] = w_[0] + n_;
  } else {
    std::swap(p.w_[i - 1], p.w_[i]);
  }
  return p;
}

AffinePerm AffinePerm::simple_times(int i) const {
  AffinePerm p = *this;
  for (int k = 0; k < n_; ++k) {
    int r = mod(w_[k], n_);
    if (r == i) p.w_[k] = w_[k] + 1;
    else if (r == mod(i + 1, n_)) p.w_[k] = w_[k] - 1;
  }
  return p;
}

AffinePerm AffinePerm::operator*(const AffinePerm& o) const {
  if (n_ != o.n_) domain_fail("affine permutations of different n");
  AffinePerm p = *this;
  for (int k = 0; k < n_; ++k) p.w_[k] = (*this)(o.w_[k]);
  return p;
}

AffinePerm AffinePerm::inverse() const {
  AffinePerm p = *this;
  for (int k = 0; k < n_; ++k) {
    int v = w_[k];
    int q = floor_div(v - 1, n_);
    int r = v - 1 - q * n_;
    p.w_[r] = k + 1 - q * n_;
  }
  return p;
}

std::vector<int> AffinePerm::word() const {
  std::vector<int> out;
  AffinePerm cur = *this;
  for (;;) {
    AffinePerm inv = cur.inverse();
    int found = -1;
    for (int i = 0; i < n_; ++i) {
      if (inv(i) > inv(i + 1)) {
        found = i;
        break;
      }
    }
    if (found < 0) break;
    out.push_back(found);
    cur = cur.simple_times(found);
  }
  return out;
}

bool AffinePerm::is_grassmannian() const {
  for (int i = 1; i < n_; ++i)
    if (w_[i - 1] > w_[i]) return false;
  return true;
}

AffinePerm AffinePerm::grassmannian_rep() const {
  AffinePerm p = *this;
  std::sort(p.w_.begin(), p.w_.begin() + n_);
  return p;
}

std::vector<int> AffinePerm::translation_part() const {
  std::vector<int> lambda(n_, 0);
  for (int k = 0; k < n_; ++k) {
    int v = w_[k];
    int r = mod(v - 1, n_) + 1;
    lambda[r - 1] = (v - r) / n_;
  }
  return lambda;
}

std::size_t AffinePermHash::operator()(const AffinePerm& p) const {
  std::size_t h = 1469598103934665603ULL;
  for (int v : p.window()) h = (h ^ static_cast<std::size_t>(v + 1000)) * 1099511628211ULL;
  return h;
}

std::string word_label(std::span<const int> word) {
  bool wide = std::any_of(word.begin(), word.end(), [](int i) { return i >= 10; });
  std::string s;
  for (std::size_t k = 0; k < word.size(); ++k) {
    if (wide && k) s += ',';
    s += std::to_string(word[k]);
  }
  return s;
}

std::vector<int> parse_word(std::string_view text) {
  std::vector<int> out;
  if (text.empty() || text == "id" || text == "e" || text == "-") return out;
  if (text.find(',') != std::string_view::npos) {
    std::size_t pos = 0;
    while (pos <= text.size()) {
      std::size_t end = text.find(',', pos);
      if (end == std::string_view::npos) end = text.size();
      auto tok = text.substr(pos, end - pos);
      if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](char c) { return c >= '0' && c <= '9'; }))
        domain_fail("malformed word '" + std::string(text) + "'");
      out.push_back(std::stoi(std::string(tok)));
      pos = end + 1;
    }
    return out;
  }
  for (char c : text) {
    if (c < '0' || c > '9') domain_fail("malformed word '" + std::string(text) + "'");
    out.push_back(c - '0');
  }
  return out;
}

namespace weyl {

WeylElt identity(const RootDatum& d) { return WeylElt(d, d.rho()); }

WeylElt simple(const RootDatum& d, int i) { return WeylElt(d, reflect(d, i, d.rho())); }

static Weight fold(const RootDatum& d, std::span<const int> word, Weight x) {
  for (auto it = word.rbegin(); it != word.rend(); ++it) x = reflect(d, *it, x);
  return x;
}

WeylElt from_word(const RootDatum& d, std::span<const int> word) {
  for (int i : word) d.index_of(i);
  return WeylElt(d, fold(d, word, d.rho()));
}

WeylElt from_word(const RootDatum& d, std::string_view word) { return from_word(d, parse_word(word)); }

static void same(const WeylElt& u, const WeylElt& v) {
  if (u.datum().id() != v.datum().id()) domain_fail("Weyl elements from different root data");
}

WeylElt multiply(const WeylElt& u, const WeylElt& v) {
  same(u, v);
  return WeylElt(u.datum(), fold(u.datum(), u.word(), v.key()));
}

WeylElt inverse(const WeylElt& w) {
  std::vector<int> rev(w.word().rbegin(), w.word().rend());
  return from_word(w.datum(), rev);
}

WeylElt lmul(int i, const WeylElt& w) { return WeylElt(w.datum(), reflect(w.datum(), i, w.key())); }

WeylElt rmul(const WeylElt& w, int i) {
  const RootDatum& d = w.datum();
  Weight image = fold(d, w.word(), d.simple_root(i));
  return WeylElt(d, w.key() - image);
}

Weight apply(const WeylElt& w, const Weight& lambda) {
  const RootDatum& d = w.datum();
  if (lambda.datum() == d.id()) return fold(d, w.word(), lambda);
  if (d.flavor() == Flavor::affine && lambda.datum() == d.level_zero().id())
    return fold(d.level_zero(), w.word(), lambda);
  domain_fail("weight does not belong to " + d.name() + " or its level-zero realization");
}

LaurentPoly apply(const WeylElt& w, const LaurentPoly& p) {
  return p.map_exponents([&](const Weight& x) { return apply(w, x); });
}

bool has_left_descent(const WeylElt& w, int i) { return w.datum().pairing(i, w.key()) < 0; }

bool has_right_descent(const WeylElt& w, int i) {
  Weight image = fold(w.datum(), w.word(), w.datum().simple_root(i));
  return !w.datum().is_positive_root(image);
}

int first_left_descent(const WeylElt& w) {
  if (w.is_identity()) domain_fail("identity has no descents");
  return w.word().front();
}

int first_right_descent(const WeylElt& w) {
  for (int i : w.datum().nodes())
    if (has_right_descent(w, i)) return i;
  domain_fail("identity has no descents");
}

bool bruhat_leq(const WeylElt& v, const WeylElt& w) {
  same(v, w);
  WeylElt a = v, b = w;
  for (;;) {
    if (a.length() > b.length()) return false;
    if (b.is_identity()) return a.is_identity();
    int i = b.word().front();
    if (has_left_descent(a, i)) a = lmul(i, a);
    b = lmul(i, b);
  }
}

std::vector<WeylElt> bruhat_ideal(const WeylElt& w) {
  const RootDatum& d = w.datum();
  std::vector<WeylElt> cur{identity(d)};
  // [e, r_i x] = [e, x] together with r_i [e, x] when r_i x > x
  for (auto it = w.word().rbegin(); it != w.word().rend(); ++it) {
    std::set<WeylElt> next(cur.begin(), cur.end());
    for (const auto& x : cur) next.insert(lmul(*it, x));
    cur.assign(next.begin(), next.end());
  }
  return cur;
}

bool is_reduced(const RootDatum& d, std::span<const int> word) {
  return from_word(d, word).length() == static_cast<int>(word.size());
}

std::vector<std::vector<int>> reduced_words(const WeylElt& w) {
  if (w.is_identity()) return {{}};
  std::vector<std::vector<int>> out;
  for (int i : w.datum().nodes()) {
    if (!has_left_descent(w, i)) continue;
    for (auto& rest : reduced_words(lmul(i, w))) {
      rest.insert(rest.begin(), i);
      out.push_back(std::move(rest));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Weight> inversions(const WeylElt& w) { return inversions(w, w.datum()); }

std::vector<Weight> inversions(const WeylElt& w, const RootDatum& realization) {
  const RootDatum& d = w.datum();
  if (realization.id() != d.id() && !(d.flavor() == Flavor::affine && realization.id() == d.level_zero().id()))
    domain_fail("realization does not match " + d.name());
  std::vector<Weight> out;
  const auto& word = w.word();
  for (std::size_t k = 0; k < word.size(); ++k)
    out.push_back(fold(realization, std::span<const int>(word.data(), k), realization.simple_root(word[k])));
  return out;
}

std::vector<WeylElt> enumerate(const RootDatum& d, int max_len) {
  std::vector<WeylElt> all{identity(d)};
  std::vector<WeylElt> layer = all;
  for (int len = 1; len <= max_len; ++len) {
    std::set<WeylElt> next;
    for (const auto& x : layer)
      for (int i : d.nodes())
        if (!has_left_descent(x, i)) next.insert(lmul(i, x));
    layer.assign(next.begin(), next.end());
    if (layer.empty()) break;
    all.insert(all.end(), layer.begin(), layer.end());
  }
  return all;
}

std::vector<RealRoot> positive_roots(const RootDatum& d, int max_len) {
  std::map<Weight, WeylElt> found;
  for (const auto& w : enumerate(d, max_len)) {
    const auto& word = w.word();
    for (std::size_t k = 0; k < word.size(); ++k) {
      std::span<const int> prefix(word.data(), k);
      Weight beta = fold(d, prefix, d.simple_root(word[k]));
      if (found.count(beta)) continue;
      WeylElt u = from_word(d, prefix);
      found.emplace(beta, multiply(multiply(u, simple(d, word[k])), inverse(u)));
    }
  }
  std::vector<RealRoot> out;
  for (auto& [beta, refl] : found) out.push_back({beta, refl});
  std::sort(out.begin(), out.end(), [](const RealRoot& a, const RealRoot& b) {
    return std::make_pair(a.reflection.length(), a.root) < std::make_pair(b.reflection.length(), b.root);
  });
  return out;
}

static int sl_n_of(const RootDatum& d) {
  if (d.flavor() != Flavor::affine || d.sl_n() == 0) domain_fail("operation needs an affine type A datum");
  return d.sl_n();
}

AffinePerm to_perm(const WeylElt& w) { return AffinePerm::from_word(sl_n_of(w.datum()), w.word()); }

WeylElt from_perm(const RootDatum& d, const AffinePerm& p) {
  if (p.n() != sl_n_of(d)) domain_fail("affine permutation size does not match " + d.name());
  return from_word(d, p.word());
}

WeylElt translation(const RootDatum& d, std::span<const int> lambda) {
  if (static_cast<int>(lambda.size()) != sl_n_of(d)) domain_fail("translation vector has wrong length");
  return from_perm(d, AffinePerm::translation(lambda));
}

GrassmannianPart grassmannian_part(const WeylElt& w) {
  AffinePerm p = to_perm(w);
  return {from_perm(w.datum(), p.grassmannian_rep()), p.translation_part()};
}

bool is_grassmannian(const WeylElt& w) {
  for (int i : w.datum().nodes()) {
    if (i == 0) continue;
    if (has_right_descent(w, i)) return false;
  }
  return true;
}

AffinePerm grassmannian_from_partition(int n, const Partition& lambda) {
  if (lambda.largest() >= n) domain_fail("partition " + lambda.comma_label() + " is not " + std::to_string(n - 1) + "-bounded");
  std::vector<int> word;
  for (std::size_t r = lambda.length(); r-- > 0;)
    for (int c = lambda[r]; c-- > 0;) word.push_back(mod(c - static_cast<int>(r), n));
  AffinePerm p = AffinePerm::from_word(n, word);
  if (p.length() != lambda.size()) throw std::logic_error("residue reading word is not reduced");
  return p;
}

WeylElt grassmannian_from_partition(const RootDatum& d, const Partition& lambda) {
  return from_perm(d, grassmannian_from_partition(sl_n_of(d), lambda));
}

Partition partition_of(const AffinePerm& w) {
  if (!w.is_grassmannian()) domain_fail("element is not Grassmannian");
  for (const auto& p : partitions_of(w.length(), w.n() - 1))
    if (grassmannian_from_partition(w.n(), p) == w) return p;
  throw std::logic_error("no partition for Grassmannian element");
}

std::vector<AffinePerm> enumerate_perms(int n, int max_len) {
  std::vector<AffinePerm> all{AffinePerm::identity(n)};
  std::vector<AffinePerm> layer = all;
  for (int len = 1; len <= max_len; ++len) {
    std::set<AffinePerm> next;
    for (const auto& x : layer)
      for (int i = 0; i < n; ++i)
        if (!x.right_descent(i)) next.insert(x.times_simple(i));
    layer.assign(next.begin(), next.end());
    std::sort(layer.begin(), layer.end(), [](const AffinePerm& a, const AffinePerm& b) { return a.word() < b.word(); });
    all.insert(all.end(), layer.begin(), layer.end());
  }
  return all;
}

std::vector<AffinePerm> cyclically_decreasing(int n, int len) {
  if (len < 0 || len >= n) domain_fail("cyclically decreasing elements need 0 <= length < n");
  std::vector<AffinePerm> out;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (std::popcount(mask) != len) continue;
    int missing = 0;
    while (mask & (1u << missing)) ++missing;
    std::vector<int> word;
    for (int step = 1; step < n; ++step) {
      int j = mod(missing - step, n);
      if (mask & (1u << j)) word.push_back(j);
    }
    out.push_back(AffinePerm::from_word(n, word));
  }
  std::sort(out.begin(), out.end(), [](const AffinePerm& a, const AffinePerm& b) { return a.word() < b.word(); });
  return out;
}

std::vector<WeylElt> cyclically_decreasing(const RootDatum& d, int len) {
  std::vector<WeylElt> out;
  for (const auto& p : cyclically_decreasing(sl_n_of(d), len)) out.push_back(from_perm(d, p));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace weyl
}  // namespace khecke
