#include "khecke/symfunc.hpp"

#include <algorithm>
#include <mutex>

#include "khecke/cartan.hpp"
#include "khecke/errors.hpp"

namespace khecke {

std::string_view basis_name(Basis b) {
  switch (b) {
    case Basis::m: return "m";
    case Basis::h: return "h";
    case Basis::s: return "s";
    case Basis::F: return "F";
    case Basis::G: return "G";
    case Basis::g: return "g";
    case Basis::kschur: return "kschur";
  }
  return "?";
}

Basis parse_basis(std::string_view text) {
  for (Basis b : {Basis::m, Basis::h, Basis::s, Basis::F, Basis::G, Basis::g, Basis::kschur})
    if (text == basis_name(b)) return b;
  domain_fail("unknown basis '" + std::string(text) + "'");
}

// ---- SymFunc ----

SymFunc SymFunc::single(Basis b, const Partition& p, std::int64_t c, int n) {
  SymFunc f(b, n);
  f.add(p, c);
  return f;
}

std::int64_t SymFunc::coefficient(const Partition& p) const {
  auto it = terms_.find(p);
  return it == terms_.end() ? 0 : it->second;
}

void SymFunc::add(const Partition& p, std::int64_t c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(p, c);
  if (!inserted) {
    it->second = checked_add(it->second, c);
    if (it->second == 0) terms_.erase(it);
  }
}

void SymFunc::check_compatible(const SymFunc& o) const {
  if (basis_ != o.basis_) domain_fail("cannot combine " + std::string(basis_name(basis_)) + " and " + std::string(basis_name(o.basis_)) + " expansions");
  if (n_ != o.n_ && n_ != 0 && o.n_ != 0) domain_fail("cannot combine expansions for different n");
}

SymFunc& SymFunc::operator+=(const SymFunc& o) {
  check_compatible(o);
  if (n_ == 0) n_ = o.n_;
  for (const auto& [p, c] : o.terms_) add(p, c);
  return *this;
}

SymFunc& SymFunc::operator-=(const SymFunc& o) {
  check_compatible(o);
  if (n_ == 0) n_ = o.n_;
  for (const auto& [p, c] : o.terms_) add(p, checked_mul(-1, c));
  return *this;
}

SymFunc& SymFunc::operator*=(std::int64_t k) {
  if (k == 0) terms_.clear();
  for (auto& [p, c] : terms_) c = checked_mul(c, k);
  return *this;
}

SymFunc SymFunc::homogeneous_part(int d) const {
  SymFunc out(basis_, n_);
  for (const auto& [p, c] : terms_)
    if (p.size() == d) out.terms_.emplace(p, c);
  return out;
}

SymFunc SymFunc::up_to_degree(int d) const {
  SymFunc out(basis_, n_);
  for (const auto& [p, c] : terms_)
    if (p.size() <= d) out.terms_.emplace(p, c);
  return out;
}

int SymFunc::max_degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first.size(); }
int SymFunc::min_degree() const { return terms_.empty() ? -1 : terms_.begin()->first.size(); }

std::int64_t SymTensor::coefficient(const Partition& a, const Partition& b) const {
  auto it = terms_.find({a, b});
  return it == terms_.end() ? 0 : it->second;
}

void SymTensor::add(const Partition& a, const Partition& b, std::int64_t c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace({a, b}, c);
  if (!inserted) {
    it->second = checked_add(it->second, c);
    if (it->second == 0) terms_.erase(it);
  }
}

// ---- Kostka numbers ----

namespace {

std::mutex kostka_mutex;
std::map<std::pair<Partition, Partition>, std::int64_t> kostka_memo;

// Shapes nu inside lambda with lambda/nu a horizontal strip of size k.
void horizontal_strips(const Partition& lambda, std::size_t row, int k, std::vector<int>& cur,
                       std::vector<Partition>& out) {
  if (row == lambda.length()) {
    if (k == 0) {
      std::vector<int> parts;
      for (int x : cur)
        if (x > 0) parts.push_back(x);
      out.emplace_back(parts);
    }
    return;
  }
  // nu_row in [lambda_{row+1}, lambda_row]
  int hi = lambda[row];
  int lo = lambda[row + 1];
  for (int v = hi; v >= lo; --v) {
    int removed = hi - v;
    if (removed > k) break;
    cur.push_back(v);
    horizontal_strips(lambda, row + 1, k - removed, cur, out);
    cur.pop_back();
  }
}

std::int64_t kostka_rec(const Partition& lambda, const std::vector<int>& content) {
  if (content.empty()) return lambda.empty() ? 1 : 0;
  Partition key_mu(content);
  {
    std::lock_guard lock(kostka_mutex);
    if (auto it = kostka_memo.find({lambda, key_mu}); it != kostka_memo.end()) return it->second;
  }
  // The largest entry fills a horizontal strip of size content.back(); the
  // count does not depend on the order of the content, so use sorted content.
  int k = content.back();
  std::vector<int> rest(content.begin(), content.end() - 1);
  std::vector<Partition> inner;
  std::vector<int> cur;
  horizontal_strips(lambda, 0, k, cur, inner);
  std::int64_t total = 0;
  for (const auto& nu : inner) total = checked_add(total, kostka_rec(nu, rest));
  std::lock_guard lock(kostka_mutex);
  kostka_memo.emplace(std::make_pair(lambda, key_mu), total);
  return total;
}

}  // namespace

std::int64_t kostka(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size()) return 0;
  if (!dominates(lambda, mu)) return 0;
  return kostka_rec(lambda, mu.parts());
}

// ---- change of basis ----

static SymFunc h_to_s(const SymFunc& f) {
  SymFunc out(Basis::s, f.n());
  for (const auto& [mu, c] : f.terms())
    for (const auto& lam : partitions_of(mu.size(), mu.size()))
      if (auto k = kostka(lam, mu)) out.add(lam, checked_mul(c, k));
  return out;
}

static SymFunc s_to_m(const SymFunc& f) {
  SymFunc out(Basis::m, f.n());
  for (const auto& [lam, c] : f.terms())
    for (const auto& mu : partitions_of(lam.size(), lam.size()))
      if (auto k = kostka(lam, mu)) out.add(mu, checked_mul(c, k));
  return out;
}

// h_mu = s_mu + (lex-larger terms): peel the lex-smallest s term.
static SymFunc s_to_h(SymFunc f) {
  SymFunc out(Basis::h, f.n());
  while (!f.is_zero()) {
    auto [mu, c] = *f.terms().begin();
    out.add(mu, c);
    f -= c * h_to_s(SymFunc::single(Basis::h, mu, 1, f.n()));
  }
  return out;
}

// s_lambda = m_lambda + (lex-smaller terms): peel the lex-largest m term
// within each degree.
static SymFunc m_to_s(SymFunc f) {
  SymFunc out(Basis::s, f.n());
  while (!f.is_zero()) {
    int d = f.min_degree();
    SymFunc part = f.homogeneous_part(d);
    auto [lam, c] = *part.terms().rbegin();
    out.add(lam, c);
    f -= c * s_to_m(SymFunc::single(Basis::s, lam, 1, f.n()));
  }
  return out;
}

SymFunc convert(const SymFunc& f, Basis target) {
  Basis from = f.basis();
  auto classical = [](Basis b) { return b == Basis::m || b == Basis::h || b == Basis::s; };
  if (!classical(from) || !classical(target))
    domain_fail("convert handles the m, h and s bases only");
  if (from == target) return f;
  SymFunc s = from == Basis::s ? f : from == Basis::h ? h_to_s(f) : m_to_s(f);
  if (target == Basis::s) return s;
  return target == Basis::m ? s_to_m(s) : s_to_h(s);
}

std::int64_t hall_pair(const SymFunc& f, const SymFunc& g) {
  bool dual = (f.basis() == Basis::h && g.basis() == Basis::m) || (f.basis() == Basis::m && g.basis() == Basis::h) ||
              (f.basis() == Basis::s && g.basis() == Basis::s);
  if (!dual) domain_fail("Hall pairing needs (h, m), (m, h) or (s, s) expansions");
  std::int64_t total = 0;
  for (const auto& [p, c] : f.terms()) total = checked_add(total, checked_mul(c, g.coefficient(p)));
  return total;
}

static SymFunc multiply_h(const SymFunc& f, const SymFunc& g) {
  SymFunc out(Basis::h, f.n());
  for (const auto& [a, x] : f.terms())
    for (const auto& [b, y] : g.terms()) {
      std::vector<int> parts = a.parts();
      parts.insert(parts.end(), b.parts().begin(), b.parts().end());
      out.add(Partition(parts), checked_mul(x, y));
    }
  return out;
}

SymFunc multiply(const SymFunc& f, const SymFunc& g) {
  SymFunc prod = multiply_h(convert(f, Basis::h), convert(g, Basis::h));
  return convert(prod, f.basis());
}

SymFunc truncate(const SymFunc& f, int n) {
  SymFunc m = convert(f, Basis::m);
  SymFunc out(Basis::m, f.n());
  for (const auto& [p, c] : m.terms())
    if (p.largest() < n) out.add(p, c);
  return out;
}

SymTensor coproduct_h(const SymFunc& f) {
  if (f.basis() != Basis::h) domain_fail("coproduct_h needs an h expansion");
  SymTensor out(Basis::h, Basis::h, f.n());
  for (const auto& [mu, c] : f.terms()) {
    std::map<std::pair<std::vector<int>, std::vector<int>>, std::int64_t> acc{{{{}, {}}, 1}};
    for (int part : mu.parts()) {
      std::map<std::pair<std::vector<int>, std::vector<int>>, std::int64_t> next;
      for (const auto& [key, x] : acc)
        for (int j = 0; j <= part; ++j) {
          auto l = key.first, r = key.second;
          if (j > 0) l.push_back(j);
          if (part - j > 0) r.push_back(part - j);
          next[{l, r}] += x;
        }
      acc = std::move(next);
    }
    for (const auto& [key, x] : acc) out.add(Partition(key.first), Partition(key.second), checked_mul(c, x));
  }
  return out;
}

}  // namespace khecke
