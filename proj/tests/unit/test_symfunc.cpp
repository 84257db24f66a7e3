#include <numeric>

#include "khecke/symfunc.hpp"
#include "support.hpp"

using namespace khecke;
using namespace khecke::test;

namespace {

Partition P(const char* s) { return Partition::parse(s); }

SymFunc S(Basis b, std::initializer_list<std::pair<const char*, std::int64_t>> terms) {
  SymFunc f(b);
  for (auto [p, c] : terms) f.add(P(p), c);
  return f;
}

SymFunc random_sym(Basis b, int max_deg) {
  SymFunc f(b);
  for (int d = 0; d <= max_deg; ++d)
    for (const auto& p : partitions_of(d, d))
      if (uniform(0, 2) == 0) f.add(p, uniform(-3, 3));
  return f;
}

// contingency tables with given row and column sums
std::int64_t count_matrices(std::vector<int> rows, std::vector<int> cols) {
  if (rows.empty()) return std::all_of(cols.begin(), cols.end(), [](int c) { return c == 0; }) ? 1 : 0;
  int r = rows.back();
  rows.pop_back();
  std::int64_t total = 0;
  std::vector<int> take(cols.size(), 0);
  auto rec = [&](auto&& self, std::size_t j, int left) -> void {
    if (j == cols.size()) {
      if (left != 0) return;
      std::vector<int> rest(cols.size());
      for (std::size_t k = 0; k < cols.size(); ++k) rest[k] = cols[k] - take[k];
      total += count_matrices(rows, rest);
      return;
    }
    for (int x = 0; x <= std::min(left, cols[j]); ++x) {
      take[j] = x;
      self(self, j + 1, left - x);
    }
    take[j] = 0;
  };
  rec(rec, 0, r);
  return total;
}

}  // namespace

TEST_SUITE("symfunc") {

TEST_CASE("kostka numbers") {
  CHECK(kostka(P("21"), P("111")) == 2);
  CHECK(kostka(P("22"), P("211")) == 1);
  CHECK(kostka(P("3"), P("111")) == 1);
  CHECK(kostka(P("111"), P("3")) == 0);
  CHECK(kostka(P("32"), P("221")) == 2);
  std::int64_t fact = 1;
  for (int d = 1; d <= 6; ++d) {
    fact *= d;
    std::vector<int> ones(static_cast<std::size_t>(d), 1);
    std::int64_t sum = 0;
    for (const auto& l : partitions_of(d, d)) {
      std::int64_t k = kostka(l, Partition(ones));
      sum += k * k;
      CHECK(kostka(l, l) == 1);
      for (const auto& m : partitions_of(d, d))
        if (!dominates(l, m)) CHECK(kostka(l, m) == 0);
    }
    CHECK(sum == fact);  // RSK
  }
}

TEST_CASE("h expands in m by counting matrices") {
  for (int d = 1; d <= 5; ++d)
    for (const auto& mu : partitions_of(d, d)) {
      SymFunc m = convert(SymFunc::single(Basis::h, mu), Basis::m);
      for (const auto& l : partitions_of(d, d)) CHECK(m.coefficient(l) == count_matrices(l.parts(), mu.parts()));
    }
}

TEST_CASE("basis changes") {
  CHECK(convert(S(Basis::h, {{"11", 1}}), Basis::s) == S(Basis::s, {{"2", 1}, {"11", 1}}));
  CHECK(convert(S(Basis::h, {{"21", 1}}), Basis::m) == S(Basis::m, {{"3", 1}, {"21", 2}, {"111", 3}}));
  CHECK(convert(S(Basis::s, {{"11", 1}}), Basis::m) == S(Basis::m, {{"11", 1}}));
  CHECK(convert(S(Basis::s, {{"2", 1}}), Basis::h) == S(Basis::h, {{"2", 1}}));
  CHECK(convert(S(Basis::s, {{"11", 1}}), Basis::h) == S(Basis::h, {{"11", 1}, {"2", -1}}));
  for (int r = 0; r < 20; ++r)
    for (Basis a : {Basis::m, Basis::h, Basis::s})
      for (Basis b : {Basis::m, Basis::h, Basis::s}) {
        SymFunc f = random_sym(a, 5);
        CHECK(convert(convert(f, b), a) == f);
      }
}

TEST_CASE("hall pairing") {
  for (int d = 0; d <= 5; ++d)
    for (const auto& a : partitions_of(d, d))
      for (const auto& b : partitions_of(d, d)) {
        std::int64_t delta = a == b ? 1 : 0;
        CHECK(hall_pair(SymFunc::single(Basis::h, a), SymFunc::single(Basis::m, b)) == delta);
        CHECK(hall_pair(SymFunc::single(Basis::m, b), SymFunc::single(Basis::h, a)) == delta);
        CHECK(hall_pair(SymFunc::single(Basis::s, a), SymFunc::single(Basis::s, b)) == delta);
      }
  // <h_1^2, h_1^2> = 2
  SymFunc h11 = SymFunc::single(Basis::h, P("11"));
  CHECK(hall_pair(h11, convert(h11, Basis::m)) == 2);
}

TEST_CASE("products") {
  SymFunc s1 = SymFunc::single(Basis::s, P("1"));
  CHECK(multiply(s1, s1) == S(Basis::s, {{"2", 1}, {"11", 1}}));
  SymFunc m1 = SymFunc::single(Basis::m, P("1"));
  CHECK(multiply(m1, m1) == S(Basis::m, {{"2", 1}, {"11", 2}}));
  for (int r = 0; r < 10; ++r)
    for (Basis b : {Basis::m, Basis::h, Basis::s}) {
      SymFunc f = random_sym(b, 3), g = random_sym(b, 3), h = random_sym(b, 2);
      CHECK(multiply(f, g) == multiply(g, f));
      CHECK(multiply(multiply(f, g), h) == multiply(f, multiply(g, h)));
      // products commute with basis change
      CHECK(convert(multiply(f, g), Basis::m) == multiply(convert(f, Basis::m), convert(g, Basis::m)));
    }
}

TEST_CASE("truncation drops m terms with a large part") {
  CHECK(truncate(S(Basis::m, {{"3", 1}, {"21", 2}}), 3) == S(Basis::m, {{"21", 2}}));
  CHECK(truncate(S(Basis::h, {{"3", 1}}), 3) == S(Basis::m, {{"21", 1}, {"111", 1}}));
  CHECK(truncate(S(Basis::m, {{"2", 1}}), 2).is_zero());
  for (int r = 0; r < 10; ++r) {
    SymFunc f = random_sym(Basis::h, 4);
    SymFunc t = truncate(f, 3);
    for (const auto& [p, c] : t.terms()) CHECK(p.largest() < 3);
  }
}

TEST_CASE("coproduct of complete functions") {
  SymTensor d = coproduct_h(SymFunc::single(Basis::h, P("2")));
  SymTensor want(Basis::h, Basis::h);
  want.add(P("2"), P(""), 1);
  want.add(P("1"), P("1"), 1);
  want.add(P(""), P("2"), 1);
  CHECK(d == want);
  SymTensor d11 = coproduct_h(SymFunc::single(Basis::h, P("11")));
  CHECK(d11.coefficient(P("1"), P("1")) == 2);
  CHECK(d11.coefficient(P("11"), P("")) == 1);
  CHECK(d11.coefficient(P(""), P("11")) == 1);
}

TEST_CASE("partitions") {
  CHECK(P("2,1") == P("21"));
  CHECK(P("").empty());
  CHECK(Partition({10, 1}).label() == "(10,1)");
  CHECK(partitions_of(5, 5).size() == 7);
  CHECK(partitions_of(6, 2).size() == 4);
  CHECK(partitions_up_to(3, 3).size() == 7);
  CHECK_THROWS_AS(Partition({0, 1}), DomainError);
  CHECK(P("111") < P("21"));
  CHECK(P("21") < P("3"));
  CHECK(P("3") < P("1111"));
}

}
