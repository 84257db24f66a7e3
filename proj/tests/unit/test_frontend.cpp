#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <unistd.h>

#include "khecke/commands.hpp"
#include "khecke/render.hpp"
#include "khecke/tables.hpp"
#include "support.hpp"

using namespace khecke;
using namespace khecke::test;
namespace fs = std::filesystem;

namespace {

Partition P(const char* s) { return Partition::parse(s); }

struct TempDir {
  fs::path path;
  explicit TempDir(const char* tag) {
    path = fs::temp_directory_path() / (std::string("khecke_") + tag + "_" + std::to_string(::getpid()));
    fs::remove_all(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

struct EnvGuard {
  std::string name;
  std::optional<std::string> old;
  EnvGuard(const char* n, const char* value) : name(n) {
    if (const char* v = std::getenv(n)) old = v;
    if (value) ::setenv(n, value, 1);
    else ::unsetenv(n);
  }
  ~EnvGuard() {
    if (old) ::setenv(name.c_str(), old->c_str(), 1);
    else ::unsetenv(name.c_str());
  }
};

}  // namespace

TEST_SUITE("frontend") {

TEST_CASE("text rendering") {
  auto a2 = RootDatum::sl(3);
  CHECK(to_text(om(a2->simple_root(1) + a2->simple_root(2)), *a2) == "1 - e^(a1+a2)");
  CHECK(to_text(LaurentPoly(), *a2) == "0");
  CHECK(weight_text(*a2, a2->simple_root(1) - a2->simple_root(2).scaled(2)) == "a1-2a2");
  CHECK(signed_sum({{1, "x"}, {-2, "y"}, {3, ""}}) == "x - 2y + 3");
  CHECK(signed_sum({}) == "0");
  SymFunc f(Basis::s);
  f.add(P("2"), 1);
  f.add(P("21"), 1);
  CHECK(to_text(f) == "s2 + s21");
  GrassExpansion e{{P("11"), -1}, {P("111"), 1}};
  CHECK(to_text(e) == "-k11 + k111");
  auto d = RootDatum::affine_sl(2);
  HeckeRing ring(d);
  HeckeElt k = ring.T("10");
  k.add(W(*d, "01"), LaurentPoly::monomial(-ring.root(1), 1));
  CHECK(to_text(k, ring.coeff_datum()) == "(e^(-a1))T01 + T10");
}

TEST_CASE("json round trips") {
  for (int r = 0; r < 10; ++r) {
    auto d = RootDatum::parse_type("A~2");
    LaurentPoly p = random_poly(*d);
    CHECK(poly_from_json(to_json(p), *d) == p);
  }
  SymFunc f(Basis::g, 3);
  f.add(P("21"), 2);
  f.add(P(""), -1);
  CHECK(symfunc_from_json(to_json(f)) == f);
  IntHecke a;
  a.add(AffinePerm::from_word(3, parse_word("210")), 3);
  a.add(AffinePerm::identity(3), -1);
  CHECK(int_hecke_from_json(to_json(a), 3) == a);
  CHECK_THROWS_AS(int_hecke_from_json(Json::parse(R"([{"word":"00","coefficient":1}])"), 3), DomainError);
}

TEST_CASE("expansion cache") {
  TempDir tmp("cache");
  std::vector<std::string> warnings;
  ExpansionCache cache(tmp.path, [&](const std::string& w) { warnings.push_back(w); });
  SymFunc f(Basis::h, 3);
  f.add(P("21"), 1);
  f.add(P("2"), 1);
  int calls = 0;
  auto compute = [&] {
    ++calls;
    return f;
  };
  CHECK(cache.get(3, "g", P("21"), 3, compute) == f);
  CHECK(cache.get(3, "g", P("21"), 3, compute) == f);
  CHECK(calls == 1);
  CHECK(warnings.empty());
  // flip a coefficient without fixing the checksum
  fs::path path = cache.path_for(3, "g", P("21"), 3);
  Json record = Json::parse(std::ifstream(path));
  record["value"]["terms"][0]["coeff"] = 7;
  std::ofstream(path) << record.dump();
  CHECK(cache.get(3, "g", P("21"), 3, compute) == f);
  CHECK(calls == 2);
  REQUIRE(warnings.size() == 1);
  CHECK(warnings[0].find("checksum") != std::string::npos);
  std::ofstream(path) << "not json";
  CHECK(cache.get(3, "g", P("21"), 3, compute) == f);
  CHECK(calls == 3);
  CHECK(warnings.size() == 2);
  // the bad record was overwritten
  CHECK(cache.get(3, "g", P("21"), 3, compute) == f);
  CHECK(calls == 3);
  CHECK(warnings.size() == 2);
  // disabled cache always computes
  ExpansionCache off;
  CHECK_FALSE(off.enabled());
  off.get(3, "g", P("21"), 3, compute);
  CHECK(calls == 4);
}

TEST_CASE("cache directory precedence") {
  {
    EnvGuard env("KHECKE_CACHE", "/tmp/from_env");
    CHECK(ExpansionCache::resolve_dir("/tmp/from_flag") == fs::path("/tmp/from_env"));
  }
  EnvGuard env("KHECKE_CACHE", nullptr);
  CHECK(ExpansionCache::resolve_dir("/tmp/from_flag") == fs::path("/tmp/from_flag"));
  CHECK(ExpansionCache::resolve_dir("").empty());
}

TEST_CASE("golden tables regenerate") {
  Workspace ws;
  for (const auto& name : table_names()) {
    TableDiff d = diff_table(ws, name);
    CHECK_MESSAGE(d.ok(), name);
    CHECK(d.rows > 0);
  }
  CHECK(diff_table(ws, "k", 3).rows == 9);
  CHECK_THROWS_AS(diff_table(ws, "k", 7), DomainError);
  CHECK_THROWS_AS(load_golden("nope"), DomainError);
}

TEST_CASE("table rendering") {
  Workspace ws;
  Json t = regenerate_table(ws, "g", 2);
  std::string text = table_text(t);
  CHECK(text.find("111") != std::string::npos);
  std::string tex = table_latex(t);
  CHECK(tex.find("\\begin{array}") != std::string::npos);
}

TEST_CASE("session commands") {
  EnvGuard env("KHECKE_CACHE", nullptr);
  Session s;
  s.set_cache_dir("");
  auto r = s.run("psi", {{"type", "A2"}, {"v", "1"}, {"w", "121"}});
  CHECK(r.status == Status::ok);
  CHECK(r.output.find("1 - e^(a1+a2)") != std::string::npos);
  r = s.run("g", {{"n", "3"}, {"partition", "2,1"}, {"basis", "kschur"}});
  CHECK(r.output.find("s2 + s21") != std::string::npos);
  r = s.run("pieri", {{"n", "2"}, {"i", "1"}, {"partition", "1,1"}});
  CHECK(r.status == Status::ok);
  CHECK(r.output.find("-k11 + k111") != std::string::npos);
  r = s.run("kappa", {{"n", "3"}, {"i", "2"}, {"format", "json"}});
  CHECK(r.status == Status::ok);
  Json parsed;
  CHECK_NOTHROW(parsed = Json::parse(r.output));
  CHECK(parsed.at("terms").size() == 3);
  r = s.run("tables", {{"which", "k"}, {"n", "3"}, {"diff", "1"}});
  CHECK(r.status == Status::ok);

  CHECK(s.run("psi", {{"type", "A2"}, {"v", "11"}, {"w", "121"}}).status == Status::domain_error);
  CHECK(s.run("g", {{"n", "3"}, {"partition", "3"}}).status == Status::domain_error);
  CHECK(s.run("kappa", {{"n", "3"}, {"i", "2"}, {"bogus", "1"}}).status == Status::domain_error);
  CHECK(s.run("kappa", {{"n", "x"}, {"i", "2"}}).status == Status::domain_error);
  CHECK(s.run("kappa", {{"n", "3"}, {"i", "2"}, {"format", "latex-table"}}).status == Status::domain_error);
  CHECK(s.run("nope", {}).status == Status::domain_error);
  CHECK_FALSE(s.run("nope", {}).error.empty());
}

TEST_CASE("a damaged golden table fails the diff") {
  TempDir tmp("golden");
  fs::create_directories(tmp.path);
  for (const auto& name : table_names()) fs::copy_file(tables_dir() / (name + ".json"), tmp.path / (name + ".json"));
  Json g = load_golden("g");
  g["rows"][2]["s"][0][1] = 9;
  std::ofstream(tmp.path / "g.json") << g.dump();
  EnvGuard env("KHECKE_TABLES_DIR", tmp.path.c_str());
  Session s;
  s.set_cache_dir("");
  auto r = s.run("tables", {{"which", "g"}, {"diff", "1"}});
  CHECK(r.status == Status::verification_failed);
  CHECK(r.output.find("1 mismatches") != std::string::npos);
  CHECK(s.run("tables", {{"which", "k"}, {"diff", "1"}}).status == Status::ok);
}

TEST_CASE("command specs are consistent") {
  std::set<std::string> names;
  for (const auto& c : command_specs()) {
    CHECK(names.insert(c.name).second);
    CHECK_FALSE(c.help.empty());
    for (const auto& o : c.options) CHECK(o.name.find("--") == std::string::npos);
  }
  CHECK(names.size() == 13);
}

TEST_CASE("warm cache gives the same answers") {
  EnvGuard env("KHECKE_CACHE", nullptr);
  TempDir tmp("warm");
  std::vector<std::pair<std::string, Options>> runs = {
      {"g", {{"n", "3"}, {"partition", "2,2,1"}, {"basis", "h"}}},
      {"kschur", {{"n", "4"}, {"partition", "3,1"}}},
      {"G", {{"n", "3"}, {"partition", "2,1"}, {"max-degree", "6"}}},
      {"G", {{"n", "2"}, {"partition", "1,1"}, {"basis", "G"}, {"format", "json"}}},
  };
  std::vector<std::string> first;
  Session cold;
  cold.set_cache_dir(tmp.path.string());
  for (const auto& [cmd, opts] : runs) {
    auto r = cold.run(cmd, opts);
    REQUIRE(r.status == Status::ok);
    first.push_back(r.output);
  }
  REQUIRE(fs::exists(tmp.path));
  CHECK(std::distance(fs::directory_iterator(tmp.path), fs::directory_iterator()) > 0);
  Session warm;
  warm.set_cache_dir(tmp.path.string());
  for (std::size_t i = 0; i < runs.size(); ++i) {
    auto r = warm.run(runs[i].first, runs[i].second);
    CHECK(r.output == first[i]);
    CHECK(r.warnings.empty());
  }
  Options scan{{"n", "3"}, {"max-len", "6"}};
  auto a = cold.run("check-conjectures", scan);
  auto b = warm.run("check-conjectures", scan);
  CHECK(a.status == Status::ok);
  CHECK(a.output == b.output);
  Session uncached;
  uncached.set_cache_dir("");
  for (std::size_t i = 0; i < runs.size(); ++i) CHECK(uncached.run(runs[i].first, runs[i].second).output == first[i]);
}

}
