#include "khecke/tables.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "khecke/errors.hpp"

#ifndef KHECKE_DEFAULT_TABLES_DIR
#define KHECKE_DEFAULT_TABLES_DIR "tables"
#endif

namespace khecke {

namespace {

// Bounds on label size per n, matching the golden files.
const std::map<std::string, std::map<int, int>>& scopes() {
  static const std::map<std::string, std::map<int, int>> s = {
      {"k", {{3, 4}, {4, 4}}},
      {"g", {{2, 5}, {3, 5}, {4, 4}}},
      {"coproduct", {{2, 5}, {3, 4}, {4, 4}}},
      {"G", {{2, 5}, {3, 5}}},
      {"grass", {{2, 5}, {3, 5}, {4, 5}}},
  };
  return s;
}

constexpr int kGDegree = 8;

void check_which(const std::string& which) {
  const auto& names = table_names();
  if (std::find(names.begin(), names.end(), which) == names.end())
    domain_fail("unknown table '" + which + "' (expected k, g, coproduct, G, grass or sl2)");
}

std::vector<std::pair<int, int>> selected(const std::string& which, std::optional<int> n) {
  const auto& s = scopes().at(which);
  if (!n) return {s.begin(), s.end()};
  if (*n < 2 || *n > AffinePerm::kMaxN) domain_fail("n must be between 2 and " + std::to_string(AffinePerm::kMaxN));
  auto it = s.find(*n);
  return {{*n, it == s.end() ? 4 : it->second}};
}

AffinePerm reduced_perm(int n, const std::string& word) {
  auto letters = parse_word(word);
  for (int i : letters)
    if (i < 0 || i >= n) domain_fail("letter " + std::to_string(i) + " in '" + word + "' is not a node for n=" + std::to_string(n));
  AffinePerm w = AffinePerm::from_word(n, letters);
  if (w.length() != static_cast<int>(letters.size())) domain_fail("word '" + word + "' is not reduced");
  return w;
}

Json pairs_json(const SymFunc& f) {
  Json out = Json::array();
  for (const auto& [p, c] : f.terms()) out.push_back(Json::array({p.label(), c}));
  return out;
}

SymFunc pairs_symfunc(const Json& j, Basis b, int n) {
  SymFunc out(b, n);
  for (const auto& t : j) out.add(Partition::parse(t.at(0).get<std::string>()), t.at(1).get<std::int64_t>());
  return out;
}

std::int64_t alpha_multiple(const RootDatum& coeffs, const Weight& w) {
  const RootDatum& names = coeffs.finite_part();
  auto c = names.root_coordinates(names.weight(w.coords()));
  if (!c || c->size() != 1) throw VerificationError("exponent outside the root lattice of sl_2");
  return (*c)[0];
}

using Sl2Poly = std::map<std::int64_t, std::int64_t>;
using Sl2Elt = std::map<std::string, Sl2Poly>;  // canonical word -> coefficient

Sl2Elt sl2_elt(const HeckeElt& a, const RootDatum& coeffs) {
  Sl2Elt out;
  for (const auto& [w, c] : a.terms()) {
    Sl2Poly p;
    for (const auto& t : c.terms()) p[alpha_multiple(coeffs, t.exponent)] += t.coeff;
    out[word_label(w.word())] = p;
  }
  return out;
}

Json sl2_row(const std::string& name, const std::string& word, const Sl2Elt& e, const RootDatum& d) {
  // (length, word) order, constant term first within a coefficient
  std::vector<std::string> words;
  for (const auto& [w, p] : e) words.push_back(w);
  std::sort(words.begin(), words.end(), [&](const std::string& a, const std::string& b) {
    WeylElt x = weyl::from_word(d, a), y = weyl::from_word(d, b);
    if (x.length() != y.length()) return x.length() > y.length();
    return x < y;
  });
  Json terms = Json::array();
  for (const auto& w : words) {
    Json poly = Json::array();
    const Sl2Poly& p = e.at(w);
    if (p.count(0)) poly.push_back(Json::array({0, p.at(0)}));
    for (auto it = p.rbegin(); it != p.rend(); ++it)
      if (it->first != 0) poly.push_back(Json::array({it->first, it->second}));
    terms.push_back(Json::array({w, poly}));
  }
  return {{"name", name}, {"word", word}, {"terms", terms}};
}

Json regenerate_sl2() {
  auto d = RootDatum::affine_sl(2);
  HeckeRing ring(d);
  Json rows = Json::array();
  for (auto [name, word] : {std::pair{"t_alpha", "01"}, std::pair{"t_-alpha", "10"}}) {
    HeckeElt t = ring.group_element(weyl::from_word(*d, std::string_view(word)));
    rows.push_back(sl2_row(name, word, sl2_elt(t, ring.coeff_datum()), *d));
  }
  for (int m = 0; m <= 2; ++m) {
    WeylElt w = sl2_sigma(*d, m);
    HeckeElt k = equivariant_k_sl2(d, w, 2 * w.length() + 4);
    rows.push_back(sl2_row("k", word_label(w.word()), sl2_elt(k, ring.coeff_datum()), *d));
  }
  return rows;
}

Sl2Elt sl2_from_row(const Json& row, const RootDatum& d) {
  Sl2Elt out;
  for (const auto& t : row.at("terms")) {
    std::string w = word_label(weyl::from_word(d, t.at(0).get<std::string>()).word());
    Sl2Poly p;
    for (const auto& e : t.at(1))
      if (e.at(1).get<std::int64_t>() != 0) p[e.at(0).get<std::int64_t>()] += e.at(1).get<std::int64_t>();
    out[w] = p;
  }
  return out;
}

std::string sl2_poly_text(const Sl2Poly& p) {
  std::vector<std::pair<std::int64_t, std::string>> terms;
  if (p.count(0)) terms.push_back({p.at(0), ""});
  std::vector<std::int64_t> ks;
  for (const auto& [k, c] : p)
    if (k != 0) ks.push_back(k);
  std::sort(ks.begin(), ks.end(), [](auto a, auto b) { return std::pair(std::abs(a), -a) < std::pair(std::abs(b), -b); });
  for (std::int64_t k : ks) {
    auto it = p.find(k);
    std::string e = it->first == 1 ? "a1" : it->first == -1 ? "-a1" : std::to_string(it->first) + "a1";
    terms.push_back({it->second, "e^(" + e + ")"});
  }
  return signed_sum(terms);
}

std::string row_key(const Json& row) {
  std::string key = row.contains("name") ? row.at("name").get<std::string>() + " " : "";
  if (row.contains("n")) key += "n=" + std::to_string(row.at("n").get<int>()) + " ";
  for (const char* f : {"w", "lambda", "partition", "word"})
    if (row.contains(f) && !row.contains("name")) return key + (row.at(f).get<std::string>().empty() ? "()" : row.at(f).get<std::string>());
  return key + (row.at("word").get<std::string>().empty() ? "()" : row.at("word").get<std::string>());
}

// Identity of a row independent of the reduced word chosen for it.
std::string row_identity(const std::string& which, const Json& row, Workspace& ws) {
  if (which == "sl2") {
    auto d = RootDatum::affine_sl(2);
    return row.at("name").get<std::string>() + ":" +
           word_label(weyl::from_word(*d, row.at("word").get<std::string>()).word());
  }
  int n = row.at("n").get<int>();
  std::string label;
  if (which == "k") label = ws.engine(n).label(reduced_perm(n, row.at("w").get<std::string>())).label();
  else if (which == "grass") label = Partition::parse(row.at("partition").get<std::string>()).label();
  else label = Partition::parse(row.at("lambda").get<std::string>()).label();
  return std::to_string(n) + ":" + label;
}

IntHecke k_from_row(const Json& row) {
  int n = row.at("n").get<int>();
  IntHecke out;
  for (const auto& t : row.at("terms")) out.add(reduced_perm(n, t.at(0).get<std::string>()), t.at(1).get<std::int64_t>());
  return out;
}

SymTensor coproduct_from_row(const Json& row) {
  int n = row.at("n").get<int>();
  SymTensor out(Basis::g, Basis::g, n);
  for (const auto& t : row.at("terms"))
    out.add(Partition::parse(t.at(0).get<std::string>()), Partition::parse(t.at(1).get<std::string>()),
            t.at(2).get<std::int64_t>());
  return out;
}

std::string compare_rows(const std::string& which, const Json& want, const Json& got) {
  if (which == "k") {
    if (k_from_row(want) != k_from_row(got)) return "expected " + to_text(k_from_row(want)) + ", got " + to_text(k_from_row(got));
  } else if (which == "g") {
    int n = want.at("n").get<int>();
    for (const char* col : {"s", "kschur"}) {
      Basis b = std::string(col) == "s" ? Basis::s : Basis::kschur;
      SymFunc a = pairs_symfunc(want.at(col), b, n), c = pairs_symfunc(got.at(col), b, n);
      if (a.terms() != c.terms()) return std::string(col) + " column: expected " + to_text(a) + ", got " + to_text(c);
    }
  } else if (which == "coproduct") {
    if (coproduct_from_row(want).terms() != coproduct_from_row(got).terms())
      return "expected " + to_text(coproduct_from_row(want)) + ", got " + to_text(coproduct_from_row(got));
  } else if (which == "G") {
    int n = want.at("n").get<int>();
    SymFunc a = pairs_symfunc(want.at("F"), Basis::F, n);
    SymFunc c = pairs_symfunc(got.at("F"), Basis::F, n).up_to_degree(std::max(a.max_degree(), 0));
    if (a.terms() != c.terms()) return "F column: expected " + to_text(a) + ", got " + to_text(c);
  } else if (which == "grass") {
    int n = want.at("n").get<int>();
    if (reduced_perm(n, want.at("word").get<std::string>()) != reduced_perm(n, got.at("word").get<std::string>()))
      return "expected word " + want.at("word").get<std::string>() + ", got " + got.at("word").get<std::string>();
  } else if (which == "sl2") {
    auto d = RootDatum::affine_sl(2);
    if (sl2_from_row(want, *d) != sl2_from_row(got, *d)) return "coefficients differ";
  }
  return {};
}

// LaTeX names
std::string tex_sub(const std::string& prefix, const std::string& label) {
  return prefix + "_{" + (label.empty() ? "\\emptyset" : label) + "}";
}

}  // namespace

std::filesystem::path tables_dir() {
  if (const char* env = std::getenv("KHECKE_TABLES_DIR"); env && *env) return env;
  return KHECKE_DEFAULT_TABLES_DIR;
}

const std::vector<std::string>& table_names() {
  static const std::vector<std::string> names = {"k", "g", "coproduct", "G", "grass", "sl2"};
  return names;
}

Json load_golden(const std::string& which) {
  check_which(which);
  auto path = tables_dir() / (which + ".json");
  std::ifstream in(path);
  if (!in) throw IoError("cannot open golden table " + path.string());
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw IoError("malformed golden table " + path.string() + ": " + e.what());
  }
}

Json regenerate_table(Workspace& ws, const std::string& which, std::optional<int> n) {
  check_which(which);
  Json rows = Json::array();
  if (which == "sl2") {
    if (n && *n != 2) domain_fail("the sl2 table lives at n=2");
    return {{"kind", which}, {"rows", regenerate_sl2()}};
  }
  for (auto [rank, bound] : selected(which, n)) {
    const AffineEngine& e = ws.engine(rank);
    for (const Partition& lab : e.labels(bound)) {
      if (lab.empty() && which != "k") continue;
      std::string word = word_label(e.element(lab).word());
      if (which == "k") {
        Json terms = Json::array();
        for (const auto& [w, c] : ws.peterson(rank).fomin_stanley_elt(lab).sorted())
          terms.push_back(Json::array({word_label(w.word()), c}));
        rows.push_back({{"n", rank}, {"w", word}, {"terms", terms}});
      } else if (which == "g") {
        SymFunc g = ws.g(rank, lab);
        rows.push_back({{"n", rank},
                        {"lambda", lab.label()},
                        {"s", pairs_json(convert(g, Basis::s))},
                        {"kschur", pairs_json(e.h_to_kschur(g))}});
      } else if (which == "coproduct") {
        Json terms = Json::array();
        for (const auto& [key, c] : e.g_coproduct(lab).terms())
          terms.push_back(Json::array({key.first.label(), key.second.label(), c}));
        rows.push_back({{"n", rank}, {"lambda", lab.label()}, {"terms", terms}});
      } else if (which == "G") {
        rows.push_back({{"n", rank}, {"lambda", lab.label()}, {"through_degree", kGDegree},
                        {"F", pairs_json(e.G_in_F(e.element(lab), kGDegree))}});
      } else if (which == "grass") {
        rows.push_back({{"n", rank}, {"partition", lab.label()}, {"word", word}});
      }
    }
  }
  return {{"kind", which}, {"rows", rows}};
}

TableDiff diff_table(Workspace& ws, const std::string& which, std::optional<int> n) {
  TableDiff out;
  out.which = which;
  if (which == "sl2") n.reset();
  Json golden = load_golden(which);
  std::map<std::string, Json> want, got;
  for (const auto& r : golden.at("rows"))
    if (!n || r.at("n").get<int>() == *n) want[row_identity(which, r, ws)] = r;
  if (want.empty()) domain_fail("the " + which + " table has no rows at n=" + std::to_string(*n));
  Json computed = regenerate_table(ws, which, n);
  for (const auto& r : computed.at("rows")) got[row_identity(which, r, ws)] = r;
  out.rows = want.size();
  for (const auto& [id, row] : want) {
    auto it = got.find(id);
    if (it == got.end()) {
      out.mismatches.push_back(row_key(row) + ": not regenerated");
      continue;
    }
    std::string m = compare_rows(which, row, it->second);
    if (!m.empty()) out.mismatches.push_back(row_key(row) + ": " + m);
  }
  for (const auto& [id, row] : got)
    if (!want.count(id)) out.mismatches.push_back(row_key(row) + ": missing from the golden table");
  return out;
}

std::string table_text(const Json& table) {
  const std::string which = table.at("kind").get<std::string>();
  std::ostringstream os;
  for (const auto& row : table.at("rows")) {
    os << row_key(row);
    if (which == "k") {
      std::vector<std::pair<std::int64_t, std::string>> t;
      for (const auto& x : row.at("terms")) {
        std::string w = x.at(0).get<std::string>();
        t.push_back({x.at(1).get<std::int64_t>(), w.empty() ? "" : "T" + w});
      }
      os << ": " << signed_sum(t);
    } else if (which == "g") {
      int n = row.at("n").get<int>();
      os << ": " << to_text(pairs_symfunc(row.at("s"), Basis::s, n)) << " | "
         << to_text(pairs_symfunc(row.at("kschur"), Basis::kschur, n));
    } else if (which == "coproduct") {
      os << ": " << to_text(coproduct_from_row(row));
    } else if (which == "G") {
      os << ": " << to_text(pairs_symfunc(row.at("F"), Basis::F, row.at("n").get<int>()));
    } else if (which == "grass") {
      os << " -> " << row.at("word").get<std::string>();
    } else if (which == "sl2") {
      std::string body;
      for (const auto& x : row.at("terms")) {
        std::string w = x.at(0).get<std::string>();
        Sl2Poly p;
        for (const auto& e : x.at(1)) p[e.at(0).get<std::int64_t>()] += e.at(1).get<std::int64_t>();
        std::string c = sl2_poly_text(p);
        std::string basis = w.empty() ? "" : "T" + w;
        if (c == "1") body += (body.empty() ? "" : " + ") + (basis.empty() ? "1" : basis);
        else body += (body.empty() ? "" : " + ") + ("(" + c + ")" + basis);
      }
      os << ": " << (body.empty() ? "0" : body);
    }
    os << "\n";
  }
  return os.str();
}

std::string table_latex(const Json& table) {
  const std::string which = table.at("kind").get<std::string>();
  std::ostringstream os;
  bool sl2 = which == "sl2";
  os << "\\begin{array}{" << (sl2 ? "|l|l|l|" : which == "g" ? "|c|l|l|l|" : "|c|l|l|") << "}\n\\hline\n";
  int last_n = -1;
  for (const auto& row : table.at("rows")) {
    std::vector<std::string> cells;
    if (!sl2) {
      int n = row.at("n").get<int>();
      if (n != last_n && last_n != -1) os << "\\hline\n";
      cells.push_back(n != last_n ? std::to_string(n) : "");
      last_n = n;
    }
    if (which == "k") {
      std::string w = row.at("w").get<std::string>();
      cells.push_back(w.empty() ? "\\emptyset" : w);
      std::vector<std::pair<std::int64_t, std::string>> t;
      for (const auto& x : row.at("terms")) {
        std::string v = x.at(0).get<std::string>();
        t.push_back({x.at(1).get<std::int64_t>(), v.empty() ? "" : tex_sub("T", v)});
      }
      cells.push_back(signed_sum(t));
    } else if (which == "g" || which == "G") {
      cells.push_back(row.at("lambda").get<std::string>());
      for (const char* col : which == "g" ? std::vector<const char*>{"s", "kschur"} : std::vector<const char*>{"F"}) {
        std::string prefix = std::string(col) == "kschur" ? "s^{(" + std::to_string(row.at("n").get<int>() - 1) + ")}"
                                                          : std::string(col);
        std::vector<std::pair<std::int64_t, std::string>> t;
        for (const auto& x : row.at(col)) t.push_back({x.at(1).get<std::int64_t>(), tex_sub(prefix, x.at(0).get<std::string>())});
        cells.push_back(signed_sum(t));
      }
    } else if (which == "coproduct") {
      cells.push_back(row.at("lambda").get<std::string>());
      std::vector<std::pair<std::int64_t, std::string>> t;
      for (const auto& x : row.at("terms"))
        t.push_back({x.at(2).get<std::int64_t>(),
                     tex_sub("g", x.at(0).get<std::string>()) + " \\otimes " + tex_sub("g", x.at(1).get<std::string>())});
      cells.push_back(signed_sum(t));
    } else if (which == "grass") {
      cells.push_back(row.at("partition").get<std::string>());
      cells.push_back(row.at("word").get<std::string>());
    } else if (sl2) {
      std::string name = row.at("name").get<std::string>();
      std::string w = row.at("word").get<std::string>();
      cells.push_back(name == "k" ? tex_sub("k", w) : name == "t_alpha" ? "t_{\\alpha}" : "t_{-\\alpha}");
      cells.push_back(w.empty() ? "\\emptyset" : w);
      std::string body;
      for (const auto& x : row.at("terms")) {
        Sl2Poly p;
        for (const auto& e : x.at(1)) p[e.at(0).get<std::int64_t>()] += e.at(1).get<std::int64_t>();
        std::string c = sl2_poly_text(p);
        std::string v = x.at(0).get<std::string>();
        std::string basis = v.empty() ? "" : tex_sub("T", v);
        std::string term = c == "1" ? (basis.empty() ? "1" : basis) : "(" + c + ")" + basis;
        body += (body.empty() ? "" : " + ") + term;
      }
      cells.push_back(body.empty() ? "0" : body);
    }
    for (std::size_t i = 0; i < cells.size(); ++i) os << (i ? " & " : "") << cells[i];
    os << " \\\\\n";
  }
  os << "\\hline\n\\end{array}\n";
  return os.str();
}

}  // namespace khecke
