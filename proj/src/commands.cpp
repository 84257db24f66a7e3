#include "khecke/commands.hpp"

#include <charconv>
#include <set>
#include <sstream>

#include "khecke/errors.hpp"
#include "khecke/localization.hpp"
#include "khecke/render.hpp"
#include "khecke/tables.hpp"

namespace khecke {

namespace {

using K = OptionKind;

const OptionSpec kN{"n", K::integer, "rank parameter of affine A_{n-1}"};
const OptionSpec kType{"type", K::text, "Cartan type, e.g. A2, B3, A~1"};
const OptionSpec kTorus{"torus", K::text, "big (default) or small (affine types only)"};
const OptionSpec kPartition{"partition", K::text, "partition as a comma list, e.g. 2,1"};

}  // namespace

const std::vector<CommandSpec>& command_specs() {
  static const std::vector<CommandSpec> specs = {
      {"psi",
       "localization psi^v(w); with --max-len and no --v/--w, a cross-checked table",
       {kType, kTorus,
        {"v", K::text, "reduced word of v"},
        {"w", K::text, "reduced word of w"},
        {"method", K::text, "right (default), left, gw or kk"},
        {"max-len", K::integer, "table mode: all v, w up to this length"}}},
      {"expand-group", "the group element w in the T basis", {kType, kTorus, {"word", K::text, "reduced word of w"}}},
      {"kappa", "kappa_i as a sum of T_w", {kN, {"i", K::integer, "degree, 0 <= i < n"}}},
      {"g", "dual k-Schur g_lambda", {kN, kPartition, {"basis", K::text, "h, m, s (default) or kschur"}}},
      {"G",
       "affine stable Grothendieck G_w",
       {kN, kPartition,
        {"word", K::text, "reduced word of w (any affine permutation)"},
        {"max-degree", K::integer, "expansion degree, default 8"},
        {"basis", K::text, "m, F (default) or G"}}},
      {"kschur", "k-Schur function s^(n-1)_lambda", {kN, kPartition, {"basis", K::text, "h, m or s (default)"}}},
      {"pieri",
       "kappa_i phi_0(k_v) in the phi_0(k_w) basis by cyclically decreasing counts",
       {kN, {"i", K::integer, "degree, 0 <= i < n"}, kPartition}},
      {"coproduct", "coproduct of g_lambda in g (x) g", {kN, kPartition}},
      {"structure",
       "structure constants phi_0(d^w_{uv})",
       {kN, {"u", K::text, "partition u"}, {"v", K::text, "partition v"}}},
      {"k-sl2",
       "equivariant k_w for affine sl_2",
       {{"word", K::text, "reduced word of a Grassmannian w"},
        {"cutoff", K::integer, "support length searched, default 2l(w)+4"}}},
      {"tables",
       "regenerate or diff the golden tables",
       {{"which", K::text, "k, g, coproduct, G, grass, sl2 or all (default)"}, kN,
        {"diff", K::flag, "compare against the stored tables"}}},
      {"check-conjectures",
       "positivity scans; cross-rank scans against n+1",
       {kN, {"max-len", K::integer, "length and degree bound, default 8"},
        {"max-degree", K::integer, "cross-rank degree bound, default 6"}}},
      {"gkm-check",
       "GKM divisibility of the psi functions",
       {kType, kTorus, {"max-len", K::integer, "elements up to this length, default 4"},
        {"max-degree", K::integer, "small torus: powers d up to this, default 3"}}},
  };
  return specs;
}

namespace {

class Args {
 public:
  Args(const CommandSpec& spec, const Options& opts) : opts_(opts) {
    std::set<std::string> known = {"format", "cache-dir"};
    for (const auto& o : spec.options) known.insert(o.name);
    for (const auto& [k, v] : opts)
      if (!known.count(k)) domain_fail("unknown option --" + k + " for " + spec.name);
  }

  bool has(const std::string& k) const { return opts_.count(k) > 0; }

  std::string text(const std::string& k) const {
    auto it = opts_.find(k);
    if (it == opts_.end()) domain_fail("missing --" + k);
    return it->second;
  }
  std::string text(const std::string& k, const std::string& dflt) const { return has(k) ? text(k) : dflt; }

  int integer(const std::string& k) const {
    std::string s = text(k);
    int v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) domain_fail("--" + k + " expects an integer, got '" + s + "'");
    if (v < 0) domain_fail("--" + k + " must be non-negative");
    return v;
  }
  int integer(const std::string& k, int dflt) const { return has(k) ? integer(k) : dflt; }

  int n() const {
    int v = integer("n");
    if (v < 2 || v > AffinePerm::kMaxN) domain_fail("--n must be between 2 and " + std::to_string(AffinePerm::kMaxN));
    return v;
  }

  Partition partition(const std::string& k = "partition") const { return Partition::parse(text(k)); }

  std::string format() const {
    std::string f = text("format", "text");
    if (f != "text" && f != "json" && f != "latex-table") domain_fail("unknown format '" + f + "'");
    return f;
  }

 private:
  const Options& opts_;
};

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

void no_latex(const std::string& format, const std::string& command) {
  if (format == "latex-table") domain_fail("latex-table output is available for tables and check-conjectures, not " + command);
}

WeylElt reduced_element(const RootDatum& d, const std::string& word) {
  auto letters = parse_word(word);
  for (int i : letters) d.index_of(i);
  if (!weyl::is_reduced(d, letters)) domain_fail("word '" + word + "' is not reduced");
  return weyl::from_word(d, letters);
}

AffinePerm reduced_perm(int n, const std::string& word) {
  auto letters = parse_word(word);
  for (int i : letters)
    if (i < 0 || i >= n) domain_fail("letter " + std::to_string(i) + " is not a node of affine A" + std::to_string(n - 1));
  AffinePerm w = AffinePerm::from_word(n, letters);
  if (w.length() != static_cast<int>(letters.size())) domain_fail("word '" + word + "' is not reduced");
  return w;
}

Torus parse_torus(const std::string& s, const RootDatum& d) {
  if (s == "big") return Torus::big;
  if (s == "small") {
    if (!d.is_affine()) domain_fail("the small torus needs an affine type");
    return Torus::small;
  }
  domain_fail("unknown torus '" + s + "' (big or small)");
}

std::string torus_name(Torus t) { return t == Torus::big ? "big" : "small"; }

CommandResult text_or_json(const std::string& format, const std::string& text, const Json& json) {
  CommandResult r;
  r.output = format == "json" ? dump(json) : text + "\n";
  return r;
}

// ---- psi ----

CommandResult cmd_psi(const Args& a) {
  std::string format = a.format();
  no_latex(format, "psi");
  auto d = RootDatum::parse_type(a.text("type"));
  Torus torus = parse_torus(a.text("torus", "big"), *d);
  Localizer loc(d, torus);

  if (!a.has("v") && !a.has("w")) {
    int L = a.integer("max-len");
    if (a.has("method")) domain_fail("table mode always compares right, left and gw");
    auto els = weyl::enumerate(*d, L);
    PsiTable table;
    table.torus = torus;
    std::vector<std::string> mismatches;
    for (const auto& v : els)
      for (const auto& w : els) {
        LaurentPoly r = loc.psi_right(v, w);
        LaurentPoly l = loc.psi_left(v, w);
        LaurentPoly g = loc.psi_graham_willems(v, w.word());
        if (!(r == l) || !(r == g))
          mismatches.push_back("v=" + word_label(v.word()) + " w=" + word_label(w.word()) + ": right " +
                               to_text(r, loc.coeff_datum()) + ", left " + to_text(l, loc.coeff_datum()) + ", gw " +
                               to_text(g, loc.coeff_datum()));
        if (!r.is_zero()) table.values[{v, w}] = r;
      }
    CommandResult res;
    std::size_t pairs = els.size() * els.size();
    if (format == "json") {
      res.output = dump({{"type", d->name()},
                         {"torus", torus_name(torus)},
                         {"max_len", L},
                         {"pairs", pairs},
                         {"mismatches", mismatches},
                         {"values", to_json(table)}});
    } else {
      std::ostringstream os;
      for (const auto& [key, value] : table.values)
        os << "psi^" << (key.first.is_identity() ? "id" : word_label(key.first.word())) << "("
           << (key.second.is_identity() ? "id" : word_label(key.second.word())) << ") = " << to_text(value, loc.coeff_datum())
           << "\n";
      for (const auto& m : mismatches) os << "MISMATCH " << m << "\n";
      os << pairs << " pairs, " << mismatches.size() << " mismatches between right, left and gw\n";
      res.output = os.str();
    }
    if (!mismatches.empty()) res.status = Status::verification_failed;
    return res;
  }

  if (a.has("max-len")) domain_fail("--max-len is for table mode; drop --v and --w");
  WeylElt v = reduced_element(*d, a.text("v"));
  WeylElt w = reduced_element(*d, a.text("w"));
  std::string method = a.text("method", "right");
  LaurentPoly value;
  if (method == "right") value = loc.psi_right(v, w);
  else if (method == "left") value = loc.psi_left(v, w);
  else if (method == "gw") value = loc.psi_graham_willems(v, w.word());
  else if (method == "kk") value = loc.psi_kk(v, w);
  else domain_fail("unknown method '" + method + "' (right, left, gw or kk)");
  return text_or_json(format, to_text(value, loc.coeff_datum()),
                      {{"type", d->name()},
                       {"torus", torus_name(torus)},
                       {"method", method},
                       {"v", word_label(v.word())},
                       {"w", word_label(w.word())},
                       {"value", to_json(value)}});
}

CommandResult cmd_expand_group(const Args& a) {
  std::string format = a.format();
  no_latex(format, "expand-group");
  auto d = RootDatum::parse_type(a.text("type"));
  Torus torus = parse_torus(a.text("torus", d->is_affine() ? "small" : "big"), *d);
  HeckeRing ring(d, torus == Torus::small ? Coefficients::level_zero : Coefficients::native);
  WeylElt w = reduced_element(*d, a.text("word"));
  HeckeElt e = ring.group_element(w);
  return text_or_json(format, to_text(e, ring.coeff_datum()),
                      {{"type", d->name()}, {"torus", torus_name(torus)}, {"word", word_label(w.word())}, {"terms", to_json(e)}});
}

// ---- affine type A ----

CommandResult cmd_kappa(const Args& a, Workspace& ws) {
  std::string format = a.format();
  no_latex(format, "kappa");
  int n = a.n();
  int i = a.integer("i");
  IntHecke k = ws.engine(n).kappa(i);
  return text_or_json(format, to_text(k), {{"n", n}, {"i", i}, {"terms", to_json(k)}});
}

SymFunc in_basis(const SymFunc& h_expansion, const std::string& basis, const AffineEngine& e, bool allow_kschur) {
  Basis b = parse_basis(basis);
  if (b == Basis::h) return h_expansion;
  if (b == Basis::s || b == Basis::m) return convert(h_expansion, b);
  if (b == Basis::kschur && allow_kschur) return e.h_to_kschur(h_expansion);
  domain_fail("basis " + basis + " is not available here");
}

CommandResult cmd_g(const Args& a, Workspace& ws) {
  std::string format = a.format();
  no_latex(format, "g");
  int n = a.n();
  Partition lambda = a.partition();
  ws.engine(n).check_label(lambda);
  SymFunc f = in_basis(ws.g(n, lambda), a.text("basis", "s"), ws.engine(n), true);
  return text_or_json(format, to_text(f), to_json(f));
}

CommandResult cmd_kschur(const Args& a, Workspace& ws) {
  std::string format = a.format();
  no_latex(format, "kschur");
  int n = a.n();
  Partition lambda = a.partition();
  ws.engine(n).check_label(lambda);
  SymFunc f = in_basis(ws.kschur(n, lambda), a.text("basis", "s"), ws.engine(n), false);
  return text_or_json(format, to_text(f), to_json(f));
}

CommandResult cmd_G(const Args& a, Workspace& ws) {
  std::string format = a.format();
  no_latex(format, "G");
  int n = a.n();
  const AffineEngine& e = ws.engine(n);
  int D = a.integer("max-degree", 8);
  if (a.has("partition") == a.has("word")) domain_fail("give exactly one of --partition and --word");
  AffinePerm w;
  std::optional<Partition> lambda;
  if (a.has("partition")) {
    lambda = a.partition();
    e.check_label(*lambda);
    w = e.element(*lambda);
  } else {
    w = reduced_perm(n, a.text("word"));
  }
  std::string basis = a.text("basis", "F");
  SymFunc f;
  if (basis == "m") f = lambda ? ws.G(n, *lambda, D) : e.G(w, D);
  else if (basis == "F") f = e.G_in_F(w, D);
  else if (basis == "G") f = e.G_in_G(w, D);
  else domain_fail("basis " + basis + " is not available for G (m, F or G)");
  Json j = to_json(f);
  j["through_degree"] = D;
  return text_or_json(format, to_text(f), j);
}

CommandResult cmd_pieri(const Args& a, Workspace& ws) {
  std::string format = a.format();
  no_latex(format, "pieri");
  int n = a.n();
  const Peterson& p = ws.peterson(n);
  int i = a.integer("i");
  Partition v = a.partition();
  p.engine().check_label(v);
  GrassExpansion counted = p.pieri(i, v);
  GrassExpansion product = p.expand_in_fs_basis(p.engine().kappa(i) * p.fomin_stanley_elt(v));
  CommandResult r = text_or_json(format, to_text(counted), {{"n", n}, {"i", i}, {"v", partition_json(v)}, {"terms", to_json(counted)}});
  if (counted != product) {
    r.status = Status::verification_failed;
    r.error = "Pieri counts " + to_text(counted) + " differ from the product expansion " + to_text(product);
  }
  return r;
}

CommandResult cmd_coproduct(const Args& a, Workspace& ws) {
  std::string format = a.format();
  no_latex(format, "coproduct");
  int n = a.n();
  Partition lambda = a.partition();
  ws.engine(n).check_label(lambda);
  SymTensor t = ws.engine(n).g_coproduct(lambda);
  return text_or_json(format, to_text(t), to_json(t));
}

CommandResult cmd_structure(const Args& a, Workspace& ws) {
  std::string format = a.format();
  no_latex(format, "structure");
  int n = a.n();
  const Peterson& p = ws.peterson(n);
  Partition u = a.partition("u"), v = a.partition("v");
  p.engine().check_label(u);
  p.engine().check_label(v);
  GrassExpansion d = p.structure_d(u, v);
  return text_or_json(format, to_text(d), {{"n", n}, {"u", partition_json(u)}, {"v", partition_json(v)}, {"terms", to_json(d)}});
}

CommandResult cmd_k_sl2(const Args& a) {
  std::string format = a.format();
  no_latex(format, "k-sl2");
  auto d = RootDatum::affine_sl(2);
  WeylElt w = reduced_element(*d, a.text("word"));
  int cutoff = a.integer("cutoff", 2 * w.length() + 4);
  HeckeElt k = equivariant_k_sl2(d, w, cutoff);
  HeckeRing ring(d);
  return text_or_json(format, to_text(k, ring.coeff_datum()),
                      {{"word", word_label(w.word())}, {"cutoff", cutoff}, {"terms", to_json(k)}});
}

// ---- tables ----

CommandResult cmd_tables(const Args& a, Workspace& ws) {
  std::string format = a.format();
  std::string which = a.text("which", "all");
  std::optional<int> n;
  if (a.has("n")) n = a.n();
  std::vector<std::string> names;
  if (which == "all") {
    for (const auto& t : table_names())
      if (!(n && t == "sl2")) names.push_back(t);
  } else {
    names.push_back(which);
  }

  CommandResult r;
  if (a.has("diff")) {
    if (format == "latex-table") domain_fail("--diff reports in text or json");
    Json out = Json::array();
    std::ostringstream os;
    for (const auto& t : names) {
      if (n && which == "all") {
        // skip tables with no rows at this n
        Json golden = load_golden(t);
        bool any = false;
        for (const auto& row : golden.at("rows")) any = any || (row.contains("n") && row.at("n").get<int>() == *n);
        if (!any && t != "sl2") continue;
      }
      TableDiff d = diff_table(ws, t, n);
      out.push_back({{"table", t}, {"rows", d.rows}, {"mismatches", d.mismatches}});
      os << t << ": " << d.rows << " rows, " << d.mismatches.size() << " mismatches\n";
      for (const auto& m : d.mismatches) os << "  " << m << "\n";
      if (!d.ok()) r.status = Status::verification_failed;
    }
    r.output = format == "json" ? dump(out) : os.str();
    return r;
  }

  Json all = Json::array();
  for (const auto& t : names) {
    Json table = regenerate_table(ws, t, t == "sl2" ? std::nullopt : n);
    if (format == "json") all.push_back(table);
    else if (format == "latex-table") r.output += table_latex(table);
    else r.output += (names.size() > 1 ? "[" + t + "]\n" : "") + table_text(table);
  }
  if (format == "json") r.output = dump(names.size() == 1 ? all.at(0) : all);
  return r;
}

// ---- scans ----

std::string reports_latex(const std::vector<ConjectureReport>& reports) {
  std::ostringstream os;
  os << "\\begin{array}{|l|c|c|r|r|}\n\\hline\n\\text{scan} & n & \\text{bound} & \\text{checked} & \\text{violations} \\\\\n\\hline\n";
  for (const auto& r : reports)
    os << "\\text{" << r.id << "} & " << r.n << " & " << r.bound << " & " << r.checked << " & " << r.violations.size() << " \\\\\n";
  os << "\\hline\n\\end{array}\n";
  return os.str();
}

CommandResult cmd_check(const Args& a, Workspace& ws) {
  std::string format = a.format();
  int bound = a.integer("max-len", 8);
  int cross = a.integer("max-degree", 6);
  std::vector<int> single, lower;
  if (a.has("n")) {
    int n = a.n();
    single = {n};
    if (n + 1 <= AffinePerm::kMaxN) lower = {n};
  } else {
    single = {2, 3, 4};
    lower = {2, 3};
  }
  std::vector<ConjectureReport> reports;
  for (int n : single)
    for (auto& r : conjecture_scan(ws.peterson(n), bound)) reports.push_back(std::move(r));
  for (int n : lower)
    for (auto& r : cross_rank_scan(ws.engine(n), ws.engine(n + 1), cross)) reports.push_back(std::move(r));

  std::size_t violations = 0;
  for (const auto& r : reports) violations += r.violations.size();
  CommandResult res;
  if (format == "json") {
    Json j = Json::array();
    for (const auto& r : reports) j.push_back(to_json(r));
    res.output = dump({{"reports", j}, {"violations", violations}});
  } else if (format == "latex-table") {
    res.output = reports_latex(reports);
  } else {
    std::ostringstream os;
    for (const auto& r : reports) os << to_text(r) << "\n";
    os << reports.size() << " scans, " << violations << " violations\n";
    res.output = os.str();
  }
  if (violations) res.status = Status::verification_failed;
  return res;
}

struct GkmTally {
  explicit GkmTally(std::string n) : name(std::move(n)) {}
  std::string name;
  std::int64_t checked = 0;
  std::vector<std::string> failures;
  void record(bool ok, const std::string& what) {
    ++checked;
    if (!ok) failures.push_back(what);
  }
};

std::string wl(const WeylElt& w) { return w.is_identity() ? "id" : word_label(w.word()); }

CommandResult cmd_gkm(const Args& a) {
  std::string format = a.format();
  no_latex(format, "gkm-check");
  auto d = RootDatum::parse_type(a.text("type"));
  Torus torus = parse_torus(a.text("torus", "big"), *d);
  int L = a.integer("max-len", 4);
  int D = a.integer("max-degree", 3);
  Localizer loc(d, torus);
  auto els = weyl::enumerate(*d, L);
  std::vector<GkmTally> tallies;

  if (torus == Torus::big) {
    GkmTally t("big torus GKM");
    auto roots = weyl::positive_roots(*d, L);
    for (const auto& v : els) t.record(gkm_check_big(loc.function(v), roots, els), "psi^" + wl(v));
    tallies.push_back(std::move(t));
  } else {
    if (d->sl_n() == 0) domain_fail("small-torus GKM is implemented for affine type A");
    if (D < 1) domain_fail("--max-degree must be at least 1");
    int n = d->sl_n();
    GkmTally grass("small torus, Grassmannian condition"), full("small torus, flag condition");
    GkmTally wgrass("small torus, Grassmannian condition, wrong-way functions");
    for (const auto& v : els) {
      PsiFunction f = loc.function(v);
      PsiFunction g = wrongway(*d, loc.function(v));
      for (auto alpha : finite_roots(n))
        for (int k = 1; k <= D; ++k)
          for (const auto& w : els) {
            std::string what = "psi^" + wl(v) + " alpha=e" + std::to_string(alpha.a) + "-e" + std::to_string(alpha.b) +
                               " d=" + std::to_string(k) + " w=" + wl(w);
            grass.record(small_grass_gkm(f, *d, alpha, k, w), what);
            full.record(small_gkm(f, *d, alpha, k, w), what);
            wgrass.record(small_grass_gkm(g, *d, alpha, k, w), what);
          }
    }
    tallies.push_back(std::move(grass));
    tallies.push_back(std::move(full));
    tallies.push_back(std::move(wgrass));
    if (n == 2) {
      GkmTally closed("sl2 closed form, |m|,|j| <= 10"), window("sl2 small GKM on sigma windows, |m|,|j| <= 10");
      for (int m = -10; m <= 10; ++m) {
        WeylElt sm = sl2_sigma(*d, m);
        PsiFunction f = loc.function(sm);
        for (int j = -10; j <= 10; ++j) {
          WeylElt sj = sl2_sigma(*d, j);
          closed.record(sl2_psi_closed(*d, m, j) == loc.psi(sm, sj), "m=" + std::to_string(m) + " j=" + std::to_string(j));
          for (auto alpha : finite_roots(2))
            for (int k = 1; k <= D; ++k) {
              std::string what = "m=" + std::to_string(m) + " j=" + std::to_string(j) + " d=" + std::to_string(k);
              window.record(small_grass_gkm(f, *d, alpha, k, sj), what);
              window.record(small_gkm(f, *d, alpha, k, sj), what);
            }
        }
      }
      tallies.push_back(std::move(closed));
      tallies.push_back(std::move(window));
    }
  }

  CommandResult r;
  std::size_t failures = 0;
  Json j = Json::array();
  std::ostringstream os;
  for (const auto& t : tallies) {
    failures += t.failures.size();
    j.push_back({{"check", t.name}, {"checked", t.checked}, {"failures", t.failures}});
    os << t.name << ": " << t.checked << " checked, " << t.failures.size() << " failures\n";
    for (const auto& f : t.failures) os << "  " << f << "\n";
  }
  r.output = format == "json" ? dump({{"type", d->name()}, {"torus", torus_name(torus)}, {"max_len", L}, {"checks", j}}) : os.str();
  if (failures) r.status = Status::verification_failed;
  return r;
}

}  // namespace

Session::Session() : warnings_(std::make_shared<std::vector<std::string>>()) {}
Session::~Session() = default;

void Session::set_cache_dir(const std::string& dir) {
  if (dir != cache_flag_) ws_.reset();
  cache_flag_ = dir;
}

Workspace& Session::workspace() {
  if (!ws_) {
    auto sink = warnings_;
    ExpansionCache cache(ExpansionCache::resolve_dir(cache_flag_), [sink](const std::string& w) { sink->push_back(w); });
    ws_ = std::make_unique<Workspace>(std::move(cache));
  }
  return *ws_;
}

CommandResult Session::run(const std::string& command, const Options& options) {
  warnings_->clear();
  CommandResult r;
  try {
    const CommandSpec* spec = nullptr;
    for (const auto& s : command_specs())
      if (s.name == command) spec = &s;
    if (!spec) domain_fail("unknown command '" + command + "'");
    if (auto it = options.find("cache-dir"); it != options.end()) set_cache_dir(it->second);
    Args a(*spec, options);

    if (command == "psi") r = cmd_psi(a);
    else if (command == "expand-group") r = cmd_expand_group(a);
    else if (command == "k-sl2") r = cmd_k_sl2(a);
    else if (command == "gkm-check") r = cmd_gkm(a);
    else {
      Workspace& ws = workspace();
      if (command == "kappa") r = cmd_kappa(a, ws);
      else if (command == "g") r = cmd_g(a, ws);
      else if (command == "G") r = cmd_G(a, ws);
      else if (command == "kschur") r = cmd_kschur(a, ws);
      else if (command == "pieri") r = cmd_pieri(a, ws);
      else if (command == "coproduct") r = cmd_coproduct(a, ws);
      else if (command == "structure") r = cmd_structure(a, ws);
      else if (command == "tables") r = cmd_tables(a, ws);
      else if (command == "check-conjectures") r = cmd_check(a, ws);
    }
  } catch (const DomainError& e) {
    r = {Status::domain_error, "", e.what(), {}};
  } catch (const VerificationError& e) {
    r = {Status::verification_failed, "", e.what(), {}};
  } catch (const IoError& e) {
    r = {Status::io_error, "", e.what(), {}};
  } catch (const std::exception& e) {
    r = {Status::internal_error, "", std::string("internal error: ") + e.what(), {}};
  }
  r.warnings = *warnings_;
  return r;
}

}  // namespace khecke
