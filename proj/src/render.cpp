#include "khecke/render.hpp"

#include <algorithm>
#include <sstream>

#include "khecke/errors.hpp"

namespace khecke {

namespace {

// Joins signed terms as "a + b - c".
class TermJoiner {
 public:
  void add(std::int64_t coeff, const std::string& body, bool body_is_unit) {
    if (coeff == 0) return;
    std::int64_t mag = coeff < 0 ? -coeff : coeff;
    if (out_.empty()) out_ += coeff < 0 ? "-" : "";
    else out_ += coeff < 0 ? " - " : " + ";
    if (body_is_unit) out_ += std::to_string(mag);
    else out_ += (mag == 1 ? "" : std::to_string(mag)) + body;
  }
  void add_raw(const std::string& text) {
    if (!out_.empty()) out_ += " + ";
    out_ += text;
  }
  std::string str() const { return out_.empty() ? "0" : out_; }

 private:
  std::string out_;
};

std::string sym_prefix(Basis b) { return b == Basis::kschur ? "s" : std::string(basis_name(b)); }

std::string sym_name(Basis b, const Partition& p) { return sym_prefix(b) + p.label(); }

}  // namespace

std::string signed_sum(const std::vector<std::pair<std::int64_t, std::string>>& terms) {
  TermJoiner j;
  for (const auto& [c, name] : terms) j.add(c, name, name.empty());
  return j.str();
}

std::string weight_text(const RootDatum& d, const Weight& w) {
  const RootDatum& names = d.flavor() == Flavor::level_zero ? d.finite_part() : d;
  Weight x = &names == &d ? w : names.weight(w.coords());
  if (auto c = names.root_coordinates(x)) {
    std::string out;
    for (std::size_t i = 0; i < c->size(); ++i) {
      std::int64_t k = (*c)[i];
      if (k == 0) continue;
      if (k < 0) out += "-";
      else if (!out.empty()) out += "+";
      std::int64_t mag = k < 0 ? -k : k;
      if (mag != 1) out += std::to_string(mag);
      out += "a" + std::to_string(names.nodes()[i]);
    }
    return out.empty() ? "0" : out;
  }
  std::string out = "(";
  for (std::size_t i = 0; i < x.size(); ++i) out += (i ? "," : "") + std::to_string(x[i]);
  return out + ")";
}

std::string to_text(const LaurentPoly& p, const RootDatum& d) {
  TermJoiner j;
  std::vector<LaurentPoly::Term> terms = p.terms();
  std::stable_partition(terms.begin(), terms.end(), [](const auto& t) { return t.exponent.is_zero(); });
  for (const auto& t : terms) {
    if (t.exponent.is_zero()) j.add(t.coeff, "", true);
    else j.add(t.coeff, "e^(" + weight_text(d, t.exponent) + ")", false);
  }
  return j.str();
}

std::string to_text(const HeckeElt& a, const RootDatum& d) {
  TermJoiner j;
  for (const auto& [w, c] : a.terms()) {
    std::string basis = w.is_identity() ? "" : "T" + word_label(w.word());
    if (auto k = c.as_constant()) {
      j.add(*k, basis, w.is_identity());
    } else {
      std::string text = "(" + to_text(c, d) + ")" + basis;
      j.add_raw(text);
    }
  }
  return j.str();
}

std::string to_text(const IntHecke& a) {
  TermJoiner j;
  for (const auto& [w, c] : a.sorted()) {
    bool id = w.length() == 0;
    j.add(c, id ? "" : "T" + word_label(w.word()), id);
  }
  return j.str();
}

std::string to_text(const SymFunc& f) {
  TermJoiner j;
  for (const auto& [p, c] : f.terms()) j.add(c, p.empty() ? "" : sym_name(f.basis(), p), p.empty());
  return j.str();
}

std::string to_text(const SymTensor& t) {
  TermJoiner j;
  for (const auto& [key, c] : t.terms()) {
    std::string a = key.first.empty() ? "1" : sym_name(t.left(), key.first);
    std::string b = key.second.empty() ? "1" : sym_name(t.right(), key.second);
    j.add(c, a + " (x) " + b, false);
  }
  return j.str();
}

std::string to_text(const GrassExpansion& e) {
  TermJoiner j;
  for (const auto& [p, c] : e) j.add(c, p.empty() ? "" : "k" + p.label(), p.empty());
  return j.str();
}

std::string to_text(const ConjectureReport& r) {
  std::ostringstream os;
  os << r.id << " n=" << r.n << " bound=" << r.bound << ": " << (r.pass() ? "pass" : "FAIL") << ", " << r.checked
     << " checked, " << r.violations.size() << " violations";
  for (const auto& v : r.violations) os << "\n  " << v;
  return os.str();
}

// ---- JSON ----

Json to_json(const LaurentPoly& p) {
  Json out = Json::array();
  for (const auto& t : p.terms()) {
    Json e = Json::array();
    for (auto x : t.exponent.coords()) e.push_back(x);
    out.push_back({{"exponent", e}, {"coeff", t.coeff}});
  }
  return out;
}

LaurentPoly poly_from_json(const Json& j, const RootDatum& d) {
  std::vector<LaurentPoly::Term> terms;
  for (const auto& t : j) {
    std::vector<std::int32_t> e = t.at("exponent").get<std::vector<std::int32_t>>();
    if (e.size() != d.lattice_rank()) domain_fail("exponent has the wrong rank for " + d.name());
    terms.push_back({d.weight(e), t.at("coeff").get<std::int64_t>()});
  }
  return LaurentPoly::from_terms(std::move(terms));
}

Json to_json(const HeckeElt& a) {
  Json out = Json::array();
  for (const auto& [w, c] : a.terms()) out.push_back({{"word", word_label(w.word())}, {"coefficient", to_json(c)}});
  return out;
}

Json to_json(const IntHecke& a) {
  Json out = Json::array();
  for (const auto& [w, c] : a.sorted()) out.push_back({{"word", word_label(w.word())}, {"coefficient", c}});
  return out;
}

IntHecke int_hecke_from_json(const Json& j, int n) {
  IntHecke out;
  for (const auto& t : j) {
    auto word = parse_word(t.at("word").get<std::string>());
    AffinePerm w = AffinePerm::from_word(n, word);
    if (w.length() != static_cast<int>(word.size())) domain_fail("word " + t.at("word").get<std::string>() + " is not reduced");
    out.add(w, t.at("coefficient").get<std::int64_t>());
  }
  return out;
}

Json partition_json(const Partition& p) { return Json(p.parts()); }

Partition partition_from_json(const Json& j) { return Partition(j.get<std::vector<int>>()); }

Json to_json(const SymFunc& f) {
  Json terms = Json::array();
  for (const auto& [p, c] : f.terms()) terms.push_back({{"partition", partition_json(p)}, {"coeff", c}});
  return {{"basis", basis_name(f.basis())}, {"n", f.n()}, {"terms", terms}};
}

SymFunc symfunc_from_json(const Json& j) {
  SymFunc f(parse_basis(j.at("basis").get<std::string>()), j.at("n").get<int>());
  for (const auto& t : j.at("terms")) f.add(partition_from_json(t.at("partition")), t.at("coeff").get<std::int64_t>());
  return f;
}

Json to_json(const SymTensor& t) {
  Json terms = Json::array();
  for (const auto& [key, c] : t.terms())
    terms.push_back({{"left", partition_json(key.first)}, {"right", partition_json(key.second)}, {"coeff", c}});
  return {{"left", basis_name(t.left())}, {"right", basis_name(t.right())}, {"n", t.n()}, {"terms", terms}};
}

Json to_json(const GrassExpansion& e) {
  Json out = Json::array();
  for (const auto& [p, c] : e) out.push_back({{"partition", partition_json(p)}, {"coeff", c}});
  return out;
}

Json to_json(const PsiTable& t) {
  Json out = Json::array();
  for (const auto& [key, value] : t.values)
    out.push_back({{"v", word_label(key.first.word())}, {"w", word_label(key.second.word())}, {"value", to_json(value)}});
  return out;
}

Json to_json(const ConjectureReport& r) {
  return {{"id", r.id},
          {"n", r.n},
          {"bound", r.bound},
          {"checked", r.checked},
          {"pass", r.pass()},
          {"violations", r.violations}};
}

}  // namespace khecke
