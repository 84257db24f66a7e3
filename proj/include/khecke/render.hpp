#pragma once

#include <json.hpp>
#include <string>

#include "khecke/grothendieck.hpp"
#include "khecke/hecke.hpp"
#include "khecke/localization.hpp"
#include "khecke/peterson.hpp"
#include "khecke/symfunc.hpp"

namespace khecke {

using Json = nlohmann::ordered_json;

// "a1+a2", "-2a0+a1"; weights outside the root lattice print as coordinates.
std::string weight_text(const RootDatum& d, const Weight& w);
// "1 - e^(a1+a2)"
std::string to_text(const LaurentPoly& p, const RootDatum& d);
// "T210 - T020", "(1 - e^(-a1))T01"; coefficients named through d.
std::string to_text(const HeckeElt& a, const RootDatum& d);
std::string to_text(const IntHecke& a);
// "s2 + s21"; the k-Schur basis also prints with prefix s.
std::string to_text(const SymFunc& f);
std::string to_text(const SymTensor& t);
// Fomin-Stanley basis: "k21 - k2"
std::string to_text(const GrassExpansion& e);
std::string to_text(const ConjectureReport& r);
// Joins (coefficient, name) pairs as "a + 2b - c"; an empty name is the unit.
std::string signed_sum(const std::vector<std::pair<std::int64_t, std::string>>& terms);

// Machine forms. Hecke terms are sorted by (length, word).
Json to_json(const LaurentPoly& p);
LaurentPoly poly_from_json(const Json& j, const RootDatum& d);
Json to_json(const HeckeElt& a);
Json to_json(const IntHecke& a);
IntHecke int_hecke_from_json(const Json& j, int n);
Json to_json(const SymFunc& f);
SymFunc symfunc_from_json(const Json& j);
Json to_json(const SymTensor& t);
Json to_json(const GrassExpansion& e);
Json to_json(const PsiTable& t);
Json to_json(const ConjectureReport& r);

Json partition_json(const Partition& p);
Partition partition_from_json(const Json& j);

}  // namespace khecke
