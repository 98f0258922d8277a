// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <variant>

#include "json.hpp"
#include "qalg/generic_rank.hpp"
#include "qalg/rit.hpp"

namespace qalg {

using json = nlohmann::json;

/// Runtime-dispatched presentation: the file format admits either field.
using AnyPresentation = std::variant<Presentation<PrimeField>, Presentation<RationalField>>;

namespace detail {

template <class F>
Presentation<F> parse_relations(F field, const json& doc) {
  std::vector<std::string> gens = doc.at("generators").get<std::vector<std::string>>();
  Presentation<F> pres{field, Alphabet(std::move(gens)), {}};
  for (const auto& rel : doc.at("relations")) {
    Polynomial<typename F::Coeff> p;
    for (const auto& term : rel) {
      auto c = field.parse(term.at("c").get<std::string>());
      Word w = pres.alphabet.parse_word(term.at("w").get<std::vector<std::string>>());
      p.add(w, c);
    }
    if (p.zero()) throw ValidationError("zero relation in presentation file");
    pres.relations.push_back(std::move(p));
  }
  return pres;
}

inline std::string coeff_str(const Fp& c) { return std::to_string(c.v); }
inline std::string coeff_str(const Rat& c) {
  return boost::multiprecision::denominator(c) == 1
             ? boost::multiprecision::numerator(c).str()
             : c.str();
}

}  // namespace detail

/// Presentation document:
///   { "field": {"kind":"prime","p":17} | {"kind":"rational"},
///     "generators": ["a","b",...],                     // ascending order
///     "relations": [ [ {"c":"3","w":["a","b"]}, ... ], ... ] }
inline AnyPresentation parse_presentation(const json& doc) {
  const auto& field = doc.at("field");
  std::string kind = field.at("kind").get<std::string>();
  if (kind == "prime") {
    uint32_t p = field.at("p").get<uint32_t>();
    return detail::parse_relations(PrimeField(p), doc);
  }
  if (kind == "rational") return detail::parse_relations(RationalField{}, doc);
  throw ValidationError("unknown field kind: " + kind);
}

inline AnyPresentation parse_presentation(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw ValidationError(std::string("malformed presentation document: ") + e.what());
  }
  try {
    return parse_presentation(doc);
  } catch (const json::exception& e) {
    throw ValidationError(std::string("malformed presentation document: ") + e.what());
  }
}

template <class F>
json serialize_presentation(const Presentation<F>& pres) {
  json doc;
  if constexpr (std::is_same_v<F, PrimeField>) {
    doc["field"] = {{"kind", "prime"}, {"p", pres.field.p}};
  } else {
    doc["field"] = {{"kind", "rational"}};
  }
  doc["generators"] = pres.alphabet.names();
  json rels = json::array();
  for (const auto& rel : pres.relations) {
    json terms = json::array();
    for (const auto& [w, c] : rel.terms()) {
      std::vector<std::string> labels;
      for (uint8_t a : w) labels.push_back(pres.alphabet.name(a));
      terms.push_back({{"c", detail::coeff_str(c)}, {"w", labels}});
    }
    rels.push_back(terms);
  }
  doc["relations"] = rels;
  return doc;
}

inline json series_to_json(const TruncatedSeries& s) {
  json arr = json::array();
  for (const auto& x : s.c) arr.push_back(x.str());
  return arr;
}

}  // namespace qalg
