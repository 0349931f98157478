#include "skewres/serialize.hpp"

namespace skewres {

using nlohmann::json;

template <class K>
json complex_to_json(const ChainComplex<K>& c) {
  const auto& ring = c.ring();
  json doc;
  doc["format"] = "skewres-complex";
  doc["version"] = kComplexFormatVersion;
  doc["field"] = ring->field().name();
  doc["order"] = ring->order().to_string();
  doc["variables"] = ring->variables().names();
  doc["display_order"] = ring->variables().display_order();
  doc["ranks"] = c.ranks();
  json degrees = json::array();
  for (const auto& m : c.modules()) degrees.push_back(m.degrees());
  doc["degrees"] = std::move(degrees);
  json ds = json::array();
  for (const auto& d : c.differentials()) {
    json rows = json::array();
    for (std::size_t r = 0; r < d.rows(); ++r) {
      json row = json::array();
      for (std::size_t col = 0; col < d.cols(); ++col) row.push_back(d(r, col).to_string());
      rows.push_back(std::move(row));
    }
    ds.push_back(std::move(rows));
  }
  doc["differentials"] = std::move(ds);
  return doc;
}

FieldSpec complex_field(const json& doc) {
  try {
    return FieldSpec::parse(doc.at("field").get<std::string>());
  } catch (const json::exception& e) {
    throw ParseError(std::string("complex document: ") + e.what());
  }
}

template <class K>
ChainComplex<K> complex_from_json(const json& doc) {
  try {
    if (doc.at("format").get<std::string>() != "skewres-complex") throw ParseError("not a complex document");
    if (doc.at("version").get<int>() != kComplexFormatVersion) {
      throw ParseError("unsupported complex format version " + std::to_string(doc.at("version").get<int>()));
    }
    FieldSpec field = complex_field(doc);
    if (field.kind != FieldTraits<K>::kind) throw ParseError("complex field does not match the coefficient type");
    VariableRegistry vars(doc.at("variables").get<std::vector<std::string>>(),
                          doc.at("display_order").get<std::vector<std::size_t>>());
    auto ring = Ring<K>::make(std::move(vars), MonomialOrder::parse(doc.at("order").get<std::string>()), field);
    auto ranks = doc.at("ranks").get<std::vector<std::size_t>>();
    auto degrees = doc.at("degrees").get<std::vector<std::vector<int>>>();
    if (ranks.size() != degrees.size() || ranks.empty()) throw ParseError("ranks and degrees disagree");
    std::vector<GradedFreeModule> modules;
    for (std::size_t k = 0; k < ranks.size(); ++k) {
      if (degrees[k].size() != ranks[k]) throw ParseError("degree list " + std::to_string(k) + " has the wrong length");
      modules.emplace_back(degrees[k]);
    }
    const auto& ds = doc.at("differentials");
    if (ds.size() + 1 != ranks.size()) throw ParseError("differential count does not match ranks");
    std::vector<PolyMatrix<K>> mats;
    for (std::size_t k = 1; k < ranks.size(); ++k) {
      const auto& rows = ds[k - 1];
      if (rows.size() != ranks[k - 1]) throw ParseError("d_" + std::to_string(k) + " has the wrong row count");
      PolyMatrix<K> m(ring, ranks[k - 1], ranks[k]);
      for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != ranks[k]) throw ParseError("d_" + std::to_string(k) + " has a ragged row");
        for (std::size_t c = 0; c < ranks[k]; ++c) m(r, c) = Polynomial<K>::parse(ring, rows[r][c].get<std::string>());
      }
      mats.push_back(std::move(m));
    }
    return ChainComplex<K>(ring, std::move(modules), std::move(mats));
  } catch (const json::exception& e) {
    throw ParseError(std::string("complex document: ") + e.what());
  }
}

template <class K>
ChainComplex<K> parse_complex(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  return complex_from_json<K>(doc);
}

json to_json(const BettiTable& t) {
  json entries = json::array();
  for (const auto& [i, row] : t.entries()) {
    for (const auto& [j, v] : row) entries.push_back({{"i", i}, {"j", j}, {"rank", v}});
  }
  return {{"totals", t.totals()}, {"entries", entries}};
}

json to_json(const ResolutionReport& r) {
  json doc;
  doc["passed"] = r.passed();
  doc["structure_ok"] = r.structure_ok;
  if (r.defect) doc["defect"] = r.defect->message;
  doc["cokernel_ok"] = r.cokernel_ok;
  if (r.symbolic_ran) doc["exact_at"] = r.exact_at;
  if (r.probabilistic_ran) doc["rank_checks"] = r.rank_checks;
  doc["failures"] = r.failures;
  return doc;
}

json to_json(const IdentityCheck& c) {
  return {{"id", c.id},
          {"verdict", to_string(c.verdict)},
          {"literal_holds", c.literal_holds},
          {"relation", c.relation},
          {"coefficients", c.coefficients},
          {"note", c.note}};
}

json to_json(const Lemma1Report& r) {
  return {{"n", r.n}, {"identities", json::array({to_json(r.i), to_json(r.ii), to_json(r.iii)})}};
}

json to_json(const RegularSequenceReport& r) {
  json doc{{"regular", r.regular}, {"length", r.length}, {"codimension", r.codimension}};
  if (!r.colon_checks.empty()) doc["colon_checks"] = r.colon_checks;
  return doc;
}

template <class K>
json ideal_to_json(const Ideal<K>& ideal) {
  json gens = json::array();
  for (const auto& g : ideal.generators()) gens.push_back(g.to_string());
  return gens;
}

#define SKEWRES_INSTANTIATE(K)                                  \
  template json complex_to_json(const ChainComplex<K>&);        \
  template ChainComplex<K> complex_from_json(const json&);      \
  template ChainComplex<K> parse_complex(const std::string&);   \
  template json ideal_to_json(const Ideal<K>&);

SKEWRES_INSTANTIATE(Rational)
SKEWRES_INSTANTIATE(ModP)

}  // namespace skewres
