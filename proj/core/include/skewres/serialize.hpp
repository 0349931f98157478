#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "skewres/complex.hpp"
#include "skewres/skew.hpp"

namespace skewres {

inline constexpr int kComplexFormatVersion = 1;

/// Versioned document: field, order, variables, ranks, degrees and the
/// differentials as row-major lists of polynomial strings.
template <class K>
nlohmann::json complex_to_json(const ChainComplex<K>& c);

/// Rebuilds the ring from the document. Throws ParseError on malformed input,
/// a wrong format tag or version, or a field that does not match K.
template <class K>
ChainComplex<K> complex_from_json(const nlohmann::json& doc);

/// Field named by a complex document, without parsing the rest.
FieldSpec complex_field(const nlohmann::json& doc);

/// Canonical text (two-space indentation, trailing newline).
template <class K>
std::string serialize_complex(const ChainComplex<K>& c) {
  return complex_to_json(c).dump(2) + "\n";
}

template <class K>
ChainComplex<K> parse_complex(const std::string& text);

nlohmann::json to_json(const BettiTable& t);
nlohmann::json to_json(const ResolutionReport& r);
nlohmann::json to_json(const IdentityCheck& c);
nlohmann::json to_json(const Lemma1Report& r);
nlohmann::json to_json(const RegularSequenceReport& r);

template <class K>
nlohmann::json ideal_to_json(const Ideal<K>& ideal);

}  // namespace skewres
