#pragma once

#include <string>

#include "json.hpp"

#include "qtorbit/charpair.hpp"
#include "qtorbit/complex.hpp"
#include "qtorbit/homology.hpp"
#include "qtorbit/orbit.hpp"

namespace qtorbit::io {

using Json = nlohmann::ordered_json;

// Labels: an integer, {"bary": [label…]} or {"apex": {"tag": …, "level": k}}.
Json to_json(const VertexLabel& v);
VertexLabel label_from_json(const Json& j);

/// {"ground": [label…], "facets": [[label…]…]}, canonical order.
Json to_json(const SimplicialComplex& k);
/// Throws ParseError on a malformed document and the usual contract errors
/// (DuplicateVertex, FacetOutsideGround) on invalid content.
SimplicialComplex complex_from_json(const Json& j);

/// [{"degree": k, "rank": r, "torsion": [d…]}…] for k = −1 … top degree.
Json to_json(const GradedAbelianGroup& g);
GradedAbelianGroup homology_from_json(const Json& j);

struct PairDocument {
  CharacteristicPair pair;
  IntVector subtorus;
};

/// {"n": n, "nerve": …, "lambda": [{"vertex": label, "value": [int…]}…],
///  "subtorus": [int…]}.
Json to_json(const CharacteristicPair& pair, const IntVector& subtorus);
PairDocument pair_from_json(const Json& j);

Json to_json(const OrbitReport& report);
std::string to_text(const OrbitReport& report);

/// Parses text, mapping JSON syntax errors to ParseError.
Json parse(const std::string& text);
/// Compact single-line dump followed by a newline.
std::string dump_compact(const Json& j);
/// Two-space indented dump followed by a newline.
std::string dump_pretty(const Json& j);

}  // namespace qtorbit::io
