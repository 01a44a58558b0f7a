#pragma once

#include <nlohmann/json.hpp>

#include "bellhopf/egf.hpp"
#include "bellhopf/hopf.hpp"
#include "bellhopf/boson.hpp"
#include "bellhopf/set_partition.hpp"

namespace bellhopf {

// Rationals are always strings in canonical "p/q" form so that values of any
// size survive a round trip bit-exactly.

/// {"order": N, "coefficients": ["p/q", ...]}
nlohmann::json to_json(const EGFSeries& series);
/// Throws DomainError on a malformed document, ParseError on a bad rational.
EGFSeries egf_from_json(const nlohmann::json& doc);

/// {"terms": [{"monomial": [1,1,3], "coefficient": "3/2"}, ...], "text": "..."}
nlohmann::json to_json(const HopfElement& element);
HopfElement hopf_from_json(const nlohmann::json& doc);

/// {"terms": [{"left": [...], "right": [...], "coefficient": "p/q"}, ...]}
nlohmann::json to_json(const TensorElement& element);
TensorElement tensor_from_json(const nlohmann::json& doc);

/// {"terms": [{"create": r, "annihilate": s, "coefficient": "p/q"}, ...], "text": "..."}
nlohmann::json to_json(const NormalOrderedForm& form);

/// {"n": n, "total": "B(n)", "census": [{"monomial": "y1^3", "letters": [1,1,1], "count": "1"}, ...]}
nlohmann::json to_json(const DiagramCensus& census);

}  // namespace bellhopf
