#pragma once

#include <nlohmann/json.hpp>

#include "overconv/series.hpp"

namespace overconv::series {

/// Report form of a series:
///   {"ram": s, "prec": "num/den" | null, "terms": [["num/den", code], ...]}
/// where code is the base-p integer of the coefficient sequence over F_p.
/// from_json(field, to_json(a)) == a, and re-serializing a canonical document
/// reproduces it byte for byte.
nlohmann::ordered_json to_json(const GenSeries& a);

/// Throws ParseError on malformed input.
GenSeries from_json(const ff::FieldPtr& field, const nlohmann::ordered_json& j);

}  // namespace overconv::series
