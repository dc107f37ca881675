#pragma once

#include "rzs/closedform/serialize.hpp"
#include "rzs/families/identity.hpp"
#include "rzs/families/series.hpp"

namespace rzs::families {

using closedform::Json;

/// {"numerator", "start_index", "denominator": [[a, b], ...], "ratio": "p/q",
///  "leading_coefficient": "p/q"}
Json to_json(const SeriesSpec& s);
SeriesSpec series_from_json(const Json& j);

/// {"family", "m" (null for A and D), "p", "z", "reading", "form", "lhs", "rhs"}
Json to_json(const IdentityInstance& inst);
IdentityInstance instance_from_json(const Json& j);

}  // namespace rzs::families
