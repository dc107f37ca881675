#pragma once

#include "json.hpp"

#include "rzs/closedform/closed_form.hpp"

namespace rzs::closedform {

using Json = nlohmann::ordered_json;

/// {"atom": "ZETA", "params": [3], "exp": -1}. Rational parameters are "p/q"
/// strings; integer parameters are JSON integers.
Json to_json(const Atom& a, int exp);

/// {"terms": [{"factors": [...], "coeff": "p/q"}, ...]} in canonical order.
Json to_json(const ClosedForm& cf);

ClosedForm closed_form_from_json(const Json& j);

}  // namespace rzs::closedform
