#pragma once

#include <functional>
#include <optional>

#include "rzs/closedform/closed_form.hpp"
#include "rzs/numcore/big_real.hpp"
#include "rzs/numcore/precision.hpp"

namespace rzs::closedform {

/// Optional override consulted before the built-in atom table. Returning
/// nullopt falls through to the default.
using AtomResolver = std::function<std::optional<BigReal>(const Atom&, const PrecisionContext&)>;

/// Value of one atom through specfun/numcore, memoized per working precision.
/// SYNTHETIC atoms have no built-in value and raise std::invalid_argument.
BigReal atom_value(const Atom& a, const PrecisionContext& ctx);

/// Sum over terms of coefficient times the product of atom powers.
BigReal evaluate(const ClosedForm& cf, const PrecisionContext& ctx, const AtomResolver& resolver = {});

}  // namespace rzs::closedform
