#pragma once

#include <optional>
#include <string_view>

#include "rzs/numcore/big_real.hpp"
#include "rzs/numcore/precision.hpp"

namespace rzs::numcore {

enum class Constant { PI, LOG2, EULER_GAMMA, CATALAN, GLAISHER_LOG };

/// Value at ctx.working_bits(). PI, LOG2 and EULER_GAMMA come from MPFR;
/// CATALAN is beta(2) and GLAISHER_LOG is 1/12 - zeta'(-1).
BigReal constant(Constant c, const PrecisionContext& ctx);

std::string_view constant_name(Constant c);
std::optional<Constant> constant_from_name(std::string_view name);

}  // namespace rzs::numcore
