#pragma once

#include "rzs/numcore/big_rational.hpp"
#include "rzs/numcore/big_real.hpp"
#include "rzs/numcore/precision.hpp"

namespace rzs::specfun {

struct ClausenOrder {
    int m;
    explicit ClausenOrder(int order);
};

/// An angle held exactly as ratio * pi.
struct PiMultiple {
    BigRational ratio;
};

/// Largest |theta|/(2 pi) the power series is trusted with.
inline constexpr double kClausenGuard = 0.6;

/// Cl_m(theta). Special angles 0, pi/2, pi use closed forms; other angles go
/// through the power series and must satisfy the guard. m = 1 is closed-form
/// everywhere except the log pole at 0.
BigReal clausen(ClausenOrder m, const PiMultiple& theta, const PrecisionContext& ctx);
BigReal clausen(ClausenOrder m, const BigReal& theta, const PrecisionContext& ctx);

}  // namespace rzs::specfun
