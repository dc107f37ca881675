#pragma once

#include "rzs/numcore/big_rational.hpp"
#include "rzs/numcore/big_real.hpp"
#include "rzs/numcore/precision.hpp"

namespace rzs::specfun {

/// Order m >= 1 of psi^(-m); psi^(-1) = log Gamma.
struct NegapolygammaOrder {
    int m;
    explicit NegapolygammaOrder(int order);
};

/// log Gamma(z) for 0 < z < 1 from its Taylor series about 0.
BigReal log_gamma(const BigRational& z, const PrecisionContext& ctx);
BigReal log_gamma(const BigReal& z, const PrecisionContext& ctx);

/// psi(x) for 0 < x < 3/2, by the zeta series about 1.
BigReal digamma(const BigReal& x, const PrecisionContext& ctx);

/// psi^(-m)(z) for 0 < z < 1.
BigReal negapolygamma(NegapolygammaOrder m, const BigRational& z, const PrecisionContext& ctx);
BigReal negapolygamma(NegapolygammaOrder m, const BigReal& z, const PrecisionContext& ctx);

}  // namespace rzs::specfun
