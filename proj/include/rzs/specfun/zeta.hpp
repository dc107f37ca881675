#pragma once

#include "rzs/numcore/big_rational.hpp"
#include "rzs/numcore/big_real.hpp"
#include "rzs/numcore/precision.hpp"

namespace rzs::specfun {

/// zeta(2k) from the Bernoulli closed form; zeta(0) = -1/2.
BigReal zeta_even(int k, const PrecisionContext& ctx);

/// zeta(s) for integer s >= 2, through the Hurwitz engine at a = 1. Memoized.
BigReal zeta_int(int s, const PrecisionContext& ctx);

/// zeta(s, a) for real s > 1 or integer s <= 0, rational a > 0.
BigReal hurwitz_zeta(long s, const BigRational& a, const PrecisionContext& ctx);
BigReal hurwitz_zeta(const BigReal& s, const BigRational& a, const PrecisionContext& ctx);

/// d/ds zeta(s, a) at the same points. For a = 1 and negative integer s the
/// functional equation is used; everything else goes through Euler-Maclaurin.
BigReal hurwitz_zeta_sderiv(long s, const BigRational& a, const PrecisionContext& ctx);
BigReal hurwitz_zeta_sderiv(const BigReal& s, const BigRational& a, const PrecisionContext& ctx);

/// beta(s) = 4^-s (zeta(s,1/4) - zeta(s,3/4)) for integer s >= 1.
BigReal dirichlet_beta(int s, const PrecisionContext& ctx);

namespace detail {
/// Raw Euler-Maclaurin evaluation with no dispatch, exposed for tests that
/// cross-check the functional-equation route against it.
BigReal euler_maclaurin(const BigReal& s, const BigRational& a, const PrecisionContext& ctx, bool derivative);
}  // namespace detail

}  // namespace rzs::specfun
