#pragma once

#include "rzs/numcore/big_rational.hpp"
#include "rzs/numcore/big_real.hpp"
#include "rzs/specfun/clausen.hpp"
#include "rzs/specfun/gamma.hpp"

// Low-precision verification paths. They run in double arithmetic and share
// no code with the primary evaluators beyond the quadrature template.
namespace rzs::specfun::oracle {

inline constexpr int kMaxOracleDigits = 15;

/// sum_{k>=0} (-1)^k a(k) by the Cohen-Rodriguez Villegas-Zagier weights.
template <class Term>
double alternating_sum(Term a, int terms = 24) {
    double d = 1.0;
    const double base = 3.0 + 2.0 * 1.4142135623730951;
    for (int i = 0; i < terms; ++i) d *= base;
    d = (d + 1.0 / d) / 2.0;
    double b = -1.0, c = -d, s = 0.0;
    for (int k = 0; k < terms; ++k) {
        c = b - c;
        s += c * a(k);
        b = (static_cast<double>(k + terms) * static_cast<double>(k - terms)) * b /
            ((k + 0.5) * (k + 1.0));
    }
    return s / d;
}

/// zeta(s), s >= 2, from the accelerated eta series.
double zeta(int s);
/// beta(s), s >= 1, from the accelerated Leibniz-type series.
double beta(int s);

/// Cl_m(theta), 0 < theta < 2 pi. Cl_1 closed form; Cl_m, m >= 2, as
/// sigma_m I^(m-1) Cl_1 plus the odd-zeta polynomial, where the repeated
/// integral of Cl_1 is collapsed by Cauchy's formula into one tanh-sinh
/// quadrature with kernel (theta-x)^(m-2)/(m-2)!.
double clausen_d(int m, double theta, int digits);
BigReal clausen_oracle(ClausenOrder m, double theta, int oracle_digits);

/// log Gamma(z) from quadrature of the Euler integral, split at t = 1.
double log_gamma_d(double z, int digits);

/// psi^(-m)(z), m >= 2, as (1/(m-2)!) int_0^z (z-t)^(m-2) lgamma(t) dt.
double negapolygamma_d(int m, double z, int digits);
BigReal negapolygamma_oracle(NegapolygammaOrder m, const BigRational& z, int oracle_digits);

}  // namespace rzs::specfun::oracle
