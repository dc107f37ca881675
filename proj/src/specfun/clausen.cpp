#include "rzs/specfun/clausen.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "rzs/numcore/combinatorics.hpp"
#include "rzs/numcore/errors.hpp"
#include "rzs/specfun/zeta.hpp"

namespace rzs::specfun {

using numcore::factorial;
using numcore::harmonic;

namespace {

// Sign picked up when Cl_l is built from Cl_{l-1}: even l integrates
// (Cl_l = int Cl_{l-1}), odd l subtracts from zeta(l).
int step_sign(int l) { return (l % 2 == 0) ? 1 : -1; }

int sign_product(int from, int to) {
    int s = 1;
    for (int l = from; l <= to; ++l) s *= step_sign(l);
    return s;
}

// Cl_m(theta) for m >= 2 and 0 < theta <= 1.2 pi, from the log term, the
// odd-zeta polynomial and the zeta(2n) power series in (theta/2pi)^2.
BigReal clausen_series(int m, const BigReal& theta, const PrecisionContext& ctx) {
    const long bits = ctx.working_bits();
    BigReal th = theta.rounded(bits);
    const int sigma = sign_product(2, m);

    BigReal lead = (BigReal(harmonic(m - 1), bits) - log(th)) * pow(th, static_cast<long>(m - 1));
    lead *= BigRational(BigInt(sigma), factorial(m - 1));
    BigReal result = lead;

    for (int i = 3; i <= m; i += 2) {
        BigReal t = zeta_int(i, ctx) * pow(th, static_cast<long>(m - i));
        t *= BigRational(BigInt(sign_product(i + 1, m)), factorial(m - i));
        result += t;
    }

    BigReal r = th / (pi(bits) * 2);
    BigReal r2 = r * r;
    const double r2d = r2.to_double();
    if (r2d >= 0.37) throw DomainError("Clausen series outside its convergence guard");
    const double log10_r2 = std::log10(r2d);
    const double log10_pref = (m - 1) * std::log10(th.to_double()) +
                              std::log10(std::numbers::pi * std::numbers::pi / 6.0) - std::log10(1.0 - r2d);
    BigReal head = pow(th, static_cast<long>(m - 1));
    BigReal rp = r2;
    BigReal series(bits);
    for (int n = 1;; ++n) {
        BigInt den(n);
        for (int j = 2 * n + 1; j <= 2 * n + m - 1; ++j) den *= j;
        series += zeta_int(2 * n, ctx) * rp * BigRational(BigInt(1), den);
        // bound on the remainder from n+1 on
        double log10_next = log10_pref + (n + 1) * log10_r2 - std::log10(static_cast<double>(n + 1));
        for (int j = 2 * n + 3; j <= 2 * n + m + 1; ++j) log10_next -= std::log10(static_cast<double>(j));
        if (log10_next < -ctx.working_digits() - 1) break;
        rp *= r2;
    }
    result += series * head * BigRational(sigma);
    return result;
}

BigReal odd_pi_value(int m, const PrecisionContext& ctx) {
    // Cl_{2j+1}(pi) = -(4^j - 1) zeta(2j+1) / 4^j
    const int j = (m - 1) / 2;
    BigInt four_j = BigInt(1) << (2 * j);
    return zeta_int(m, ctx) * BigRational(-(four_j - 1), four_j);
}

BigReal odd_half_pi_value(int m, const PrecisionContext& ctx) {
    // Cl_{2j+1}(pi/2) = -(4^j - 1) zeta(2j+1) / 2^(4j+1)
    const int j = (m - 1) / 2;
    BigInt four_j = BigInt(1) << (2 * j);
    BigInt den = BigInt(1) << (4 * j + 1);
    return zeta_int(m, ctx) * BigRational(-(four_j - 1), den);
}

}  // namespace

ClausenOrder::ClausenOrder(int order) : m(order) {
    if (order < 1) throw DomainError("Clausen order must be >= 1");
}

BigReal clausen(ClausenOrder order, const PiMultiple& theta, const PrecisionContext& ctx) {
    const int m = order.m;
    const long bits = ctx.working_bits();
    const BigRational& r = theta.ratio;
    if (abs(r) >= BigRational(2)) throw DomainError("Clausen argument must satisfy |theta| < 2 pi");
    if (r.is_zero()) {
        if (m == 1) throw DomainError("Cl_1 has a logarithmic pole at 0");
        return (m % 2 == 0) ? BigReal(bits) : zeta_int(m, ctx);
    }
    if (r.sign() < 0) {
        BigReal v = clausen(order, PiMultiple{-r}, ctx);
        return (m % 2 == 0) ? -v : v;
    }
    if (m == 1) {
        if (r == BigRational(1)) return -log2_constant(bits);
        if (r == BigRational(1, 2)) return -log2_constant(bits) / 2;
        BigReal half = pi(bits) * (r / BigRational(2));
        return -log(sin(half) * 2);
    }
    if (r == BigRational(1)) return (m % 2 == 0) ? BigReal(bits) : odd_pi_value(m, ctx);
    if (r == BigRational(1, 2)) return (m % 2 == 0) ? dirichlet_beta(m, ctx) : odd_half_pi_value(m, ctx);
    if (r.to_double() / 2.0 > kClausenGuard) throw DomainError("Clausen argument beyond the series guard");
    return clausen_series(m, pi(bits) * r, ctx);
}

BigReal clausen(ClausenOrder order, const BigReal& theta, const PrecisionContext& ctx) {
    const int m = order.m;
    const long bits = ctx.working_bits();
    const double td = theta.to_double();
    if (std::fabs(td) >= 2.0 * std::numbers::pi) throw DomainError("Clausen argument must satisfy |theta| < 2 pi");
    if (theta.is_zero()) {
        if (m == 1) throw DomainError("Cl_1 has a logarithmic pole at 0");
        return (m % 2 == 0) ? BigReal(bits) : zeta_int(m, ctx);
    }
    if (theta.sign() < 0) {
        BigReal v = clausen(order, -theta, ctx);
        return (m % 2 == 0) ? -v : v;
    }
    if (m == 1) return -log(sin(theta.rounded(bits) / 2) * 2);
    if (td / (2.0 * std::numbers::pi) > kClausenGuard) throw DomainError("Clausen argument beyond the series guard");
    return clausen_series(m, theta, ctx);
}

}  // namespace rzs::specfun
