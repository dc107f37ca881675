#include "rzs/specfun/gamma.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "rzs/numcore/combinatorics.hpp"
#include "rzs/numcore/errors.hpp"
#include "rzs/specfun/zeta.hpp"

namespace rzs::specfun {

namespace {

// sum_{k>=2} (-1)^k zeta(k) x^(k+offset) w(k). Stops once the geometric
// bound zeta(2) |x|^k w(k) / (1 - |x|) on the remainder drops below 10^-wd.
template <class Weight, class Log10Weight>
BigReal alternating_zeta_series(const BigReal& x, int offset, Weight w, Log10Weight log10_w,
                                const PrecisionContext& ctx) {
    const long bits = ctx.working_bits();
    const double ax = std::fabs(x.to_double());
    if (ax >= 1.0) throw DomainError("zeta power series needs |x| < 1");
    BigReal sum(bits);
    if (x.is_zero()) return sum;
    const double log10_ax = std::log10(ax);
    const double log10_geo = std::log10(std::numbers::pi * std::numbers::pi / 6.0) - std::log10(1.0 - ax);
    BigReal xp = pow(x.rounded(bits), 2L + offset);
    for (int k = 2;; ++k) {
        BigReal t = zeta_int(k, ctx) * xp * w(k);
        if (k % 2 == 1) t = -t;
        sum += t;
        double bound = log10_geo + (k + 1) * log10_ax + log10_w(k + 1);
        if (bound < -ctx.working_digits() - 1) break;
        if (k > 100000) throw std::runtime_error("zeta power series failed to converge");
        xp *= x;
    }
    return sum;
}

}  // namespace

NegapolygammaOrder::NegapolygammaOrder(int order) : m(order) {
    if (order < 1) throw DomainError("negapolygamma order must be >= 1");
}

BigReal log_gamma(const BigReal& z, const PrecisionContext& ctx) {
    if (!(z > 0.0) || !(z < 1.0)) throw DomainError("log_gamma needs 0 < z < 1");
    const long bits = ctx.working_bits();
    BigReal zb = z.rounded(bits);
    BigReal s = alternating_zeta_series(
        zb, 0, [](int k) { return BigRational(1, k); }, [](int k) { return -std::log10(static_cast<double>(k)); },
        ctx);
    return s - log(zb) - euler_constant(bits) * zb;
}

BigReal log_gamma(const BigRational& z, const PrecisionContext& ctx) {
    if (z.sign() <= 0 || z >= BigRational(1)) throw DomainError("log_gamma needs 0 < z < 1");
    return log_gamma(BigReal(z, ctx.working_bits()), ctx);
}

BigReal digamma(const BigReal& x, const PrecisionContext& ctx) {
    if (!(x > 0.0) || !(x < 1.5)) throw DomainError("digamma needs 0 < x < 3/2");
    const long bits = ctx.working_bits();
    BigReal xb = x.rounded(bits);
    // psi(1+y) = -gamma + sum_{k>=2} (-1)^k zeta(k) y^(k-1), kept at |y| <= 1/2
    const bool shift = xb < 0.5;
    BigReal y = shift ? xb : xb - 1;
    BigReal s = alternating_zeta_series(
        y, -1, [](int) { return BigRational(1); }, [](int) { return 0.0; }, ctx);
    s -= euler_constant(bits);
    if (shift) s -= BigReal(1L, bits) / xb;
    return s;
}

BigReal negapolygamma(NegapolygammaOrder order, const BigReal& z, const PrecisionContext& ctx) {
    const int m = order.m;
    if (!(z > 0.0) || !(z < 1.0)) throw DomainError("negapolygamma needs 0 < z < 1");
    if (m == 1) return log_gamma(z, ctx);
    const long bits = ctx.working_bits();
    BigReal zb = z.rounded(bits);
    // psi^(-m)(z) = z^(m-1) [ sum (-1)^k zeta(k) z^k/(k)_m - gamma z/m! - (log z - H_{m-1})/(m-1)! ]
    auto weight = [m](int k) {
        BigInt rf(1);
        for (int i = 0; i < m; ++i) rf *= (k + i);
        return BigRational(BigInt(1), rf);
    };
    auto log10_weight = [m](int k) {
        double acc = 0;
        for (int i = 0; i < m; ++i) acc -= std::log10(static_cast<double>(k + i));
        return acc;
    };
    BigReal s = alternating_zeta_series(zb, 0, weight, log10_weight, ctx);
    s -= euler_constant(bits) * zb * BigRational(BigInt(1), numcore::factorial(m));
    BigReal lz = log(zb);
    lz -= numcore::harmonic(m - 1);
    s -= lz * BigRational(BigInt(1), numcore::factorial(m - 1));
    return s * pow(zb, static_cast<long>(m - 1));
}

BigReal negapolygamma(NegapolygammaOrder m, const BigRational& z, const PrecisionContext& ctx) {
    if (z.sign() <= 0 || z >= BigRational(1)) throw DomainError("negapolygamma needs 0 < z < 1");
    return negapolygamma(m, BigReal(z, ctx.working_bits()), ctx);
}

}  // namespace rzs::specfun
