#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "rzs/numcore/big_real.hpp"

namespace rzs::specfun {

struct TanhSinhOptions {
    int min_level = 6;   // step 2^-min_level on the first pass
    int max_level = 12;
    double rel_tol = 1e-13;
    double abs_tol = 0.0;
};

template <class Real>
struct QuadratureResult {
    Real value;
    double error_estimate;
    int level;
    bool converged;
};

namespace detail {

// The few operations the rule needs, for double and for BigReal.
struct QuadDouble {
    using R = double;
    static R make(double v, const R&) { return v; }
    static R pi(const R&) { return std::numbers::pi; }
    static double to_d(const R& x) { return x; }
    static double log10_abs(const R& x) { return x == 0 ? -1e300 : std::log10(std::fabs(x)); }
};

struct QuadBig {
    using R = BigReal;
    static R make(double v, const R& like) { return BigReal(v, like.precision()); }
    static R pi(const R& like) { return rzs::pi(like.precision()); }
    static double to_d(const R& x) { return x.to_double(); }
    static double log10_abs(const R& x) { return x.is_zero() ? -1e300 : x.log10_abs(); }
};

template <class Real>
struct QuadTraits;
template <>
struct QuadTraits<double> : QuadDouble {};
template <>
struct QuadTraits<BigReal> : QuadBig {};

}  // namespace detail

/// Tanh-sinh rule on [a, b]. Nodes are placed by their distance delta from
/// each endpoint, so f is never evaluated exactly at a or b and integrable
/// endpoint singularities (log, x^-alpha) are absorbed. Levels halve the
/// step and reuse every previous node; iteration stops once two consecutive
/// levels agree to rel_tol.
template <class Real, class F>
QuadratureResult<Real> tanh_sinh(F&& f, const Real& a, const Real& b, const TanhSinhOptions& opt = {}) {
    using T = detail::QuadTraits<Real>;
    using std::cosh;
    using std::exp;
    using std::sinh;
    if (opt.min_level < 1 || opt.max_level < opt.min_level) throw std::invalid_argument("bad tanh-sinh levels");
    const Real width = b - a;
    const Real half_pi = T::pi(a) / 2;
    const Real one = T::make(1.0, a);
    const double cut = std::log10(opt.rel_tol) - 4.0;

    // Adds the contributions of nodes t = k h, k = first, first+step, ...
    auto sweep = [&](const Real& h, long first, long step) {
        Real acc = T::make(0.0, a);
        for (long k = first;; k += step) {
            Real t = h * T::make(static_cast<double>(k), a);
            Real u = half_pi * sinh(t);
            Real e2 = exp(-(u + u));
            Real denom = one + e2;
            Real delta = width * e2 / denom;
            Real w = width * (T::pi(a) * cosh(t)) * e2 / (denom * denom);
            Real xl = a + delta;
            Real xr = b - delta;
            // A side whose node has rounded onto its endpoint is dropped on
            // its own; the other may still carry a singular contribution.
            const bool left_ok = xl > a;
            const bool right_ok = xr < b;
            if (!left_ok && !right_ok) break;
            Real fsum = T::make(0.0, a);
            if (left_ok) fsum += f(xl);
            if (right_ok) fsum += f(xr);
            Real contrib = w * fsum;
            acc += contrib;
            if (T::to_d(t) > 1.0) {
                double lc = T::log10_abs(contrib);
                double la = T::log10_abs(acc);
                if (lc < la + cut || lc < -1000.0) break;
            }
            if (T::to_d(t) > 12.0) break;
        }
        return acc;
    };

    Real h = T::make(std::ldexp(1.0, -opt.min_level), a);
    Real center = f(a + width / 2) * (width * half_pi / 2);
    Real sum = center + sweep(h, 1, 1);
    Real estimate = h * sum;
    QuadratureResult<Real> res{estimate, 1e300, opt.min_level, false};
    for (int level = opt.min_level + 1; level <= opt.max_level; ++level) {
        h = h / 2;
        sum += sweep(h, 1, 2);
        Real next = h * sum;
        double diff = std::fabs(T::to_d(next - estimate));
        double mag = std::fabs(T::to_d(next));
        estimate = next;
        res = {estimate, diff, level, false};
        if (diff <= opt.rel_tol * mag || diff <= opt.abs_tol) {
            res.converged = true;
            break;
        }
    }
    return res;
}

}  // namespace rzs::specfun
