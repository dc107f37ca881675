#include "rzs/verify/integrals.hpp"

#include <array>
#include <chrono>
#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>

#include <boost/math/special_functions/digamma.hpp>

#include "../families/rhs_common.hpp"
#include "rzs/closedform/evaluate.hpp"
#include "rzs/numcore/errors.hpp"
#include "rzs/specfun/clausen.hpp"
#include "rzs/specfun/gamma.hpp"
#include "rzs/specfun/quadrature.hpp"

namespace rzs::verify {

namespace {

using namespace families::detail;  // NOLINT: formula shorthands

bool special(const Q& z) { return z == Q(1, 2) || z == Q(1, 4); }

ClosedForm T1_general(int p, const Q& z) {
    ClosedForm s;
    for (int k = 0; k <= p; ++k)
        s += F(p) * sg(fl(k + 3)) / F(p - k) * W(z / 2, p) * W(z, -k) * Cl(k + 1, z);
    if (ev(p)) s += F(p) * sg(p / 2) / pw(2, p) * Z(p + 1);
    return s;
}

ClosedForm T1_half(int p) {
    ClosedForm s = W(Q(1, 4), p) * (Lg(2) + F(p) * odd_zeta_block(1, p / 2, p));
    if (ev(p)) s += F(p) * sg(p / 2) / pw(2, p) * Z(p + 1);
    return s;
}

ClosedForm T1_quarter(int p) {
    ClosedForm b;
    for (int k = 1; k <= (p + 1) / 2; ++k) b += F(p) * pw(-4, k) / F(p + 1 - 2 * k) * PI(-(2 * k - 1)) * Bt(2 * k);
    ClosedForm s = Q(1, 2) * W(Q(1, 8), p) * (Lg(2) + F(p) * odd_zeta_block(1, p / 2, p) - b);
    if (ev(p)) s += F(p) * sg(p / 2) / pw(2, p) * Z(p + 1);
    return s;
}

ClosedForm T2_general(int m, int p, const Q& z) {
    ClosedForm s;
    for (int k = m + 1; k <= m + p + 1; ++k)
        s -= F(p) * sg(fl(m)) * sg(fl(k)) / F(p + m + 1 - k) * W(z, p + m + 1 - k) * Cl(k, z);
    if (ev(p + m)) s += sg(fl(m)) * F(p) * sg((p + m) / 2) * Z(p + m + 1);
    return s;
}

ClosedForm T2_half(int m, int p) {
    ClosedForm s = sg(fl(m)) * F(p) * PI(p + m) * odd_zeta_block((m + 1) / 2, (p + m) / 2, p + m);
    if (ev(p + m)) s += sg(fl(m)) * F(p) * sg((p + m) / 2) * Z(p + m + 1);
    return s;
}

ClosedForm T2_quarter(int m, int p) {
    ClosedForm b;
    for (int k = (m + 2) / 2; k <= (p + m + 1) / 2; ++k)
        b += sg(k) * pw(4, k) / F(p + m + 1 - 2 * k) * PI(-2 * k) * Bt(2 * k);
    ClosedForm inner = Q(1, 2) * odd_zeta_block((m + 1) / 2, (p + m) / 2, p + m) - Q(1, 2) * PI(1) * b;
    ClosedForm s = sg(fl(m)) * F(p) * W(Q(1, 4), p + m) * inner;
    if (ev(p + m)) s += sg(fl(m)) * F(p) * sg((p + m) / 2) * Z(p + m + 1);
    return s;
}

ClosedForm T34(int shift, int p, const Q& z) {
    ClosedForm s;
    for (int k = 0; k <= p; ++k) s += F(p) * sg(k) / F(p - k) * pw(z, p - k) * Npg(k + shift + 1, z);
    return s;
}

ClosedForm D1_rhs(int m, int p, const Q& z) {
    ClosedForm t;
    for (int k = m + 3; k <= p + m + 3; ++k)
        t += Q(2) * sg(m) * F(p) * F(m) * sg(fl(k)) / F(p + m + 3 - k) * W(z / 2, m + p + 3) * W(z, -k) * Cl(k, z);
    if (ev(p + m)) t += F(p) * sg((p + m) / 2) * sg(m) * F(m) / pw(2, m + p + 2) * Z(p + m + 3);
    ClosedForm s = Q(p + m + 2) * t;
    s -= sg(fl(m + 1)) * F(m) / pw(2, m + 1) * W(z / 2, p + 1) * Cl(m + 2, z);
    for (int k = 1; k <= (m + 1) / 2; ++k)
        s += Q(2 * k) * sg(k + 1) * F(m) / (pw(2, 2 * k) * F(m + 1 - 2 * k) * (p + m + 2 - 2 * k)) *
             W(z / 2, p + m + 2 - 2 * k) * Z(2 * k + 1);
    return s;
}

ClosedForm D2_rhs(int m, int p, const Q& z) {
    ClosedForm inner = z * Npg(m + 2, z);
    for (int k = 0; k <= p; ++k)
        inner -= Q(m + p + 2) * F(p) * sg(k) / (F(p - k) * pw(z, k)) * Npg(k + m + 3, z);
    return F(m) * pw(z, p) * inner;
}

// Nested double rule for the D1/D2 left-hand sides.
double nested(const IntegralCheck& c) {
    const int m = c.m.value_or(0), p = c.p;
    const double z = c.z.to_double();
    const bool cot_kernel = c.theorem == Theorem::D1;
    const double upper = cot_kernel ? std::numbers::pi * z : z;
    specfun::TanhSinhOptions inner_opt;
    inner_opt.rel_tol = 1e-14;
    inner_opt.abs_tol = 1e-15;
    inner_opt.max_level = 10;
    specfun::TanhSinhOptions outer_opt;
    outer_opt.rel_tol = std::pow(10.0, -(c.quadrature_digits + 1));
    outer_opt.abs_tol = outer_opt.rel_tol;
    outer_opt.max_level = 10;
    auto kernel = [&](double t) {
        if (cot_kernel) return t / std::tan(t);
        return t * boost::math::digamma(t);
    };
    auto outer = [&](double x) {
        auto in = [&](double t) { return std::pow(x - t, m) * kernel(t); };
        return std::pow(x, p) * specfun::tanh_sinh<double>(in, 0.0, x, inner_opt).value;
    };
    auto r = specfun::tanh_sinh<double>(outer, 0.0, upper, outer_opt);
    if (!r.converged) throw std::runtime_error("nested quadrature did not converge");
    return r.value;
}

PrecisionContext quadrature_context(const IntegralCheck& c) { return PrecisionContext(c.quadrature_digits + 10); }

constexpr std::array<const char*, 6> kNames{"T1", "T2", "T3", "T4", "D1", "D2"};

}  // namespace

bool theorem_has_m(Theorem t) { return t != Theorem::T1 && t != Theorem::T3; }

void check_integral_domain(const IntegralCheck& c) {
    const std::string name = theorem_name(c.theorem);
    if (c.quadrature_digits < 4 || c.quadrature_digits > 15) throw DomainError("quadrature_digits must be in 4..15");
    if (theorem_has_m(c.theorem)) {
        if (!c.m) throw DomainError(name + " needs m");
        const int lo = (c.theorem == Theorem::T2 || c.theorem == Theorem::T4) ? 1 : 0;
        if (*c.m < lo || *c.m > 20) throw DomainError(name + " needs " + std::to_string(lo) + " <= m <= 20");
    } else if (c.m) {
        throw DomainError(name + " takes no m");
    }
    // x^p cot x and x^p psi(x) are only integrable at 0 for p >= 1.
    const int pmin = (c.theorem == Theorem::T1 || c.theorem == Theorem::T3) ? 1 : 0;
    if (c.p < pmin || c.p > 20) throw DomainError(name + " needs " + std::to_string(pmin) + " <= p <= 20");
    if (c.z.sign() <= 0 || c.z > Q(3, 5)) throw DomainError("z must satisfy 0 < z <= 3/5");
    if (c.z.denominator() > 64) throw DomainError("z denominator must not exceed 64");
}

closedform::ClosedForm integral_rhs(const IntegralCheck& c, std::string* form) {
    check_integral_domain(c);
    const int m = c.m.value_or(0), p = c.p;
    const Q& z = c.z;
    bool use_special = false;
    if (c.theorem == Theorem::T1 || c.theorem == Theorem::T2) {
        use_special = c.route == families::Route::SPECIALIZED ||
                      (c.route == families::Route::AUTO && special(z));
        if (use_special && !special(z)) throw DomainError("no specialized form at z = " + z.to_string());
    } else if (c.route == families::Route::SPECIALIZED) {
        throw DomainError(theorem_name(c.theorem) + " has no specialized form");
    }
    if (form) *form = use_special ? "z=" + z.to_string() : "general z";
    ClosedForm r;
    switch (c.theorem) {
        case Theorem::T1: r = !use_special ? T1_general(p, z) : (z == Q(1, 2) ? T1_half(p) : T1_quarter(p)); break;
        case Theorem::T2:
            r = !use_special ? T2_general(m, p, z) : (z == Q(1, 2) ? T2_half(m, p) : T2_quarter(m, p));
            break;
        case Theorem::T3: r = T34(0, p, z); break;
        case Theorem::T4: r = T34(m, p, z); break;
        case Theorem::D1: r = D1_rhs(m, p, z); break;
        case Theorem::D2: r = D2_rhs(m, p, z); break;
    }
    return closedform::normalize_logs(r);
}

BigReal integral_lhs(const IntegralCheck& c) {
    check_integral_domain(c);
    if (c.theorem == Theorem::D1 || c.theorem == Theorem::D2) return BigReal(nested(c), 64);

    const PrecisionContext ctx = quadrature_context(c);
    const long bits = ctx.working_bits();
    const int p = c.p, m = c.m.value_or(0);
    BigReal zr(c.z, bits);
    BigReal upper = zr;
    if (c.theorem == Theorem::T1) upper = pi(bits) * c.z;
    if (c.theorem == Theorem::T2) upper = pi(bits) * (c.z * Q(2));

    std::function<BigReal(const BigReal&)> f;
    switch (c.theorem) {
        case Theorem::T1: f = [&](const BigReal& x) { return pow(x, static_cast<long>(p)) * cot(x); }; break;
        case Theorem::T2:
            f = [&](const BigReal& x) {
                return pow(x, static_cast<long>(p)) * specfun::clausen(specfun::ClausenOrder(m), x, ctx);
            };
            break;
        case Theorem::T3: f = [&](const BigReal& x) { return pow(x, static_cast<long>(p)) * specfun::digamma(x, ctx); }; break;
        case Theorem::T4:
            f = [&](const BigReal& x) {
                return pow(x, static_cast<long>(p)) * specfun::negapolygamma(specfun::NegapolygammaOrder(m), x, ctx);
            };
            break;
        default: break;
    }
    specfun::TanhSinhOptions opt;
    opt.rel_tol = std::pow(10.0, -(c.quadrature_digits + 3));
    opt.abs_tol = opt.rel_tol;  // some of these integrals vanish
    opt.max_level = 10;
    auto r = specfun::tanh_sinh<BigReal>(f, BigReal(bits), upper, opt);
    if (!r.converged) throw std::runtime_error("quadrature did not converge for " + theorem_name(c.theorem));
    return r.value;
}

VerificationReport verify_integral(const IntegralCheck& c) {
    const auto t0 = std::chrono::steady_clock::now();
    VerificationReport r;
    r.kind = "integral";
    r.family = theorem_name(c.theorem);
    r.m = c.m;
    r.p = c.p;
    r.z = c.z;
    r.reading = "n/a";
    r.required_digits = c.quadrature_digits - 2;
    try {
        const ClosedForm rhs_cf = integral_rhs(c, &r.form);
        const PrecisionContext ctx = quadrature_context(c);
        BigReal lhs = integral_lhs(c);
        BigReal rhs = closedform::evaluate(rhs_cf, ctx);
        r.lhs = lhs;
        r.rhs = rhs;
        r.abs_diff = abs(lhs - rhs);
        r.digits = digits_agreement(lhs, rhs, c.quadrature_digits + 3);
        r.status = r.digits >= r.required_digits ? Status::PASS : Status::FAIL;
    } catch (const DomainError& e) {
        r.status = Status::DOMAIN_SKIP;
        r.note = e.what();
    } catch (const std::runtime_error& e) {
        r.status = Status::FAIL;
        r.note = e.what();
    }
    r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

std::string theorem_name(Theorem t) { return kNames[static_cast<std::size_t>(t)]; }

Theorem theorem_from_name(const std::string& s) {
    for (std::size_t i = 0; i < kNames.size(); ++i)
        if (s == kNames[i]) return static_cast<Theorem>(i);
    throw std::invalid_argument("unknown theorem '" + s + "' (expected T1..T4, D1 or D2)");
}

}  // namespace rzs::verify
