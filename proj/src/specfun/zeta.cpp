#include "rzs/specfun/zeta.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <tuple>

#include "rzs/numcore/combinatorics.hpp"
#include "rzs/numcore/errors.hpp"
#include "rzs/numcore/memo.hpp"

namespace rzs::specfun {

using numcore::bernoulli;
using numcore::bernoulli_polynomial;

namespace {

using HurwitzKey = std::tuple<long, long, BigRational, bool>;

numcore::Memo<HurwitzKey, BigReal>& hurwitz_memo() {
    static numcore::Memo<HurwitzKey, BigReal> m;
    return m;
}

numcore::Memo<std::pair<long, int>, BigReal>& beta_memo() {
    static numcore::Memo<std::pair<long, int>, BigReal> m;
    return m;
}

bool integral_value(const BigReal& s, long& out) {
    if (!mpfr_integer_p(s.raw()) || !mpfr_fits_slong_p(s.raw(), MPFR_RNDN)) return false;
    out = mpfr_get_si(s.raw(), MPFR_RNDN);
    return true;
}

// Euler-Maclaurin with cutoff N and Bernoulli tail. With drop_pole the
// x^(1-s)/(s-1) term at s = 1 is replaced by -log x, which leaves the
// a-dependent finite part; only differences of those are meaningful.
BigReal em_core(const BigReal& s, const BigRational& a, const PrecisionContext& ctx, bool derivative,
                bool drop_pole) {
    if (a.sign() <= 0) throw DomainError("Hurwitz zeta needs a > 0");
    const double sd = s.to_double();
    long s_int = 0;
    const bool is_int = integral_value(s, s_int);
    if (is_int && s_int == 1 && !drop_pole) throw DomainError("zeta has a pole at s = 1");
    if (drop_pole && derivative) throw std::logic_error("pole-free derivative is not implemented");

    const int wd = ctx.working_digits();
    long N = std::max<long>(2L * wd, 50);
    const double ad = a.to_double();
    if (sd > 1.5) {
        // smallest N with (N+a)^(1-s)/(s-1) < 10^-wd, floored at 10
        double l = (wd - std::log10(sd - 1.0)) / (sd - 1.0);
        if (l < 8.0) {
            double nmin = std::ceil(std::pow(10.0, l) - ad) + 1.0;
            N = std::min<long>(N, std::max<long>(10, static_cast<long>(nmin)));
        }
    }
    long extra = 16;
    if (sd < 1.0) extra += static_cast<long>(std::ceil((1.0 - sd) * std::log2(static_cast<double>(N) + ad + 1.0)));
    const long bits = ctx.working_bits() + extra;

    BigReal sb = s.rounded(bits);
    BigReal neg_s = -sb;
    BigReal sum(bits);
    for (long k = 0; k < N; ++k) {
        BigReal base(BigRational(k) + a, bits);
        BigReal t = is_int ? pow(base, -s_int) : pow(base, neg_s);
        if (derivative)
            sum -= log(base) * t;
        else
            sum += t;
    }

    BigReal x(BigRational(N) + a, bits);
    BigReal lx = log(x);
    BigReal xs = is_int ? pow(x, -s_int) : pow(x, neg_s);
    BigReal x1s = xs * x;
    BigReal tail(bits);
    if (drop_pole) {
        tail = -lx + xs / 2;
    } else if (!derivative) {
        tail = x1s / (sb - 1) + xs / 2;
    } else {
        BigReal sm1 = sb - 1;
        tail = -(lx * x1s) / sm1 - x1s / (sm1 * sm1) - lx * xs / 2;
    }

    const BigReal eps = pow10(-wd, bits);
    BigReal P = sb;
    BigReal dP(1L, bits);
    BigReal xp = xs / x;
    BigReal inv_x2 = BigReal(1L, bits) / (x * x);
    BigReal prev_abs;
    int growth = 0;
    for (int j = 1;; ++j) {
        BigRational c = bernoulli(2 * j) / BigRational(numcore::factorial(2 * j));
        BigReal t = derivative ? (xp * (dP - lx * P)) * c : (P * xp) * c;
        tail += t;
        BigReal at = abs(t);
        BigReal scale = max(BigReal(1L, bits), abs(sum));
        if (at < eps * scale) break;
        if (j > 1 && at > prev_abs) {
            if (++growth > 3) throw std::runtime_error("Euler-Maclaurin tail diverged; cutoff too small");
        }
        prev_abs = at;
        xp *= inv_x2;
        BigReal f1 = sb + (2L * j - 1);
        BigReal f2 = sb + (2L * j);
        dP = dP * f1 * f2 + P * (f1 + f2);
        P = P * f1 * f2;
    }
    return (sum + tail).rounded(ctx.working_bits());
}

}  // namespace

namespace detail {
BigReal euler_maclaurin(const BigReal& s, const BigRational& a, const PrecisionContext& ctx, bool derivative) {
    return em_core(s, a, ctx, derivative, false);
}
}  // namespace detail

BigReal zeta_even(int k, const PrecisionContext& ctx) {
    if (k < 0) throw DomainError("zeta_even needs k >= 0");
    const long bits = ctx.working_bits();
    if (k == 0) return BigReal(BigRational(-1, 2), bits);
    BigRational c = bernoulli(2 * k) / BigRational(numcore::factorial(2 * k) * 2);
    if (k % 2 == 0) c = -c;
    BigReal two_pi = pi(bits + 16) * 2;
    return (pow(two_pi, 2L * k) * c).rounded(bits);
}

BigReal zeta_int(int s, const PrecisionContext& ctx) {
    if (s < 2) throw DomainError("zeta_int needs s >= 2");
    return hurwitz_zeta(static_cast<long>(s), BigRational(1), ctx);
}

BigReal hurwitz_zeta(long s, const BigRational& a, const PrecisionContext& ctx) {
    if (a.sign() <= 0) throw DomainError("Hurwitz zeta needs a > 0");
    if (s == 1) throw DomainError("zeta has a pole at s = 1");
    if (s <= 0) {
        const int n = static_cast<int>(-s);
        return BigReal(-bernoulli_polynomial(n + 1, a) / BigRational(n + 1), ctx.working_bits());
    }
    return hurwitz_memo().get_or_compute(HurwitzKey{ctx.working_bits(), s, a, false}, [&] {
        return em_core(BigReal(s, ctx.working_bits()), a, ctx, false, false);
    });
}

BigReal hurwitz_zeta(const BigReal& s, const BigRational& a, const PrecisionContext& ctx) {
    long si = 0;
    if (integral_value(s, si)) return hurwitz_zeta(si, a, ctx);
    return em_core(s, a, ctx, false, false);
}

BigReal hurwitz_zeta_sderiv(long s, const BigRational& a, const PrecisionContext& ctx) {
    if (a.sign() <= 0) throw DomainError("Hurwitz zeta needs a > 0");
    if (s == 1) throw DomainError("zeta has a pole at s = 1");
    const long bits = ctx.working_bits();
    if (a == BigRational(1) && s <= 0) {
        if (s == 0) return -log(pi(bits) * 2) / 2;
        const long n = -s;
        if (n % 2 == 0) {
            // zeta'(-2k) = (-1)^k (2k)! zeta(2k+1) / (2 (2 pi)^(2k))
            const long k = n / 2;
            BigReal v = zeta_int(static_cast<int>(2 * k + 1), ctx) * BigRational(numcore::factorial(static_cast<int>(2 * k)));
            v /= pow(pi(bits) * 2, 2 * k) * 2;
            return (k % 2 == 0) ? v : -v;
        }
        // s = 1 - 2k: zeta'(s) = zeta(s) [log 2pi - psi(2k) - zeta'(2k)/zeta(2k)]
        const int k = static_cast<int>((n + 1) / 2);
        BigReal zs(-bernoulli(2 * k) / BigRational(2 * k), bits);
        BigReal psi2k(numcore::harmonic(2 * k - 1), bits);
        psi2k -= euler_constant(bits);
        BigReal ratio = hurwitz_zeta_sderiv(2L * k, a, ctx) / zeta_int(2 * k, ctx);
        return zs * (log(pi(bits) * 2) - psi2k - ratio);
    }
    return hurwitz_memo().get_or_compute(HurwitzKey{bits, s, a, true}, [&] {
        return em_core(BigReal(s, bits), a, ctx, true, false);
    });
}

BigReal hurwitz_zeta_sderiv(const BigReal& s, const BigRational& a, const PrecisionContext& ctx) {
    long si = 0;
    if (integral_value(s, si)) return hurwitz_zeta_sderiv(si, a, ctx);
    return em_core(s, a, ctx, true, false);
}

BigReal dirichlet_beta(int s, const PrecisionContext& ctx) {
    if (s < 1) throw DomainError("dirichlet_beta needs s >= 1");
    const long bits = ctx.working_bits();
    return beta_memo().get_or_compute({bits, s}, [&] {
        const BigRational q1(1, 4), q3(3, 4);
        BigReal d(bits);
        if (s == 1) {
            BigReal one(1L, bits);
            d = em_core(one, q1, ctx, false, true) - em_core(one, q3, ctx, false, true);
        } else {
            d = hurwitz_zeta(static_cast<long>(s), q1, ctx) - hurwitz_zeta(static_cast<long>(s), q3, ctx);
        }
        return ldexp(d, -2L * s);
    });
}

}  // namespace rzs::specfun
