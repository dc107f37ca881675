#include "rzs/specfun/oracle.hpp"

#include <cmath>
#include <numbers>

#include "rzs/numcore/errors.hpp"
#include "rzs/specfun/quadrature.hpp"

namespace rzs::specfun::oracle {

namespace {

TanhSinhOptions options_for(int digits) {
    if (digits < 1 || digits > kMaxOracleDigits) throw DomainError("oracle digits must lie in 1..15");
    TanhSinhOptions o;
    o.rel_tol = std::pow(10.0, -digits - 1);
    o.abs_tol = 1e-17;
    return o;
}

double factorial_d(int n) {
    double r = 1.0;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

}  // namespace

double zeta(int s) {
    if (s < 2) throw DomainError("oracle zeta needs s >= 2");
    double eta = alternating_sum([s](int k) { return std::pow(static_cast<double>(k + 1), -s); });
    return eta / (1.0 - std::ldexp(1.0, 1 - s));
}

double beta(int s) {
    if (s < 1) throw DomainError("oracle beta needs s >= 1");
    return alternating_sum([s](int k) { return std::pow(2.0 * k + 1.0, -s); });
}

double clausen_d(int m, double theta, int digits) {
    if (m < 1) throw DomainError("Clausen order must be >= 1");
    if (!(theta > 0.0) || !(theta < 2.0 * std::numbers::pi)) throw DomainError("oracle Clausen needs 0 < theta < 2 pi");
    auto cl1 = [](double x) { return -std::log(2.0 * std::sin(x / 2.0)); };
    if (m == 1) return cl1(theta);

    // Cl_l = int Cl_{l-1} for even l, zeta(l) - int Cl_{l-1} for odd l.
    auto step = [](int l) { return (l % 2 == 0) ? 1 : -1; };
    int sigma = 1;
    for (int l = 2; l <= m; ++l) sigma *= step(l);

    const double kf = factorial_d(m - 2);
    auto integrand = [&](double x) { return std::pow(theta - x, m - 2) / kf * cl1(x); };
    double value = sigma * tanh_sinh(integrand, 0.0, theta, options_for(digits)).value;
    for (int i = 3; i <= m; i += 2) {
        int tau = 1;
        for (int l = i + 1; l <= m; ++l) tau *= step(l);
        value += tau * zeta(i) * std::pow(theta, m - i) / factorial_d(m - i);
    }
    return value;
}

BigReal clausen_oracle(ClausenOrder m, double theta, int oracle_digits) {
    return BigReal(clausen_d(m.m, theta, oracle_digits), 53);
}

double log_gamma_d(double z, int digits) {
    if (!(z > 0.0)) throw DomainError("oracle log Gamma needs z > 0");
    auto o = options_for(digits);
    // int_0^1 t^(z-1) e^-t dt + int_0^1 u^(-z-1) e^(-1/u) du  (t = 1/u)
    double lower = tanh_sinh([z](double t) { return std::pow(t, z - 1.0) * std::exp(-t); }, 0.0, 1.0, o).value;
    double upper = tanh_sinh(
                       [z](double u) {
                           if (u < 1e-3) return 0.0;  // e^(-1/u) below 1e-434
                           return std::pow(u, -z - 1.0) * std::exp(-1.0 / u);
                       },
                       0.0, 1.0, o)
                       .value;
    return std::log(lower + upper);
}

double negapolygamma_d(int m, double z, int digits) {
    if (m < 2) throw DomainError("negapolygamma oracle needs m >= 2");
    if (!(z > 0.0) || !(z < 1.0)) throw DomainError("negapolygamma oracle needs 0 < z < 1");
    const double kf = factorial_d(m - 2);
    auto integrand = [&](double t) { return std::pow(z - t, m - 2) / kf * std::lgamma(t); };
    return tanh_sinh(integrand, 0.0, z, options_for(digits)).value;
}

BigReal negapolygamma_oracle(NegapolygammaOrder m, const BigRational& z, int oracle_digits) {
    return BigReal(negapolygamma_d(m.m, z.to_double(), oracle_digits), 53);
}

}  // namespace rzs::specfun::oracle
