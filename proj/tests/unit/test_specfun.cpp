#include <cmath>

#include "doctest.h"
#include "test_util.hpp"

#include "rzs/numcore/constants.hpp"
#include "rzs/numcore/errors.hpp"
#include "rzs/specfun/clausen.hpp"
#include "rzs/specfun/gamma.hpp"
#include "rzs/specfun/oracle.hpp"
#include "rzs/specfun/quadrature.hpp"
#include "rzs/specfun/zeta.hpp"

using namespace rzs;
using namespace rzs::specfun;
using namespace rzs::numcore;
using rzs::testing::agree;
using rzs::testing::ref;
using Q = BigRational;

namespace {
BigReal cl(int m, Q ratio, const PrecisionContext& ctx) { return clausen(ClausenOrder(m), PiMultiple{ratio}, ctx); }
}  // namespace

TEST_CASE("zeta at integers") {
    PrecisionContext ctx(50);
    CHECK(agree(zeta_int(3, ctx), "1.202056903159594285399738161511449990764986292340498882") >= 50);
    CHECK(agree(zeta_int(5, ctx), "1.036927755143369926331365486457034168057080919501912812") >= 50);
    CHECK(agree(zeta_even(0, ctx), BigReal(Q(-1, 2), 300)) >= 50);
    CHECK_THROWS_AS(zeta_int(0, ctx), DomainError);
    const BigReal p = pi(ctx.working_bits());
    CHECK(agree(zeta_int(2, ctx), p * p / 6L) >= 50);
    for (int k = 1; k <= 10; ++k) CHECK(agree(zeta_int(2 * k, ctx), zeta_even(k, ctx)) >= 50);
    CHECK_THROWS_AS(zeta_int(1, ctx), DomainError);
}

TEST_CASE("Hurwitz zeta and its s-derivative") {
    PrecisionContext ctx(40);
    const BigReal p = pi(ctx.working_bits());
    const BigReal g = constant(Constant::CATALAN, ctx);
    CHECK(agree(hurwitz_zeta(2L, Q(1, 4), ctx), p * p + g * 8L) >= 40);
    CHECK(agree(hurwitz_zeta(3L, Q(1), ctx), zeta_int(3, ctx)) >= 40);
    CHECK(agree(hurwitz_zeta_sderiv(-3L, Q(1), ctx), "0.005378576357774301144416974210413842895664439742295507059") >= 40);
    CHECK(agree(hurwitz_zeta_sderiv(-2L, Q(1, 4), ctx), "-0.01093457644480239490019337489468919872687719421267787310") >= 40);
    CHECK(agree(hurwitz_zeta_sderiv(-1L, Q(1), ctx), "-0.1654211437004509292139196602427806427640363803352017837") >= 40);
}

TEST_CASE("Dirichlet beta") {
    PrecisionContext ctx(50);
    const BigReal p = pi(ctx.working_bits());
    CHECK(agree(dirichlet_beta(1, ctx), p / 4L) >= 50);
    CHECK(agree(dirichlet_beta(2, ctx), constant(Constant::CATALAN, ctx)) >= 50);
    CHECK(agree(dirichlet_beta(3, ctx), p * p * p / 32L) >= 50);
    CHECK(agree(dirichlet_beta(4, ctx), "0.9889445517411053361084226332283778213158608870627339108") >= 50);
}

TEST_CASE("beta via Hurwitz agrees with the accelerated direct sum") {
    PrecisionContext ctx(30);
    for (int s = 1; s <= 6; ++s) CHECK(agree(dirichlet_beta(s, ctx), BigReal(oracle::beta(s), 64)) >= 12);
}

TEST_CASE("Clausen special values") {
    PrecisionContext ctx(50);
    CHECK(agree(cl(2, Q(1, 2), ctx), constant(Constant::CATALAN, ctx)) >= 45);
    CHECK(agree(cl(3, Q(1), ctx), zeta_int(3, ctx) * Q(-3, 4)) >= 45);
    for (int m = 1; m <= 4; ++m) CHECK(cl(2 * m, Q(1), ctx).is_zero());
    CHECK(agree(cl(1, Q(1), ctx), -constant(Constant::LOG2, ctx)) >= 45);
}

TEST_CASE("Clausen at general angles") {
    PrecisionContext ctx(50);
    CHECK(agree(cl(2, Q(1, 3), ctx), "1.014941606409653625021202554274520285941689307530299792") >= 50);
    CHECK(agree(cl(3, Q(1, 2), ctx), "-0.1126928346712119642562254526416984366342174649069217702") >= 50);
    CHECK(agree(cl(4, Q(2, 5), ctx), "0.9775723874383045294570230994546467054192907556417957254") >= 50);
    CHECK(agree(cl(1, Q(1, 5), ctx), "0.4812118250596034474977589134243684231351843343856605197") >= 50);
    CHECK(agree(cl(5, Q(6, 5), ctx), "-0.7986421945282683772785923246193153584681941725531479599") >= 50);
    // the real-angle overload takes the same route
    const BigReal theta = pi(ctx.working_bits()) * Q(1, 3);
    CHECK(agree(clausen(ClausenOrder(2), theta, ctx), cl(2, Q(1, 3), ctx)) >= 50);
}

TEST_CASE("Clausen guard") {
    PrecisionContext ctx(20);
    CHECK_THROWS_AS(cl(2, Q(13, 10), ctx), DomainError);
    CHECK_NOTHROW(cl(2, Q(6, 5), ctx));
    CHECK_THROWS_AS(clausen(ClausenOrder(3), pi(ctx.working_bits()) * Q(7, 5), ctx), DomainError);
    CHECK_THROWS_AS(ClausenOrder(0), DomainError);
    CHECK_THROWS_AS(cl(1, Q(0), ctx), DomainError);
}

TEST_CASE("Clausen derivative relations by central differences") {
    PrecisionContext ctx(40);
    const long bits = ctx.working_bits();
    const BigReal h(1e-6, bits);
    for (double t : {0.4, 1.3, 2.2, 3.5}) {
        const BigReal th(t, bits);
        for (int m = 1; m <= 3; ++m) {
            // d/dtheta Cl_{2m} = Cl_{2m-1}
            BigReal d = (clausen(ClausenOrder(2 * m), th + h, ctx) - clausen(ClausenOrder(2 * m), th - h, ctx)) / (h * 2L);
            CHECK(abs(d - clausen(ClausenOrder(2 * m - 1), th, ctx)).to_double() < 1e-6);
            // d/dtheta Cl_{2m+1} = -Cl_{2m}
            d = (clausen(ClausenOrder(2 * m + 1), th + h, ctx) - clausen(ClausenOrder(2 * m + 1), th - h, ctx)) / (h * 2L);
            CHECK(abs(d + clausen(ClausenOrder(2 * m), th, ctx)).to_double() < 1e-6);
        }
    }
}

TEST_CASE("Clausen integral relation by quadrature") {
    PrecisionContext ctx(20);
    const long bits = ctx.working_bits();
    for (double t : {0.7, 1.9, 3.3}) {
        const BigReal th(t, bits);
        for (int m = 1; m <= 3; ++m) {
            auto f = [&](const BigReal& x) { return clausen(ClausenOrder(2 * m), x, ctx); };
            TanhSinhOptions opt;
            opt.rel_tol = 1e-14;
            auto q = tanh_sinh<BigReal>(f, BigReal(0L, bits), th, opt);
            REQUIRE(q.converged);
            const BigReal expected = zeta_int(2 * m + 1, ctx) - clausen(ClausenOrder(2 * m + 1), th, ctx);
            CHECK(agree(q.value, expected) >= 10);
        }
    }
}

TEST_CASE("log Gamma, digamma and negapolygamma") {
    PrecisionContext ctx(50);
    const long bits = ctx.working_bits();
    CHECK(agree(log_gamma(Q(1, 3), ctx), "0.9854206469277670691871740369779613917355564963858858542") >= 50);
    CHECK(agree(log_gamma(Q(1, 2), ctx), log(sqrt(pi(bits)))) >= 50);
    CHECK(agree(digamma(BigReal(Q(1, 3), bits), ctx), "-3.132033780020806322996419074287268854155428296720418064") >= 50);
    CHECK(agree(negapolygamma(NegapolygammaOrder(1), Q(1, 3), ctx), log_gamma(Q(1, 3), ctx)) >= 50);
    CHECK(agree(negapolygamma(NegapolygammaOrder(2), Q(1, 4), ctx), "0.5824736459718801758453381659916313627909068347830071774") >= 50);
    CHECK(agree(negapolygamma(NegapolygammaOrder(3), Q(1, 2), ctx), "0.2658869550935703359288878030010196225974849641408426793") >= 50);
    // exact and real-argument overloads agree
    CHECK(agree(negapolygamma(NegapolygammaOrder(4), BigReal(Q(1, 4), bits), ctx),
                negapolygamma(NegapolygammaOrder(4), Q(1, 4), ctx)) >= 50);
    CHECK_THROWS_AS(NegapolygammaOrder(0), DomainError);
}

TEST_CASE("negapolygamma derivative chain") {
    // d/dz psi^(-m)(z) = psi^(-m+1)(z)
    PrecisionContext ctx(40);
    const long bits = ctx.working_bits();
    const BigReal h(1e-8, bits), z(Q(3, 10), bits);
    for (int m = 2; m <= 5; ++m) {
        const NegapolygammaOrder o(m), lower(m - 1);
        BigReal d = (negapolygamma(o, z + h, ctx) - negapolygamma(o, z - h, ctx)) / (h * 2L);
        CHECK(abs(d - negapolygamma(lower, z, ctx)).to_double() < 1e-10);
    }
}

TEST_CASE("special functions are stable under doubled precision") {
    PrecisionContext ctx(50);
    const auto d = ctx.doubled();
    CHECK(agree(zeta_int(7, ctx), zeta_int(7, d)) >= 50);
    CHECK(agree(dirichlet_beta(5, ctx), dirichlet_beta(5, d)) >= 50);
    CHECK(agree(cl(3, Q(1, 3), ctx), cl(3, Q(1, 3), d)) >= 50);
    CHECK(agree(hurwitz_zeta_sderiv(-2L, Q(1, 4), ctx), hurwitz_zeta_sderiv(-2L, Q(1, 4), d)) >= 50);
    CHECK(agree(negapolygamma(NegapolygammaOrder(3), Q(1, 4), ctx), negapolygamma(NegapolygammaOrder(3), Q(1, 4), d)) >= 50);
}

TEST_CASE("tanh-sinh quadrature") {
    auto lg = specfun::tanh_sinh<double>([](double x) { return std::log(x); }, 0.0, 1.0);
    CHECK(lg.converged);
    CHECK(lg.value == doctest::Approx(-1.0).epsilon(1e-13));
    auto inv_sqrt = specfun::tanh_sinh<double>([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0);
    CHECK(inv_sqrt.value == doctest::Approx(2.0).epsilon(1e-12));
    auto s = specfun::tanh_sinh<double>([](double x) { return std::sin(x); }, 0.0, std::acos(-1.0));
    CHECK(s.value == doctest::Approx(2.0).epsilon(1e-13));

    const long bits = 200;
    TanhSinhOptions opt;
    opt.rel_tol = 1e-30;
    opt.max_level = 12;
    auto at = tanh_sinh<BigReal>([](const BigReal& x) { return BigReal(1L, x.precision()) / (x * x + 1L); },
                                 BigReal(0L, bits), BigReal(1L, bits), opt);
    CHECK(at.converged);
    CHECK(agree(at.value, pi(bits) / 4L) >= 30);

    TanhSinhOptions bad;
    bad.min_level = 5;
    bad.max_level = 3;
    CHECK_THROWS_AS(specfun::tanh_sinh<double>([](double x) { return x; }, 0.0, 1.0, bad), std::invalid_argument);
}
