#include <cmath>
#include <numbers>

#include "doctest.h"
#include "test_util.hpp"

#include "rzs/specfun/clausen.hpp"
#include "rzs/specfun/gamma.hpp"
#include "rzs/specfun/oracle.hpp"
#include "rzs/specfun/zeta.hpp"

using namespace rzs;
using namespace rzs::specfun;
using Q = BigRational;

TEST_CASE("oracle scalars") {
    CHECK(oracle::zeta(2) == doctest::Approx(std::numbers::pi * std::numbers::pi / 6).epsilon(1e-14));
    CHECK(oracle::zeta(3) == doctest::Approx(1.2020569031595942).epsilon(1e-14));
    CHECK(oracle::beta(2) == doctest::Approx(0.915965594177219).epsilon(1e-14));
    CHECK(oracle::log_gamma_d(0.5, 14) == doctest::Approx(0.5 * std::log(std::numbers::pi)).epsilon(1e-12));
    CHECK(oracle::alternating_sum([](int k) { return 1.0 / (k + 1); }) == doctest::Approx(std::log(2.0)).epsilon(1e-14));
}

TEST_CASE("clausen agrees with its quadrature oracle on the guarded grid") {
    PrecisionContext ctx(30);
    const double two_pi = 2 * std::numbers::pi;
    int checked = 0;
    for (int m = 1; m <= 6; ++m)
        for (int k = 1; k <= 24; ++k) {
            const double theta = two_pi * 0.6 * k / 24.0;
            const BigReal primary = clausen(ClausenOrder(m), BigReal(theta, ctx.working_bits()), ctx);
            const BigReal check = oracle::clausen_oracle(ClausenOrder(m), theta, 14);
            CAPTURE(m);
            CAPTURE(theta);
            CHECK(abs(primary - check).to_double() < 1e-10);
            ++checked;
        }
    CHECK(checked == 144);
}

TEST_CASE("negapolygamma agrees with its quadrature oracle") {
    PrecisionContext ctx(30);
    for (int m = 2; m <= 5; ++m)
        for (const Q& z : {Q(1, 4), Q(1, 2), Q(3, 4)}) {
            const BigReal primary = negapolygamma(NegapolygammaOrder(m), z, ctx);
            const BigReal check = oracle::negapolygamma_oracle(NegapolygammaOrder(m), z, 15);
            CAPTURE(m);
            CAPTURE(z.to_string());
            CHECK(rzs::testing::agree(primary, check) >= 12);
        }
}

TEST_CASE("oracle precision is bounded") {
    CHECK_THROWS(oracle::clausen_oracle(ClausenOrder(2), 1.0, 30));
}
