#include <set>
#include <stdexcept>
#include <thread>
#include <vector>

#include "doctest.h"
#include "test_util.hpp"

#include "rzs/numcore/big_rational.hpp"
#include "rzs/numcore/big_real.hpp"
#include "rzs/numcore/combinatorics.hpp"
#include "rzs/numcore/constants.hpp"
#include "rzs/numcore/memo.hpp"
#include "rzs/numcore/precision.hpp"

using namespace rzs;
using namespace rzs::numcore;
using rzs::testing::agree;
using Q = BigRational;

TEST_CASE("bernoulli numbers are exact") {
    CHECK(numcore::bernoulli(0) == Q(1));
    CHECK(numcore::bernoulli(2) == Q(1, 6));
    CHECK(numcore::bernoulli(4) == Q(-1, 30));
    CHECK(numcore::bernoulli(12) == Q(-691, 2730));
    CHECK(numcore::bernoulli(20) == Q(-174611, 330));
    for (int k = 1; k <= 30; ++k) CHECK(numcore::bernoulli(2 * k + 1) == Q(0));
    for (int k = 1; k <= 30; ++k) CHECK(numcore::sign_pow(k + 1) * numcore::bernoulli(2 * k).sign() > 0);
}

TEST_CASE("bernoulli numbers match an independent recurrence") {
    // Akiyama-Tanigawa produces B_n with B_1 = +1/2, so compare from n = 2.
    std::vector<Q> a;
    for (int n = 0; n <= 40; ++n) {
        a.push_back(Q(1, n + 1));
        for (int j = n; j >= 1; --j) a[j - 1] = Q(j) * (a[j - 1] - a[j]);
        if (n >= 2) CHECK(a[0] == numcore::bernoulli(n));
    }
}

TEST_CASE("bernoulli polynomials") {
    CHECK(numcore::bernoulli_polynomial(2, Q(1, 3)) == Q(-1, 18));
    for (int n = 0; n <= 12; ++n) CHECK(numcore::bernoulli_polynomial(n, Q(0)) == numcore::bernoulli(n));
}

TEST_CASE("harmonic numbers") {
    CHECK(numcore::harmonic(1) == Q(1));
    CHECK(numcore::harmonic(4) == Q(25, 12));
    for (int n = 1; n <= 200; ++n) CHECK(numcore::harmonic(n) - numcore::harmonic(n - 1) == Q(1, n));
}

TEST_CASE("factorials, binomials and signs") {
    CHECK(numcore::factorial(0) == 1);
    CHECK(numcore::factorial(20) == BigInt("2432902008176640000"));
    CHECK(numcore::binomial(30, 15) == 155117520);
    CHECK(numcore::binomial(5, 7) == 0);
    CHECK(numcore::sign_pow(-3) == -1);
    CHECK(numcore::floor_div(-3, 2) == -2);
    CHECK(numcore::floor_div(3, 2) == 1);
}

TEST_CASE("rational parsing") {
    CHECK(Q::parse("3/6") == Q(1, 2));
    CHECK(Q::parse("-7") == Q(-7));
    CHECK(Q(1, 4).to_string() == "1/4");
    CHECK_THROWS_AS(Q::parse("0.25"), std::invalid_argument);
    CHECK_THROWS_AS(Q::parse("abc"), std::invalid_argument);
    CHECK_THROWS(Q::parse("1/0"));
    CHECK(pow(Q(2, 3), -2) == Q(9, 4));
}

TEST_CASE("precision context") {
    PrecisionContext ctx(50);
    CHECK(ctx.target_digits() == 50);
    CHECK(ctx.guard_digits() == 25);
    CHECK(ctx.working_digits() == 75);
    CHECK(ctx.log10_epsilon() == doctest::Approx(-75));
    CHECK(ctx.working_bits() >= 249);
    CHECK(PrecisionContext(10).guard_digits() == 21);
    const auto d = ctx.doubled();
    CHECK(d.target_digits() == 50);
    CHECK(d.working_digits() >= 2 * ctx.guard_digits() + 50);
}

TEST_CASE("constants agree with reference values") {
    PrecisionContext ctx(50);
    CHECK(agree(constant(Constant::PI, ctx), "3.141592653589793238462643383279502884197169399375105821") >= 50);
    CHECK(agree(constant(Constant::LOG2, ctx), "0.6931471805599453094172321214581765680755001343602552541") >= 50);
    CHECK(agree(constant(Constant::EULER_GAMMA, ctx), "0.5772156649015328606065120900824024310421593359399235988") >= 50);
    CHECK(agree(constant(Constant::CATALAN, ctx), "0.9159655941772190150546035149323841107741493742816721343") >= 50);
    CHECK(agree(constant(Constant::GLAISHER_LOG, ctx), "0.2487544770337842625472529935761139760973697136685351170") >= 50);
}

TEST_CASE("constants are stable under doubled precision") {
    PrecisionContext ctx(60);
    for (Constant c : {Constant::PI, Constant::LOG2, Constant::EULER_GAMMA, Constant::CATALAN, Constant::GLAISHER_LOG})
        CHECK(agree(constant(c, ctx), constant(c, ctx.doubled())) >= 60);
}

TEST_CASE("constant names round trip") {
    for (Constant c : {Constant::PI, Constant::LOG2, Constant::EULER_GAMMA, Constant::CATALAN, Constant::GLAISHER_LOG})
        CHECK(constant_from_name(constant_name(c)) == c);
    CHECK_FALSE(constant_from_name("nonsense").has_value());
}

TEST_CASE("big real formatting and arithmetic") {
    const BigReal x(Q(1, 8), 200);
    CHECK(x.to_string(5) == "0.12500");
    CHECK((x * 8L).to_string(3) == "1.00");
    CHECK(BigReal(0L, 100).to_string(10) == "0");
    CHECK(agree(sqrt(BigReal(2L, 300)) * sqrt(BigReal(2L, 300)), BigReal(2L, 300)) >= 80);
    CHECK(agree(cot(pi(300) / 4L), BigReal(1L, 300)) >= 80);
}

TEST_CASE("memo is consistent under concurrent access") {
    numcore::Memo<int, long> memo;
    std::vector<std::thread> pool;
    std::vector<long> seen(8);
    for (int t = 0; t < 8; ++t)
        pool.emplace_back([&, t] { seen[t] = memo.get_or_compute(7, [t] { return 100L + t; }); });
    for (auto& th : pool) th.join();
    CHECK(std::set<long>(seen.begin(), seen.end()).size() == 1);
    CHECK(memo.get_or_compute(7, [] { return -1L; }) == seen[0]);
}
