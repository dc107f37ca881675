#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "doctest.h"
#include "test_util.hpp"

#include "rzs/closedform/closed_form.hpp"
#include "rzs/families/golden.hpp"
#include "rzs/families/identity.hpp"
#include "rzs/numcore/errors.hpp"
#include "rzs/verify/integrals.hpp"
#include "rzs/verify/report.hpp"
#include "rzs/verify/suite.hpp"
#include "rzs/verify/verify.hpp"

using namespace rzs;
using namespace rzs::verify;
using families::FamilyId;
using families::Reading;
using Q = BigRational;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

SuiteConfig small_config() {
    SuiteConfig c;
    c.digits = 30;
    c.families = {{FamilyId::B, {1, 2}, {0, 1}, {Q(1, 2), Q(1, 4)}, {}},
                  {FamilyId::C, {0, 1}, {0}, {Q(1, 4)}, {}},
                  {FamilyId::X1, {1}, {0, 1}, {Q(1, 3)}, {}}};
    c.integrals = {{Theorem::T1, {}, {1, 2}, {Q(1, 4)}, 10}, {Theorem::D2, {0}, {0}, {Q(1, 4)}, 8}};
    return c;
}

}  // namespace

TEST_CASE("digits of agreement") {
    const long bits = 300;
    const BigReal a(Q(1, 3), bits);
    CHECK(digits_agreement(a, a, 77) == 77);
    // absolute below one
    CHECK(digits_agreement(a, a + BigReal(3e-20, bits), 60) == 19);
    // relative above one
    const BigReal big(12345L, bits);
    CHECK(digits_agreement(big, big + BigReal(1e-10, bits), 60) == 14);
    CHECK(digits_agreement(a, a + 1L, 60) == 0);
    CHECK(digits_agreement(a, a + BigReal(1e-90, bits), 60) == 60);
}

TEST_CASE("verify_identity") {
    PrecisionContext ctx(50);
    auto in = families::make_instance(FamilyId::B, 1, 0, Q(1, 2));
    auto r = verify_identity(in, ctx);
    CHECK(r.status == Status::PASS);
    CHECK(r.digits >= 45);
    CHECK(r.required_digits == 45);
    CHECK(r.kind == "identity");
    CHECK(r.reading == "corrected");

    in.rhs += closedform::ClosedForm(Q(1, BigInt("1000000000000000000000000000000")));
    r = verify_identity(in, ctx);
    CHECK(r.status == Status::FAIL);
    CHECK(r.digits == 30);

    in.rhs = closedform::ClosedForm(closedform::Atom::clausen(2, Q(3, 2)));
    r = verify_identity(in, ctx);
    CHECK(r.status == Status::DOMAIN_SKIP);
    CHECK_FALSE(r.note.empty());
}

TEST_CASE("report JSON") {
    PrecisionContext ctx(30);
    const auto r = verify_identity(families::make_instance(FamilyId::C, 0, 0, Q(1, 2)), ctx);
    const Json j = to_json(r, 30, false);
    for (const char* k : {"family", "m", "p", "z", "reading", "lhs", "rhs", "abs_diff", "digits", "status"})
        CHECK(j.contains(k));
    CHECK_FALSE(j.contains("elapsed_ms"));
    CHECK(to_json(r, 30, true).contains("elapsed_ms"));
    CHECK(j["lhs"].is_string());
    CHECK(j["z"] == "1/2");
    CHECK(status_from_name(j["status"].get<std::string>()) == Status::PASS);
}

TEST_CASE("adjudication") {
    PrecisionContext ctx(40);
    // three readings, two distinct formulas, one of which holds
    auto a = adjudicate_reading(FamilyId::C, 1, 0, Q(1, 2), ctx);
    CHECK(a.outcome == Outcome::CHOSEN);
    REQUIRE(a.chosen);
    CHECK(*a.chosen == Reading::CORRECTED);
    CHECK(a.distinct_forms == 2);
    CHECK(a.reports.size() == 3);

    a = adjudicate_reading(FamilyId::C, 1, 0, Q(1, 4), ctx);
    CHECK(a.outcome == Outcome::CHOSEN);
    CHECK(a.reports[0].status == Status::FAIL);

    // identical readings
    a = adjudicate_reading(FamilyId::B, 2, 0, Q(1, 2), ctx);
    CHECK(a.outcome == Outcome::AMBIGUOUS);
    CHECK(a.distinct_forms == 1);
    CHECK_FALSE(readings_differ(FamilyId::B, 2, 0, Q(1, 2)));
    CHECK(readings_differ(FamilyId::C, 1, 0, Q(1, 4)));

    // two distinct formulas that both hold
    auto good = families::make_instance(FamilyId::B, 1, 0, Q(1, 4));
    auto both = families::make_instance(FamilyId::B, 1, 0, Q(1, 4), Reading::CORRECTED, {families::Route::GENERAL_Z, {}});
    both.reading = Reading::AS_PRINTED;
    a = adjudicate_variants({both, good}, ctx);
    CHECK(a.outcome == Outcome::AMBIGUOUS);
    CHECK(a.distinct_forms == 2);

    // corrupted coefficients in every variant
    auto bad1 = good, bad2 = good;
    bad1.rhs += closedform::ClosedForm(Q(1, 1000));
    bad2.rhs += closedform::ClosedForm(Q(-1, 1000));
    bad2.reading = Reading::AS_PRINTED;
    a = adjudicate_variants({bad2, bad1}, ctx);
    CHECK(a.outcome == Outcome::CONTRADICTION);
    CHECK_FALSE(a.chosen);
    CHECK_THROWS_AS(adjudicate_variants({}, ctx), std::invalid_argument);

    const Json j = to_json(adjudicate_reading(FamilyId::C, 1, 0, Q(1, 4), ctx), 20, false);
    CHECK(j["outcome"] == "CHOSEN");
    CHECK(j["chosen"] == "corrected");
    CHECK(j["reports"].size() == 2);
}

TEST_CASE("golden adjudication") {
    PrecisionContext ctx(30);
    for (const auto& e : families::golden_table()) {
        if (!e.corrected) {
            CHECK_THROWS_AS(adjudicate_golden(e, ctx), std::invalid_argument);
            continue;
        }
        const auto a = adjudicate_golden(e, ctx);
        CHECK(a.label == e.id);
        CHECK(a.outcome == Outcome::CHOSEN);
        CHECK(*a.chosen == Reading::CORRECTED);
    }
}

TEST_CASE("integral checks") {
    for (Theorem t : {Theorem::T1, Theorem::T2, Theorem::T3, Theorem::T4}) {
        for (const Q& z : {Q(1, 4), Q(1, 2), Q(1, 3)}) {
            IntegralCheck c;
            c.theorem = t;
            if (theorem_has_m(t)) c.m = 2;
            c.p = 2;
            c.z = z;
            const auto r = verify_integral(c);
            CAPTURE(theorem_name(t));
            CAPTURE(z.to_string());
            CHECK(r.status == Status::PASS);
            CHECK(r.digits >= 10);
            CHECK(r.kind == "integral");
        }
    }
    for (Theorem t : {Theorem::D1, Theorem::D2}) {
        IntegralCheck c;
        c.theorem = t;
        c.m = 1;
        c.p = 1;
        c.z = Q(1, 4);
        c.quadrature_digits = 10;
        const auto r = verify_integral(c);
        CAPTURE(theorem_name(t));
        CHECK(r.status == Status::PASS);
        CHECK(r.digits >= 8);
    }
}

TEST_CASE("integral routes agree") {
    for (Theorem t : {Theorem::T1, Theorem::T2})
        for (const Q& z : {Q(1, 4), Q(1, 2)})
            for (int p = 1; p <= 3; ++p) {
                IntegralCheck c;
                c.theorem = t;
                if (t == Theorem::T2) c.m = 3;
                c.p = p;
                c.z = z;
                std::string fa, fg;
                const auto special = integral_rhs(c, &fa);
                c.route = families::Route::GENERAL_Z;
                const auto general = integral_rhs(c, &fg);
                CHECK(fa != fg);
                PrecisionContext ctx(40);
                CHECK(rzs::testing::agree(closedform::evaluate(special, ctx), closedform::evaluate(general, ctx)) >= 40);
            }
}

TEST_CASE("integral domains") {
    IntegralCheck c;
    c.theorem = Theorem::T1;
    c.p = 0;
    c.z = Q(1, 4);
    CHECK_THROWS_AS(check_integral_domain(c), DomainError);
    CHECK(verify_integral(c).status == Status::DOMAIN_SKIP);
    c.p = 1;
    c.m = 1;
    CHECK_THROWS_AS(check_integral_domain(c), DomainError);
    c.theorem = Theorem::T2;
    c.m = 0;
    CHECK_THROWS_AS(check_integral_domain(c), DomainError);
    c.m = 1;
    c.z = Q(7, 10);
    CHECK_THROWS_AS(check_integral_domain(c), DomainError);
    c.z = Q(1, 4);
    c.quadrature_digits = 16;
    CHECK_THROWS_AS(check_integral_domain(c), DomainError);
    c.quadrature_digits = 12;
    c.route = families::Route::SPECIALIZED;
    c.z = Q(1, 3);
    CHECK_THROWS_AS(integral_rhs(c), DomainError);
    CHECK(theorem_from_name("D2") == Theorem::D2);
    CHECK_THROWS_AS(theorem_from_name("T9"), std::invalid_argument);
}

TEST_CASE("empty suite") {
    const auto r = run_suite(suite_config_from_json(Json::object()));
    CHECK(r.reports.empty());
    CHECK(r.adjudications.empty());
    CHECK(r.ok());
    CHECK(r.exit_code() == 0);
    CHECK_FALSE(r.summary.worst_digits);
}

TEST_CASE("suite config JSON") {
    const Json j = Json::parse(R"({
        "digits": 40, "threads": "auto",
        "families": [{"family": "B", "m": {"from": 1, "to": 3}, "p": [0, 2], "z": ["1/2", "1/8"], "route": "general_z"}],
        "integrals": [{"theorem": "T2", "m": [1], "p": {"from": 1, "to": 2}, "z": ["1/4"], "quadrature_digits": 11}],
        "golden": true
    })");
    const auto c = suite_config_from_json(j);
    CHECK(c.digits == 40);
    CHECK(c.threads == 0);
    REQUIRE(c.families.size() == 1);
    CHECK(c.families[0].m == std::vector<int>{1, 2, 3});
    CHECK(c.families[0].z.size() == 2);
    CHECK(c.families[0].options.route == families::Route::GENERAL_Z);
    CHECK(c.integrals[0].p == std::vector<int>{1, 2});
    CHECK(c.integrals[0].quadrature_digits == 11);
    CHECK(c.golden);
    // emitted configs parse back to the same thing
    CHECK(to_json(suite_config_from_json(to_json(c))) == to_json(c));
    CHECK(to_json(suite_config_from_json(to_json(default_suite_config()))) == to_json(default_suite_config()));

    CHECK_THROWS_AS(suite_config_from_json(Json::parse(R"({"digits": 5})")), std::invalid_argument);
    CHECK_THROWS_AS(suite_config_from_json(Json::parse(R"({"families": [{"family": "Z"}]})")), std::invalid_argument);
    CHECK_THROWS_AS(suite_config_from_json(Json::parse(R"({"families": [{"family": "B", "z": ["0.5"]}]})")),
                    std::invalid_argument);
    CHECK_THROWS_AS(suite_config_from_json(Json::parse("[1]")), std::invalid_argument);
    CHECK_THROWS_AS(load_suite_config("/nonexistent/config.json"), std::runtime_error);
}

TEST_CASE("suite results are deterministic and thread-count independent") {
    auto c = small_config();
    c.threads = 1;
    const auto one = run_suite(c);
    c.threads = 4;
    const auto four = run_suite(c);
    CHECK(one.ok());
    CHECK(one.summary.pass == static_cast<int>(one.reports.size()));
    CHECK(one.adjudications.size() == 1);  // C m=1 p=0 z=1/4
    CHECK(to_json(one, false).dump() == to_json(four, false).dump());
    CHECK(strip_timing(to_json(one, true)) == to_json(one, false));
}

TEST_CASE("suite report file") {
    const auto r = run_suite(small_config());
    const auto path = (std::filesystem::temp_directory_path() / "rzs_suite_test.json").string();
    write_suite_report(r, path, false);
    const Json j = Json::parse(read_file(path));
    CHECK(j["summary"]["pass"] == r.summary.pass);
    CHECK(j["reports"].size() == r.reports.size());
    std::filesystem::remove(path);
    try {
        write_suite_report(r, "/nonexistent/dir/out.json");
        FAIL("expected an I/O error");
    } catch (const std::runtime_error& e) {
        CHECK(std::string(e.what()).find("/nonexistent/dir/out.json") != std::string::npos);
    }
}

TEST_CASE("golden suite matches the stored fixture") {
    const auto r = run_suite(golden_suite_config());
    CHECK(r.ok());
    CHECK(r.summary.pass == 49);
    CHECK(r.adjudications.size() == 2);
    const std::string fixture = read_file(std::string(RZS_FIXTURES_DIR) + "/golden_suite.json");
    REQUIRE_FALSE(fixture.empty());
    // byte comparison after dropping timing from both sides
    CHECK(strip_timing(Json::parse(fixture)).dump(2) + "\n" == to_json(r, false).dump(2) + "\n");
}

TEST_CASE("monotone precision for corrected instances") {
    for (FamilyId f : {FamilyId::A, FamilyId::C, FamilyId::E, FamilyId::X2}) {
        const auto in = families::make_instance(f, families::family_has_m(f) ? std::optional<int>(1) : std::nullopt, 1,
                                                Q(1, 4));
        for (int d : {20, 40, 80, 120}) CHECK(verify_identity(in, PrecisionContext(d)).status == Status::PASS);
    }
}
