#include <map>
#include <stdexcept>

#include "doctest.h"
#include "test_util.hpp"

#include "rzs/closedform/evaluate.hpp"
#include "rzs/closedform/render.hpp"
#include "rzs/families/catalog.hpp"
#include "rzs/families/golden.hpp"
#include "rzs/families/identity.hpp"
#include "rzs/families/serialize.hpp"
#include "rzs/families/series.hpp"
#include "rzs/numcore/errors.hpp"

using namespace rzs;
using namespace rzs::families;
using rzs::testing::agree;
using Q = BigRational;
using closedform::evaluate;

namespace {

const std::vector<FamilyId> kAll{FamilyId::A, FamilyId::B, FamilyId::C, FamilyId::D,
                                 FamilyId::E, FamilyId::F, FamilyId::X1, FamilyId::X2};

std::optional<int> mm(FamilyId f, int m) { return family_has_m(f) ? std::optional<int>(m) : std::nullopt; }

// Identity holds at the context's target with the verifier's margin.
bool holds(const IdentityInstance& in, const PrecisionContext& ctx) {
    return agree(lhs_sum(in.lhs, ctx), evaluate(in.rhs, ctx)) >= ctx.target_digits() - 5;
}

}  // namespace

TEST_CASE("series sums against mpmath reference values at z = 1/3") {
    PrecisionContext ctx(40);
    const Q z(1, 3);
    const std::vector<std::tuple<FamilyId, std::optional<int>, int, const char*>> cases{
        {FamilyId::A, std::nullopt, 1, "0.87237209155350535979125912918506924639598712"},
        {FamilyId::B, 1, 0, "0.0623307249606863062590507466125159691475462302"},
        {FamilyId::B, 2, 1, "0.0123833783944907807312180412636065555477315696"},
        {FamilyId::C, 0, 0, "-0.234296968149387263096451640763108899374885366"},
        {FamilyId::D, std::nullopt, 1, "0.0357137982007657580724073938479252504583255897"},
        {FamilyId::E, 1, 0, "0.0115834122295006676469815420445353413626559245"},
        {FamilyId::F, 2, 1, "0.000143105824104087461997613267897460051248069551"},
        {FamilyId::X1, 1, 0, "0.0273042250705095972471981926247462041195544736"},
        {FamilyId::X2, 1, 1, "0.00226688345996057196237255707737106796472897048"},
    };
    for (const auto& [f, m, p, v] : cases) {
        CAPTURE(family_name(f));
        CHECK(agree(lhs_sum(family_lhs(f, m, p, z), ctx), v) >= 40);
    }
}

TEST_CASE("series spec validation") {
    SeriesSpec s;
    s.numerator = Numerator::ZETA_EVEN;
    s.start_index = 1;
    s.denominator = {{1, 0}};
    s.ratio = Q(1, 2);
    CHECK_NOTHROW(s.validate());
    s.ratio = Q(1);
    CHECK_THROWS_AS(s.validate(), DomainError);
    s.ratio = Q(1, 2);
    s.start_index = 0;  // factor n vanishes at n = 0
    CHECK_THROWS_AS(s.validate(), DomainError);
    s.numerator = Numerator::ALT_ZETA;
    s.start_index = 1;  // zeta(1)
    CHECK_THROWS_AS(s.validate(), DomainError);
}

TEST_CASE("domain checks") {
    CHECK_THROWS_AS(check_domain(FamilyId::B, 0, 0, Q(1, 2)), DomainError);
    CHECK_THROWS_AS(check_domain(FamilyId::A, std::nullopt, 0, Q(1, 2)), DomainError);
    CHECK_THROWS_AS(check_domain(FamilyId::D, std::nullopt, 0, Q(1, 4)), DomainError);
    CHECK_THROWS_AS(check_domain(FamilyId::C, 0, 0, Q(7, 10)), DomainError);
    CHECK_THROWS_AS(check_domain(FamilyId::C, 0, 0, Q(1, 65)), DomainError);
    CHECK_THROWS_AS(check_domain(FamilyId::E, 61, 0, Q(1, 2)), DomainError);
    CHECK_THROWS_AS(check_domain(FamilyId::E, std::nullopt, 0, Q(1, 2)), DomainError);
    CHECK_THROWS_AS(make_instance(FamilyId::A, 1, 1, Q(1, 2)), DomainError);
    CHECK(in_domain(FamilyId::C, 0, 0, Q(3, 5)));
    CHECK(in_domain(FamilyId::X2, 0, 0, Q(1, 64)));
    CHECK_THROWS_AS(family_from_name("Q"), std::invalid_argument);
    CHECK_THROWS_AS(reading_from_name("printed"), std::invalid_argument);
    for (FamilyId f : kAll) CHECK(family_from_name(family_name(f)) == f);
}

TEST_CASE("corrected identities hold across a grid") {
    PrecisionContext ctx(30);
    int count = 0;
    for (FamilyId f : kAll)
        for (int m = family_min_m(f); m <= 3; ++m)
            for (int p = family_min_p(f); p <= 3; ++p)
                for (const Q& z : {Q(1, 2), Q(1, 4), Q(1, 3), Q(3, 16), Q(3, 5)}) {
                    if (!family_has_m(f) && m > family_min_m(f)) continue;
                    const auto in = make_instance(f, mm(f, m), p, z);
                    CAPTURE(family_name(f));
                    CAPTURE(m);
                    CAPTURE(p);
                    CAPTURE(z.to_string());
                    CHECK(holds(in, ctx));
                    ++count;
                }
    CHECK(count > 300);
}

TEST_CASE("specialization consistency") {
    PrecisionContext ctx(40);
    RhsOptions general;
    general.route = Route::GENERAL_Z;
    for (FamilyId f : {FamilyId::A, FamilyId::B, FamilyId::C, FamilyId::D, FamilyId::E, FamilyId::F})
        for (int m = family_min_m(f); m <= 4; ++m)
            for (int p = family_min_p(f); p <= 3; ++p)
                for (const Q& z : {Q(1, 2), Q(1, 4)}) {
                    if (!family_has_m(f) && m > family_min_m(f)) continue;
                    REQUIRE(has_specialization(f, z));
                    const auto a = make_instance(f, mm(f, m), p, z);
                    const auto g = make_instance(f, mm(f, m), p, z, Reading::CORRECTED, general);
                    CAPTURE(family_name(f));
                    CAPTURE(m);
                    CAPTURE(p);
                    CAPTURE(z.to_string());
                    CHECK(a.form != g.form);
                    CHECK(agree(evaluate(a.rhs, ctx), evaluate(g.rhs, ctx)) >= 40);
                }
    CHECK_FALSE(has_specialization(FamilyId::B, Q(1, 3)));
    RhsOptions special;
    special.route = Route::SPECIALIZED;
    CHECK_THROWS_AS(make_instance(FamilyId::B, 1, 0, Q(1, 3), Reading::CORRECTED, special), DomainError);
}

TEST_CASE("p = 0 reduction") {
    PrecisionContext ctx(40);
    RhsOptions gp, pz;
    gp.pform = PForm::GENERAL_P;
    pz.pform = PForm::P_ZERO;
    for (FamilyId f : {FamilyId::B, FamilyId::C, FamilyId::E, FamilyId::F})
        for (int m = family_min_m(f); m <= 4; ++m)
            for (const Q& z : {Q(1, 2), Q(1, 4), Q(1, 3)})
                for (Route r : {Route::AUTO, Route::GENERAL_Z}) {
                    gp.route = pz.route = r;
                    const auto a = make_instance(f, m, 0, z, Reading::CORRECTED, gp);
                    const auto b = make_instance(f, m, 0, z, Reading::CORRECTED, pz);
                    CAPTURE(family_name(f));
                    CAPTURE(m);
                    CAPTURE(z.to_string());
                    CHECK(agree(evaluate(a.rhs, ctx), evaluate(b.rhs, ctx)) >= 40);
                }
    CHECK_THROWS_AS(make_instance(FamilyId::B, 1, 1, Q(1, 2), Reading::CORRECTED, pz), DomainError);
}

TEST_CASE("tail bound soundness") {
    PrecisionContext ctx(50);
    const double threshold = -ctx.target_digits();
    for (FamilyId f : kAll)
        for (int m = family_min_m(f); m <= 3; ++m)
            for (const Q& z : {Q(1, 2), Q(1, 4), Q(3, 5)}) {
                if (!family_has_m(f) && m > family_min_m(f)) continue;
                const auto spec = family_lhs(f, mm(f, m), family_min_p(f) + 1, z);
                const auto base = lhs_sum_detailed(spec, ctx);
                const auto more = lhs_sum_detailed(spec, ctx, 0.25);
                CHECK(more.terms > base.terms);
                CHECK(base.log10_tail < ctx.log10_epsilon());
                const BigReal d = abs(more.value - base.value);
                if (!d.is_zero()) CHECK(d.log10_abs() < threshold);
            }
}

TEST_CASE("splitting identity for the alternating families") {
    PrecisionContext ctx(50);
    for (FamilyId f : {FamilyId::X1, FamilyId::X2})
        for (int m = family_min_m(f); m <= 3; ++m)
            for (int p = 0; p <= 2; ++p)
                for (const Q& z : {Q(1, 2), Q(1, 4), Q(1, 3)}) {
                    const auto spec = family_lhs(f, m, p, z);
                    const auto [even, odd] = split_alternating(spec);
                    CHECK(even.numerator == Numerator::ZETA_EVEN);
                    CHECK(odd.numerator == Numerator::ZETA_ODD);
                    CHECK(agree(lhs_sum(spec, ctx), lhs_sum(even, ctx) - lhs_sum(odd, ctx)) >= 50);
                }
    CHECK_THROWS(split_alternating(family_lhs(FamilyId::B, 1, 0, Q(1, 2))));
}

TEST_CASE("readings") {
    // as_printed differs from corrected only for C at z = 1/4, p = 0, odd m
    for (int m = 0; m <= 6; ++m) {
        const auto printed = make_instance(FamilyId::C, m, 0, Q(1, 4), Reading::AS_PRINTED);
        const auto corrected = make_instance(FamilyId::C, m, 0, Q(1, 4), Reading::CORRECTED);
        CHECK((printed.rhs != corrected.rhs) == (m % 2 == 1));
    }
    CHECK(make_instance(FamilyId::B, 2, 1, Q(1, 2), Reading::AS_PRINTED).rhs ==
          make_instance(FamilyId::B, 2, 1, Q(1, 2), Reading::CORRECTED).rhs);
    CHECK(has_alternate(FamilyId::C, 1, 0, Q(1, 2)));
    CHECK(has_alternate(FamilyId::D, std::nullopt, 2, Q(1, 4)));
    CHECK(has_alternate(FamilyId::F, 1, 2, Q(1, 3)));
    CHECK_FALSE(has_alternate(FamilyId::B, 1, 0, Q(1, 2)));
    CHECK_THROWS_AS(make_instance(FamilyId::B, 1, 0, Q(1, 2), Reading::ALTERNATE), DomainError);
    CHECK(available_readings(FamilyId::B, 1, 0, Q(1, 2)).size() == 2);
    CHECK(available_readings(FamilyId::C, 1, 0, Q(1, 2)).size() == 3);

    PrecisionContext ctx(30);
    CHECK_FALSE(holds(make_instance(FamilyId::C, 1, 0, Q(1, 4), Reading::AS_PRINTED), ctx));
    CHECK_FALSE(holds(make_instance(FamilyId::C, 1, 0, Q(1, 2), Reading::ALTERNATE), ctx));
    CHECK_FALSE(holds(make_instance(FamilyId::D, std::nullopt, 2, Q(1, 4), Reading::ALTERNATE), ctx));
    CHECK_FALSE(holds(make_instance(FamilyId::F, 1, 2, Q(1, 3), Reading::ALTERNATE), ctx));
}

TEST_CASE("rendered closed forms") {
    auto text = [](const IdentityInstance& in) { return closedform::render(in.rhs, closedform::RenderFormat::TEXT); };
    CHECK(text(make_instance(FamilyId::B, 1, 0, Q(1, 2))) == "log(pi) - 1");
    CHECK(text(make_instance(FamilyId::C, 0, 0, Q(1, 2))) == "-(7/4)·pi^-2·zeta(3)");
    CHECK(text(make_instance(FamilyId::A, std::nullopt, 1, Q(1, 4))) == "2·pi^-1·G + (1/2)·log2");
    CHECK(make_instance(FamilyId::B, 1, 0, Q(1, 2)).form == "z=1/2, p=0");
    CHECK(make_instance(FamilyId::B, 1, 1, Q(1, 3)).form == "general z");
}

TEST_CASE("golden tables") {
    const auto& table = golden_table();
    CHECK(table.size() == 49);
    const std::map<int, std::size_t> counts{{2, 5}, {3, 11}, {4, 10}, {5, 5}, {6, 9}, {7, 9}};
    for (const auto& [section, n] : counts) CHECK(golden_section(section).size() == n);
    CHECK_THROWS_AS(golden_section(8), DomainError);

    PrecisionContext ctx(30);
    int corrected = 0;
    for (const auto& e : table) {
        CAPTURE(e.id);
        const BigReal lhs = lhs_sum(e.lhs, ctx);
        CHECK(agree(lhs, evaluate(e.rhs(Reading::CORRECTED), ctx)) >= 25);
        // each displayed sum is a scaled family instance
        const auto inst = make_instance(e.family, e.m, e.p, e.z);
        CHECK(agree(lhs, lhs_sum(inst.lhs, ctx) * e.scale) >= 25);
        CHECK(agree(lhs, evaluate(inst.rhs, ctx) * e.scale) >= 25);
        if (e.corrected) {
            ++corrected;
            CHECK(agree(lhs, evaluate(e.rhs(Reading::AS_PRINTED), ctx)) < 5);
        }
    }
    CHECK(corrected == 2);
}

TEST_CASE("catalog enumeration") {
    FamilyRange b{FamilyId::B, {2, 1, 0}, {1, 0}, {Q(1, 4), Q(1, 2)}, {}};
    FamilyRange a{FamilyId::A, {}, {0, 1}, {Q(1, 2)}, {}};
    const auto r = catalog_enumerate({b, a});
    CHECK(r.skipped == 5);  // B m=0 at four (p, z) points, A p=0
    REQUIRE(r.instances.size() == 2 * 2 * 2 + 1);
    CHECK(r.instances.front().family == FamilyId::A);
    CHECK(r.instances[1].m == 1);
    CHECK(r.instances[1].p == 0);
    CHECK(r.instances[1].z == Q(1, 4));
    CHECK(int_range(3, 1).empty());
    CHECK(int_range(1, 3) == std::vector<int>{1, 2, 3});
}

TEST_CASE("instance JSON round trip") {
    for (FamilyId f : kAll) {
        const auto in = make_instance(f, mm(f, family_min_m(f) + 1), family_min_p(f) + 1, Q(1, 4));
        const Json j = to_json(in);
        const auto back = instance_from_json(Json::parse(j.dump()));
        CHECK(back.family == in.family);
        CHECK(back.m == in.m);
        CHECK(back.lhs == in.lhs);
        CHECK(back.rhs == in.rhs);
        CHECK(back.reading == in.reading);
        CHECK(series_from_json(to_json(in.lhs)) == in.lhs);
    }
    CHECK_THROWS_AS(series_from_json(Json::parse(R"({"numerator":"ZETA_EVEN"})")), std::invalid_argument);
}
