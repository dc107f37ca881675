#include "rzs/verify/verify.hpp"

#include <chrono>
#include <stdexcept>

#include "rzs/families/series.hpp"
#include "rzs/numcore/errors.hpp"

namespace rzs::verify {

namespace {

using families::Reading;
using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

void compare(VerificationReport& r, const BigReal& lhs, const BigReal& rhs, const PrecisionContext& ctx) {
    r.lhs = lhs;
    r.rhs = rhs;
    r.abs_diff = abs(lhs - rhs);
    r.digits = digits_agreement(lhs, rhs, ctx.working_digits());
    r.required_digits = ctx.target_digits() - 5;
    r.status = r.digits >= r.required_digits ? Status::PASS : Status::FAIL;
}

// group[i] is the index of the first report whose RHS equals report i's.
template <class ReadingOf>
void decide(Adjudication& a, const std::vector<std::size_t>& group, ReadingOf reading_of) {
    std::vector<std::size_t> passing_groups;
    for (std::size_t i = 0; i < group.size(); ++i)
        if (group[i] == i && a.reports[i].status == Status::PASS) passing_groups.push_back(i);

    if (passing_groups.empty()) {
        a.outcome = Outcome::CONTRADICTION;
    } else if (passing_groups.size() > 1 || a.distinct_forms < 2) {
        a.outcome = Outcome::AMBIGUOUS;
    } else {
        a.outcome = Outcome::CHOSEN;
        const std::size_t g = passing_groups.front();
        a.chosen = reading_of(g);
        for (std::size_t i = 0; i < group.size(); ++i)
            if (group[i] == g && reading_of(i) == Reading::CORRECTED) a.chosen = Reading::CORRECTED;
    }
}

}  // namespace

VerificationReport verify_identity(const families::IdentityInstance& inst, const PrecisionContext& ctx,
                                   const closedform::AtomResolver& resolver) {
    const auto t0 = Clock::now();
    VerificationReport r;
    r.kind = "identity";
    r.family = families::family_name(inst.family);
    r.m = inst.m;
    r.p = inst.p;
    r.z = inst.z;
    r.reading = families::reading_name(inst.reading);
    r.form = inst.form;
    r.required_digits = ctx.target_digits() - 5;
    try {
        BigReal lhs = families::lhs_sum(inst.lhs, ctx);
        BigReal rhs = closedform::evaluate(inst.rhs, ctx, resolver);
        compare(r, lhs, rhs, ctx);
    } catch (const DomainError& e) {
        r.status = Status::DOMAIN_SKIP;
        r.note = e.what();
    }
    r.elapsed_ms = ms_since(t0);
    return r;
}

VerificationReport verify_golden(const families::GoldenEntry& e, Reading reading, const PrecisionContext& ctx) {
    const auto t0 = Clock::now();
    VerificationReport r;
    r.kind = "golden";
    r.family = e.id;
    r.m = e.m;
    r.p = e.p;
    r.z = e.z;
    r.reading = families::reading_name(reading);
    r.form = "table " + std::to_string(e.section);
    r.required_digits = ctx.target_digits() - 5;
    try {
        compare(r, families::lhs_sum(e.lhs, ctx), closedform::evaluate(e.rhs(reading), ctx), ctx);
    } catch (const DomainError& ex) {
        r.status = Status::DOMAIN_SKIP;
        r.note = ex.what();
    }
    r.elapsed_ms = ms_since(t0);
    return r;
}

Adjudication adjudicate_variants(const std::vector<families::IdentityInstance>& variants,
                                 const PrecisionContext& ctx) {
    if (variants.empty()) throw std::invalid_argument("adjudication needs at least one variant");
    Adjudication a;
    a.family = variants.front().family;
    a.m = variants.front().m;
    a.p = variants.front().p;
    a.z = variants.front().z;

    // group[i] = index of the first variant with a structurally equal RHS
    std::vector<std::size_t> group(variants.size());
    for (std::size_t i = 0; i < variants.size(); ++i) {
        group[i] = i;
        for (std::size_t j = 0; j < i; ++j)
            if (variants[j].rhs == variants[i].rhs) {
                group[i] = group[j];
                break;
            }
        if (group[i] == i) ++a.distinct_forms;
        a.reports.push_back(verify_identity(variants[i], ctx));
    }

    decide(a, group, [&](std::size_t i) { return variants[i].reading; });
    return a;
}

Adjudication adjudicate_reading(families::FamilyId f, std::optional<int> m, int p, const BigRational& z,
                                const PrecisionContext& ctx, const families::RhsOptions& opt) {
    std::vector<families::IdentityInstance> v;
    for (Reading r : families::available_readings(f, m, p, z, opt)) v.push_back(families::make_instance(f, m, p, z, r, opt));
    return adjudicate_variants(v, ctx);
}

Adjudication adjudicate_golden(const families::GoldenEntry& e, const PrecisionContext& ctx) {
    if (!e.corrected) throw std::invalid_argument("golden entry " + e.id + " has no corrected form");
    Adjudication a;
    a.label = e.id;
    a.family = e.family;
    a.m = e.m;
    a.p = e.p;
    a.z = e.z;
    const std::vector<Reading> readings{Reading::AS_PRINTED, Reading::CORRECTED};
    for (Reading r : readings) a.reports.push_back(verify_golden(e, r, ctx));
    const bool same = e.rhs(Reading::AS_PRINTED) == e.rhs(Reading::CORRECTED);
    a.distinct_forms = same ? 1 : 2;
    decide(a, {0, same ? 0u : 1u}, [&](std::size_t i) { return readings[i]; });
    return a;
}

bool readings_differ(families::FamilyId f, std::optional<int> m, int p, const BigRational& z,
                     const families::RhsOptions& opt) {
    const auto readings = families::available_readings(f, m, p, z, opt);
    const auto first = families::make_instance(f, m, p, z, readings.front(), opt).rhs;
    for (std::size_t i = 1; i < readings.size(); ++i)
        if (families::make_instance(f, m, p, z, readings[i], opt).rhs != first) return true;
    return false;
}

std::string outcome_name(Outcome o) {
    switch (o) {
        case Outcome::CHOSEN: return "CHOSEN";
        case Outcome::AMBIGUOUS: return "AMBIGUOUS";
        case Outcome::CONTRADICTION: return "CONTRADICTION";
    }
    return "?";
}

Json to_json(const Adjudication& a, int digits, bool include_timing) {
    Json j;
    if (!a.label.empty()) j["label"] = a.label;
    j["family"] = families::family_name(a.family);
    j["m"] = a.m ? Json(*a.m) : Json(nullptr);
    j["p"] = a.p;
    j["z"] = a.z.to_string();
    j["outcome"] = outcome_name(a.outcome);
    j["chosen"] = a.chosen ? Json(families::reading_name(*a.chosen)) : Json(nullptr);
    j["distinct_forms"] = a.distinct_forms;
    Json reps = Json::array();
    for (const auto& r : a.reports) reps.push_back(to_json(r, digits, include_timing));
    j["reports"] = reps;
    return j;
}

}  // namespace rzs::verify
