#include <array>
#include <stdexcept>

#include "rhs_common.hpp"
#include "rzs/numcore/errors.hpp"

namespace rzs::families {

using detail::Plan;
using detail::Q;

namespace {

bool is_special_z(const Q& z) { return z == Q(1, 2) || z == Q(1, 4); }

bool has_p_zero_form(FamilyId f) { return f != FamilyId::A && f != FamilyId::D; }

Plan resolve(FamilyId f, int p, const Q& z, const RhsOptions& opt) {
    Plan plan;
    switch (opt.route) {
        case Route::AUTO: plan.specialized = has_specialization(f, z); break;
        case Route::GENERAL_Z: plan.specialized = false; break;
        case Route::SPECIALIZED:
            if (!has_specialization(f, z))
                throw DomainError("no specialized form of family " + family_name(f) + " at z = " + z.to_string());
            plan.specialized = true;
            break;
    }
    switch (opt.pform) {
        case PForm::AUTO: plan.p_zero = p == 0 && has_p_zero_form(f); break;
        case PForm::GENERAL_P: plan.p_zero = false; break;
        case PForm::P_ZERO:
            if (p != 0 || !has_p_zero_form(f))
                throw DomainError("the p = 0 form needs p = 0 and a family other than A or D");
            plan.p_zero = true;
            break;
    }
    return plan;
}

LinearFactor lf(long a, long b) { return {a, b}; }

}  // namespace

namespace detail {

std::string form_label(const Plan& plan, const Q& z) {
    std::string s = plan.specialized ? "z=" + z.to_string() : "general z";
    return plan.p_zero ? s + ", p=0" : s;
}

}  // namespace detail

bool family_has_m(FamilyId f) { return f != FamilyId::A && f != FamilyId::D; }

int family_min_m(FamilyId f) {
    switch (f) {
        case FamilyId::B:
        case FamilyId::E:
        case FamilyId::X1: return 1;
        default: return 0;
    }
}

int family_min_p(FamilyId f) { return (f == FamilyId::A || f == FamilyId::D) ? 1 : 0; }

void check_domain(FamilyId f, std::optional<int> m, int p, const BigRational& z) {
    const std::string name = "family " + family_name(f);
    if (family_has_m(f)) {
        if (!m) throw DomainError(name + " needs m");
        if (*m < family_min_m(f)) throw DomainError(name + " needs m >= " + std::to_string(family_min_m(f)));
        if (*m > 60) throw DomainError(name + ": m above 60 is not supported");
    } else if (m) {
        throw DomainError(name + " takes no m");
    }
    if (p < family_min_p(f)) throw DomainError(name + " needs p >= " + std::to_string(family_min_p(f)));
    if (p > 60) throw DomainError(name + ": p above 60 is not supported");
    if (z.sign() <= 0 || z > Q(3, 5)) throw DomainError("z must satisfy 0 < z <= 3/5, got " + z.to_string());
    if (z.denominator() > 64) throw DomainError("z denominator must not exceed 64, got " + z.to_string());
}

bool in_domain(FamilyId f, std::optional<int> m, int p, const BigRational& z) {
    try {
        check_domain(f, m, p, z);
        return true;
    } catch (const DomainError&) {
        return false;
    }
}

SeriesSpec family_lhs(FamilyId f, std::optional<int> mm, int p, const BigRational& z) {
    check_domain(f, mm, p, z);
    const long m = mm.value_or(0);
    SeriesSpec s;
    s.ratio = z;
    auto& d = s.denominator;
    switch (f) {
        case FamilyId::A:
            s.numerator = Numerator::ZETA_EVEN;
            s.start_index = 0;
            d = {lf(2, p)};
            s.leading_coefficient = Q(-2);
            break;
        case FamilyId::B:
            s.numerator = Numerator::ZETA_EVEN;
            s.start_index = 1;
            d.push_back(lf(1, 0));
            for (long j = 1; j < m; ++j) d.push_back(lf(2, j));
            d.push_back(lf(2, m + p));
            break;
        case FamilyId::C:
            s.numerator = Numerator::ZETA_EVEN;
            s.start_index = 0;
            for (long j = 1; j <= m + 1; ++j) d.push_back(lf(2, j));
            d.push_back(lf(2, m + p + 2));
            break;
        case FamilyId::D:
            s.numerator = Numerator::ZETA_ODD;
            s.start_index = 1;
            d = {lf(2, p + 1)};
            break;
        case FamilyId::E:
            s.numerator = Numerator::ZETA_ODD;
            s.start_index = 1;
            for (long j = 1; j <= m; ++j) d.push_back(lf(2, j));
            d.push_back(lf(2, m + 1 + p));
            break;
        case FamilyId::F:
            s.numerator = Numerator::ZETA_ODD;
            s.start_index = 1;
            for (long j = 2; j <= m + 2; ++j) d.push_back(lf(2, j));
            d.push_back(lf(2, m + p + 3));
            break;
        case FamilyId::X1:
            s.numerator = Numerator::ALT_ZETA;
            s.start_index = 2;
            for (long j = 0; j < m; ++j) d.push_back(lf(1, j));
            d.push_back(lf(1, m + p));
            break;
        case FamilyId::X2:
            s.numerator = Numerator::ALT_ZETA;
            s.start_index = 2;
            for (long j = 1; j <= m + 1; ++j) d.push_back(lf(1, j));
            d.push_back(lf(1, m + p + 2));
            break;
    }
    s.validate();
    return s;
}

bool has_specialization(FamilyId f, const BigRational& z) {
    return f != FamilyId::X1 && f != FamilyId::X2 && is_special_z(z);
}

bool has_alternate(FamilyId f, std::optional<int> m, int p, const BigRational& z, const RhsOptions& opt) {
    if (!in_domain(f, m, p, z)) return false;
    Plan plan;
    try {
        plan = resolve(f, p, z, opt);
    } catch (const DomainError&) {
        return false;
    }
    switch (f) {
        case FamilyId::C: return plan.specialized && plan.p_zero && z == Q(1, 2) && *m >= 1;
        case FamilyId::D: return plan.specialized && z == Q(1, 4);
        case FamilyId::F: return !plan.specialized && !plan.p_zero;
        default: return false;
    }
}

std::vector<Reading> available_readings(FamilyId f, std::optional<int> m, int p, const BigRational& z,
                                        const RhsOptions& opt) {
    std::vector<Reading> out{Reading::AS_PRINTED, Reading::CORRECTED};
    if (has_alternate(f, m, p, z, opt)) out.push_back(Reading::ALTERNATE);
    return out;
}

IdentityInstance make_instance(FamilyId f, std::optional<int> m, int p, const BigRational& z, Reading reading,
                               const RhsOptions& opt) {
    IdentityInstance inst;
    inst.family = f;
    inst.m = family_has_m(f) ? m : std::nullopt;
    if (!family_has_m(f) && m) throw DomainError("family " + family_name(f) + " takes no m");
    inst.p = p;
    inst.z = z;
    inst.reading = reading;
    inst.options = opt;
    inst.lhs = family_lhs(f, inst.m, p, z);
    const Plan plan = resolve(f, p, z, opt);
    if (reading == Reading::ALTERNATE && !has_alternate(f, inst.m, p, z, opt))
        throw DomainError("reading 'alternate' is not defined for this instance of family " + family_name(f));
    const int mv = inst.m.value_or(0);
    switch (f) {
        case FamilyId::A: inst.rhs = detail::rhs_A(p, z, reading, plan, inst.form); break;
        case FamilyId::B: inst.rhs = detail::rhs_B(mv, p, z, reading, plan, inst.form); break;
        case FamilyId::C: inst.rhs = detail::rhs_C(mv, p, z, reading, plan, inst.form); break;
        case FamilyId::D: inst.rhs = detail::rhs_D(p, z, reading, plan, inst.form); break;
        case FamilyId::E: inst.rhs = detail::rhs_E(mv, p, z, reading, plan, inst.form); break;
        case FamilyId::F: inst.rhs = detail::rhs_F(mv, p, z, reading, plan, inst.form); break;
        case FamilyId::X1: inst.rhs = detail::rhs_X1(mv, p, z, plan, inst.form); break;
        case FamilyId::X2: inst.rhs = detail::rhs_X2(mv, p, z, plan, inst.form); break;
    }
    inst.rhs = closedform::normalize_logs(inst.rhs);
    return inst;
}

namespace {
constexpr std::array<const char*, 8> kFamilyNames{"A", "B", "C", "D", "E", "F", "X1", "X2"};
constexpr std::array<const char*, 3> kReadingNames{"as_printed", "corrected", "alternate"};
}  // namespace

std::string family_name(FamilyId f) { return kFamilyNames[static_cast<std::size_t>(f)]; }

FamilyId family_from_name(const std::string& s) {
    for (std::size_t i = 0; i < kFamilyNames.size(); ++i)
        if (s == kFamilyNames[i]) return static_cast<FamilyId>(i);
    throw std::invalid_argument("unknown family '" + s + "' (expected A..F, X1 or X2)");
}

std::string reading_name(Reading r) { return kReadingNames[static_cast<std::size_t>(r)]; }

Reading reading_from_name(const std::string& s) {
    for (std::size_t i = 0; i < kReadingNames.size(); ++i)
        if (s == kReadingNames[i]) return static_cast<Reading>(i);
    throw std::invalid_argument("unknown reading '" + s + "' (expected as_printed, corrected or alternate)");
}

}  // namespace rzs::families
