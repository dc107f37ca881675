#include "rzs/families/golden.hpp"

#include "rzs/numcore/errors.hpp"

namespace rzs::families {

namespace {

using closedform::Atom;
using closedform::ClosedForm;
using Q = BigRational;

const ClosedForm kOne(1);
ClosedForm zeta_pi(int j, int k) { return closedform::zeta_value(j) * closedform::pi_pow(-k); }
ClosedForm beta_pi(int j, int k) { return closedform::beta_value(j) * closedform::pi_pow(-k); }

struct Basis {
    ClosedForm L2 = ClosedForm(Atom::log2());
    ClosedForm LP = ClosedForm(Atom::log_pi());
    ClosedForm g = ClosedForm(Atom::euler_gamma());
    ClosedForm G_pi = ClosedForm(Atom::catalan()) * closedform::pi_pow(-1);
    ClosedForm logA = ClosedForm(Atom::glaisher_log());
    ClosedForm zd3 = ClosedForm(Atom::zeta_deriv(-3, Q(1)));
    ClosedForm zd2q = ClosedForm(Atom::zeta_deriv(-2, Q(1, 4)));
    ClosedForm lgq = closedform::negapolygamma_value(1, Q(1, 4));
    ClosedForm log_2pi2 = closedform::log_value(Q(2), 2);
    ClosedForm z3 = zeta_pi(3, 2);
    ClosedForm z5 = zeta_pi(5, 4);
    ClosedForm b4 = beta_pi(4, 3);
};

SeriesSpec series(Numerator num, std::vector<LinearFactor> den, const Q& z) {
    SeriesSpec s;
    s.numerator = num;
    s.start_index = 1;
    s.denominator = std::move(den);
    s.ratio = z;
    return s;
}

std::vector<LinearFactor> twos(long lo, long hi, std::vector<LinearFactor> head = {}) {
    for (long j = lo; j <= hi; ++j) head.push_back({2, j});
    return head;
}

std::vector<GoldenEntry> build() {
    const Basis b;
    const Q h(1, 2), q(1, 4);
    const auto E = Numerator::ZETA_EVEN;
    const auto O = Numerator::ZETA_ODD;
    std::vector<GoldenEntry> t;
    auto add = [&](std::string id, SeriesSpec lhs, ClosedForm rhs, FamilyId f, std::optional<int> m, int p,
                   Q scale, std::optional<ClosedForm> fix = std::nullopt) {
        GoldenEntry e;
        e.id = std::move(id);
        e.section = e.id[0] - '0';
        e.z = lhs.ratio;
        e.lhs = std::move(lhs);
        e.printed = closedform::normalize_logs(rhs);
        if (fix) e.corrected = closedform::normalize_logs(*fix);
        e.family = f;
        e.m = m;
        e.p = p;
        e.scale = scale;
        t.push_back(std::move(e));
    };
    using F = FamilyId;
    using LF = std::vector<LinearFactor>;
    const std::nullopt_t none = std::nullopt;
    auto ev0 = [&](LF d, const Q& z) {
        SeriesSpec s = series(E, std::move(d), z);
        s.start_index = 0;
        return s;
    };
    auto ev1 = [&](LF d, const Q& z) {
        SeriesSpec s = series(E, std::move(d), z);
        s.start_index = 1;
        return s;
    };
    auto od = [&](LF d, const Q& z) { return series(O, std::move(d), z); };

    add("2a", ev0({{1, 1}}, h), -b.L2 + Q(7, 2) * b.z3, F::A, none, 2, -1);
    add("2b", ev0({{2, 3}}, h), Q(-1, 2) * b.L2 + Q(9, 4) * b.z3, F::A, none, 3, Q(-1, 2));
    add("2c", ev0({{1, 2}}, h), -b.L2 + Q(9) * b.z3 - Q(93, 2) * b.z5, F::A, none, 4, -1);
    add("2d", ev0({{1, 1}}, q), Q(-1, 2) * b.L2 + Q(35, 4) * b.z3 - Q(4) * b.G_pi, F::A, none, 2, -1);
    add("2e", ev0({{2, 3}}, q), Q(-1, 4) * b.L2 + Q(9, 8) * b.z3 - Q(3) * b.G_pi + Q(24) * b.b4, F::A, none, 3,
        Q(-1, 2));

    const ClosedForm LPh = b.LP - b.L2;  // log(pi/2)
    add("3a", ev1({{1, 0}, {2, 1}}, h), b.LP - kOne, F::B, 1, 0, 1);
    add("3b", ev1({{1, 0}, {2, 1}}, q), Q(2) * b.G_pi - kOne + LPh, F::B, 1, 0, 1);
    add("3c", ev1({{1, 0}, {2, 3}}, h), Q(-3, 2) * b.z3 + Q(1, 3) * b.LP - ClosedForm(Q(1, 9)), F::B, 1, 2, 1);
    add("3d", ev1({{1, 0}, {2, 1}, {1, 1}}, h), Q(7, 2) * b.z3 - b.LP - ClosedForm(Q(3, 2)), F::B, 2, 0, 2,
        Q(7, 2) * b.z3 + b.LP - ClosedForm(Q(3, 2)));
    add("3e", ev1({{1, 0}, {2, 1}, {1, 1}, {2, 3}}, h), Q(2) * b.z3 + Q(1, 3) * b.LP - ClosedForm(Q(11, 18)), F::B,
        3, 0, 2);
    add("3f", ev1({{1, 0}, {2, 1}, {1, 1}, {1, 2}}, h),
        Q(2) * b.z3 + Q(31, 4) * b.z5 + Q(1, 2) * b.LP - ClosedForm(Q(7, 8)), F::B, 3, 1, 4);
    add("3g", ev1(twos(1, 5, {{1, 0}}), h),
        Q(1, 6) * b.z3 - b.z5 + Q(1, 120) * b.LP - ClosedForm(Q(137, 7200)), F::B, 5, 0, 1);
    add("3h", ev1({{1, 0}, {1, 1}}, q), Q(-35, 4) * b.z3 + Q(4) * b.G_pi + LPh - ClosedForm(Q(1, 2)), F::B, 1, 1,
        2);
    add("3i", ev1({{1, 0}, {2, 1}, {1, 1}}, q), Q(35, 4) * b.z3 + LPh - ClosedForm(Q(3, 2)), F::B, 2, 0, 2);
    add("3j", ev1({{1, 0}, {2, 1}, {2, 3}}, q),
        Q(3, 8) * b.z3 + Q(8) * b.b4 + Q(1, 3) * LPh - ClosedForm(Q(4, 9)), F::B, 2, 1, 1);
    add("3k", ev1(twos(1, 4, {{1, 0}}), q),
        Q(2) * b.z3 - Q(527, 32) * b.z5 + Q(1, 24) * LPh - ClosedForm(Q(25, 288)), F::B, 4, 0, 1);

    add("4a", ev0({{2, 1}, {1, 1}}, h), Q(-7, 2) * b.z3, F::C, 0, 0, 2);
    add("4b", ev0({{2, 1}, {1, 1}}, q), Q(2) * b.G_pi - Q(35, 4) * b.z3, F::C, 0, 0, 2);
    add("4c", ev0({{2, 1}, {2, 3}}, h), Q(-9, 8) * b.z3, F::C, 0, 1, 1);
    add("4d", ev0({{2, 1}, {1, 2}}, h), Q(-3) * b.z3 + Q(31, 2) * b.z5, F::C, 0, 2, 2);
    add("4e", ev0(twos(1, 3), h), Q(-5, 8) * b.z3, F::C, 1, 0, 1);
    add("4f", ev0({{2, 1}, {1, 1}, {1, 2}}, h), Q(-1, 2) * b.z3 - Q(31, 2) * b.z5, F::C, 1, 1, 4);
    add("4g", ev0(twos(1, 5), h), Q(-1, 6) * b.z3 + Q(49, 32) * b.z5, F::C, 3, 0, 1);
    add("4h", ev0({{2, 1}, {2, 3}}, q), Q(-9, 16) * b.z3 + b.G_pi - Q(12) * b.b4, F::C, 0, 1, 1);
    add("4i", ev0(twos(1, 3), q), Q(-61, 16) * b.z3 + Q(12) * b.b4, F::C, 1, 0, 1);
    add("4j", ev0(twos(1, 4), q), Q(-2) * b.z3 + Q(527, 16) * b.z5 - Q(4) * b.b4, F::C, 2, 0, 1);

    add("5a", od({{1, 1}}, h), ClosedForm(-2) - b.g + Q(12) * b.logA - Q(1, 3) * b.L2, F::D, none, 1, 2);
    add("5b", od({{2, 3}}, h), ClosedForm(Q(-1, 2)) - Q(1, 3) * b.g + Q(4) * b.logA - Q(1, 3) * b.L2, F::D, none,
        2, 1);
    add("5c", od({{2, 5}}, h),
        ClosedForm(Q(-199, 180)) - Q(1, 5) * b.g + Q(8) * b.logA - Q(56) * b.zd3 - Q(3, 5) * b.L2, F::D, none, 4,
        1);
    add("5d", od({{2, 2}}, q), ClosedForm(-2) - Q(1, 2) * b.g + Q(18) * b.logA + b.log_2pi2 - Q(4) * b.lgq, F::D,
        none, 1, 1);
    add("5e", od({{2, 3}}, q),
        Q(-64) * b.zd2q + ClosedForm(Q(1, 2)) + Q(4) * b.logA + b.log_2pi2 - Q(1, 3) * b.g + Q(3, 2) * b.z3 -
            Q(4) * b.lgq,
        F::D, none, 2, 1);

    add("6a", od({{2, 1}, {1, 1}}, h), Q(-12) * b.logA + ClosedForm(2) - b.g + Q(7, 3) * b.L2, F::E, 1, 0, 2);
    add("6b", od({{2, 1}, {2, 3}}, h), Q(-2) * b.logA + ClosedForm(Q(1, 4)) - Q(1, 3) * b.g + Q(2, 3) * b.L2, F::E,
        1, 1, 1);
    add("6c", od({{2, 1}, {1, 2}}, h),
        Q(-4) * b.logA + Q(20) * b.zd3 + ClosedForm(Q(19, 36)) - Q(1, 2) * b.g - Q(89, 90) * b.L2, F::E, 1, 2, 2,
        Q(-4) * b.logA + Q(20) * b.zd3 + ClosedForm(Q(19, 36)) - Q(1, 2) * b.g + Q(89, 90) * b.L2);
    add("6d", od({{2, 1}, {1, 1}, {2, 3}}, h), Q(-8) * b.logA + ClosedForm(Q(3, 2)) - Q(1, 3) * b.g + b.L2, F::E,
        2, 0, 2);
    add("6e", od({{2, 1}, {1, 1}, {1, 2}}, h),
        Q(-8) * b.logA - Q(20) * b.zd3 + ClosedForm(Q(53, 36)) - Q(1, 2) * b.g + Q(121, 90) * b.L2, F::E, 2, 1, 4);
    add("6f", od(twos(1, 5), h),
        Q(-2, 3) * b.logA + Q(8, 3) * b.zd3 + ClosedForm(Q(551, 4320)) - Q(1, 120) * b.g + Q(1, 24) * b.L2, F::E, 4,
        0, 1);
    add("6g", od({{2, 1}, {1, 1}}, q), Q(-36) * b.logA + ClosedForm(4) - b.g + Q(8) * b.L2, F::E, 1, 0, 2);
    add("6h", od({{2, 1}, {2, 3}}, q),
        Q(32) * b.zd2q - Q(2) * b.logA - Q(3, 4) * b.z3 - ClosedForm(Q(1, 4)) - Q(1, 3) * b.g + Q(2) * b.L2, F::E, 1,
        1, 1);
    add("6i", od(twos(1, 4), q),
        Q(-8) * b.logA + Q(45) * b.zd3 + ClosedForm(Q(187, 144)) - Q(1, 24) * b.g + Q(41, 60) * b.L2, F::E, 3, 0,
        1);

    add("7a", od({{1, 1}, {2, 3}}, h), Q(4) * b.logA - kOne - Q(1, 3) * b.g + Q(1, 3) * b.L2, F::F, 0, 0, 2);
    add("7b", od({{1, 1}, {1, 2}}, h), Q(60) * b.zd3 - ClosedForm(Q(5, 12)) - Q(1, 2) * b.g + Q(19, 30) * b.L2,
        F::F, 0, 1, 4);
    add("7c", od({{1, 1}, {2, 5}}, h),
        Q(-4, 3) * b.logA + Q(112, 3) * b.zd3 + ClosedForm(Q(19, 270)) - Q(1, 5) * b.g + Q(13, 45) * b.L2, F::F, 0,
        2, 2);
    add("7d", od({{1, 1}, {2, 3}, {1, 2}}, h),
        Q(8) * b.logA - Q(60) * b.zd3 - ClosedForm(Q(19, 12)) - Q(1, 6) * b.g + Q(1, 30) * b.L2, F::F, 1, 0, 4);
    add("7e", od({{2, 2}, {2, 3}, {2, 5}}, h),
        Q(4, 3) * b.logA - Q(28, 3) * b.zd3 - ClosedForm(Q(289, 1080)) - Q(1, 30) * b.g + Q(1, 90) * b.L2, F::F, 1,
        1, 1);
    add("7f", od(twos(2, 5), h),
        Q(2, 3) * b.logA - Q(17, 3) * b.zd3 - ClosedForm(Q(277, 2160)) - Q(1, 120) * b.g - Q(1, 360) * b.L2, F::F,
        2, 0, 1);
    add("7g", od({{1, 1}, {2, 3}}, q),
        Q(128) * b.zd2q + Q(28) * b.logA - Q(3) * b.z3 - ClosedForm(5) - Q(1, 3) * b.g, F::F, 0, 0, 2);
    add("7h", od({{1, 1}, {1, 2}}, q),
        Q(384) * b.zd2q + Q(24) * b.logA + Q(540) * b.zd3 - Q(9) * b.z3 - ClosedForm(Q(41, 12)) - Q(1, 2) * b.g +
            Q(1, 5) * b.L2,
        F::F, 0, 1, 4);
    add("7i", od(twos(2, 4), q),
        Q(-32) * b.zd2q + Q(8) * b.logA - Q(135) * b.zd3 + Q(3, 4) * b.z3 - ClosedForm(Q(79, 48)) -
            Q(1, 24) * b.g - Q(1, 20) * b.L2,
        F::F, 1, 0, 1);
    return t;
}

}  // namespace

const std::vector<GoldenEntry>& golden_table() {
    static const std::vector<GoldenEntry> table = build();
    return table;
}

std::vector<GoldenEntry> golden_section(int section) {
    if (section < 2 || section > 7) throw DomainError("table number must be in 2..7");
    std::vector<GoldenEntry> out;
    for (const auto& e : golden_table())
        if (e.section == section) out.push_back(e);
    return out;
}

}  // namespace rzs::families
