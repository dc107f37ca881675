// Right-hand sides for the zeta(2n) families A, B and C.

#include "rhs_common.hpp"

namespace rzs::families::detail {

namespace {

ClosedForm A_general(int p, const Q& z) {
    ClosedForm s;
    for (int k = 0; k <= p; ++k) s += F(p) * sg(fl(k + 3)) / F(p - k) * W(z, -k) * Cl(k + 1, z);
    if (ev(p)) s += F(p) * sg(p / 2) * W(z, -p) * Z(p + 1);
    return s;
}

ClosedForm A_half(int p) {
    ClosedForm s = Lg(2) + F(p) * odd_zeta_block(1, p / 2, p);
    if (ev(p)) s += F(p) * sg(p / 2) * PI(-p) * Z(p + 1);
    return s;
}

ClosedForm A_quarter(int p) {
    ClosedForm s = Q(1, 2) * Lg(2) + Q(1, 2) * F(p) * odd_zeta_block(1, p / 2, p);
    ClosedForm b;
    for (int k = 1; k <= (p + 1) / 2; ++k) b += F(p) * pw(-4, k) / F(p + 1 - 2 * k) * PI(-2 * k) * Bt(2 * k);
    s -= Q(1, 2) * PI(1) * b;
    if (ev(p)) s += F(p) * sg(p / 2) * pw(2, p) * PI(-p) * Z(p + 1);
    return s;
}

ClosedForm B_general(int m, int p, const Q& z) {
    ClosedForm s = (Lg(Q(2) * z, 1) - C(H(m - 1))) / (F(m - 1) * (p + m));
    for (int k = m; k <= m + p; ++k) s += sg(m) * F(p) * sg(fl(k + 1)) / F(p + m - k) * W(z, -k) * Cl(k + 1, z);
    if (ev(p + m)) s += sg(m + 1) * F(p) * sg((p + m) / 2) * W(z, -(p + m)) * Z(p + m + 1);
    s -= C(Q(1) / (F(m - 1) * Q(p + m) * Q(p + m)));
    for (int k = 1; k <= (m - 1) / 2; ++k)
        s -= sg(k) / (F(m - 1 - 2 * k) * (m + p - 2 * k)) * W(z, -2 * k) * Z(2 * k + 1);
    return s;
}

ClosedForm B_general_p0(int m, const Q& z) {
    ClosedForm s = sg(m) * sg(fl(m + 1)) * W(z, -m) * Cl(m + 1, z);
    if (ev(m)) s -= sg(3 * m / 2) * W(z, -m) * Z(m + 1);
    for (int k = 1; k <= (m - 1) / 2; ++k) s -= sg(k) / F(m - 2 * k) * W(z, -2 * k) * Z(2 * k + 1);
    s += (Lg(Q(2) * z, 1) - C(H(m))) / F(m);
    return s;
}

ClosedForm B_half_p0(int m) {
    ClosedForm s;
    if (ev(m)) s += sg((3 * m + 2) / 2) * (pw(2, m + 1) - 1) * W(1, -m) * Z(m + 1);
    for (int k = 1; k <= (m - 1) / 2; ++k) s -= sg(k) / F(m - 2 * k) * PI(-2 * k) * Z(2 * k + 1);
    s += (Lg(1, 1) - C(H(m))) / F(m);
    return s;
}

ClosedForm B_quarter_p0(int m) {
    ClosedForm s;
    // The (3m+1)/2 exponent is only integral for odd m, which is exactly when it is used.
    if (!ev(m)) s += sg((3 * m + 1) / 2) * pw(2, m) * PI(-m) * Bt(m + 1);
    if (ev(m)) s -= Q(1, 2) * sg(3 * m / 2) * (pw(2, 2 * m + 1) + pw(2, m) - 1) * W(1, -m) * Z(m + 1);
    for (int k = 1; k <= (m - 1) / 2; ++k) s -= pw(-4, k) / F(m - 2 * k) * PI(-2 * k) * Z(2 * k + 1);
    s += (Lg(Q(1, 2), 1) - C(H(m))) / F(m);
    return s;
}

ClosedForm B_half(int m, int p) {
    ClosedForm s = (Lg(1, 1) - C(H(m - 1))) / (F(m - 1) * (p + m));
    ClosedForm t;
    if (ev(p + m)) t += sg((p + m) / 2) * PI(-(p + m)) * Z(p + m + 1);
    t += odd_zeta_block((m + 1) / 2, (p + m) / 2, p + m);
    s += sg(m + 1) * F(p) * t;
    for (int k = 1; k <= (m - 1) / 2; ++k)
        s -= sg(k) / (F(m - 1 - 2 * k) * (p + m - 2 * k)) * PI(-2 * k) * Z(2 * k + 1);
    s -= C(Q(1) / (F(m - 1) * Q(p + m) * Q(p + m)));
    return s;
}

ClosedForm B_quarter(int m, int p) {
    ClosedForm s = (Lg(Q(1, 2), 1) - C(H(m - 1))) / (F(m - 1) * (p + m));
    ClosedForm b;
    for (int k = (m + 2) / 2; k <= (p + m + 1) / 2; ++k)
        b += F(p) * sg(m + k) * pw(4, k) / F(p + m + 1 - 2 * k) * PI(-2 * k) * Bt(2 * k);
    s += Q(1, 2) * PI(1) * b;
    if (ev(p + m)) s += sg(m + 1) * F(p) * sg((p + m) / 2) * pw(2, p + m) * PI(-(p + m)) * Z(p + m + 1);
    s -= F(p) * sg(m) / 2 * odd_zeta_block((m + 1) / 2, (p + m) / 2, p + m);
    for (int k = 1; k <= (m - 1) / 2; ++k)
        s -= sg(k) * pw(4, k) / (F(m - 1 - 2 * k) * (p + m - 2 * k)) * PI(-2 * k) * Z(2 * k + 1);
    s -= C(Q(1) / (F(m - 1) * Q(p + m) * Q(p + m)));
    return s;
}

ClosedForm C_general(int m, int p, const Q& z) {
    ClosedForm t;
    for (int k = m + 3; k <= p + m + 3; ++k)
        t += sg(m + 1) * F(p) * z * sg(fl(k)) / F(p + m + 3 - k) * PI(1) * W(z, -k) * Cl(k, z);
    if (ev(p + m)) t -= F(p) * sg((p + m) / 2) * sg(m) / 2 * W(z, -(m + p + 2)) * Z(p + m + 3);
    ClosedForm s = Q(p + m + 2) * t;
    s += sg(fl(m + 1)) / 2 * W(z, -(m + 1)) * Cl(m + 2, z);
    for (int k = 1; k <= (m + 1) / 2; ++k)
        s += Q(k) * sg(k) / (F(m + 1 - 2 * k) * (m + p + 2 - 2 * k)) * W(z, -2 * k) * Z(2 * k + 1);
    return s;
}

ClosedForm C_general_p0(int m, const Q& z) {
    ClosedForm s = sg(fl(m + 1)) / 2 * W(z, -(m + 1)) * Cl(m + 2, z);
    ClosedForm c = Cl(m + 3, z);
    if (ev(m)) c -= Z(m + 3);
    s += sg(fl(m)) * Q(m + 2) / 2 * W(z, -(m + 2)) * c;
    for (int k = 1; k <= (m + 1) / 2; ++k) s += Q(k) * sg(k) / F(m + 2 - 2 * k) * W(z, -2 * k) * Z(2 * k + 1);
    return s;
}

// `scaled_pi` keeps the printed (2 pi z)^(2k) = pi^(2k); the alternate drops z.
ClosedForm C_half_p0(int m, bool scaled_pi) {
    ClosedForm s;
    if (!ev(m)) s -= sg((m + 1) / 2) * (pw(2, m + 1) - 1) / 2 * W(1, -(m + 1)) * Z(m + 2);
    if (ev(m)) s -= sg(m / 2) * (pw(2, m + 3) - 1) * Q(m + 2) / 2 * W(1, -(m + 2)) * Z(m + 3);
    const Q base = scaled_pi ? Q(1, 2) : Q(1);
    for (int k = 1; k <= (m + 1) / 2; ++k)
        s += Q(k) * sg(k) / F(m + 2 - 2 * k) * W(base, -2 * k) * Z(2 * k + 1);
    return s;
}

// `printed_index` keeps beta(m+2) in the odd-m term; the working index is m+3.
ClosedForm C_quarter_p0(int m, bool printed_index) {
    ClosedForm inner;
    if (!ev(m)) inner += pw(2, m + 1) * PI(-(m + 2)) * Bt(printed_index ? m + 2 : m + 3);
    if (ev(m)) inner -= (pw(2, 2 * m + 5) + pw(2, m + 2) - 1) / 4 * W(1, -(m + 2)) * Z(m + 3);
    ClosedForm s = sg(fl(m)) * Q(m + 2) * inner;
    ClosedForm second;
    if (ev(m)) second += pw(2, m) * PI(-(m + 1)) * Bt(m + 2);
    if (!ev(m)) second -= (pw(2, m + 1) - 1) / 4 * W(1, -(m + 1)) * Z(m + 2);
    s += sg(fl(m + 1)) * second;
    for (int k = 1; k <= (m + 1) / 2; ++k) s += Q(k) * pw(-4, k) / F(m + 2 - 2 * k) * PI(-2 * k) * Z(2 * k + 1);
    return s;
}

ClosedForm C_half(int m, int p) {
    ClosedForm t = odd_zeta_block((m + 3) / 2, (p + m + 2) / 2, p + m + 2);
    if (ev(p + m)) t -= sg((p + m) / 2) * PI(-(m + p + 2)) * Z(p + m + 3);
    ClosedForm s = sg(m) * F(p) * Q(m + p + 2) / 2 * t;
    if (!ev(m)) s -= sg((m + 1) / 2) * (pw(2, m + 1) - 1) / 2 * W(1, -(m + 1)) * Z(m + 2);
    for (int k = 1; k <= (m + 1) / 2; ++k)
        s += Q(k) * sg(k) / (F(m + 1 - 2 * k) * (m + p + 2 - 2 * k)) * PI(-2 * k) * Z(2 * k + 1);
    return s;
}

ClosedForm C_quarter(int m, int p) {
    ClosedForm t = odd_zeta_block((m + 3) / 2, (p + m + 2) / 2, p + m + 2);
    for (int k = (m + 4) / 2; k <= (p + m + 3) / 2; ++k)
        t -= sg(k) * pw(4, k) / F(p + m + 3 - 2 * k) * PI(-(2 * k - 1)) * Bt(2 * k);
    if (ev(p + m)) t -= sg((p + m) / 2) * pw(2, p + m + 3) * PI(-(m + p + 2)) * Z(p + m + 3);
    ClosedForm s = sg(m) * F(p) * Q(m + p + 2) / 4 * t;
    if (ev(m)) s += sg(fl(m + 1)) * pw(2, m) * PI(-(m + 1)) * Bt(m + 2);
    if (!ev(m)) s -= sg((m + 1) / 2) * (pw(2, m + 1) - 1) / 4 * W(1, -(m + 1)) * Z(m + 2);
    for (int k = 1; k <= (m + 1) / 2; ++k)
        s += Q(k) * sg(k) * pw(4, k) / (F(m + 1 - 2 * k) * (m + p + 2 - 2 * k)) * PI(-2 * k) * Z(2 * k + 1);
    return s;
}

}  // namespace

ClosedForm rhs_A(int p, const Q& z, Reading, const Plan& plan, std::string& form) {
    form = form_label(plan, z);
    if (!plan.specialized) return A_general(p, z);
    return z == Q(1, 2) ? A_half(p) : A_quarter(p);
}

ClosedForm rhs_B(int m, int p, const Q& z, Reading, const Plan& plan, std::string& form) {
    form = form_label(plan, z);
    if (!plan.specialized) return plan.p_zero ? B_general_p0(m, z) : B_general(m, p, z);
    if (z == Q(1, 2)) return plan.p_zero ? B_half_p0(m) : B_half(m, p);
    return plan.p_zero ? B_quarter_p0(m) : B_quarter(m, p);
}

ClosedForm rhs_C(int m, int p, const Q& z, Reading r, const Plan& plan, std::string& form) {
    form = form_label(plan, z);
    if (!plan.specialized) return plan.p_zero ? C_general_p0(m, z) : C_general(m, p, z);
    if (z == Q(1, 2)) return plan.p_zero ? C_half_p0(m, r != Reading::ALTERNATE) : C_half(m, p);
    return plan.p_zero ? C_quarter_p0(m, r == Reading::AS_PRINTED) : C_quarter(m, p);
}

}  // namespace rzs::families::detail
