// Right-hand sides for the zeta(2n+1) families D, E and F.

#include "rhs_common.hpp"

namespace rzs::families::detail {

namespace {

ClosedForm D_general(int p, const Q& z) {
    ClosedForm s = C(Q(-1) / (Q(2) * z * p)) - Gam() / Q(p + 1);
    for (int k = 0; k <= p; ++k) s += F(p) * sg(fl(k + 1)) / F(p - k) * PI(1) * W(z, -(k + 1)) * Cl(k + 1, z);
    if (ev(p)) s -= F(p) * sg(p / 2) * PI(1) * W(z, -(p + 1)) * Z(p + 1);
    for (int k = 0; k <= p; ++k) s -= F(p) * sg(k) / (F(p - k) * pw(z, k + 1)) * Npg(k + 1, z);
    return s;
}

ClosedForm D_half(int p) {
    ClosedForm s = C(Q(-1, p)) - Lg(2) - Gam() / Q(p + 1);
    s -= F(p) * odd_zeta_block(1, p / 2, p);
    if (ev(p)) s -= F(p) * sg(p / 2) * PI(-p) * Z(p + 1);
    for (int k = 0; k <= p; ++k) s -= Q(2) * F(p) * pw(-2, k) / F(p - k) * Npg(k + 1, Q(1, 2));
    return s;
}

// `mixed` pairs the pi prefactor with pi^(2k-1), the rejected interpretation.
ClosedForm D_quarter(int p, bool mixed) {
    ClosedForm s = C(Q(-2, p)) - Lg(2) - Gam() / Q(p + 1);
    s -= F(p) * odd_zeta_block(1, p / 2, p);
    ClosedForm b;
    for (int k = 1; k <= (p + 1) / 2; ++k)
        b += F(p) * pw(-4, k) / F(p + 1 - 2 * k) * PI(-(mixed ? 2 * k - 1 : 2 * k)) * Bt(2 * k);
    s += PI(1) * b;
    if (ev(p)) s -= F(p) * sg(p / 2) * pw(2, p + 1) * PI(-p) * Z(p + 1);
    for (int k = 0; k <= p; ++k) s -= Q(4) * F(p) * pw(-4, k) / F(p - k) * Npg(k + 1, Q(1, 4));
    return s;
}

ClosedForm E_general(int m, int p, const Q& z) {
    ClosedForm s;
    for (int k = 0; k <= p; ++k) s -= F(p) * sg(k) / (F(p - k) * pw(z, m + k + 1)) * Npg(k + m + 1, z);
    ClosedForm t;
    for (int k = m; k <= m + p; ++k) t += sg(fl(k + 1)) / F(p + m - k) * W(z, -k) * Cl(k + 1, z);
    if (ev(p + m)) t -= sg((p + m) / 2) * W(z, -(p + m)) * Z(p + m + 1);
    s += sg(m) * F(p) / (Q(2) * z) * t;
    for (int k = 1; k <= (m - 1) / 2; ++k)
        s -= Q(1) / (Q(2) * z) * sg(k) / (F(m - 1 - 2 * k) * (m + p - 2 * k)) * W(z, -2 * k) * Z(2 * k + 1);
    s += (Lg(Q(2) / z, 1) + C(H(m - 1))) / (Q(2) * z * F(m - 1) * (p + m));
    s += C(Q(1) / (Q(2) * z * F(m - 1) * Q(p + m) * Q(p + m)));
    s -= Gam() / (F(m) * (p + m + 1));
    return s;
}

ClosedForm E_general_p0(int m, const Q& z) {
    ClosedForm s = -(Q(1) / pw(z, m + 1) * Npg(m + 1, z));
    for (int k = 1; k <= (m - 1) / 2; ++k)
        s -= Q(1) / (Q(2) * z) * sg(k) / F(m - 2 * k) * W(z, -2 * k) * Z(2 * k + 1);
    ClosedForm c = Cl(m + 1, z);
    if (ev(m)) c -= Z(m + 1);
    s += sg(fl(m)) / (Q(2) * z) * W(z, -m) * c;
    s += (Lg(Q(2) / z, 1) + C(H(m))) / (Q(2) * z * F(m));
    s -= Gam() / F(m + 1);
    return s;
}

ClosedForm E_half_p0(int m) {
    ClosedForm s = (Lg(4, 1) + C(H(m))) / F(m) - Gam() / F(m + 1);
    if (ev(m)) s -= sg(m / 2) * (pw(2, m + 1) - 1) * W(1, -m) * Z(m + 1);
    for (int k = 1; k <= (m - 1) / 2; ++k) s -= sg(k) / F(m - 2 * k) * PI(-2 * k) * Z(2 * k + 1);
    s -= pw(2, m + 1) * Npg(m + 1, Q(1, 2));
    return s;
}

ClosedForm E_quarter_p0(int m) {
    ClosedForm s = (Q(2) * Lg(8, 1) + C(Q(2) * H(m))) / F(m) - Gam() / F(m + 1);
    if (!ev(m)) s -= sg((m + 1) / 2) * pw(2, m + 1) * PI(-m) * Bt(m + 1);
    if (ev(m)) s -= sg(m / 2) * (pw(2, 2 * m + 1) + pw(2, m) - 1) * W(1, -m) * Z(m + 1);
    for (int k = 1; k <= (m - 1) / 2; ++k) s -= Q(2) * pw(-4, k) / F(m - 2 * k) * PI(-2 * k) * Z(2 * k + 1);
    s -= pw(4, m + 1) * Npg(m + 1, Q(1, 4));
    return s;
}

ClosedForm E_half(int m, int p) {
    ClosedForm s = (Lg(4, 1) + C(H(m - 1))) / (F(m - 1) * (m + p));
    s += C(Q(1) / (F(m - 1) * Q(m + p) * Q(m + p)));
    s -= Gam() / (F(m) * (m + p + 1));
    s -= sg(m) * F(p) * odd_zeta_block((m + 1) / 2, (p + m) / 2, p + m);
    if (ev(p + m)) s += sg(m + 1) * F(p) * sg((p + m) / 2) * PI(-(p + m)) * Z(p + m + 1);
    for (int k = 0; k <= p; ++k) s -= pw(2, m + 1) * F(p) * pw(-2, k) / F(p - k) * Npg(k + m + 1, Q(1, 2));
    for (int k = 1; k <= (m - 1) / 2; ++k)
        s -= sg(k) / (F(m - 1 - 2 * k) * (m + p - 2 * k)) * PI(-2 * k) * Z(2 * k + 1);
    return s;
}

ClosedForm E_quarter(int m, int p) {
    ClosedForm s = Q(2) / F(m - 1) * ((Lg(8, 1) + C(H(m - 1))) / Q(m + p) + C(Q(1) / (Q(m + p) * Q(m + p))));
    for (int k = (m + 2) / 2; k <= (p + m + 1) / 2; ++k)
        s += F(p) * sg(m + k) * pw(4, k) / F(p + m + 1 - 2 * k) * PI(-(2 * k - 1)) * Bt(2 * k);
    for (int k = (m + 1) / 2; k <= (p + m) / 2; ++k)
        s -= F(p) * sg(k + m) * (pw(4, k) - 1) / F(p + m - 2 * k) * W(1, -2 * k) * Z(2 * k + 1);
    if (ev(p + m)) s -= F(p) * sg(m) * sg((p + m) / 2) * pw(2, p + m + 1) * PI(-(p + m)) * Z(p + m + 1);
    s -= Gam() / (F(m) * (m + p + 1));
    for (int k = 1; k <= (m - 1) / 2; ++k)
        s -= Q(2) * pw(-4, k) / (F(m - 1 - 2 * k) * (m + p - 2 * k)) * PI(-2 * k) * Z(2 * k + 1);
    for (int k = 0; k <= p; ++k) s -= pw(4, m + 1) * F(p) * pw(-4, k) / F(p - k) * Npg(k + m + 1, Q(1, 4));
    return s;
}

// `scaled` uses the pi z prefactor on the Clausen sum instead of pi.
ClosedForm F_general(int m, int p, const Q& z, bool scaled) {
    const Q c = scaled ? z : Q(1);
    ClosedForm t;
    for (int k = m + 3; k <= p + m + 3; ++k)
        t += sg(m + 1) * F(p) * c * sg(fl(k)) / F(p + m + 3 - k) * PI(1) * W(z, -k) * Cl(k, z);
    if (ev(p + m)) t -= F(p) * sg((p + m) / 2) * sg(m) / (Q(2) * z) * W(z, -(m + p + 2)) * Z(p + m + 3);
    for (int k = 0; k <= p; ++k) t += F(p) * sg(k) / (F(p - k) * pw(z, k + m + 3)) * Npg(k + m + 3, z);
    ClosedForm s = Q(p + m + 2) * t;
    s -= Gam() / (F(m + 2) * (p + m + 3));
    s -= C(Q(1) / (Q(2) * z * F(m + 1) * (p + m + 2)));
    s += sg(fl(m + 1)) / (Q(2) * z) * W(z, -(m + 1)) * Cl(m + 2, z);
    s -= Q(1) / pw(z, m + 2) * Npg(m + 2, z);
    for (int k = 1; k <= (m + 1) / 2; ++k)
        s += Q(k) * sg(k) / (z * F(m + 1 - 2 * k) * (m + p + 2 - 2 * k)) * W(z, -2 * k) * Z(2 * k + 1);
    return s;
}

ClosedForm F_general_p0(int m, const Q& z) {
    ClosedForm s = sg(fl(m + 1)) / (Q(2) * z) * W(z, -(m + 1)) * Cl(m + 2, z);
    ClosedForm c = Cl(m + 3, z);
    if (ev(m)) c -= Z(m + 3);
    s += sg(fl(m)) * Q(m + 2) / (Q(2) * z) * W(z, -(m + 2)) * c;
    for (int k = 1; k <= (m + 1) / 2; ++k) s += Q(k) * sg(k) / (z * F(m + 2 - 2 * k)) * W(z, -2 * k) * Z(2 * k + 1);
    s -= (Q(2) * z * Gam() + C(Q(m + 3))) / (Q(2) * z * F(m + 3));
    s -= (z * Npg(m + 2, z) - Q(m + 2) * Npg(m + 3, z)) / pw(z, m + 3);
    return s;
}

ClosedForm F_half_p0(int m) {
    const Q h(1, 2);
    ClosedForm s;
    if (!ev(m)) s -= sg((m + 1) / 2) * (pw(2, m + 1) - 1) * W(1, -(m + 1)) * Z(m + 2);
    if (ev(m)) s -= sg(m / 2) * (pw(2, m + 3) - 1) * Q(m + 2) * W(1, -(m + 2)) * Z(m + 3);
    for (int k = 1; k <= (m + 1) / 2; ++k) s += Q(2 * k) * sg(k) / F(m + 2 - 2 * k) * PI(-2 * k) * Z(2 * k + 1);
    s -= pw(2, m + 2) * Npg(m + 2, h);
    s += Q(m + 2) * pw(2, m + 3) * Npg(m + 3, h);
    s -= Gam() / F(m + 3);
    s -= C(Q(1) / F(m + 2));
    return s;
}

ClosedForm F_quarter_p0(int m) {
    const Q q(1, 4);
    ClosedForm inner;
    if (!ev(m)) inner += pw(2, m + 3) * PI(-(m + 2)) * Bt(m + 3);
    if (ev(m)) inner -= (pw(2, 2 * m + 5) + pw(2, m + 2) - 1) * W(1, -(m + 2)) * Z(m + 3);
    ClosedForm s = Q(m + 2) * (pw(4, m + 3) * Npg(m + 3, q) + sg(fl(m)) * inner);
    ClosedForm second;
    if (ev(m)) second += pw(2, m + 2) * PI(-(m + 1)) * Bt(m + 2);
    if (!ev(m)) second -= (pw(2, m + 1) - 1) * W(1, -(m + 1)) * Z(m + 2);
    s += sg(fl(m + 1)) * second;
    s -= pw(4, m + 2) * Npg(m + 2, q);
    for (int k = 1; k <= (m + 1) / 2; ++k)
        s += Q(4) * Q(k) * pw(-4, k) / F(m + 2 - 2 * k) * PI(-2 * k) * Z(2 * k + 1);
    s -= Gam() / F(m + 3);
    s -= C(Q(2) / F(m + 2));
    return s;
}

ClosedForm F_half(int m, int p) {
    const Q h(1, 2);
    ClosedForm t = odd_zeta_block((m + 3) / 2, (p + m + 2) / 2, p + m + 2);
    if (ev(p + m)) t -= sg((p + m) / 2) * PI(-(m + p + 2)) * Z(p + m + 3);
    for (int k = 0; k <= p; ++k) t += Q(8) * pw(-2, m) * pw(-2, k) / F(p - k) * Npg(k + m + 3, h);
    ClosedForm s = sg(m) * F(p) * Q(m + p + 2) * t;
    if (!ev(m)) s -= sg((m + 1) / 2) * (pw(2, m + 1) - 1) * W(1, -(m + 1)) * Z(m + 2);
    s -= pw(2, m + 2) * Npg(m + 2, h);
    for (int k = 1; k <= (m + 1) / 2; ++k)
        s += Q(2 * k) * sg(k) / (F(m + 1 - 2 * k) * (m + p + 2 - 2 * k)) * PI(-2 * k) * Z(2 * k + 1);
    s -= Gam() / (F(m + 2) * (p + m + 3));
    s -= C(Q(1) / (F(m + 1) * (p + m + 2)));
    return s;
}

ClosedForm F_quarter(int m, int p) {
    const Q q(1, 4);
    ClosedForm t = odd_zeta_block((m + 3) / 2, (p + m + 2) / 2, p + m + 2);
    for (int k = (m + 4) / 2; k <= (p + m + 3) / 2; ++k)
        t -= sg(k) * pw(4, k) / F(p + m + 3 - 2 * k) * PI(-(2 * k - 1)) * Bt(2 * k);
    for (int k = 0; k <= p; ++k) t += Q(64) * pw(-4, m) * pw(-4, k) / F(p - k) * Npg(k + m + 3, q);
    if (ev(p + m)) t -= sg((p + m) / 2) * pw(2, p + m + 3) * PI(-(m + p + 2)) * Z(p + m + 3);
    ClosedForm s = sg(m) * F(p) * Q(m + p + 2) * t;
    s -= pw(4, m + 2) * Npg(m + 2, q);
    if (ev(m)) s += sg(fl(m + 1)) * pw(2, m + 2) * PI(-(m + 1)) * Bt(m + 2);
    s -= Gam() / (F(m + 2) * (p + m + 3));
    s -= C(Q(2) / (F(m + 1) * (p + m + 2)));
    if (!ev(m)) s -= sg((m + 1) / 2) * (pw(2, m + 1) - 1) * W(1, -(m + 1)) * Z(m + 2);
    for (int k = 1; k <= (m + 1) / 2; ++k)
        s += Q(k) * sg(k) * pw(4, k + 1) / (F(m + 1 - 2 * k) * (m + p + 2 - 2 * k)) * PI(-2 * k) * Z(2 * k + 1);
    return s;
}

}  // namespace

ClosedForm rhs_D(int p, const Q& z, Reading r, const Plan& plan, std::string& form) {
    form = form_label(plan, z);
    if (!plan.specialized) return D_general(p, z);
    return z == Q(1, 2) ? D_half(p) : D_quarter(p, r == Reading::ALTERNATE);
}

ClosedForm rhs_E(int m, int p, const Q& z, Reading, const Plan& plan, std::string& form) {
    form = form_label(plan, z);
    if (!plan.specialized) return plan.p_zero ? E_general_p0(m, z) : E_general(m, p, z);
    if (z == Q(1, 2)) return plan.p_zero ? E_half_p0(m) : E_half(m, p);
    return plan.p_zero ? E_quarter_p0(m) : E_quarter(m, p);
}

ClosedForm rhs_F(int m, int p, const Q& z, Reading r, const Plan& plan, std::string& form) {
    form = form_label(plan, z);
    if (!plan.specialized) return plan.p_zero ? F_general_p0(m, z) : F_general(m, p, z, r == Reading::ALTERNATE);
    if (z == Q(1, 2)) return plan.p_zero ? F_half_p0(m) : F_half(m, p);
    return plan.p_zero ? F_quarter_p0(m) : F_quarter(m, p);
}

}  // namespace rzs::families::detail
