// Right-hand sides for the alternating (-1)^k zeta(k) families X1 and X2.

#include "rhs_common.hpp"

namespace rzs::families::detail {

namespace {

ClosedForm X1_general(int m, int p, const Q& z) {
    ClosedForm s = z / (F(m) * (m + p + 1)) * Gam();
    s += (Lg(z) - C(H(m - 1))) / (F(m - 1) * (m + p));
    s -= C(Q(1) / (F(m - 1) * Q(m + p) * Q(m + p)));
    for (int k = 0; k <= p; ++k) s += F(p) * sg(k) / (F(p - k) * pw(z, m + k)) * Npg(k + m + 1, z);
    return s;
}

ClosedForm X1_p0(int m, const Q& z) {
    return z / F(m + 1) * Gam() + (Lg(z) - C(H(m))) / F(m) + Q(1) / pw(z, m) * Npg(m + 1, z);
}

ClosedForm X2_general(int m, int p, const Q& z) {
    ClosedForm s = z / (F(m + 2) * (p + m + 3)) * Gam();
    s += C(Q(1) / (F(m + 1) * (p + m + 2)));
    s += Q(1) / pw(z, m + 1) * Npg(m + 2, z);
    for (int k = 0; k <= p; ++k)
        s -= Q(m + p + 2) * F(p) * sg(k) / (F(p - k) * pw(z, k + m + 2)) * Npg(k + m + 3, z);
    return s;
}

ClosedForm X2_p0(int m, const Q& z) {
    ClosedForm s = (z * Gam() + C(Q(m + 3))) / F(m + 3);
    s += Q(1) / pw(z, m + 1) * Npg(m + 2, z);
    s -= Q(m + 2) / pw(z, m + 2) * Npg(m + 3, z);
    return s;
}

}  // namespace

ClosedForm rhs_X1(int m, int p, const Q& z, const Plan& plan, std::string& form) {
    form = form_label(plan, z);
    return plan.p_zero ? X1_p0(m, z) : X1_general(m, p, z);
}

ClosedForm rhs_X2(int m, int p, const Q& z, const Plan& plan, std::string& form) {
    form = form_label(plan, z);
    return plan.p_zero ? X2_p0(m, z) : X2_general(m, p, z);
}

}  // namespace rzs::families::detail
