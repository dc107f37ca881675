#pragma once

// Shorthands shared by the family RHS generators. Every coefficient is an
// exact rational; W(z, k) stands for (2 pi z)^k.

#include <optional>
#include <string>

#include "rzs/closedform/closed_form.hpp"
#include "rzs/families/identity.hpp"
#include "rzs/numcore/combinatorics.hpp"

namespace rzs::families::detail {

using closedform::ClosedForm;
using Q = BigRational;

inline Q F(long n) { return Q(numcore::factorial(static_cast<int>(n))); }
inline Q sg(long e) { return Q(numcore::sign_pow(e)); }
inline long fl(long x) { return numcore::floor_div(x, 2); }
inline bool ev(long n) { return n % 2 == 0; }
inline Q pw(const Q& b, long e) { return pow(b, e); }
inline Q H(long n) { return numcore::harmonic(static_cast<int>(n)); }

inline ClosedForm PI(int k) { return closedform::pi_pow(k); }
inline ClosedForm W(const Q& z, int k) { return pw(Q(2) * z, k) * closedform::pi_pow(k); }
inline ClosedForm Z(int j) { return closedform::zeta_value(j); }
inline ClosedForm Bt(int j) { return closedform::beta_value(j); }
/// Cl_k(2 pi z).
inline ClosedForm Cl(int k, const Q& z) { return closedform::clausen_value(k, Q(2) * z); }
inline ClosedForm Npg(int m, const Q& z) { return closedform::negapolygamma_value(m, z); }
inline ClosedForm Gam() { return ClosedForm(closedform::Atom::euler_gamma()); }
/// log(r pi^k).
inline ClosedForm Lg(const Q& r, int k = 0) { return closedform::log_value(r, k); }
inline ClosedForm C(const Q& q) { return ClosedForm(q); }

/// sum_{k=lo}^{hi} (-1)^k (4^k - 1) zeta(2k+1) / ((top - 2k)! (2 pi)^(2k)).
inline ClosedForm odd_zeta_block(long lo, long hi, long top) {
    ClosedForm s;
    for (long k = lo; k <= hi; ++k)
        s += sg(k) * (pw(4, k) - 1) / F(top - 2 * k) * W(1, -2 * k) * Z(2 * k + 1);
    return s;
}

/// Resolved choice of construction for one instance.
struct Plan {
    bool specialized = false;
    bool p_zero = false;
};

// Per-file generators. `m` is ignored by A and D.
ClosedForm rhs_A(int p, const Q& z, Reading r, const Plan& plan, std::string& form);
ClosedForm rhs_B(int m, int p, const Q& z, Reading r, const Plan& plan, std::string& form);
ClosedForm rhs_C(int m, int p, const Q& z, Reading r, const Plan& plan, std::string& form);
ClosedForm rhs_D(int p, const Q& z, Reading r, const Plan& plan, std::string& form);
ClosedForm rhs_E(int m, int p, const Q& z, Reading r, const Plan& plan, std::string& form);
ClosedForm rhs_F(int m, int p, const Q& z, Reading r, const Plan& plan, std::string& form);
ClosedForm rhs_X1(int m, int p, const Q& z, const Plan& plan, std::string& form);
ClosedForm rhs_X2(int m, int p, const Q& z, const Plan& plan, std::string& form);

/// "general z", "z=1/2, p=0" and so on.
std::string form_label(const Plan& plan, const Q& z);

}  // namespace rzs::families::detail
