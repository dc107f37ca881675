#pragma once

#include <optional>
#include <string>

#include "rzs/closedform/closed_form.hpp"
#include "rzs/families/identity.hpp"
#include "rzs/verify/report.hpp"

namespace rzs::verify {

/// T1: int_0^{pi z} x^p cot x dx          T2: int_0^{2 pi z} x^p Cl_m(x) dx
/// T3: int_0^z x^p psi(x) dx              T4: int_0^z x^p psi^(-m)(x) dx
/// D1: int_0^{pi z} x^p int_0^x (x-t)^m t cot t dt dx
/// D2: int_0^z x^p int_0^x (x-t)^m t psi(t) dt dx
enum class Theorem { T1, T2, T3, T4, D1, D2 };

struct IntegralCheck {
    Theorem theorem = Theorem::T1;
    std::optional<int> m;  // T2, T4, D1, D2
    int p = 1;
    BigRational z;
    int quadrature_digits = 12;  // at most 15
    families::Route route = families::Route::AUTO;
};

bool theorem_has_m(Theorem t);
void check_integral_domain(const IntegralCheck& c);

/// Closed form of the theorem statement. At z = 1/2 and 1/4 the AUTO route
/// picks the specialized T1/T2 forms; `form` receives a label.
closedform::ClosedForm integral_rhs(const IntegralCheck& c, std::string* form = nullptr);

/// Tanh-sinh value of the left-hand side: MPFR nodes for T1..T4 with the
/// library's special functions, nested double-precision rules for D1/D2
/// with an independent digamma.
BigReal integral_lhs(const IntegralCheck& c);

/// PASS iff digits >= quadrature_digits - 2.
VerificationReport verify_integral(const IntegralCheck& c);

std::string theorem_name(Theorem t);
Theorem theorem_from_name(const std::string& s);

}  // namespace rzs::verify
