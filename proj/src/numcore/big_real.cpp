#include "rzs/numcore/big_real.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <stdexcept>

#include "rzs/numcore/errors.hpp"

namespace rzs {

namespace {

constexpr long kDefaultBits = 64;

void widen_to(mpfr_ptr v, long bits) {
    if (mpfr_get_prec(v) < bits) mpfr_prec_round(v, bits, MPFR_RNDN);
}

template <class Op>
BigReal unary(const BigReal& x, Op op) {
    BigReal r(x.precision());
    op(r.raw(), x.raw(), MPFR_RNDN);
    return r;
}

struct MpfrString {
    char* p = nullptr;
    ~MpfrString() { if (p) mpfr_free_str(p); }
};

}  // namespace

BigReal::BigReal() { mpfr_init2(v_, kDefaultBits); mpfr_set_zero(v_, 1); }

BigReal::BigReal(long bits) {
    mpfr_init2(v_, std::max<long>(bits, MPFR_PREC_MIN));
    mpfr_set_zero(v_, 1);
}

BigReal::BigReal(long value, long bits) : BigReal(bits) { mpfr_set_si(v_, value, MPFR_RNDN); }

BigReal::BigReal(double value, long bits) : BigReal(bits) { mpfr_set_d(v_, value, MPFR_RNDN); }

BigReal::BigReal(const BigRational& q, long bits) : BigReal(bits) {
    mpfr_set_q(v_, q.raw().get_mpq_t(), MPFR_RNDN);
}

BigReal BigReal::parse(std::string_view text, long bits) {
    BigReal r(bits);
    std::string s(text);
    if (mpfr_set_str(r.v_, s.c_str(), 10, MPFR_RNDN) != 0 && !r.is_finite())
        throw std::invalid_argument("malformed decimal: '" + s + "'");
    return r;
}

BigReal::BigReal(const BigReal& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
}

BigReal::BigReal(BigReal&& o) noexcept {
    mpfr_init2(v_, MPFR_PREC_MIN);
    mpfr_swap(v_, o.v_);
}

BigReal& BigReal::operator=(const BigReal& o) {
    if (this != &o) {
        mpfr_set_prec(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
}

BigReal& BigReal::operator=(BigReal&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
}

BigReal::~BigReal() { mpfr_clear(v_); }

BigReal BigReal::rounded(long bits) const {
    BigReal r(bits);
    mpfr_set(r.v_, v_, MPFR_RNDN);
    return r;
}

long BigReal::exponent10() const {
    if (is_zero()) throw DomainError("exponent10 of zero");
    MpfrString s;
    mpfr_exp_t e = 0;
    s.p = mpfr_get_str(nullptr, &e, 10, 2, v_, MPFR_RNDZ);
    return static_cast<long>(e) - 1;
}

double BigReal::log10_abs() const {
    if (is_zero()) return -std::numeric_limits<double>::infinity();
    long e2 = 0;
    double m = mpfr_get_d_2exp(&e2, v_, MPFR_RNDN);
    return std::log10(std::fabs(m)) + static_cast<double>(e2) * std::log10(2.0);
}

std::string BigReal::to_scientific(int digits) const {
    if (!is_finite()) return mpfr_nan_p(v_) ? "nan" : (sign() < 0 ? "-inf" : "inf");
    digits = std::max(digits, 1);
    if (is_zero()) return "0";
    MpfrString s;
    mpfr_exp_t e = 0;
    s.p = mpfr_get_str(nullptr, &e, 10, static_cast<std::size_t>(digits), v_, MPFR_RNDN);
    std::string m(s.p);
    std::string sign;
    if (m[0] == '-') { sign = "-"; m.erase(0, 1); }
    std::string out = sign + m.substr(0, 1);
    if (m.size() > 1) out += "." + m.substr(1);
    out += "e" + std::to_string(static_cast<long>(e) - 1);
    return out;
}

std::string BigReal::to_string(int digits) const {
    if (!is_finite()) return to_scientific(digits);
    digits = std::max(digits, 1);
    if (is_zero()) return "0";
    MpfrString s;
    mpfr_exp_t e = 0;
    s.p = mpfr_get_str(nullptr, &e, 10, static_cast<std::size_t>(digits), v_, MPFR_RNDN);
    std::string m(s.p);
    std::string sign;
    if (m[0] == '-') { sign = "-"; m.erase(0, 1); }
    long ex = static_cast<long>(e);
    if (ex < -6 || ex > 30) return to_scientific(digits);
    std::string out;
    if (ex <= 0) {
        out = "0." + std::string(static_cast<std::size_t>(-ex), '0') + m;
    } else if (ex >= static_cast<long>(m.size())) {
        out = m + std::string(static_cast<std::size_t>(ex) - m.size(), '0');
    } else {
        out = m.substr(0, static_cast<std::size_t>(ex)) + "." + m.substr(static_cast<std::size_t>(ex));
    }
    return sign + out;
}

#define RZS_BINARY_OP(OPNAME, FN)                              \
    BigReal& BigReal::OPNAME(const BigReal& o) {               \
        widen_to(v_, mpfr_get_prec(o.v_));                     \
        FN(v_, v_, o.v_, MPFR_RNDN);                           \
        return *this;                                          \
    }
RZS_BINARY_OP(operator+=, mpfr_add)
RZS_BINARY_OP(operator-=, mpfr_sub)
RZS_BINARY_OP(operator*=, mpfr_mul)
RZS_BINARY_OP(operator/=, mpfr_div)
#undef RZS_BINARY_OP

BigReal& BigReal::operator+=(long o) { mpfr_add_si(v_, v_, o, MPFR_RNDN); return *this; }
BigReal& BigReal::operator-=(long o) { mpfr_sub_si(v_, v_, o, MPFR_RNDN); return *this; }
BigReal& BigReal::operator*=(long o) { mpfr_mul_si(v_, v_, o, MPFR_RNDN); return *this; }
BigReal& BigReal::operator/=(long o) {
    if (o == 0) throw DomainError("division by zero");
    mpfr_div_si(v_, v_, o, MPFR_RNDN);
    return *this;
}
BigReal& BigReal::operator*=(const BigRational& q) {
    mpfr_mul_q(v_, v_, q.raw().get_mpq_t(), MPFR_RNDN);
    return *this;
}
BigReal& BigReal::operator+=(const BigRational& q) {
    mpfr_add_q(v_, v_, q.raw().get_mpq_t(), MPFR_RNDN);
    return *this;
}

BigReal& BigReal::operator-=(const BigRational& q) {
    mpfr_sub_q(v_, v_, q.raw().get_mpq_t(), MPFR_RNDN);
    return *this;
}

BigReal BigReal::operator-() const { return unary(*this, mpfr_neg); }

std::partial_ordering operator<=>(const BigReal& a, const BigReal& b) {
    if (mpfr_unordered_p(a.v_, b.v_)) return std::partial_ordering::unordered;
    int c = mpfr_cmp(a.v_, b.v_);
    return c < 0 ? std::partial_ordering::less
                 : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

std::partial_ordering operator<=>(const BigReal& a, double b) {
    if (mpfr_nan_p(a.v_) || std::isnan(b)) return std::partial_ordering::unordered;
    int c = mpfr_cmp_d(a.v_, b);
    return c < 0 ? std::partial_ordering::less
                 : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

BigReal abs(const BigReal& x) { return unary(x, mpfr_abs); }
BigReal sqrt(const BigReal& x) {
    if (x.sign() < 0) throw DomainError("sqrt of a negative number");
    return unary(x, mpfr_sqrt);
}
BigReal exp(const BigReal& x) { return unary(x, mpfr_exp); }
BigReal log(const BigReal& x) {
    if (x.sign() <= 0) throw DomainError("log of a non-positive number");
    return unary(x, mpfr_log);
}
BigReal log10(const BigReal& x) {
    if (x.sign() <= 0) throw DomainError("log10 of a non-positive number");
    return unary(x, mpfr_log10);
}
BigReal sin(const BigReal& x) { return unary(x, mpfr_sin); }
BigReal cos(const BigReal& x) { return unary(x, mpfr_cos); }
BigReal cot(const BigReal& x) {
    if (x.is_zero()) throw DomainError("cot pole at zero");
    return unary(x, mpfr_cot);
}
BigReal cosh(const BigReal& x) { return unary(x, mpfr_cosh); }
BigReal sinh(const BigReal& x) { return unary(x, mpfr_sinh); }

BigReal pow(const BigReal& x, long e) {
    if (x.is_zero() && e < 0) throw DomainError("zero to a negative power");
    BigReal r(x.precision());
    mpfr_pow_si(r.raw(), x.raw(), e, MPFR_RNDN);
    return r;
}

BigReal pow(const BigReal& x, const BigReal& e) {
    BigReal r(std::max(x.precision(), e.precision()));
    mpfr_pow(r.raw(), x.raw(), e.raw(), MPFR_RNDN);
    return r;
}

BigReal max(const BigReal& a, const BigReal& b) { return (a < b) ? b : a; }

BigReal ldexp(const BigReal& x, long e) {
    BigReal r(x);
    mpfr_mul_2si(r.raw(), r.raw(), e, MPFR_RNDN);
    return r;
}

BigReal pi(long bits) {
    BigReal r(bits);
    mpfr_const_pi(r.raw(), MPFR_RNDN);
    return r;
}

BigReal log2_constant(long bits) {
    BigReal r(bits);
    mpfr_const_log2(r.raw(), MPFR_RNDN);
    return r;
}

BigReal euler_constant(long bits) {
    BigReal r(bits);
    mpfr_const_euler(r.raw(), MPFR_RNDN);
    return r;
}

BigReal pow10(long e, long bits) {
    BigReal r(bits);
    mpfr_ui_pow_ui(r.raw(), 10, static_cast<unsigned long>(e < 0 ? -e : e), MPFR_RNDN);
    if (e < 0) mpfr_ui_div(r.raw(), 1, r.raw(), MPFR_RNDN);
    return r;
}

}  // namespace rzs
