#pragma once

#include <compare>
#include <string>
#include <string_view>

#include <mpfr.h>

#include "rzs/numcore/big_rational.hpp"
#include "rzs/numcore/precision.hpp"

namespace rzs {

/// Owning handle on an MPFR float. Each value carries its own precision;
/// binary arithmetic rounds to the wider operand, always to nearest.
class BigReal {
public:
    BigReal();
    explicit BigReal(long bits);
    BigReal(long value, long bits);
    BigReal(double value, long bits);
    BigReal(const BigRational& q, long bits);
    BigReal(long value, const PrecisionContext& ctx) : BigReal(value, ctx.working_bits()) {}
    BigReal(const BigRational& q, const PrecisionContext& ctx) : BigReal(q, ctx.working_bits()) {}

    /// Decimal string to nearest value at the given precision.
    static BigReal parse(std::string_view text, long bits);

    BigReal(const BigReal& o);
    BigReal(BigReal&& o) noexcept;
    BigReal& operator=(const BigReal& o);
    BigReal& operator=(BigReal&& o) noexcept;
    ~BigReal();

    long precision() const { return static_cast<long>(mpfr_get_prec(v_)); }
    /// Copy rounded to another precision.
    BigReal rounded(long bits) const;

    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    bool is_finite() const { return mpfr_number_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    /// Decimal exponent e with 10^e <= |x| < 10^(e+1); undefined for zero.
    long exponent10() const;
    /// log10|x| as a double; -inf for zero.
    double log10_abs() const;

    /// `digits` significant digits, plain notation for moderate magnitudes.
    std::string to_string(int digits) const;
    /// `digits` significant digits, always d.ddd…e±x.
    std::string to_scientific(int digits) const;

    BigReal& operator+=(const BigReal& o);
    BigReal& operator-=(const BigReal& o);
    BigReal& operator*=(const BigReal& o);
    BigReal& operator/=(const BigReal& o);
    BigReal& operator+=(long o);
    BigReal& operator-=(long o);
    BigReal& operator*=(long o);
    BigReal& operator/=(long o);
    BigReal& operator*=(const BigRational& q);
    BigReal& operator+=(const BigRational& q);
    BigReal& operator-=(const BigRational& q);

    BigReal operator-() const;

    friend BigReal operator+(BigReal a, const BigReal& b) { return a += b; }
    friend BigReal operator-(BigReal a, const BigReal& b) { return a -= b; }
    friend BigReal operator*(BigReal a, const BigReal& b) { return a *= b; }
    friend BigReal operator/(BigReal a, const BigReal& b) { return a /= b; }
    friend BigReal operator+(BigReal a, long b) { return a += b; }
    friend BigReal operator-(BigReal a, long b) { return a -= b; }
    friend BigReal operator*(BigReal a, long b) { return a *= b; }
    friend BigReal operator/(BigReal a, long b) { return a /= b; }
    friend BigReal operator*(BigReal a, const BigRational& q) { return a *= q; }
    friend BigReal operator+(BigReal a, const BigRational& q) { return a += q; }
    friend BigReal operator-(BigReal a, const BigRational& q) { return a -= q; }
    friend BigReal operator/(BigReal a, const BigRational& q) { return a *= BigRational(1) / q; }

    friend bool operator==(const BigReal& a, const BigReal& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
    friend std::partial_ordering operator<=>(const BigReal& a, const BigReal& b);
    friend std::partial_ordering operator<=>(const BigReal& a, double b);

    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }

private:
    mpfr_t v_;
};

BigReal abs(const BigReal& x);
BigReal sqrt(const BigReal& x);
BigReal exp(const BigReal& x);
BigReal log(const BigReal& x);
BigReal log10(const BigReal& x);
BigReal sin(const BigReal& x);
BigReal cos(const BigReal& x);
BigReal cot(const BigReal& x);
BigReal cosh(const BigReal& x);
BigReal sinh(const BigReal& x);
BigReal pow(const BigReal& x, long e);
BigReal pow(const BigReal& x, const BigReal& e);
BigReal max(const BigReal& a, const BigReal& b);
/// x * 2^e exactly.
BigReal ldexp(const BigReal& x, long e);

BigReal pi(long bits);
BigReal log2_constant(long bits);
BigReal euler_constant(long bits);
/// 10^e at the given precision.
BigReal pow10(long e, long bits);

}  // namespace rzs
