#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace rzs {

using BigInt = mpz_class;

/// Exact rational kept in lowest terms with a positive denominator.
class BigRational {
public:
    BigRational() = default;
    BigRational(long n) : q_(n) {}  // NOLINT(google-explicit-constructor)
    BigRational(long n, long d);
    explicit BigRational(const BigInt& n, const BigInt& d = BigInt(1));
    static BigRational from_mpq(const mpq_class& q) {
        BigRational r;
        r.q_ = q;
        r.q_.canonicalize();
        return r;
    }

    /// Accepts "p", "-p" or "p/q" with q != 0; rejects decimals.
    static BigRational parse(std::string_view text);

    BigInt numerator() const { return q_.get_num(); }
    BigInt denominator() const { return q_.get_den(); }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }
    double to_double() const { return q_.get_d(); }

    /// "p" for integers, "p/q" otherwise.
    std::string to_string() const;

    BigRational& operator+=(const BigRational& o) { q_ += o.q_; return *this; }
    BigRational& operator-=(const BigRational& o) { q_ -= o.q_; return *this; }
    BigRational& operator*=(const BigRational& o) { q_ *= o.q_; return *this; }
    BigRational& operator/=(const BigRational& o);

    friend BigRational operator+(BigRational a, const BigRational& b) { return a += b; }
    friend BigRational operator-(BigRational a, const BigRational& b) { return a -= b; }
    friend BigRational operator*(BigRational a, const BigRational& b) { return a *= b; }
    friend BigRational operator/(BigRational a, const BigRational& b) { return a /= b; }
    BigRational operator-() const { return from_mpq(mpq_class(-q_)); }

    friend bool operator==(const BigRational& a, const BigRational& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const BigRational& a, const BigRational& b) {
        int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    const mpq_class& raw() const { return q_; }

private:
    mpq_class q_;
};

/// Integer power, negative exponents allowed for nonzero bases.
BigRational pow(const BigRational& base, long e);
BigRational abs(const BigRational& q);

}  // namespace rzs
