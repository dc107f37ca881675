#pragma once

#include <map>
#include <set>
#include <utility>
#include <vector>

#include "rzs/closedform/atom.hpp"
#include "rzs/numcore/big_rational.hpp"

namespace rzs::closedform {

/// Product of atom powers, sorted by atom, no zero exponents. Empty = 1.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(const Atom& a, int exp = 1);

    const std::vector<std::pair<Atom, int>>& factors() const { return factors_; }
    bool is_unit() const { return factors_.empty(); }
    int exponent_of(const Atom& a) const;

    friend Monomial operator*(const Monomial& a, const Monomial& b);
    friend bool operator==(const Monomial&, const Monomial&) = default;
    friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);

    /// Builds from arbitrary factors, merging duplicates and dropping zeros.
    static Monomial from_factors(std::vector<std::pair<Atom, int>> factors);

private:
    std::vector<std::pair<Atom, int>> factors_;
};

/// Exact rational combination of monomials. Zero coefficients are never
/// stored, so structural equality is exact equality of the representation.
class ClosedForm {
public:
    using Terms = std::map<Monomial, BigRational>;

    ClosedForm() = default;
    ClosedForm(const BigRational& c);  // NOLINT(google-explicit-constructor)
    ClosedForm(long c) : ClosedForm(BigRational(c)) {}  // NOLINT(google-explicit-constructor)
    ClosedForm(const Atom& a, int exp = 1);  // NOLINT(google-explicit-constructor)

    static ClosedForm term(const Monomial& m, const BigRational& c);

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    /// Coefficient of m, zero when absent.
    BigRational coefficient(const Monomial& m) const;
    std::set<Atom> atoms() const;

    void add_term(const Monomial& m, const BigRational& c);

    ClosedForm& operator+=(const ClosedForm& o);
    ClosedForm& operator-=(const ClosedForm& o);
    ClosedForm& operator*=(const BigRational& q);
    ClosedForm& operator*=(const ClosedForm& o);

    friend ClosedForm operator+(ClosedForm a, const ClosedForm& b) { return a += b; }
    friend ClosedForm operator-(ClosedForm a, const ClosedForm& b) { return a -= b; }
    friend ClosedForm operator*(ClosedForm a, const BigRational& q) { return a *= q; }
    friend ClosedForm operator*(const BigRational& q, ClosedForm a) { return a *= q; }
    friend ClosedForm operator*(ClosedForm a, const ClosedForm& b) { return a *= b; }
    friend ClosedForm operator/(ClosedForm a, const BigRational& q) { return a *= BigRational(1) / q; }
    ClosedForm operator-() const { return *this * BigRational(-1); }

    friend bool operator==(const ClosedForm&, const ClosedForm&) = default;

private:
    Terms terms_;
};

ClosedForm add(const ClosedForm& a, const ClosedForm& b);
ClosedForm scale(const ClosedForm& a, const BigRational& q);

/// Rewrites linear LOG_OF(2^e r' pi^k) factors into e LOG2 + k LOG_PI + LOG_OF(r').
ClosedForm normalize_logs(const ClosedForm& x);

/// Rewrites linear CLAUSEN atoms at theta = pi and pi/2 into their zeta,
/// beta and log 2 values.
ClosedForm reduce_special_values(const ClosedForm& x);

/// normalize_logs then reduce_special_values; idempotent.
ClosedForm canonicalize(const ClosedForm& x);

// Builders used by the identity generators.
ClosedForm pi_pow(int k);
ClosedForm zeta_value(int j);  // j = 0 gives -1/2
ClosedForm beta_value(int j);
ClosedForm clausen_value(int m, const BigRational& theta_over_pi);
ClosedForm negapolygamma_value(int m, const BigRational& z);
ClosedForm log_value(const BigRational& r, int pi_power = 0);

}  // namespace rzs::closedform
