#include "rzs/numcore/big_rational.hpp"

#include <cctype>

#include "rzs/numcore/errors.hpp"

namespace rzs {

namespace {

BigInt parse_integer(std::string_view s, std::string_view whole) {
    std::size_t i = 0;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    if (i == s.size()) throw std::invalid_argument("malformed rational: '" + std::string(whole) + "'");
    for (std::size_t j = i; j < s.size(); ++j) {
        if (!std::isdigit(static_cast<unsigned char>(s[j])))
            throw std::invalid_argument("malformed rational: '" + std::string(whole) + "'");
    }
    std::string digits(s[0] == '+' ? s.substr(1) : s);
    return BigInt(digits, 10);
}

}  // namespace

BigRational::BigRational(long n, long d) {
    if (d == 0) throw DomainError("rational with zero denominator");
    q_ = mpq_class(n, d);
    q_.canonicalize();
}

BigRational::BigRational(const BigInt& n, const BigInt& d) {
    if (d == 0) throw DomainError("rational with zero denominator");
    q_ = mpq_class(n, d);
    q_.canonicalize();
}

BigRational BigRational::parse(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return BigRational(parse_integer(text, text));
    BigInt n = parse_integer(text.substr(0, slash), text);
    std::string_view den = text.substr(slash + 1);
    if (!den.empty() && (den[0] == '-' || den[0] == '+'))
        throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
    BigInt d = parse_integer(den, text);
    if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    return BigRational(n, d);
}

std::string BigRational::to_string() const {
    if (is_integer()) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

BigRational& BigRational::operator/=(const BigRational& o) {
    if (o.is_zero()) throw DomainError("rational division by zero");
    q_ /= o.q_;
    return *this;
}

BigRational pow(const BigRational& base, long e) {
    if (e < 0) {
        if (base.is_zero()) throw DomainError("zero to a negative power");
        return BigRational(1) / pow(base, -e);
    }
    BigInt n, d;
    mpz_pow_ui(n.get_mpz_t(), base.numerator().get_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(d.get_mpz_t(), base.denominator().get_mpz_t(), static_cast<unsigned long>(e));
    return BigRational(n, d);
}

BigRational abs(const BigRational& q) { return q.sign() < 0 ? -q : q; }

}  // namespace rzs
