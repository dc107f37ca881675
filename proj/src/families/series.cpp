#include "rzs/families/series.hpp"

#include <cmath>
#include <stdexcept>

#include "rzs/numcore/errors.hpp"
#include "rzs/specfun/zeta.hpp"

namespace rzs::families {

namespace {

constexpr double kLog10Zeta2 = 0.21611469717632167;  // log10(pi^2 / 6)

long first_zeta_argument(const SeriesSpec& s) {
    switch (s.numerator) {
        case Numerator::ZETA_EVEN: return 2 * s.start_index;
        case Numerator::ZETA_ODD: return 2 * s.start_index + 1;
        case Numerator::ALT_ZETA: return s.start_index;
    }
    return 0;
}

BigInt denominator_at(const SeriesSpec& s, long n) {
    BigInt d = 1;
    for (const auto& f : s.denominator) d *= BigInt(f.a * n + f.b);
    return d;
}

double log10_denominator_at(const SeriesSpec& s, long n) {
    double l = 0;
    for (const auto& f : s.denominator) l += std::log10(static_cast<double>(f.a * n + f.b));
    return l;
}

// zeta(s) with zeta(0) = -1/2.
BigReal zeta_at(long s, const PrecisionContext& ctx) {
    if (s == 0) return BigReal(BigRational(-1, 2), ctx.working_bits());
    return specfun::zeta_int(static_cast<int>(s), ctx);
}

}  // namespace

void SeriesSpec::validate() const {
    if (ratio.sign() <= 0 || ratio >= BigRational(1))
        throw DomainError("series ratio must lie in (0, 1), got " + ratio.to_string());
    if (start_index < 0) throw DomainError("series start index must be non-negative");
    const long first = first_zeta_argument(*this);
    if (first == 1 || (first == 0 && numerator != Numerator::ZETA_EVEN))
        throw DomainError("series would touch the zeta pole or start below its domain");
    for (const auto& f : denominator) {
        if (f.a < 0) throw DomainError("denominator factor slope must be non-negative");
        if (f.a * start_index + f.b <= 0)
            throw DomainError("denominator factor " + std::to_string(f.a) + "n+" + std::to_string(f.b) +
                              " is not positive at the start index");
    }
}

double log10_tail_bound(const SeriesSpec& spec, long next) {
    const double lz = std::log10(spec.ratio.to_double());
    const double lc = kLog10Zeta2 + std::log10(std::fabs(spec.leading_coefficient.to_double()));
    if (spec.numerator == Numerator::ALT_ZETA) return lc + next * lz - log10_denominator_at(spec, next);
    const double lz2 = 2 * lz;
    return lc + next * lz2 - log10_denominator_at(spec, next) - std::log10(1 - std::pow(10.0, lz2));
}

LhsResult lhs_sum_detailed(const SeriesSpec& spec, const PrecisionContext& ctx, double extra_fraction) {
    spec.validate();
    const long bits = ctx.working_bits();
    const BigRational z = spec.ratio;
    const BigRational step = spec.numerator == Numerator::ALT_ZETA ? z : z * z;
    BigRational zpow = pow(z, spec.numerator == Numerator::ALT_ZETA ? spec.start_index : 2 * spec.start_index);
    const double eps = ctx.log10_epsilon();

    long n = spec.start_index;
    long cutoff = -1;
    long last = -1;
    BigReal sum(bits);
    for (;; ++n) {
        if (cutoff < 0 && n > spec.start_index && log10_tail_bound(spec, n) < eps) {
            cutoff = n;
            last = n + static_cast<long>(std::ceil(extra_fraction * static_cast<double>(n - spec.start_index)));
        }
        if (cutoff >= 0 && n >= last) break;
        long s = 0;
        switch (spec.numerator) {
            case Numerator::ZETA_EVEN: s = 2 * n; break;
            case Numerator::ZETA_ODD: s = 2 * n + 1; break;
            case Numerator::ALT_ZETA: s = n; break;
        }
        BigRational w = zpow / BigRational(denominator_at(spec, n));
        if (spec.numerator == Numerator::ALT_ZETA && n % 2 != 0) w = -w;
        sum += zeta_at(s, ctx) * w;
        zpow = zpow * step;
    }
    sum *= spec.leading_coefficient;
    return {sum, n - spec.start_index, log10_tail_bound(spec, n)};
}

BigReal lhs_sum(const SeriesSpec& spec, const PrecisionContext& ctx) { return lhs_sum_detailed(spec, ctx).value; }

std::pair<SeriesSpec, SeriesSpec> split_alternating(const SeriesSpec& spec) {
    if (spec.numerator != Numerator::ALT_ZETA) throw std::invalid_argument("split_alternating needs an ALT_ZETA spec");
    spec.validate();
    SeriesSpec even, odd;
    even.numerator = Numerator::ZETA_EVEN;
    odd.numerator = Numerator::ZETA_ODD;
    even.ratio = odd.ratio = spec.ratio;
    // k = 2n for the even part, k = 2n + 1 for the odd part.
    even.start_index = (spec.start_index + 1) / 2;
    odd.start_index = spec.start_index / 2;
    for (const auto& f : spec.denominator) {
        even.denominator.push_back({2 * f.a, f.b});
        odd.denominator.push_back({2 * f.a, f.a + f.b});
    }
    even.leading_coefficient = spec.leading_coefficient;
    odd.leading_coefficient = spec.leading_coefficient * spec.ratio;
    return {even, odd};
}

std::string describe(const SeriesSpec& spec) {
    std::string s;
    const BigRational& c = spec.leading_coefficient;
    if (c == BigRational(-1))
        s += "-";
    else if (c != BigRational(1))
        s += c.to_string() + "·";
    const std::string idx = spec.numerator == Numerator::ALT_ZETA ? "k" : "n";
    s += "sum_{" + idx + ">=" + std::to_string(spec.start_index) + "} ";
    switch (spec.numerator) {
        case Numerator::ZETA_EVEN: s += "zeta(2n)·z^(2n)"; break;
        case Numerator::ZETA_ODD: s += "zeta(2n+1)·z^(2n)"; break;
        case Numerator::ALT_ZETA: s += "(-1)^k·zeta(k)·z^k"; break;
    }
    if (!spec.denominator.empty()) {
        s += "/(";
        for (const auto& f : spec.denominator) {
            std::string t;
            if (f.a == 0)
                t = std::to_string(f.b);
            else {
                t = (f.a == 1 ? "" : std::to_string(f.a)) + idx;
                if (f.b != 0) t += (f.b > 0 ? "+" : "") + std::to_string(f.b);
            }
            s += spec.denominator.size() == 1 || (f.a == 1 && f.b == 0) ? t : "(" + t + ")";
        }
        s += ")";
    }
    return s + ", z = " + spec.ratio.to_string();
}

std::string numerator_name(Numerator n) {
    switch (n) {
        case Numerator::ZETA_EVEN: return "ZETA_EVEN";
        case Numerator::ZETA_ODD: return "ZETA_ODD";
        case Numerator::ALT_ZETA: return "ALT_ZETA";
    }
    return "?";
}

Numerator numerator_from_name(const std::string& s) {
    if (s == "ZETA_EVEN") return Numerator::ZETA_EVEN;
    if (s == "ZETA_ODD") return Numerator::ZETA_ODD;
    if (s == "ALT_ZETA") return Numerator::ALT_ZETA;
    throw std::invalid_argument("unknown series numerator '" + s + "'");
}

}  // namespace rzs::families
