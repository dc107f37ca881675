#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rzs/numcore/big_rational.hpp"
#include "rzs/numcore/big_real.hpp"
#include "rzs/numcore/precision.hpp"

namespace rzs::families {

/// zeta(2n) z^(2n), zeta(2n+1) z^(2n), or (-1)^k zeta(k) z^k.
enum class Numerator { ZETA_EVEN, ZETA_ODD, ALT_ZETA };

/// a n + b.
struct LinearFactor {
    long a;
    long b;
    friend bool operator==(const LinearFactor&, const LinearFactor&) = default;
};

/// leading_coefficient * sum_{n >= start_index} numerator(n) / prod(a n + b).
struct SeriesSpec {
    Numerator numerator = Numerator::ZETA_EVEN;
    long start_index = 0;
    std::vector<LinearFactor> denominator;
    BigRational ratio;
    BigRational leading_coefficient{1};

    /// Throws DomainError unless 0 < ratio < 1, every factor is positive
    /// (hence non-vanishing and non-decreasing) from start_index on, and the
    /// first zeta argument is at least 2 (0 allowed for ZETA_EVEN).
    void validate() const;

    friend bool operator==(const SeriesSpec&, const SeriesSpec&) = default;
};

struct LhsResult {
    BigReal value;
    long terms;             // indices summed
    double log10_tail;      // certified bound on the omitted remainder
};

/// Direct summation until the tail bound drops below 10^-(target+guard).
/// `extra_fraction` adds that fraction of additional terms past the cutoff.
LhsResult lhs_sum_detailed(const SeriesSpec& spec, const PrecisionContext& ctx, double extra_fraction = 0.0);
BigReal lhs_sum(const SeriesSpec& spec, const PrecisionContext& ctx);

/// log10 of the remainder bound after summing indices below `next_index`.
double log10_tail_bound(const SeriesSpec& spec, long next_index);

/// Even-k and odd-k parts of an ALT_ZETA series as ZETA_EVEN / ZETA_ODD
/// specs with lhs = even - odd.
std::pair<SeriesSpec, SeriesSpec> split_alternating(const SeriesSpec& spec);

/// Plain-text rendering such as "sum_{n>=1} zeta(2n)/(n(2n+1)·4^n)".
std::string describe(const SeriesSpec& spec);

std::string numerator_name(Numerator n);
Numerator numerator_from_name(const std::string& s);

}  // namespace rzs::families
