#pragma once

#include <optional>

namespace rzs {

/// Target digits the caller wants certified, plus guard digits of headroom.
/// Immutable once built; every numeric operation takes one by const reference.
class PrecisionContext {
public:
    static constexpr int kMinGuardDigits = 20;

    explicit PrecisionContext(int target_digits, std::optional<int> guard_digits = std::nullopt);

    int target_digits() const { return target_; }
    int guard_digits() const { return guard_; }
    /// target + guard, in decimal digits.
    int working_digits() const { return target_ + guard_; }
    /// Binary precision handed to MPFR.
    long working_bits() const { return bits_; }

    /// 10^-(target+guard): the truncation threshold for series and tails.
    double log10_epsilon() const { return -static_cast<double>(working_digits()); }

    /// Same target with twice the working precision (certification by recompute).
    PrecisionContext doubled() const;

    static int default_guard(int target_digits);

private:
    int target_;
    int guard_;
    long bits_;
};

}  // namespace rzs
