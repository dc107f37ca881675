#include "rzs/numcore/precision.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace rzs {

int PrecisionContext::default_guard(int target_digits) {
    return kMinGuardDigits + (target_digits + 9) / 10;
}

PrecisionContext::PrecisionContext(int target_digits, std::optional<int> guard_digits)
    : target_(target_digits), guard_(guard_digits.value_or(default_guard(target_digits))) {
    if (target_ < 1) throw std::invalid_argument("target_digits must be positive");
    if (guard_ < kMinGuardDigits)
        throw std::invalid_argument("guard_digits must be at least " + std::to_string(kMinGuardDigits));
    bits_ = static_cast<long>(std::ceil(working_digits() * std::log2(10.0)));
}

PrecisionContext PrecisionContext::doubled() const {
    return PrecisionContext(target_, target_ + 2 * guard_);
}

}  // namespace rzs
