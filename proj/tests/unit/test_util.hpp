#pragma once

#include <string>

#include "rzs/numcore/big_real.hpp"
#include "rzs/numcore/precision.hpp"
#include "rzs/verify/report.hpp"

namespace rzs::testing {

/// Decimal reference value at a precision comfortably above any test target.
inline BigReal ref(const std::string& digits) { return BigReal::parse(digits, 400); }

/// Digits of agreement with a large cap, on the suite's measure.
inline int agree(const BigReal& a, const BigReal& b) { return verify::digits_agreement(a, b, 1000); }
inline int agree(const BigReal& a, const std::string& b) { return agree(a, ref(b)); }

}  // namespace rzs::testing
