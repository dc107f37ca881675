#pragma once

#include <optional>
#include <string>

#include "json.hpp"

#include "rzs/numcore/big_rational.hpp"
#include "rzs/numcore/big_real.hpp"

namespace rzs::verify {

using Json = nlohmann::ordered_json;

enum class Status { PASS, FAIL, DOMAIN_SKIP };

/// One comparison of two independently computed values.
struct VerificationReport {
    std::string kind;     // "identity", "integral" or "golden"
    std::string family;   // A..F, X1, X2, T1..T4, D1, D2, or a golden id
    std::optional<int> m;
    int p = 0;
    BigRational z;
    std::string reading;  // reading name, "n/a" for integral checks
    std::string form;     // construction used for the right-hand side
    std::optional<BigReal> lhs, rhs, abs_diff;
    int digits = 0;
    int required_digits = 0;  // PASS iff digits >= required_digits
    Status status = Status::DOMAIN_SKIP;
    double elapsed_ms = 0;
    std::string note;     // reason for DOMAIN_SKIP, empty otherwise
};

/// floor(-log10 |a - b|) when min(|a|, |b|) < 1, else floor(-log10(|a - b| / |a|)).
/// Identical values give `cap`; the result is clamped to [0, cap].
int digits_agreement(const BigReal& a, const BigReal& b, int cap);

std::string status_name(Status s);
Status status_from_name(const std::string& s);

/// Values as decimal strings with `digits` significant digits; timing is
/// written only when requested so golden files stay reproducible.
Json to_json(const VerificationReport& r, int digits, bool include_timing);

}  // namespace rzs::verify
