#include "rzs/verify/report.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace rzs::verify {

int digits_agreement(const BigReal& a, const BigReal& b, int cap) {
    if (!a.is_finite() || !b.is_finite()) return 0;
    BigReal diff = abs(a - b);
    if (diff.is_zero()) return cap;
    double l = -diff.log10_abs();
    BigReal mag = abs(a);
    if (!(abs(a) < 1.0 || abs(b) < 1.0)) l += mag.log10_abs();
    const double d = std::floor(l);
    if (d < 0) return 0;
    return static_cast<int>(std::min<double>(d, cap));
}

std::string status_name(Status s) {
    switch (s) {
        case Status::PASS: return "PASS";
        case Status::FAIL: return "FAIL";
        case Status::DOMAIN_SKIP: return "DOMAIN_SKIP";
    }
    return "?";
}

Status status_from_name(const std::string& s) {
    if (s == "PASS") return Status::PASS;
    if (s == "FAIL") return Status::FAIL;
    if (s == "DOMAIN_SKIP") return Status::DOMAIN_SKIP;
    throw std::invalid_argument("unknown status '" + s + "'");
}

Json to_json(const VerificationReport& r, int digits, bool include_timing) {
    auto value = [&](const std::optional<BigReal>& v) { return v ? Json(v->to_string(digits)) : Json(nullptr); };
    Json j;
    j["kind"] = r.kind;
    j["family"] = r.family;
    j["m"] = r.m ? Json(*r.m) : Json(nullptr);
    j["p"] = r.p;
    j["z"] = r.z.to_string();
    j["reading"] = r.reading;
    j["form"] = r.form;
    j["lhs"] = value(r.lhs);
    j["rhs"] = value(r.rhs);
    j["abs_diff"] = r.abs_diff ? Json(r.abs_diff->is_zero() ? std::string("0") : r.abs_diff->to_scientific(3))
                               : Json(nullptr);
    j["digits"] = r.digits;
    j["required_digits"] = r.required_digits;
    j["status"] = status_name(r.status);
    if (!r.note.empty()) j["note"] = r.note;
    if (include_timing) j["elapsed_ms"] = std::round(r.elapsed_ms * 1000) / 1000;
    return j;
}

}  // namespace rzs::verify
