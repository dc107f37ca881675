#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rzs/closedform/evaluate.hpp"
#include "rzs/families/golden.hpp"
#include "rzs/families/identity.hpp"
#include "rzs/numcore/precision.hpp"
#include "rzs/verify/report.hpp"

namespace rzs::verify {

/// Sums the LHS, evaluates the RHS and compares at ctx.target_digits().
/// Atoms outside the special-function guards yield DOMAIN_SKIP.
VerificationReport verify_identity(const families::IdentityInstance& inst, const PrecisionContext& ctx,
                                   const closedform::AtomResolver& resolver = {});

/// Golden entry under the given reading, compared against its displayed RHS.
VerificationReport verify_golden(const families::GoldenEntry& e, families::Reading r, const PrecisionContext& ctx);

enum class Outcome { CHOSEN, AMBIGUOUS, CONTRADICTION };

struct Adjudication {
    std::string label;  // golden entry id, empty for catalog instances
    families::FamilyId family = families::FamilyId::A;
    std::optional<int> m;
    int p = 0;
    BigRational z;
    Outcome outcome = Outcome::AMBIGUOUS;
    /// Set for CHOSEN: the passing reading, preferring `corrected` within its group.
    std::optional<families::Reading> chosen;
    /// Number of structurally distinct right-hand sides among the readings.
    int distinct_forms = 0;
    std::vector<VerificationReport> reports;  // one per reading, in input order
};

/// Verifies every variant (all of the same instance) and groups structurally
/// equal right-hand sides. CHOSEN iff at least two groups exist and exactly
/// one passes; AMBIGUOUS if several pass or only one group exists;
/// CONTRADICTION if none passes.
Adjudication adjudicate_variants(const std::vector<families::IdentityInstance>& variants,
                                 const PrecisionContext& ctx);

/// All readings available for the instance.
Adjudication adjudicate_reading(families::FamilyId f, std::optional<int> m, int p, const BigRational& z,
                                const PrecisionContext& ctx, const families::RhsOptions& opt = {});

/// Printed against corrected right-hand side of a golden entry; the entry
/// must carry a correction.
Adjudication adjudicate_golden(const families::GoldenEntry& e, const PrecisionContext& ctx);

/// True when the readings give at least two structurally different RHS.
bool readings_differ(families::FamilyId f, std::optional<int> m, int p, const BigRational& z,
                     const families::RhsOptions& opt = {});

std::string outcome_name(Outcome o);
Json to_json(const Adjudication& a, int digits, bool include_timing);

}  // namespace rzs::verify
