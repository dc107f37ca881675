#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rzs/closedform/closed_form.hpp"
#include "rzs/families/series.hpp"
#include "rzs/numcore/big_rational.hpp"

namespace rzs::families {

enum class FamilyId { A, B, C, D, E, F, X1, X2 };

/// Which transcription of a published formula to build. `corrected` differs
/// from `as_printed` only where the printed formula has a known typo;
/// `alternate` is a competing interpretation of an ambiguous formula and is
/// only defined where one exists.
enum class Reading { AS_PRINTED, CORRECTED, ALTERNATE };

/// GENERAL_Z forces the Clausen/negapolygamma form even at z = 1/2 or 1/4.
enum class Route { AUTO, GENERAL_Z, SPECIALIZED };
/// P_ZERO forces the dedicated p = 0 formula; GENERAL_P the general-p one.
enum class PForm { AUTO, GENERAL_P, P_ZERO };

struct RhsOptions {
    Route route = Route::AUTO;
    PForm pform = PForm::AUTO;
};

struct IdentityInstance {
    FamilyId family = FamilyId::A;
    std::optional<int> m;  // absent for A and D
    int p = 0;
    BigRational z;
    Reading reading = Reading::CORRECTED;
    SeriesSpec lhs;
    closedform::ClosedForm rhs;
    std::string form;  // which construction produced rhs, e.g. "z=1/2, p=0"
    RhsOptions options;  // as requested, before AUTO is resolved
};

bool family_has_m(FamilyId f);
/// Smallest admissible m (families with m) and p.
int family_min_m(FamilyId f);
int family_min_p(FamilyId f);

/// Throws DomainError with a description when (f, m, p, z) is outside the
/// family's parameter domain.
void check_domain(FamilyId f, std::optional<int> m, int p, const BigRational& z);
bool in_domain(FamilyId f, std::optional<int> m, int p, const BigRational& z);

SeriesSpec family_lhs(FamilyId f, std::optional<int> m, int p, const BigRational& z);

/// True when the specialized construction exists for this z (1/2 or 1/4,
/// families A through F).
bool has_specialization(FamilyId f, const BigRational& z);
/// True when a distinct `alternate` reading is defined for this instance.
bool has_alternate(FamilyId f, std::optional<int> m, int p, const BigRational& z, const RhsOptions& opt = {});
/// Readings that can be requested for the instance, in AS_PRINTED,
/// CORRECTED, ALTERNATE order.
std::vector<Reading> available_readings(FamilyId f, std::optional<int> m, int p, const BigRational& z,
                                        const RhsOptions& opt = {});

IdentityInstance make_instance(FamilyId f, std::optional<int> m, int p, const BigRational& z,
                               Reading reading = Reading::CORRECTED, const RhsOptions& opt = {});

std::string family_name(FamilyId f);
FamilyId family_from_name(const std::string& s);
std::string reading_name(Reading r);
Reading reading_from_name(const std::string& s);

}  // namespace rzs::families
