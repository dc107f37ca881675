#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rzs/closedform/closed_form.hpp"
#include "rzs/families/identity.hpp"
#include "rzs/families/series.hpp"

namespace rzs::families {

/// One example sum as displayed in the source tables, together with the
/// family instance it specializes: lhs == scale * family_lhs(family, m, p, z).
struct GoldenEntry {
    std::string id;  // "3a", "5d", ...
    int section = 0;  // table number 2..7
    SeriesSpec lhs;
    closedform::ClosedForm printed;
    /// Present only where the displayed value contains a typo.
    std::optional<closedform::ClosedForm> corrected;
    FamilyId family = FamilyId::A;
    std::optional<int> m;
    int p = 0;
    BigRational z;
    BigRational scale{1};

    const closedform::ClosedForm& rhs(Reading r) const {
        return (r != Reading::AS_PRINTED && corrected) ? *corrected : printed;
    }
};

/// Every displayed example sum, tables 2 through 7 in display order.
const std::vector<GoldenEntry>& golden_table();
std::vector<GoldenEntry> golden_section(int section);

}  // namespace rzs::families
