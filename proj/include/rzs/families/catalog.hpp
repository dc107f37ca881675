#pragma once

#include <cstddef>
#include <vector>

#include "rzs/families/identity.hpp"

namespace rzs::families {

/// Parameter grid for one family. `m` is ignored for A and D.
struct FamilyRange {
    FamilyId family = FamilyId::A;
    std::vector<int> m;
    std::vector<int> p;
    std::vector<BigRational> z;
    RhsOptions options;
};

struct CatalogResult {
    std::vector<IdentityInstance> instances;
    std::size_t skipped = 0;  // out-of-domain combinations
};

/// lo..hi inclusive; empty when hi < lo.
std::vector<int> int_range(int lo, int hi);

/// All in-domain instances of the grids, sorted by (family, m, p, z) with the
/// input order breaking ties.
CatalogResult catalog_enumerate(const std::vector<FamilyRange>& ranges, Reading reading = Reading::CORRECTED);

}  // namespace rzs::families
