#include "rzs/families/catalog.hpp"

#include <algorithm>
#include <tuple>

#include "rzs/numcore/errors.hpp"

namespace rzs::families {

std::vector<int> int_range(int lo, int hi) {
    std::vector<int> v;
    for (int i = lo; i <= hi; ++i) v.push_back(i);
    return v;
}

CatalogResult catalog_enumerate(const std::vector<FamilyRange>& ranges, Reading reading) {
    CatalogResult out;
    for (const auto& r : ranges) {
        std::vector<std::optional<int>> ms;
        if (family_has_m(r.family))
            for (int m : r.m) ms.emplace_back(m);
        else
            ms.emplace_back(std::nullopt);
        for (const auto& m : ms)
            for (int p : r.p)
                for (const auto& z : r.z) {
                    if (!in_domain(r.family, m, p, z)) {
                        ++out.skipped;
                        continue;
                    }
                    try {
                        out.instances.push_back(make_instance(r.family, m, p, z, reading, r.options));
                    } catch (const DomainError&) {
                        ++out.skipped;  // e.g. a forced route that does not exist here
                    }
                }
    }
    std::stable_sort(out.instances.begin(), out.instances.end(), [](const auto& a, const auto& b) {
        return std::make_tuple(a.family, a.m.value_or(-1), a.p, a.z) <
               std::make_tuple(b.family, b.m.value_or(-1), b.p, b.z);
    });
    return out;
}

}  // namespace rzs::families
