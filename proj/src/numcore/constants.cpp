#include "rzs/numcore/constants.hpp"

#include <array>
#include <utility>

#include "rzs/specfun/zeta.hpp"

namespace rzs::numcore {

namespace {

constexpr std::array<std::pair<Constant, std::string_view>, 5> kNames{{
    {Constant::PI, "pi"},
    {Constant::LOG2, "log2"},
    {Constant::EULER_GAMMA, "gamma"},
    {Constant::CATALAN, "catalan"},
    {Constant::GLAISHER_LOG, "logA"},
}};

}  // namespace

BigReal constant(Constant c, const PrecisionContext& ctx) {
    const long bits = ctx.working_bits();
    switch (c) {
        case Constant::PI: return pi(bits);
        case Constant::LOG2: return log2_constant(bits);
        case Constant::EULER_GAMMA: return euler_constant(bits);
        case Constant::CATALAN: return specfun::dirichlet_beta(2, ctx);
        case Constant::GLAISHER_LOG: {
            BigReal v(BigRational(1, 12), bits);
            return v - specfun::hurwitz_zeta_sderiv(-1L, BigRational(1), ctx);
        }
    }
    throw std::logic_error("unhandled constant");
}

std::string_view constant_name(Constant c) {
    for (const auto& [k, n] : kNames)
        if (k == c) return n;
    return "?";
}

std::optional<Constant> constant_from_name(std::string_view name) {
    for (const auto& [k, n] : kNames)
        if (n == name) return k;
    return std::nullopt;
}

}  // namespace rzs::numcore
