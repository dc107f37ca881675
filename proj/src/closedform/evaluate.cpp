#include "rzs/closedform/evaluate.hpp"

#include <stdexcept>
#include <utility>

#include "rzs/numcore/constants.hpp"
#include "rzs/numcore/memo.hpp"
#include "rzs/specfun/clausen.hpp"
#include "rzs/specfun/gamma.hpp"
#include "rzs/specfun/zeta.hpp"

namespace rzs::closedform {

namespace {

BigReal compute_atom(const Atom& a, const PrecisionContext& ctx) {
    const long bits = ctx.working_bits();
    using numcore::Constant;
    switch (a.kind) {
        case AtomKind::PI: return numcore::constant(Constant::PI, ctx);
        case AtomKind::LOG2: return numcore::constant(Constant::LOG2, ctx);
        case AtomKind::LOG_PI: return log(pi(bits));
        case AtomKind::GAMMA: return numcore::constant(Constant::EULER_GAMMA, ctx);
        case AtomKind::CATALAN: return numcore::constant(Constant::CATALAN, ctx);
        case AtomKind::GLAISHER_LOG: return numcore::constant(Constant::GLAISHER_LOG, ctx);
        case AtomKind::ZETA: return specfun::zeta_int(a.index, ctx);
        case AtomKind::BETA: return specfun::dirichlet_beta(a.index, ctx);
        case AtomKind::ZETA_DERIV: return specfun::hurwitz_zeta_sderiv(static_cast<long>(a.index), a.q, ctx);
        case AtomKind::CLAUSEN:
            return specfun::clausen(specfun::ClausenOrder(a.index), specfun::PiMultiple{a.q}, ctx);
        case AtomKind::NEGAPOLYGAMMA:
            return specfun::negapolygamma(specfun::NegapolygammaOrder(a.index), a.q, ctx);
        case AtomKind::LOG_OF: {
            BigReal v = log(BigReal(a.q, bits));
            if (a.index != 0) v += log(pi(bits)) * a.index;
            return v;
        }
        case AtomKind::SYNTHETIC:
            throw std::invalid_argument("SYNTHETIC atom needs a resolver");
    }
    throw std::logic_error("unhandled atom kind");
}

numcore::Memo<std::pair<long, Atom>, BigReal>& atom_memo() {
    static numcore::Memo<std::pair<long, Atom>, BigReal> m;
    return m;
}

}  // namespace

BigReal atom_value(const Atom& a, const PrecisionContext& ctx) {
    if (a.kind == AtomKind::SYNTHETIC) return compute_atom(a, ctx);
    return atom_memo().get_or_compute({ctx.working_bits(), a}, [&] { return compute_atom(a, ctx); });
}

BigReal evaluate(const ClosedForm& cf, const PrecisionContext& ctx, const AtomResolver& resolver) {
    const long bits = ctx.working_bits();
    BigReal sum(bits);
    for (const auto& [mono, coeff] : cf.terms()) {
        BigReal t(coeff, bits);
        for (const auto& [atom, e] : mono.factors()) {
            std::optional<BigReal> v;
            if (resolver) v = resolver(atom, ctx);
            BigReal base = v ? *v : atom_value(atom, ctx);
            t *= (e == 1) ? base : pow(base, static_cast<long>(e));
        }
        sum += t;
    }
    return sum;
}

}  // namespace rzs::closedform
