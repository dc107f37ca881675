#include "rzs/closedform/serialize.hpp"

#include <stdexcept>

namespace rzs::closedform {

namespace {

BigRational rational_param(const Json& v) {
    if (v.is_string()) return BigRational::parse(v.get<std::string>());
    if (v.is_number_integer()) return BigRational(v.get<long>());
    throw std::invalid_argument("rational parameter must be a \"p/q\" string");
}

}  // namespace

Json to_json(const Atom& a, int exp) {
    Json params = Json::array();
    switch (a.kind) {
        case AtomKind::ZETA:
        case AtomKind::BETA:
        case AtomKind::SYNTHETIC: params.push_back(a.index); break;
        case AtomKind::ZETA_DERIV:
        case AtomKind::CLAUSEN:
        case AtomKind::NEGAPOLYGAMMA:
            params.push_back(a.index);
            params.push_back(a.q.to_string());
            break;
        case AtomKind::LOG_OF:
            params.push_back(a.q.to_string());
            params.push_back(a.index);
            break;
        default: break;
    }
    Json j;
    j["atom"] = atom_kind_name(a.kind);
    j["params"] = params;
    j["exp"] = exp;
    return j;
}

Json to_json(const ClosedForm& cf) {
    Json terms = Json::array();
    for (const auto& [m, c] : cf.terms()) {
        Json factors = Json::array();
        for (const auto& [a, e] : m.factors()) factors.push_back(to_json(a, e));
        Json t;
        t["factors"] = factors;
        t["coeff"] = c.to_string();
        terms.push_back(t);
    }
    Json j;
    j["terms"] = terms;
    return j;
}

ClosedForm closed_form_from_json(const Json& j) {
    ClosedForm out;
    for (const auto& t : j.at("terms")) {
        std::vector<std::pair<Atom, int>> factors;
        for (const auto& f : t.at("factors")) {
            AtomKind k = atom_kind_from_name(f.at("atom").get<std::string>());
            const Json& p = f.at("params");
            Atom a;
            switch (k) {
                case AtomKind::ZETA: a = Atom::zeta(p.at(0).get<int>()); break;
                case AtomKind::BETA: a = Atom::beta(p.at(0).get<int>()); break;
                case AtomKind::SYNTHETIC: a = Atom::synthetic(p.at(0).get<int>()); break;
                case AtomKind::ZETA_DERIV: a = Atom::zeta_deriv(p.at(0).get<int>(), rational_param(p.at(1))); break;
                case AtomKind::CLAUSEN: a = Atom::clausen(p.at(0).get<int>(), rational_param(p.at(1))); break;
                case AtomKind::NEGAPOLYGAMMA: a = Atom::negapolygamma(p.at(0).get<int>(), rational_param(p.at(1))); break;
                case AtomKind::LOG_OF: a = Atom::log_of(rational_param(p.at(0)), p.at(1).get<int>()); break;
                default: a = Atom{k, 0, {}}; break;
            }
            factors.emplace_back(a, f.at("exp").get<int>());
        }
        out.add_term(Monomial::from_factors(std::move(factors)), BigRational::parse(t.at("coeff").get<std::string>()));
    }
    return out;
}

}  // namespace rzs::closedform
