#pragma once

#include <compare>
#include <string>

#include "rzs/numcore/big_rational.hpp"

namespace rzs::closedform {

/// Declaration order is the canonical factor order.
enum class AtomKind {
    PI,
    LOG2,
    LOG_PI,
    GAMMA,
    CATALAN,
    GLAISHER_LOG,
    ZETA,           // zeta(j), j >= 2
    BETA,           // beta(j), j >= 1
    ZETA_DERIV,     // d/ds zeta(s, a) at integer s
    CLAUSEN,        // Cl_m(q pi), |q| < 2
    NEGAPOLYGAMMA,  // psi^(-m)(z), 0 < z < 1
    LOG_OF,         // log(r pi^k), r > 0
    SYNTHETIC,      // opaque value supplied by a caller-provided resolver
};

/// One basis constant. `index` and `q` carry the parameters: index is j, m,
/// s, the pi power k of LOG_OF, or a SYNTHETIC id; q is a, theta/pi, z or r.
struct Atom {
    AtomKind kind = AtomKind::PI;
    int index = 0;
    BigRational q;

    friend bool operator==(const Atom&, const Atom&) = default;
    friend std::strong_ordering operator<=>(const Atom&, const Atom&) = default;

    static Atom pi() { return {AtomKind::PI, 0, {}}; }
    static Atom log2() { return {AtomKind::LOG2, 0, {}}; }
    static Atom log_pi() { return {AtomKind::LOG_PI, 0, {}}; }
    static Atom euler_gamma() { return {AtomKind::GAMMA, 0, {}}; }
    static Atom catalan() { return {AtomKind::CATALAN, 0, {}}; }
    static Atom glaisher_log() { return {AtomKind::GLAISHER_LOG, 0, {}}; }
    static Atom zeta(int j);
    static Atom beta(int j);
    static Atom zeta_deriv(int s, const BigRational& a);
    static Atom clausen(int m, const BigRational& theta_over_pi);
    static Atom negapolygamma(int m, const BigRational& z);
    static Atom log_of(const BigRational& r, int pi_power = 0);
    static Atom synthetic(int id) { return {AtomKind::SYNTHETIC, id, {}}; }
};

std::string atom_kind_name(AtomKind k);
AtomKind atom_kind_from_name(const std::string& name);

}  // namespace rzs::closedform
