#include "rzs/closedform/closed_form.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

#include "rzs/numcore/errors.hpp"

namespace rzs::closedform {

// ---- Atom ----

Atom Atom::zeta(int j) {
    if (j < 2) throw DomainError("ZETA atom needs j >= 2");
    return {AtomKind::ZETA, j, {}};
}

Atom Atom::beta(int j) {
    if (j < 1) throw DomainError("BETA atom needs j >= 1");
    return {AtomKind::BETA, j, {}};
}

Atom Atom::zeta_deriv(int s, const BigRational& a) {
    if (s == 1) throw DomainError("ZETA_DERIV atom at the pole s = 1");
    if (a.sign() <= 0) throw DomainError("ZETA_DERIV atom needs a > 0");
    return {AtomKind::ZETA_DERIV, s, a};
}

Atom Atom::clausen(int m, const BigRational& theta_over_pi) {
    if (m < 1) throw DomainError("CLAUSEN atom needs m >= 1");
    if (abs(theta_over_pi) >= BigRational(2)) throw DomainError("CLAUSEN atom needs |theta| < 2 pi");
    return {AtomKind::CLAUSEN, m, theta_over_pi};
}

Atom Atom::negapolygamma(int m, const BigRational& z) {
    if (m < 1) throw DomainError("NEGAPOLYGAMMA atom needs m >= 1");
    if (z.sign() <= 0 || z >= BigRational(1)) throw DomainError("NEGAPOLYGAMMA atom needs 0 < z < 1");
    return {AtomKind::NEGAPOLYGAMMA, m, z};
}

Atom Atom::log_of(const BigRational& r, int pi_power) {
    if (r.sign() <= 0) throw DomainError("LOG_OF atom needs a positive rational");
    return {AtomKind::LOG_OF, pi_power, r};
}

namespace {
constexpr std::array<const char*, 13> kKindNames{
    "PI", "LOG2", "LOG_PI", "GAMMA", "CATALAN", "GLAISHER_LOG", "ZETA",
    "BETA", "ZETA_DERIV", "CLAUSEN", "NEGAPOLYGAMMA", "LOG_OF", "SYNTHETIC"};
}

std::string atom_kind_name(AtomKind k) { return kKindNames.at(static_cast<std::size_t>(k)); }

AtomKind atom_kind_from_name(const std::string& name) {
    for (std::size_t i = 0; i < kKindNames.size(); ++i)
        if (name == kKindNames[i]) return static_cast<AtomKind>(i);
    throw std::invalid_argument("unknown atom kind '" + name + "'");
}

// ---- Monomial ----

Monomial::Monomial(const Atom& a, int exp) {
    if (exp != 0) factors_.emplace_back(a, exp);
}

Monomial Monomial::from_factors(std::vector<std::pair<Atom, int>> factors) {
    std::sort(factors.begin(), factors.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    Monomial m;
    for (auto& [a, e] : factors) {
        if (!m.factors_.empty() && m.factors_.back().first == a)
            m.factors_.back().second += e;
        else
            m.factors_.emplace_back(a, e);
        if (m.factors_.back().second == 0) m.factors_.pop_back();
    }
    return m;
}

int Monomial::exponent_of(const Atom& a) const {
    for (const auto& [x, e] : factors_)
        if (x == a) return e;
    return 0;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
    std::vector<std::pair<Atom, int>> all = a.factors_;
    all.insert(all.end(), b.factors_.begin(), b.factors_.end());
    return Monomial::from_factors(std::move(all));
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    const auto& x = a.factors_;
    const auto& y = b.factors_;
    for (std::size_t i = 0; i < x.size() && i < y.size(); ++i) {
        if (auto c = x[i].first <=> y[i].first; c != 0) return c;
        if (auto c = x[i].second <=> y[i].second; c != 0) return c;
    }
    return x.size() <=> y.size();
}

// ---- ClosedForm ----

ClosedForm::ClosedForm(const BigRational& c) { add_term(Monomial(), c); }

ClosedForm::ClosedForm(const Atom& a, int exp) { add_term(Monomial(a, exp), BigRational(1)); }

ClosedForm ClosedForm::term(const Monomial& m, const BigRational& c) {
    ClosedForm f;
    f.add_term(m, c);
    return f;
}

BigRational ClosedForm::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? BigRational(0) : it->second;
}

std::set<Atom> ClosedForm::atoms() const {
    std::set<Atom> out;
    for (const auto& [m, c] : terms_)
        for (const auto& [a, e] : m.factors()) out.insert(a);
    return out;
}

void ClosedForm::add_term(const Monomial& m, const BigRational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

ClosedForm& ClosedForm::operator+=(const ClosedForm& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

ClosedForm& ClosedForm::operator-=(const ClosedForm& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

ClosedForm& ClosedForm::operator*=(const BigRational& q) {
    if (q.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, c] : terms_) c *= q;
    return *this;
}

ClosedForm& ClosedForm::operator*=(const ClosedForm& o) {
    ClosedForm out;
    for (const auto& [m1, c1] : terms_)
        for (const auto& [m2, c2] : o.terms_) out.add_term(m1 * m2, c1 * c2);
    *this = std::move(out);
    return *this;
}

ClosedForm add(const ClosedForm& a, const ClosedForm& b) { return a + b; }
ClosedForm scale(const ClosedForm& a, const BigRational& q) { return a * q; }

namespace {

// Replaces every linear occurrence of an atom accepted by `rewrite` with the
// closed form it returns; other factors of the monomial multiply through.
template <class Match, class Rewrite>
ClosedForm substitute(const ClosedForm& x, Match match, Rewrite rewrite) {
    ClosedForm out;
    for (const auto& [m, c] : x.terms()) {
        const std::pair<Atom, int>* hit = nullptr;
        for (const auto& f : m.factors())
            if (f.second == 1 && match(f.first)) {
                hit = &f;
                break;
            }
        if (!hit) {
            out.add_term(m, c);
            continue;
        }
        std::vector<std::pair<Atom, int>> rest;
        for (const auto& f : m.factors())
            if (&f != hit) rest.push_back(f);
        ClosedForm piece = rewrite(hit->first) * ClosedForm::term(Monomial::from_factors(rest), c);
        // the replacement itself may contain further rewritable atoms
        out += substitute(piece, match, rewrite);
    }
    return out;
}

}  // namespace

ClosedForm normalize_logs(const ClosedForm& x) {
    auto match = [](const Atom& a) {
        if (a.kind != AtomKind::LOG_OF) return false;
        if (a.q == BigRational(1)) return true;
        if (a.index != 0) return true;
        BigInt n = a.q.numerator(), d = a.q.denominator();
        return mpz_even_p(n.get_mpz_t()) || mpz_even_p(d.get_mpz_t());
    };
    auto rewrite = [](const Atom& a) {
        BigInt n = a.q.numerator(), d = a.q.denominator();
        long e = 0;
        while (mpz_even_p(n.get_mpz_t())) { n /= 2; ++e; }
        while (mpz_even_p(d.get_mpz_t())) { d /= 2; --e; }
        ClosedForm out = ClosedForm(Atom::log2()) * BigRational(e);
        out += ClosedForm(Atom::log_pi()) * BigRational(a.index);
        BigRational rest(n, d);
        if (rest != BigRational(1)) out += ClosedForm(Atom::log_of(rest, 0));
        return out;
    };
    return substitute(x, match, rewrite);
}

ClosedForm reduce_special_values(const ClosedForm& x) {
    auto match = [](const Atom& a) {
        return a.kind == AtomKind::CLAUSEN && (a.q == BigRational(1) || a.q == BigRational(1, 2) ||
                                               a.q == BigRational(-1) || a.q == BigRational(-1, 2) ||
                                               a.q.is_zero());
    };
    auto rewrite = [](const Atom& a) -> ClosedForm {
        const int m = a.index;
        const int sym = (a.q.sign() < 0 && m % 2 == 0) ? -1 : 1;
        const BigRational r = abs(a.q);
        if (r.is_zero()) {
            if (m == 1) throw DomainError("Cl_1 has a logarithmic pole at 0");
            return (m % 2 == 0) ? ClosedForm() : ClosedForm(Atom::zeta(m));
        }
        if (m == 1) return ClosedForm(Atom::log2()) * (r == BigRational(1) ? BigRational(-1) : BigRational(-1, 2));
        if (m % 2 == 0) return (r == BigRational(1)) ? ClosedForm() : ClosedForm(Atom::beta(m)) * BigRational(sym);
        const int j = (m - 1) / 2;
        BigInt four_j = BigInt(1) << (2 * j);
        BigRational c = (r == BigRational(1)) ? BigRational(-(four_j - 1), four_j)
                                              : BigRational(-(four_j - 1), BigInt(1) << (4 * j + 1));
        return ClosedForm(Atom::zeta(m)) * c;
    };
    return substitute(x, match, rewrite);
}

ClosedForm canonicalize(const ClosedForm& x) { return reduce_special_values(normalize_logs(x)); }

ClosedForm pi_pow(int k) { return k == 0 ? ClosedForm(1) : ClosedForm(Atom::pi(), k); }

ClosedForm zeta_value(int j) {
    if (j == 0) return ClosedForm(BigRational(-1, 2));
    return ClosedForm(Atom::zeta(j));
}

ClosedForm beta_value(int j) { return ClosedForm(Atom::beta(j)); }

ClosedForm clausen_value(int m, const BigRational& theta_over_pi) {
    return ClosedForm(Atom::clausen(m, theta_over_pi));
}

ClosedForm negapolygamma_value(int m, const BigRational& z) { return ClosedForm(Atom::negapolygamma(m, z)); }

ClosedForm log_value(const BigRational& r, int pi_power) {
    if (r == BigRational(1) && pi_power == 0) return ClosedForm();
    return normalize_logs(ClosedForm(Atom::log_of(r, pi_power)));
}

}  // namespace rzs::closedform
