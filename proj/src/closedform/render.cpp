#include "rzs/closedform/render.hpp"

#include <vector>

namespace rzs::closedform {

namespace {

const char* const kDot = "\xC2\xB7";  // U+00B7

std::string text_angle(const BigRational& r) {
    // r pi as "pi", "-pi/2", "2pi/3"
    std::string s = r.sign() < 0 ? "-" : "";
    BigInt n = abs(r).numerator(), d = abs(r).denominator();
    if (n != 1) s += n.get_str();
    s += "pi";
    if (d != 1) s += "/" + d.get_str();
    return s;
}

std::string latex_fraction(const BigRational& r) {
    if (r.is_integer()) return r.numerator().get_str();
    std::string sign = r.sign() < 0 ? "-" : "";
    return sign + "\\tfrac{" + abs(r).numerator().get_str() + "}{" + r.denominator().get_str() + "}";
}

std::string latex_angle(const BigRational& r) {
    std::string sign = r.sign() < 0 ? "-" : "";
    BigInt n = abs(r).numerator(), d = abs(r).denominator();
    std::string num = (n == 1 ? std::string() : n.get_str()) + "\\pi";
    if (d == 1) return sign + num;
    return sign + "\\tfrac{" + num + "}{" + d.get_str() + "}";
}

std::string log_argument(const Atom& a, RenderFormat f) {
    const bool tex = f == RenderFormat::LATEX;
    std::string r = tex ? latex_fraction(a.q) : a.q.to_string();
    if (a.index == 0) return r;
    std::string p = tex ? "\\pi" : "pi";
    if (a.index != 1) p += tex ? "^{" + std::to_string(a.index) + "}" : "^" + std::to_string(a.index);
    if (a.q == BigRational(1)) return p;
    return r + (tex ? "\\," : kDot) + p;
}

// True when x^e must be parenthesized, e.g. (log 2)^2.
bool needs_group(const Atom& a, RenderFormat f) {
    if (f == RenderFormat::TEXT) return a.kind == AtomKind::LOG2 || a.kind == AtomKind::GLAISHER_LOG;
    return a.kind == AtomKind::LOG2 || a.kind == AtomKind::LOG_PI || a.kind == AtomKind::GLAISHER_LOG ||
           a.kind == AtomKind::NEGAPOLYGAMMA || a.kind == AtomKind::LOG_OF || a.kind == AtomKind::CLAUSEN ||
           a.kind == AtomKind::ZETA_DERIV;
}

std::string power(const Atom& a, int e, RenderFormat f) {
    std::string base = render_atom(a, f);
    if (e == 1) return base;
    if (needs_group(a, f)) base = (f == RenderFormat::LATEX ? "\\left(" + base + "\\right)" : "(" + base + ")");
    if (f == RenderFormat::LATEX) return base + "^{" + std::to_string(e) + "}";
    return base + "^" + std::to_string(e);
}

std::string text_term(const Monomial& m, const BigRational& mag) {
    std::vector<std::string> parts;
    for (const auto& [a, e] : m.factors()) parts.push_back(power(a, e, RenderFormat::TEXT));
    if (parts.empty()) return mag.to_string();
    std::string body;
    for (std::size_t i = 0; i < parts.size(); ++i) body += (i ? kDot : "") + parts[i];
    if (mag == BigRational(1)) return body;
    if (mag.is_integer()) return mag.to_string() + kDot + body;
    return "(" + mag.to_string() + ")" + kDot + body;
}

std::string latex_term(const Monomial& m, const BigRational& mag) {
    std::vector<std::string> num, den;
    for (const auto& [a, e] : m.factors()) {
        if (e > 0)
            num.push_back(power(a, e, RenderFormat::LATEX));
        else
            den.push_back(power(a, -e, RenderFormat::LATEX));
    }
    auto join = [](const std::vector<std::string>& v) {
        std::string s;
        for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "\\," : "") + v[i];
        return s;
    };
    const std::string n = mag.numerator().get_str(), d = mag.denominator().get_str();
    std::string top = num.empty() ? n : (n == "1" ? join(num) : n + "\\," + join(num));
    std::string bottom;
    if (d != "1") bottom = d;
    if (!den.empty()) bottom += (bottom.empty() ? "" : "\\,") + join(den);
    if (bottom.empty()) return top;
    return "\\frac{" + top + "}{" + bottom + "}";
}

}  // namespace

std::string render_atom(const Atom& a, RenderFormat f) {
    const bool tex = f == RenderFormat::LATEX;
    switch (a.kind) {
        case AtomKind::PI: return tex ? "\\pi" : "pi";
        case AtomKind::LOG2: return tex ? "\\log 2" : "log2";
        case AtomKind::LOG_PI: return tex ? "\\log\\pi" : "log(pi)";
        case AtomKind::GAMMA: return tex ? "\\gamma" : "gamma";
        case AtomKind::CATALAN: return "G";
        case AtomKind::GLAISHER_LOG: return tex ? "\\log A" : "logA";
        case AtomKind::ZETA: return (tex ? "\\zeta(" : "zeta(") + std::to_string(a.index) + ")";
        case AtomKind::BETA:
            if (a.index == 2) return "G";
            return (tex ? "\\beta(" : "beta(") + std::to_string(a.index) + ")";
        case AtomKind::ZETA_DERIV: {
            std::string s = (tex ? "\\zeta'(" : "zeta'(") + std::to_string(a.index);
            if (a.q != BigRational(1)) s += "," + (tex ? latex_fraction(a.q) : a.q.to_string());
            return s + ")";
        }
        case AtomKind::CLAUSEN:
            if (tex)
                return "\\operatorname{Cl}_{" + std::to_string(a.index) + "}\\left(" + latex_angle(a.q) + "\\right)";
            return "Cl_" + std::to_string(a.index) + "(" + text_angle(a.q) + ")";
        case AtomKind::NEGAPOLYGAMMA:
            if (a.index == 1)
                return tex ? "\\log\\Gamma\\left(" + latex_fraction(a.q) + "\\right)" : "logGamma(" + a.q.to_string() + ")";
            if (tex) return "\\psi^{(-" + std::to_string(a.index) + ")}\\left(" + latex_fraction(a.q) + "\\right)";
            return "psi^(-" + std::to_string(a.index) + ")(" + a.q.to_string() + ")";
        case AtomKind::LOG_OF:
            if (tex) return "\\log\\left(" + log_argument(a, f) + "\\right)";
            return "log(" + log_argument(a, f) + ")";
        case AtomKind::SYNTHETIC:
            return tex ? "S_{" + std::to_string(a.index) + "}" : "S" + std::to_string(a.index);
    }
    return "?";
}

std::string render(const ClosedForm& cf, RenderFormat f) {
    if (cf.is_zero()) return "0";
    std::vector<std::pair<const Monomial*, const BigRational*>> order;
    const std::pair<const Monomial*, const BigRational*>* unit = nullptr;
    std::pair<const Monomial*, const BigRational*> unit_slot{};
    for (const auto& [m, c] : cf.terms()) {
        if (m.is_unit()) {
            unit_slot = {&m, &c};
            unit = &unit_slot;
        } else {
            order.emplace_back(&m, &c);
        }
    }
    if (unit) order.push_back(*unit);
    std::string out;
    for (std::size_t i = 0; i < order.size(); ++i) {
        const BigRational& c = *order[i].second;
        const BigRational mag = abs(c);
        std::string body = f == RenderFormat::LATEX ? latex_term(*order[i].first, mag) : text_term(*order[i].first, mag);
        if (i == 0)
            out += (c.sign() < 0 ? "-" : "") + body;
        else
            out += (c.sign() < 0 ? " - " : " + ") + body;
    }
    return out;
}

std::string latex_document(const std::string& math) {
    return "\\documentclass{article}\n\\usepackage{amsmath}\n\\begin{document}\n\\[\n" + math +
           "\n\\]\n\\end{document}\n";
}

}  // namespace rzs::closedform
