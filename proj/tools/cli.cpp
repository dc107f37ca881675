#include "cli.hpp"

#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"

#include "rzs/closedform/evaluate.hpp"
#include "rzs/closedform/render.hpp"
#include "rzs/closedform/serialize.hpp"
#include "rzs/families/golden.hpp"
#include "rzs/families/identity.hpp"
#include "rzs/families/serialize.hpp"
#include "rzs/families/series.hpp"
#include "rzs/numcore/errors.hpp"
#include "rzs/verify/suite.hpp"
#include "rzs/verify/verify.hpp"

namespace rzs::cli {

namespace {

using closedform::ClosedForm;
using verify::Json;
using Q = BigRational;

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep)) out.push_back(cur);
    if (!s.empty() && s.back() == sep) out.emplace_back();
    return out;
}

int to_int(const std::string& s, const std::string& what) {
    std::size_t used = 0;
    int v = 0;
    try {
        v = std::stoi(s, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != s.size()) throw std::invalid_argument("bad " + what + " '" + s + "'");
    return v;
}

// Shared by sum, closed-form and verify.
struct InstanceArgs {
    std::string family;
    std::optional<int> m;
    int p = 0;
    std::string z;
    std::string route = "auto";
    std::string pform = "auto";

    void attach(CLI::App* app) {
        app->add_option("--family", family, "A..F, X1 or X2")->required();
        app->add_option("--m", m, "family order m (absent for A and D)");
        app->add_option("--p", p, "power p")->required();
        app->add_option("--z", z, "rational ratio, e.g. 1/4")->required();
        app->add_option("--route", route, "auto, general_z or specialized")
            ->check(CLI::IsMember({"auto", "general_z", "specialized"}));
        app->add_option("--pform", pform, "auto, general_p or p_zero")
            ->check(CLI::IsMember({"auto", "general_p", "p_zero"}));
    }

    families::FamilyId fam() const { return families::family_from_name(family); }
    Q ratio() const { return Q::parse(z); }
    families::RhsOptions options() const {
        families::RhsOptions o;
        if (route == "general_z") o.route = families::Route::GENERAL_Z;
        if (route == "specialized") o.route = families::Route::SPECIALIZED;
        if (pform == "general_p") o.pform = families::PForm::GENERAL_P;
        if (pform == "p_zero") o.pform = families::PForm::P_ZERO;
        return o;
    }
    void check() const {
        const auto f = fam();
        if (families::family_has_m(f) && !m) throw DomainError("family " + family + " needs --m");
        families::check_domain(f, m, p, ratio());
    }
};

std::string instance_label(const families::IdentityInstance& in) {
    std::string s = "family " + families::family_name(in.family);
    if (in.m) s += " m=" + std::to_string(*in.m);
    return s + " p=" + std::to_string(in.p) + " z=" + in.z.to_string();
}

void print_report(std::ostream& out, const verify::VerificationReport& r, const ClosedForm* rhs, int digits) {
    out << "reading  " << r.reading << " (" << r.form << ")\n";
    if (rhs) out << "rhs      " << closedform::render(*rhs, closedform::RenderFormat::TEXT) << "\n";
    if (r.lhs) out << "lhs =    " << r.lhs->to_string(digits) << "\n";
    if (r.rhs) out << "rhs =    " << r.rhs->to_string(digits) << "\n";
    out << "digits   " << r.digits << " (required " << r.required_digits << ")\n";
    out << "status   " << verify::status_name(r.status) << "\n";
    if (!r.note.empty()) out << "note     " << r.note << "\n";
}

int cmd_constant(const std::string& name, int digits, const std::string& format, std::ostream& out) {
    const PrecisionContext ctx(digits);
    const ClosedForm cf = parse_constant(name);
    const BigReal v = closedform::evaluate(cf, ctx);
    if (format == "json") {
        Json j;
        j["name"] = name;
        j["closed_form"] = closedform::render(cf, closedform::RenderFormat::TEXT);
        j["digits"] = digits;
        j["value"] = v.to_string(digits);
        out << j.dump(2) << "\n";
    } else {
        out << v.to_string(digits) << "\n";
    }
    return kExitOk;
}

int cmd_sum(const InstanceArgs& a, int digits, const std::string& format, std::ostream& out) {
    a.check();
    const auto spec = families::family_lhs(a.fam(), a.m, a.p, a.ratio());
    const PrecisionContext ctx(digits);
    const auto res = families::lhs_sum_detailed(spec, ctx);
    if (format == "json") {
        Json j;
        j["series"] = families::to_json(spec);
        j["describe"] = families::describe(spec);
        j["digits"] = digits;
        j["value"] = res.value.to_string(digits);
        j["terms"] = res.terms;
        j["log10_tail"] = res.log10_tail;
        out << j.dump(2) << "\n";
    } else {
        out << res.value.to_string(digits) << "\n";
    }
    return kExitOk;
}

int cmd_closed_form(const InstanceArgs& a, const std::string& reading, const std::string& format, std::ostream& out) {
    a.check();
    const auto inst = families::make_instance(a.fam(), a.m, a.p, a.ratio(), families::reading_from_name(reading),
                                              a.options());
    if (format == "json")
        out << families::to_json(inst).dump(2) << "\n";
    else if (format == "latex")
        out << closedform::render(inst.rhs, closedform::RenderFormat::LATEX) << "\n";
    else
        out << closedform::render(inst.rhs, closedform::RenderFormat::TEXT) << "\n";
    return kExitOk;
}

int cmd_verify(const InstanceArgs& a, const std::string& reading, int digits, const std::string& format,
               std::ostream& out) {
    a.check();
    const PrecisionContext ctx(digits);
    const auto f = a.fam();
    const Q z = a.ratio();
    if (reading == "both") {
        const auto adj = verify::adjudicate_reading(f, a.m, a.p, z, ctx, a.options());
        if (format == "json") {
            out << verify::to_json(adj, digits, false).dump(2) << "\n";
        } else {
            const auto readings = families::available_readings(f, a.m, a.p, z, a.options());
            out << instance_label(families::make_instance(f, a.m, a.p, z, readings.front(), a.options())) << "\n";
            for (std::size_t i = 0; i < adj.reports.size(); ++i) {
                const auto inst = families::make_instance(f, a.m, a.p, z, readings[i], a.options());
                out << "\n";
                print_report(out, adj.reports[i], &inst.rhs, digits);
            }
            out << "\noutcome  " << verify::outcome_name(adj.outcome);
            if (adj.chosen) out << " (" << families::reading_name(*adj.chosen) << ")";
            out << ", " << adj.distinct_forms << " distinct form(s)\n";
        }
        return adj.outcome == verify::Outcome::CONTRADICTION ? kExitFail : kExitOk;
    }
    const auto inst = families::make_instance(f, a.m, a.p, z, families::reading_from_name(reading), a.options());
    const auto r = verify::verify_identity(inst, ctx);
    if (format == "json") {
        Json j = verify::to_json(r, digits, false);
        j["rhs_text"] = closedform::render(inst.rhs, closedform::RenderFormat::TEXT);
        out << j.dump(2) << "\n";
    } else {
        out << instance_label(inst) << "\n";
        out << "lhs      " << families::describe(inst.lhs) << "\n";
        print_report(out, r, &inst.rhs, digits);
    }
    if (r.status == verify::Status::DOMAIN_SKIP) return kExitUsage;
    return r.status == verify::Status::PASS ? kExitOk : kExitFail;
}

int cmd_suite(const std::string& config, const std::string& out_path, std::optional<int> digits,
              std::optional<int> threads, bool golden, bool timing, std::ostream& out) {
    verify::SuiteConfig c = config.empty() ? verify::default_suite_config() : verify::load_suite_config(config);
    if (digits) c.digits = *digits;
    if (threads) c.threads = *threads;
    if (golden) c.golden = true;
    const auto res = verify::run_suite(c);
    if (!out_path.empty()) verify::write_suite_report(res, out_path, timing);
    const auto& s = res.summary;
    out << "pass " << s.pass << ", fail " << s.fail << ", skip " << s.skip << "\n";
    out << "worst digits " << (s.worst_digits ? std::to_string(*s.worst_digits) : std::string("n/a")) << "\n";
    out << "adjudications " << res.adjudications.size() << ", contradictions " << s.contradictions.size() << "\n";
    for (const auto& x : s.contradictions) out << "  contradiction: " << x << "\n";
    for (const auto& r : res.reports)
        if (r.status == verify::Status::FAIL)
            out << "  FAIL " << r.kind << " " << r.family << " p=" << r.p << " z=" << r.z.to_string()
                << (r.m ? " m=" + std::to_string(*r.m) : std::string()) << " digits " << r.digits << "\n";
    if (!s.slowest.empty()) out << "slowest " << s.slowest << " (" << s.slowest_ms << " ms)\n";
    out << "total " << s.total_ms / 1000 << " s\n";
    if (!out_path.empty()) out << "report written to " << out_path << "\n";
    return res.exit_code();
}

int cmd_table(int section, int digits, const std::string& format, std::ostream& out) {
    const PrecisionContext ctx(digits);
    const auto entries = families::golden_section(section);
    bool ok = true;
    Json rows = Json::array();
    if (format != "json") out << "table " << section << ": " << entries.size() << " sums at " << digits << " digits\n";
    for (const auto& e : entries) {
        const auto r = verify::verify_golden(e, families::Reading::CORRECTED, ctx);
        ok = ok && r.status == verify::Status::PASS;
        const std::string printed = closedform::render(e.printed, closedform::RenderFormat::TEXT);
        std::optional<std::string> corrected;
        std::optional<verify::VerificationReport> printed_report;
        if (e.corrected) {
            corrected = closedform::render(*e.corrected, closedform::RenderFormat::TEXT);
            printed_report = verify::verify_golden(e, families::Reading::AS_PRINTED, ctx);
        }
        if (format == "json") {
            Json j = verify::to_json(r, digits, false);
            j["id"] = e.id;
            j["series"] = families::describe(e.lhs);
            j["printed"] = printed;
            j["corrected"] = corrected ? Json(*corrected) : Json(nullptr);
            if (printed_report) j["printed_digits"] = printed_report->digits;
            rows.push_back(j);
            continue;
        }
        std::string fam = families::family_name(e.family);
        if (e.m) fam += " m=" + std::to_string(*e.m);
        fam += " p=" + std::to_string(e.p) + " z=" + e.z.to_string();
        if (e.scale != Q(1)) fam += " scale " + e.scale.to_string();
        out << "\n" << e.id << "  " << families::describe(e.lhs) << "\n";
        out << "    = " << printed << "   [" << fam << "]\n";
        if (corrected)
            out << "    corrected: " << *corrected << "   (printed value agrees to " << printed_report->digits
                << " digits)\n";
        out << "    series " << r.lhs->to_string(digits) << "\n";
        out << "    closed " << r.rhs->to_string(digits) << "\n";
        out << "    digits " << r.digits << "  " << verify::status_name(r.status) << "\n";
    }
    if (format == "json") out << rows.dump(2) << "\n";
    return ok ? kExitOk : kExitFail;
}

}  // namespace

ClosedForm parse_constant(const std::string& name) {
    static const std::map<std::string, closedform::Atom> plain{
        {"pi", closedform::Atom::pi()},
        {"log2", closedform::Atom::log2()},
        {"logpi", closedform::Atom::log_pi()},
        {"gamma", closedform::Atom::euler_gamma()},
        {"catalan", closedform::Atom::catalan()},
        {"G", closedform::Atom::catalan()},
        {"logA", closedform::Atom::glaisher_log()},
    };
    if (auto it = plain.find(name); it != plain.end()) return ClosedForm(it->second);
    const auto parts = split(name, ':');
    const std::string& head = parts.front();
    auto need = [&](std::size_t lo, std::size_t hi) {
        if (parts.size() < lo || parts.size() > hi)
            throw std::invalid_argument("constant '" + name + "' has the wrong number of ':' fields");
    };
    if (head == "zeta") {
        need(2, 2);
        return closedform::zeta_value(to_int(parts[1], "zeta argument"));
    }
    if (head == "beta") {
        need(2, 2);
        return closedform::beta_value(to_int(parts[1], "beta argument"));
    }
    if (head == "zeta_deriv") {
        need(2, 3);
        const Q a = parts.size() == 3 ? Q::parse(parts[2]) : Q(1);
        return ClosedForm(closedform::Atom::zeta_deriv(to_int(parts[1], "zeta_deriv order"), a));
    }
    if (head == "clausen") {
        need(3, 3);
        return closedform::clausen_value(to_int(parts[1], "clausen order"), Q::parse(parts[2]));
    }
    if (head == "lgamma") {
        need(2, 2);
        return closedform::negapolygamma_value(1, Q::parse(parts[1]));
    }
    if (head == "negapolygamma") {
        need(3, 3);
        return closedform::negapolygamma_value(to_int(parts[1], "negapolygamma order"), Q::parse(parts[2]));
    }
    throw std::invalid_argument("unknown constant '" + name + "'");
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Rational zeta series toolkit: constants, sums, closed forms and verification"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all");

    int digits = 50;
    int table_digits = 30;
    std::string format = "text";
    auto digits_opt = [&](CLI::App* s, int& target) {
        s->add_option("--digits", target, "target decimal digits")->check(CLI::Range(10, 200));
    };
    auto format_opt = [&](CLI::App* s, std::vector<std::string> allowed) {
        s->add_option("--format", format, "output format")->check(CLI::IsMember(allowed));
    };

    std::string const_name;
    auto* c_const = app.add_subcommand("constant", "print a constant");
    c_const->add_option("name", const_name, "pi, log2, logpi, gamma, catalan, logA, zeta:J, beta:J, "
                                            "zeta_deriv:S[:A], clausen:M:Q, lgamma:Z, negapolygamma:M:Z")
        ->required();
    digits_opt(c_const, digits);
    format_opt(c_const, {"text", "json"});

    InstanceArgs sum_args, cf_args, ver_args;
    auto* c_sum = app.add_subcommand("sum", "sum the series of a family instance");
    sum_args.attach(c_sum);
    digits_opt(c_sum, digits);
    format_opt(c_sum, {"text", "json"});

    std::string cf_reading = "corrected";
    auto* c_cf = app.add_subcommand("closed-form", "print the closed form of a family instance");
    cf_args.attach(c_cf);
    c_cf->add_option("--reading", cf_reading, "as_printed, corrected or alternate")
        ->check(CLI::IsMember({"as_printed", "corrected", "alternate"}));
    format_opt(c_cf, {"text", "latex", "json"});

    std::string ver_reading = "corrected";
    auto* c_ver = app.add_subcommand("verify", "compare series and closed form");
    ver_args.attach(c_ver);
    c_ver->add_option("--reading", ver_reading, "as_printed, corrected, alternate or both")
        ->check(CLI::IsMember({"as_printed", "corrected", "alternate", "both"}));
    digits_opt(c_ver, digits);
    format_opt(c_ver, {"text", "json"});

    std::string config, out_path;
    std::optional<int> suite_digits, threads;
    bool golden = false, no_timing = false;
    auto* c_suite = app.add_subcommand("suite", "run a verification suite");
    c_suite->add_option("--config", config, "JSON suite configuration (default: desk-scale grid)")
        ->check(CLI::ExistingFile);
    c_suite->add_option("--out", out_path, "write the JSON report here");
    c_suite->add_option("--digits", suite_digits, "override the configured digits")->check(CLI::Range(10, 200));
    c_suite->add_option("--threads", threads, "worker threads, 0 = hardware concurrency")->check(CLI::NonNegativeNumber);
    c_suite->add_flag("--golden", golden, "also verify the golden tables");
    c_suite->add_flag("--no-timing", no_timing, "omit timing fields from the report");

    int section = 0;
    auto* c_table = app.add_subcommand("table", "reproduce one example table");
    c_table->add_option("--section", section, "table number")->required()->check(CLI::Range(2, 7));
    digits_opt(c_table, table_digits);
    format_opt(c_table, {"text", "json"});

    std::vector<const char*> argv{"rzs"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*c_const) return cmd_constant(const_name, digits, format, out);
        if (*c_sum) return cmd_sum(sum_args, digits, format, out);
        if (*c_cf) return cmd_closed_form(cf_args, cf_reading, format, out);
        if (*c_ver) return cmd_verify(ver_args, ver_reading, digits, format, out);
        if (*c_suite) return cmd_suite(config, out_path, suite_digits, threads, golden, !no_timing, out);
        if (*c_table) return cmd_table(section, table_digits, format, out);
    } catch (const DomainError& e) {
        err << "domain error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace rzs::cli
