#include "rzs/verify/suite.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <fstream>
#include <functional>
#include <stdexcept>
#include <thread>

#include "rzs/families/golden.hpp"

namespace rzs::verify {

namespace {

using families::FamilyId;
using families::FamilyRange;
using families::int_range;
using Q = BigRational;

std::vector<Q> zs(std::initializer_list<Q> l) { return l; }

FamilyRange fr(FamilyId f, std::vector<int> m, std::vector<int> p, std::vector<Q> z) {
    FamilyRange r;
    r.family = f;
    r.m = std::move(m);
    r.p = std::move(p);
    r.z = std::move(z);
    return r;
}

IntegralRange ir(Theorem t, std::vector<int> m, std::vector<int> p, std::vector<Q> z, int qd) {
    return IntegralRange{t, std::move(m), std::move(p), std::move(z), qd};
}

const char* route_name(families::Route r) {
    switch (r) {
        case families::Route::AUTO: return "auto";
        case families::Route::GENERAL_Z: return "general_z";
        case families::Route::SPECIALIZED: return "specialized";
    }
    return "?";
}

families::Route route_from_name(const std::string& s) {
    if (s == "auto") return families::Route::AUTO;
    if (s == "general_z") return families::Route::GENERAL_Z;
    if (s == "specialized") return families::Route::SPECIALIZED;
    throw std::invalid_argument("unknown route '" + s + "'");
}

const char* pform_name(families::PForm p) {
    switch (p) {
        case families::PForm::AUTO: return "auto";
        case families::PForm::GENERAL_P: return "general_p";
        case families::PForm::P_ZERO: return "p_zero";
    }
    return "?";
}

families::PForm pform_from_name(const std::string& s) {
    if (s == "auto") return families::PForm::AUTO;
    if (s == "general_p") return families::PForm::GENERAL_P;
    if (s == "p_zero") return families::PForm::P_ZERO;
    throw std::invalid_argument("unknown pform '" + s + "'");
}

std::vector<int> ints(const Json& j, const char* key) {
    if (!j.contains(key)) return {};
    const Json& v = j.at(key);
    if (v.is_object()) {
        if (!v.contains("from") || !v.contains("to"))
            throw std::invalid_argument(std::string("'") + key + "' range needs 'from' and 'to'");
        return int_range(v.at("from").get<int>(), v.at("to").get<int>());
    }
    if (!v.is_array()) throw std::invalid_argument(std::string("'") + key + "' must be an array or range");
    std::vector<int> out;
    for (const auto& e : v) out.push_back(e.get<int>());
    return out;
}

std::vector<Q> rationals(const Json& j) {
    std::vector<Q> out;
    if (!j.contains("z")) return out;
    if (!j.at("z").is_array()) throw std::invalid_argument("'z' must be an array of rational strings");
    for (const auto& e : j.at("z")) out.push_back(Q::parse(e.get<std::string>()));
    return out;
}

Json ints_json(const std::vector<int>& v) { return Json(v); }

Json rationals_json(const std::vector<Q>& v) {
    Json a = Json::array();
    for (const auto& q : v) a.push_back(q.to_string());
    return a;
}

int thread_count(int requested, std::size_t jobs) {
    int n = requested > 0 ? requested : static_cast<int>(std::thread::hardware_concurrency());
    n = std::max(1, n);
    return static_cast<int>(std::min<std::size_t>(static_cast<std::size_t>(n), std::max<std::size_t>(1, jobs)));
}

// Runs every job once; slot order is fixed by the caller, so the result is
// independent of scheduling. The first failure in job order is rethrown.
void run_parallel(const std::vector<std::function<void()>>& jobs, int threads) {
    std::vector<std::exception_ptr> errors(jobs.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < jobs.size(); i = next++) {
            try {
                jobs[i]();
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    const int n = thread_count(threads, jobs.size());
    if (n == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < n; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

std::string describe(const VerificationReport& r) {
    std::string s = r.kind + " " + r.family;
    if (r.m) s += " m=" + std::to_string(*r.m);
    s += " p=" + std::to_string(r.p) + " z=" + r.z.to_string();
    if (r.reading != "n/a") s += " " + r.reading;
    return s;
}

std::string describe(const Adjudication& a) {
    std::string s = a.label.empty() ? families::family_name(a.family) : "golden " + a.label;
    if (a.m) s += " m=" + std::to_string(*a.m);
    return s + " p=" + std::to_string(a.p) + " z=" + a.z.to_string();
}

std::vector<IntegralCheck> expand(const std::vector<IntegralRange>& ranges) {
    std::vector<IntegralCheck> out;
    for (const auto& r : ranges) {
        const std::vector<std::optional<int>> ms = [&] {
            std::vector<std::optional<int>> v;
            if (!theorem_has_m(r.theorem)) return std::vector<std::optional<int>>{std::nullopt};
            for (int m : r.m) v.emplace_back(m);
            return v;
        }();
        for (const auto& m : ms)
            for (int p : r.p)
                for (const auto& z : r.z) {
                    IntegralCheck c;
                    c.theorem = r.theorem;
                    c.m = m;
                    c.p = p;
                    c.z = z;
                    c.quadrature_digits = r.quadrature_digits;
                    out.push_back(c);
                }
    }
    return out;
}

void strip(Json& j) {
    if (j.is_object()) {
        for (const char* k : {"elapsed_ms", "slowest", "slowest_ms", "total_ms"}) j.erase(k);
        for (auto& [k, v] : j.items()) strip(v);
    } else if (j.is_array()) {
        for (auto& v : j) strip(v);
    }
}

}  // namespace

SuiteConfig default_suite_config() {
    using F = FamilyId;
    SuiteConfig c;
    const auto special = zs({Q(1, 2), Q(1, 4)});
    const auto spots = zs({Q(1, 8), Q(3, 16), Q(1, 3)});
    c.families = {
        fr(F::A, {}, int_range(1, 6), special),
        fr(F::B, int_range(1, 8), int_range(0, 4), special),
        fr(F::C, int_range(0, 6), int_range(0, 4), special),
        fr(F::D, {}, int_range(1, 6), special),
        fr(F::E, int_range(1, 8), int_range(0, 4), special),
        fr(F::F, int_range(0, 6), int_range(0, 4), special),
        fr(F::B, int_range(1, 3), int_range(0, 2), spots),
        fr(F::E, int_range(1, 3), int_range(0, 2), spots),
        fr(F::F, int_range(0, 2), int_range(0, 2), zs({Q(1, 8), Q(1, 3)})),
        fr(F::X1, int_range(1, 3), int_range(0, 2), zs({Q(1, 2), Q(1, 4), Q(1, 3)})),
        fr(F::X2, int_range(0, 2), int_range(0, 2), zs({Q(1, 2), Q(1, 4), Q(1, 3)})),
    };
    const auto P = int_range(1, 4), M = int_range(1, 3);
    const auto tz = zs({Q(1, 4), Q(1, 2)});
    c.integrals = {
        ir(Theorem::T1, {}, P, tz, 12),
        ir(Theorem::T2, M, P, tz, 12),
        ir(Theorem::T3, {}, P, tz, 12),
        ir(Theorem::T4, M, P, tz, 12),
        ir(Theorem::D1, int_range(0, 2), int_range(0, 2), zs({Q(1, 4)}), 10),
        ir(Theorem::D2, int_range(0, 2), int_range(0, 2), zs({Q(1, 4)}), 10),
    };
    return c;
}

SuiteConfig golden_suite_config() {
    SuiteConfig c;
    c.golden = true;
    return c;
}

SuiteConfig suite_config_from_json(const Json& j) {
    if (!j.is_object()) throw std::invalid_argument("suite config must be a JSON object");
    SuiteConfig c;
    try {
        if (j.contains("digits")) c.digits = j.at("digits").get<int>();
        if (j.contains("threads")) {
            const Json& t = j.at("threads");
            c.threads = t.is_string() && t.get<std::string>() == "auto" ? 0 : t.get<int>();
        }
        if (j.contains("golden")) c.golden = j.at("golden").get<bool>();
        if (j.contains("golden_digits")) c.golden_digits = j.at("golden_digits").get<int>();
        if (j.contains("adjudicate")) c.adjudicate = j.at("adjudicate").get<bool>();
        if (j.contains("families"))
            for (const auto& e : j.at("families")) {
                FamilyRange r;
                r.family = families::family_from_name(e.at("family").get<std::string>());
                r.m = ints(e, "m");
                r.p = ints(e, "p");
                r.z = rationals(e);
                if (e.contains("route")) r.options.route = route_from_name(e.at("route").get<std::string>());
                if (e.contains("pform")) r.options.pform = pform_from_name(e.at("pform").get<std::string>());
                c.families.push_back(std::move(r));
            }
        if (j.contains("integrals"))
            for (const auto& e : j.at("integrals")) {
                IntegralRange r;
                r.theorem = theorem_from_name(e.at("theorem").get<std::string>());
                r.m = ints(e, "m");
                r.p = ints(e, "p");
                r.z = rationals(e);
                if (e.contains("quadrature_digits")) r.quadrature_digits = e.at("quadrature_digits").get<int>();
                c.integrals.push_back(std::move(r));
            }
    } catch (const Json::exception& e) {
        throw std::invalid_argument(std::string("malformed suite config: ") + e.what());
    }
    if (c.digits < 10 || c.digits > 200) throw std::invalid_argument("suite digits must be in 10..200");
    if (c.golden_digits < 10 || c.golden_digits > 200) throw std::invalid_argument("golden_digits must be in 10..200");
    if (c.threads < 0) throw std::invalid_argument("threads must be >= 0 or \"auto\"");
    return c;
}

Json to_json(const SuiteConfig& c) {
    Json j;
    j["digits"] = c.digits;
    j["threads"] = c.threads == 0 ? Json("auto") : Json(c.threads);
    Json fams = Json::array();
    for (const auto& r : c.families) {
        Json e;
        e["family"] = families::family_name(r.family);
        if (families::family_has_m(r.family)) e["m"] = ints_json(r.m);
        e["p"] = ints_json(r.p);
        e["z"] = rationals_json(r.z);
        e["route"] = route_name(r.options.route);
        e["pform"] = pform_name(r.options.pform);
        fams.push_back(e);
    }
    j["families"] = fams;
    Json ints_a = Json::array();
    for (const auto& r : c.integrals) {
        Json e;
        e["theorem"] = theorem_name(r.theorem);
        if (theorem_has_m(r.theorem)) e["m"] = ints_json(r.m);
        e["p"] = ints_json(r.p);
        e["z"] = rationals_json(r.z);
        e["quadrature_digits"] = r.quadrature_digits;
        ints_a.push_back(e);
    }
    j["integrals"] = ints_a;
    j["golden"] = c.golden;
    j["golden_digits"] = c.golden_digits;
    j["adjudicate"] = c.adjudicate;
    return j;
}

SuiteConfig load_suite_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open suite config '" + path + "'");
    Json j;
    try {
        j = Json::parse(in);
    } catch (const Json::exception& e) {
        throw std::invalid_argument("cannot parse suite config '" + path + "': " + e.what());
    }
    return suite_config_from_json(j);
}

SuiteResult run_suite(const SuiteConfig& c) {
    const auto t0 = std::chrono::steady_clock::now();
    const PrecisionContext ctx(c.digits);
    const PrecisionContext golden_ctx(c.golden_digits);

    auto catalog = families::catalog_enumerate(c.families, families::Reading::CORRECTED);
    const auto checks = expand(c.integrals);
    std::vector<const families::GoldenEntry*> golden;
    if (c.golden)
        for (const auto& e : families::golden_table()) golden.push_back(&e);

    // Adjudication targets: catalog instances with several distinct readings,
    // then golden entries that carry a correction.
    std::vector<std::size_t> adj_instances;
    std::vector<const families::GoldenEntry*> adj_golden;
    if (c.adjudicate) {
        for (std::size_t i = 0; i < catalog.instances.size(); ++i) {
            const auto& in = catalog.instances[i];
            if (readings_differ(in.family, in.m, in.p, in.z, in.options)) adj_instances.push_back(i);
        }
        for (const auto* e : golden)
            if (e->corrected) adj_golden.push_back(e);
    }

    SuiteResult res;
    res.skipped_grid_points = catalog.skipped;
    res.digits = c.digits;
    res.golden_digits = c.golden_digits;
    const std::size_t n_id = catalog.instances.size();
    res.reports.resize(n_id + checks.size() + golden.size());
    res.adjudications.resize(adj_instances.size() + adj_golden.size());

    std::vector<std::function<void()>> jobs;
    for (std::size_t i = 0; i < n_id; ++i)
        jobs.emplace_back([&, i] { res.reports[i] = verify_identity(catalog.instances[i], ctx); });
    for (std::size_t i = 0; i < checks.size(); ++i)
        jobs.emplace_back([&, i] { res.reports[n_id + i] = verify_integral(checks[i]); });
    for (std::size_t i = 0; i < golden.size(); ++i)
        jobs.emplace_back([&, i] {
            res.reports[n_id + checks.size() + i] = verify_golden(*golden[i], families::Reading::CORRECTED, golden_ctx);
        });
    for (std::size_t i = 0; i < adj_instances.size(); ++i)
        jobs.emplace_back([&, i] {
            const auto& in = catalog.instances[adj_instances[i]];
            res.adjudications[i] = adjudicate_reading(in.family, in.m, in.p, in.z, ctx, in.options);
        });
    for (std::size_t i = 0; i < adj_golden.size(); ++i)
        jobs.emplace_back(
            [&, i] { res.adjudications[adj_instances.size() + i] = adjudicate_golden(*adj_golden[i], golden_ctx); });
    run_parallel(jobs, c.threads);

    SuiteSummary& s = res.summary;
    for (const auto& r : res.reports) {
        switch (r.status) {
            case Status::PASS: ++s.pass; break;
            case Status::FAIL: ++s.fail; break;
            case Status::DOMAIN_SKIP: ++s.skip; break;
        }
        if (r.status != Status::DOMAIN_SKIP) s.worst_digits = std::min(s.worst_digits.value_or(r.digits), r.digits);
        if (r.elapsed_ms > s.slowest_ms) {
            s.slowest_ms = r.elapsed_ms;
            s.slowest = describe(r);
        }
    }
    for (const auto& a : res.adjudications)
        if (a.outcome == Outcome::CONTRADICTION) s.contradictions.push_back(describe(a));
    s.total_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return res;
}

Json to_json(const SuiteResult& r, bool include_timing) {
    auto shown = [&](const VerificationReport& x) {
        if (x.kind == "integral") return x.required_digits + 2;
        return x.kind == "golden" ? r.golden_digits : r.digits;
    };
    Json j;
    Json reps = Json::array();
    for (const auto& x : r.reports) reps.push_back(to_json(x, shown(x), include_timing));
    j["reports"] = reps;
    Json adj = Json::array();
    for (const auto& a : r.adjudications)
        adj.push_back(to_json(a, a.label.empty() ? r.digits : r.golden_digits, include_timing));
    j["adjudications"] = adj;
    const SuiteSummary& s = r.summary;
    Json sj;
    sj["pass"] = s.pass;
    sj["fail"] = s.fail;
    sj["skip"] = s.skip;
    sj["worst_digits"] = s.worst_digits ? Json(*s.worst_digits) : Json(nullptr);
    sj["contradictions"] = s.contradictions;
    sj["adjudications"] = r.adjudications.size();
    sj["skipped_grid_points"] = r.skipped_grid_points;
    if (include_timing) {
        sj["slowest"] = s.slowest;
        sj["slowest_ms"] = std::round(s.slowest_ms * 1000) / 1000;
        sj["total_ms"] = std::round(s.total_ms * 1000) / 1000;
    }
    j["summary"] = sj;
    return j;
}

void write_suite_report(const SuiteResult& r, const std::string& path, bool include_timing) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    out << to_json(r, include_timing).dump(2) << '\n';
    out.flush();
    if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

Json strip_timing(Json j) {
    strip(j);
    return j;
}

}  // namespace rzs::verify
