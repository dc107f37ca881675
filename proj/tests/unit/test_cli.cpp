#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include "doctest.h"
#include "test_util.hpp"

#include "cli.hpp"
#include "rzs/closedform/evaluate.hpp"
#include "rzs/closedform/render.hpp"
#include "rzs/families/serialize.hpp"
#include "rzs/verify/report.hpp"

using namespace rzs;
using verify::Json;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run run_cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = rzs::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

}  // namespace

TEST_CASE("constant") {
    auto r = run_cli({"constant", "catalan", "--digits", "30"});
    CHECK(r.code == 0);
    CHECK(first_line(r.out) == "0.915965594177219015054603514932");
    CHECK(first_line(run_cli({"constant", "G", "--digits", "30"}).out) == first_line(r.out));
    CHECK(first_line(run_cli({"constant", "zeta:0", "--digits", "10"}).out) == "-0.5000000000");
    CHECK(first_line(run_cli({"constant", "clausen:2:1/2", "--digits", "20"}).out) == "0.91596559417721901505");
    CHECK(first_line(run_cli({"constant", "zeta_deriv:-2:1/4", "--digits", "12"}).out) == "-0.0109345764448");
    CHECK(first_line(run_cli({"constant", "lgamma:1/3", "--digits", "15"}).out) == "0.985420646927767");
    r = run_cli({"constant", "nope"});
    CHECK(r.code == 2);
    CHECK(r.err.find("unknown constant") != std::string::npos);
    CHECK(run_cli({"constant", "zeta:1"}).code == 2);
    CHECK(run_cli({"constant", "pi", "--digits", "5"}).code == 2);
    CHECK(run_cli({"constant", "pi", "--digits", "201"}).code == 2);
}

TEST_CASE("constant JSON") {
    auto r = run_cli({"constant", "logA", "--format", "json", "--digits", "20"});
    REQUIRE(r.code == 0);
    const Json j = Json::parse(r.out);
    CHECK(j["name"] == "logA");
    CHECK(j["value"] == "0.24875447703378426255");
}

TEST_CASE("digits prefix property") {
    for (const std::vector<std::string>& q :
         {std::vector<std::string>{"constant", "catalan"}, {"constant", "zeta:5"}, {"constant", "clausen:3:1/3"},
          {"sum", "--family", "A", "--p", "1", "--z", "1/2"}, {"sum", "--family", "E", "--m", "2", "--p", "1", "--z", "1/4"}}) {
        for (int d : {20, 37, 50}) {
            auto a = q, b = q;
            a.insert(a.end(), {"--digits", std::to_string(d)});
            b.insert(b.end(), {"--digits", std::to_string(2 * d)});
            const std::string lo = first_line(run_cli(a).out), hi = first_line(run_cli(b).out);
            // D - 5 significant digits plus sign, leading zeros and the point
            const std::size_t lead = lo.find_first_not_of("-0.");
            const std::string cut = lo.substr(0, lead + static_cast<std::size_t>(d - 5) + 1);
            CAPTURE(lo);
            CAPTURE(hi);
            CHECK(hi.rfind(cut, 0) == 0);
        }
    }
}

TEST_CASE("sum") {
    auto r = run_cli({"sum", "--family", "A", "--p", "1", "--z", "1/2"});
    CHECK(r.code == 0);
    CHECK(first_line(r.out) == "0.69314718055994530941723212145817656807550013436026");
    r = run_cli({"sum", "--family", "B", "--m", "1", "--p", "0", "--z", "1/2", "--format", "json"});
    REQUIRE(r.code == 0);
    const Json j = Json::parse(r.out);
    CHECK(families::series_from_json(j["series"]) == families::family_lhs(families::FamilyId::B, 1, 0, BigRational(1, 2)));
    CHECK(j["terms"].get<long>() > 0);
    CHECK(run_cli({"sum", "--family", "B", "--p", "0", "--z", "1/2"}).code == 2);
    CHECK(run_cli({"sum", "--family", "B", "--m", "1", "--p", "0", "--z", "0.5"}).code == 2);
    CHECK(run_cli({"sum", "--family", "B", "--m", "1", "--p", "0", "--z", "9/10"}).code == 2);
}

TEST_CASE("closed-form") {
    const std::vector<std::string> base{"closed-form", "--family", "B", "--m", "1", "--p", "0", "--z", "1/4"};
    auto r = run_cli(base);
    CHECK(first_line(r.out) == "2·pi^-1·G - log2 + log(pi) - 1");
    auto tex = base;
    tex.insert(tex.end(), {"--format", "latex"});
    CHECK(first_line(run_cli(tex).out) == "\\frac{2\\,G}{\\pi} - \\log 2 + \\log\\pi - 1");
    auto js = base;
    js.insert(js.end(), {"--format", "json"});
    r = run_cli(js);
    REQUIRE(r.code == 0);
    const auto inst = families::instance_from_json(Json::parse(r.out));
    CHECK(inst.rhs == families::make_instance(families::FamilyId::B, 1, 0, BigRational(1, 4)).rhs);
    CHECK(run_cli({"closed-form", "--family", "C", "--m", "1", "--p", "0", "--z", "1/4", "--reading", "as_printed"}).out !=
          run_cli({"closed-form", "--family", "C", "--m", "1", "--p", "0", "--z", "1/4"}).out);
    CHECK(run_cli({"closed-form", "--family", "B", "--m", "1", "--p", "0", "--z", "1/4", "--reading", "alternate"}).code == 2);
}

TEST_CASE("verify") {
    auto r = run_cli({"verify", "--family", "B", "--m", "1", "--p", "0", "--z", "1/2"});
    CHECK(r.code == 0);
    CHECK(r.out.find("rhs      log(pi) - 1") != std::string::npos);
    CHECK(r.out.find("status   PASS") != std::string::npos);
    r = run_cli({"verify", "--family", "C", "--m", "1", "--p", "0", "--z", "1/4", "--reading", "as_printed"});
    CHECK(r.code == 1);
    CHECK(r.out.find("status   FAIL") != std::string::npos);
    r = run_cli({"verify", "--family", "C", "--m", "1", "--p", "0", "--z", "1/4", "--reading", "both", "--digits", "30"});
    CHECK(r.code == 0);
    CHECK(r.out.find("outcome  CHOSEN (corrected)") != std::string::npos);
    r = run_cli({"verify", "--family", "E", "--m", "2", "--p", "1", "--z", "1/3", "--format", "json"});
    REQUIRE(r.code == 0);
    const Json j = Json::parse(r.out);
    CHECK(j["status"] == "PASS");
    CHECK(j["family"] == "E");
    CHECK(j["reading"] == "corrected");
    CHECK(run_cli({"verify", "--family", "A", "--m", "1", "--p", "1", "--z", "1/2"}).code == 2);
    CHECK(run_cli({"verify", "--family", "B", "--m", "1", "--p", "0", "--z", "1/2", "--reading", "maybe"}).code == 2);
}

TEST_CASE("table") {
    auto r = run_cli({"table", "--section", "3"});
    CHECK(r.code == 0);
    CHECK(r.out.find("table 3: 11 sums at 30 digits") != std::string::npos);
    CHECK(r.out.find("corrected:") != std::string::npos);
    CHECK(r.out.find("FAIL") == std::string::npos);
    r = run_cli({"table", "--section", "5", "--format", "json"});
    REQUIRE(r.code == 0);
    const Json j = Json::parse(r.out);
    CHECK(j.size() == 5);
    for (const auto& row : j) CHECK(row["status"] == "PASS");
    CHECK(run_cli({"table", "--section", "8"}).code == 2);
    CHECK(run_cli({"table"}).code == 2);
}

TEST_CASE("suite") {
    const auto dir = std::filesystem::temp_directory_path();
    const auto cfg = (dir / "rzs_cli_suite.json").string();
    const auto out = (dir / "rzs_cli_report.json").string();
    {
        std::ofstream f(cfg);
        f << R"({"digits": 30, "families": [{"family": "D", "p": [1, 2], "z": ["1/4"]}]})";
    }
    auto r = run_cli({"suite", "--config", cfg, "--out", out, "--no-timing"});
    CHECK(r.code == 0);
    CHECK(r.out.find("pass 2, fail 0, skip 0") != std::string::npos);
    std::ifstream in(out);
    const Json j = Json::parse(in);
    CHECK(j["reports"].size() == 2);
    CHECK(j["adjudications"].size() == 2);
    CHECK_FALSE(j["summary"].contains("total_ms"));
    CHECK(j["summary"]["contradictions"].empty());
    std::filesystem::remove(cfg);
    std::filesystem::remove(out);
    CHECK(run_cli({"suite", "--config", "/nonexistent.json"}).code == 2);
}

TEST_CASE("usage errors") {
    CHECK(run_cli({}).code == 2);
    CHECK(run_cli({"frobnicate"}).code == 2);
    auto r = run_cli({"--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find("closed-form") != std::string::npos);
}

TEST_CASE("installed binary exit codes") {
    const std::string bin = RZS_CLI_PATH;
    auto status = [&](const std::string& args) {
        const int raw = std::system((bin + " " + args + " > /dev/null 2>&1").c_str());
        return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    };
    CHECK(status("constant pi --digits 12") == 0);
    CHECK(status("verify --family C --m 1 --p 0 --z 1/4 --reading as_printed --digits 20") == 1);
    CHECK(status("constant pi --digits 3") == 2);
}
