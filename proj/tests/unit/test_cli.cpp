#include <cmath>
#include <set>
#include <string>

#include "cli_support.hpp"
#include "commands.hpp"
#include "doctest.h"
#include "psilab/errors.hpp"

using namespace psilab;
using namespace psilab::cli;

TEST_CASE("parse_complex: accepted forms") {
    CHECK(parse_complex("2") == Complex(2.0, 0.0));
    CHECK(parse_complex("2+0i") == Complex(2.0, 0.0));
    CHECK(parse_complex("0.5+14.134725i") == Complex(0.5, 14.134725));
    CHECK(parse_complex("1+1e-12i") == Complex(1.0, 1e-12));
    CHECK(parse_complex("-2.5-1e-3i") == Complex(-2.5, -1e-3));
    CHECK(parse_complex("1e+2-3i") == Complex(100.0, -3.0));
    CHECK(parse_complex("3i") == Complex(0.0, 3.0));
    CHECK(parse_complex("-i") == Complex(0.0, -1.0));
    CHECK(parse_complex("1+i") == Complex(1.0, 1.0));
    CHECK(parse_complex("+4") == Complex(4.0, 0.0));
}

TEST_CASE("parse_complex: rejected forms") {
    for (const char* bad : {"", "abc", "1 + 2i", "2+3j", "1+2ii", "nan", "inf", "1..2", "i2"}) {
        CAPTURE(bad);
        CHECK_THROWS_AS(parse_complex(bad), UsageError);
    }
}

TEST_CASE("parse_real_range: spans, lists and singletons") {
    const auto span = parse_real_range("1..5:5");
    REQUIRE(span.size() == 5);
    CHECK(span.front() == 1.0);
    CHECK(span[2] == 3.0);
    CHECK(span.back() == 5.0);
    CHECK(parse_real_range("0.3..0.9:4").back() == 0.9);
    CHECK(parse_real_range("2..2:1") == std::vector<double>{2.0});
    CHECK(parse_real_range("0,-1,2.5") == std::vector<double>{0.0, -1.0, 2.5});
    CHECK(parse_real_range("7") == std::vector<double>{7.0});
    for (const char* bad : {"", "1..2", "1..2:0", "1..2:x", "1..x:3", "1,,2", "3..4:1", "1..2:3:4"}) {
        CAPTURE(bad);
        CHECK_THROWS_AS(parse_real_range(bad), UsageError);
    }
}

TEST_CASE("parse_complex_range: interpolates both parts") {
    const auto zs = parse_complex_range("1+2i..3+6i:3");
    REQUIRE(zs.size() == 3);
    CHECK(zs[1] == Complex(2.0, 4.0));
    CHECK(parse_complex_range("0.5+14.13i,2").size() == 2);
}

TEST_CASE("format_real: 17 significant digits round-trip") {
    CHECK(format_real(0.1) == "0.10000000000000001");
    CHECK(format_real(2.0) == "2");
    CHECK(format_real(-1e-300) == "-1e-300");
    CHECK(format_real(1.0 / 3.0) == "0.33333333333333331");
    for (const double v : {M_PI, 1.0 / 3.0, 6.02214076e23, -2.5e-17}) CHECK(parse_real(format_real(v)) == v);
    CHECK(format_complex(Complex(0.5, -2.0)) == "0.5-2i");
    CHECK(format_complex(Complex(1.0, -0.0)) == "1+0i");
    CHECK(parse_complex(format_complex(Complex(0.1, 0.7))) == Complex(0.1, 0.7));
}

TEST_CASE("to_csv: header, column order, LF endings") {
    RunReport report;
    report.command = "demo";
    report.columns = {"claim", "a", "b", "pass"};
    Row row;
    row.claim = "c";
    row.set("b", 0.1).set("a", std::string("x"));
    report.add(row);
    Row failing;
    failing.claim = "d";
    failing.set("a", 3LL).set("b", true);
    failing.pass = false;
    report.add(failing);
    CHECK(to_csv(report) == "claim,a,b,pass\nc,x,0.10000000000000001,true\nd,3,true,false\n");
    CHECK_FALSE(report.pass);
}

TEST_CASE("to_json: fixed top-level field set") {
    RunReport report;
    report.command = "demo";
    report.parameters = {{"z", "2+0i"}};
    report.columns = {"claim", "v", "pass"};
    Row row;
    row.claim = "c";
    row.set("v", std::nan(""));
    report.add(row);
    report.wall_time_ms = 12;
    const auto json = to_json(report);
    std::set<std::string> keys;
    for (const auto& item : json.items()) keys.insert(item.key());
    CHECK(keys == std::set<std::string>{"command", "parameters", "rows", "pass", "tolerance_used", "wall_time_ms"});
    CHECK(json["rows"][0]["claim"] == "c");
    CHECK(json["rows"][0]["v"] == "nan");
    CHECK(json["parameters"]["z"] == "2+0i");
    CHECK(json["pass"] == true);
    CHECK(nlohmann::ordered_json::parse(json.dump()) == json);
}

TEST_CASE("cmd_eval: all methods agree at z = 2") {
    EvalOptions opt;
    opt.z = 2.0;
    const RunReport r = cmd_eval(opt);
    CHECK(r.pass);
    REQUIRE(r.rows.size() == 6);
    CHECK(std::get<double>(*r.rows[0].find("value_re")) == doctest::Approx(1.6449340668).epsilon(1e-10));
    CHECK(r.rows[3].claim == "cross-method-agreement");

    opt.z = Complex(1.0, 1e-12);
    CHECK_THROWS_AS(cmd_eval(opt), PoleError);
    opt.z = Complex(0.5, 14.134725);
    opt.method = "em";
    const RunReport zero = cmd_eval(opt);
    REQUIRE(zero.rows.size() == 1);
    CHECK(std::hypot(std::get<double>(*zero.rows[0].find("value_re")), std::get<double>(*zero.rows[0].find("value_im"))) <
          1e-6);
    opt.method = "simpson";
    CHECK_THROWS_AS(cmd_eval(opt), UsageError);
}

TEST_CASE("cmd_feq: examples") {
    FeqOptions opt;
    opt.z = parse_complex_range("2..4:3");
    opt.x = parse_real_range("1..5:5");
    opt.method = "series";
    const RunReport series = cmd_feq(opt);
    CHECK(series.pass);
    CHECK(series.rows.size() == 15);
    for (const Row& row : series.rows) CHECK(std::get<double>(*row.find("residual")) <= 1e-10);

    opt.z = parse_complex_range("0.3..0.9:4");
    opt.x = parse_real_range("0.5..3:6");
    opt.method = "integral";
    CHECK(cmd_feq(opt).pass);

    opt.x = {0.0, 1.0};
    CHECK_THROWS_AS(cmd_feq(opt), UsageError);
}

TEST_CASE("cmd_norm_scan: exact CSV columns and verdicts") {
    NormScanOptions opt;
    opt.sigma = {0.5};
    opt.t = {14.13};
    opt.alpha = {0.0, -2.5};
    const RunReport r = cmd_norm_scan(opt);
    CHECK(r.pass);
    const std::string csv = to_csv(r);
    CHECK(csv.substr(0, csv.find('\n')) == "sigma,t,alpha,fitted_exponent,predicted_exponent,verdict,threshold_sigma");
    CHECK(std::get<std::string>(*r.rows[0].find("verdict")) == "Divergent");
    CHECK(std::get<std::string>(*r.rows[1].find("verdict")) == "Convergent");

    opt = {{2.0}, {0.0}, {0.0}};
    CHECK(std::get<std::string>(*cmd_norm_scan(opt).rows[0].find("verdict")) == "Convergent");
}

TEST_CASE("cmd_operators: experiments and grid errors") {
    OperatorOptions opt;
    opt.experiment = "defect";
    CHECK(cmd_operators(opt).pass);
    opt.experiment = "shift";
    CHECK(cmd_operators(opt).pass);
    opt.h = 0.03;
    CHECK_THROWS_AS(cmd_operators(opt), GridMismatch);
    opt.h = 0.02;
    opt.length = 20.0;
    for (const char* e : {"momentum", "dilation", "intertwine"}) {
        opt.experiment = e;
        CAPTURE(e);
        CHECK(cmd_operators(opt).pass);
    }
    opt.experiment = "spectrum";
    CHECK_THROWS_AS(cmd_operators(opt), UsageError);
}

TEST_CASE("cmd_suite: profiles") {
    CHECK_THROWS_AS(cmd_suite({"medium"}), UsageError);
    const RunReport fast = cmd_suite({"fast"});
    CHECK(fast.pass);
    std::set<long long> criteria;
    for (const Row& row : fast.rows) criteria.insert(std::get<long long>(*row.find("criterion")));
    CHECK(criteria.size() == 11);
    CHECK(to_csv(fast) == to_csv(cmd_suite({"fast"})));
}
