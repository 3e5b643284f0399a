#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cga/verify.hpp"

#include <json.hpp>

using namespace cga;

TEST_CASE("registry") {
    CHECK(has_suite("ssandszeta"));
    CHECK(has_suite("mxm"));
    CHECK(has_suite("prodformula"));
    CHECK(!has_suite("bogus"));
    CHECK(suite_names().size() >= 20);
    CHECK_THROWS_AS(run_suite("bogus", Params::make(3, 4, 6), 0, 1), precondition_error);
}

TEST_CASE("single-trial run passes") {
    Params par = Params::make(3, 4, 6);
    Report rep = run_suite("ssandszeta", par, 0, 1);
    CHECK(rep.pass);
    CHECK(rep.failures.empty());
    CHECK(rep.trials == 1);
}

TEST_CASE("reports are deterministic") {
    Params par = Params::make(3, 4, 6);
    for (const std::string& name : {"star", "cbm", "mxm", "prodformula"}) {
        Report a = run_suite(name, par, 99, 10);
        Report b = run_suite(name, par, 99, 10);
        CHECK(report_json(a) == report_json(b));
    }
}

TEST_CASE("report json shape") {
    Params par = Params::make(3, 4, 6);
    Report rep = run_suite("pi", par, 5, 3);
    auto j = nlohmann::json::parse(report_json(rep));
    CHECK(j["suite"] == "pi");
    CHECK(j["p"] == 3);
    CHECK(j["precision"] == 4);
    CHECK(j["maxdeg"] == 6);
    CHECK(j["seed"] == 5);
    CHECK(j["trials"] == 3);
    CHECK(j["failures"].is_array());
    CHECK(j["elapsed_ms"] == 0);
    CHECK(j["pass"] == true);
    // fixed field order in the serialized stream
    std::string s = report_json(rep);
    CHECK(s.find("\"suite\"") < s.find("\"p\""));
    CHECK(s.find("\"failures\"") < s.find("\"elapsed_ms\""));
    CHECK(s.find("\"elapsed_ms\"") < s.find("\"pass\""));
}

TEST_CASE("every suite passes at both parameter sets") {
    for (Params par : {Params::make(3, 4, 6), Params::make(5, 3, 5)}) {
        for (const std::string& name : suite_names()) {
            Report rep = run_suite(name, par, 2024, 5);
            if (!rep.pass) {
                MESSAGE("suite ", name, " p=", par.p, " failed: ", rep.failures[0].case_id);
            }
            CHECK(rep.pass);
        }
    }
}
