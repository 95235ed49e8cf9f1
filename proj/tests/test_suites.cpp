#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qse/json_io.hpp"
#include "qse/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

using namespace qse;

TEST_CASE("suite registry") {
    const auto names = suite_names();
    REQUIRE(names.size() == 7);
    for (const char* expect :
         {"bks", "fock", "coulomb", "localization", "dirac", "lt", "projector"})
        CHECK(std::find(names.begin(), names.end(), expect) != names.end());

    SuiteOptions o;
    CHECK_THROWS_AS(run_suite("no_such_suite", o), std::invalid_argument);
}

TEST_CASE("randomized suites pass at smoke scale") {
    SuiteOptions o;
    o.seed = 7;
    o.jobs = 2;

    for (const char* name : {"bks", "coulomb", "projector"}) {
        o.trials = 300;
        const auto r = run_suite(name, o);
        CHECK(r.name == name);
        CHECK(r.trials == 300);
        CHECK(r.failures == 0);
        CHECK(r.pass);
        CHECK(r.max_violation <= 0.0);
    }

    o.trials = 20;
    const auto fock = run_suite("fock", o);
    CHECK(fock.pass);
    CHECK(fock.failures == 0);

    o.trials = 60;
    const auto dirac = run_suite("dirac", o);
    CHECK(dirac.pass);
    CHECK(dirac.failures == 0);
    CHECK(dirac.trials >= 60);  // includes the deterministic controls

    o.trials = 1;
    const auto loc = run_suite("localization", o);
    CHECK(loc.pass);
    REQUIRE_FALSE(loc.metrics.empty());
    for (const auto& [key, value] : loc.metrics) {
        CHECK(key.find("sup_over_bound") == 0);
        CHECK(value > 0.0);
        CHECK(value <= 1.0);
    }
}

TEST_CASE("suite results are reproducible and thread-count invariant") {
    SuiteOptions a;
    a.trials = 200;
    a.seed = 42;
    a.jobs = 1;
    SuiteOptions b = a;
    b.jobs = 3;

    const auto ra = run_suite("bks", a);
    const auto rb = run_suite("bks", b);
    CHECK(ra.max_violation == rb.max_violation);
    CHECK(ra.failures == rb.failures);
    CHECK(canonical_json(suite_json(ra)) == canonical_json(suite_json(rb)));

    // the seed actually matters: use the coulomb suite, whose worst margin is
    // a continuous function of the sampled geometry (the trace-inequality
    // margin saturates at exactly -1e-10 whenever some trial hits equality)
    SuiteOptions c = a;
    const auto rc42 = run_suite("coulomb", c);
    c.seed = 43;
    const auto rc43 = run_suite("coulomb", c);
    CHECK(rc42.max_violation != rc43.max_violation);
}

TEST_CASE("advisory diagnostic suite reports ratios without failing") {
    SuiteOptions o;  // the curated well list ignores the trial count
    const auto r = run_suite("lt", o);
    CHECK(r.advisory);
    CHECK(r.pass);
    CHECK(r.trials == 3);
    REQUIRE_FALSE(r.metrics.empty());
    bool saw_ratio = false;
    for (const auto& [key, value] : r.metrics)
        if (key.find("ratio_") == 0) {
            saw_ratio = true;
            CHECK(value > 0.0);
            CHECK(value <= 1.2);
        }
    CHECK(saw_ratio);
}

TEST_CASE("canonical JSON rendering") {
    Json j;
    j["b"] = 1.0 / 3.0;
    j["a"] = std::numeric_limits<double>::quiet_NaN();
    j["c"] = {1, 2, 3};
    const std::string s = canonical_json(j);
    CHECK(s.find("\"a\": null") != std::string::npos);  // non-finite -> null
    CHECK(s.find("0.33333333333333331") != std::string::npos);  // %.17g round trip
    CHECK(s.back() == '\n');
    CHECK(s.find("\"a\"") < s.find("\"b\""));  // sorted keys
    CHECK(canonical_json(j) == s);             // byte-stable
}
