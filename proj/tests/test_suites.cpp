#include <doctest.h>

#include <string>
#include <vector>

#include "jtlab/suites.hpp"

using namespace jtlab;

TEST_CASE("suite list") {
    const auto& list = suite_list();
    REQUIRE(list.size() == 7);
    const std::vector<std::string> names = {"axioms", "peirce",  "calculus", "duality",
                                            "polar",  "bisympl", "negative"};
    for (size_t i = 0; i < names.size(); ++i) {
        CHECK(list[i].name == names[i]);
        CHECK_FALSE(list[i].description.empty());
    }
}

TEST_CASE("positive suites pass on a small configuration") {
    const Descriptor d = Descriptor::type_i(1, 2);
    SuiteOptions opts;
    opts.samples = 4;
    for (const std::string name : {"axioms", "peirce", "calculus", "duality"}) {
        const SuiteReport r = run_suite(name, d, opts);
        CHECK(r.all_pass);
        CHECK(r.suite == name);
        CHECK_FALSE(r.checks.empty());
        for (const CheckResult& c : r.checks) {
            CHECK(c.pass == (c.max_residual < c.tolerance));
            CHECK(c.pass);
        }
    }
}

TEST_CASE("negative suite fails by design with honest residuals") {
    SuiteOptions opts;
    opts.samples = 4;
    const SuiteReport r = run_suite("negative", Descriptor::type_i(1, 1), opts);
    CHECK_FALSE(r.all_pass);

    bool saw_scaling = false, saw_preserved = false, saw_flat = false;
    for (const CheckResult& c : r.checks) {
        if (c.name == "scaling_fails_intertwining") {
            saw_scaling = true;
            CHECK_FALSE(c.pass);
            CHECK(c.max_residual > 0.1);
        }
        if (c.name == "moebius_preserves_hyperbolic") {
            saw_preserved = true;
            CHECK(c.pass);
        }
        if (c.name == "moebius_fails_flat") {
            saw_flat = true;
            CHECK_FALSE(c.pass);
            CHECK(c.max_residual > 0.05);
        }
    }
    CHECK(saw_scaling);
    CHECK(saw_preserved);
    CHECK(saw_flat);

    const SuiteReport rp = run_suite("negative", Descriptor::polydisc(3), opts);
    CHECK_FALSE(rp.all_pass);
    bool saw_mixing = false;
    for (const CheckResult& c : rp.checks)
        if (c.name == "mixing_fails_intertwining") {
            saw_mixing = true;
            CHECK(c.max_residual > 0.01);
        }
    CHECK(saw_mixing);
}

TEST_CASE("suite input validation") {
    SuiteOptions opts;
    CHECK_THROWS_AS(run_suite("unknown", Descriptor::type_i(1, 1), opts), BadInput);
    opts.samples = 0;
    CHECK_THROWS_AS(run_suite("axioms", Descriptor::type_i(1, 1), opts), BadInput);
}

TEST_CASE("report json schema and determinism") {
    const Descriptor d = Descriptor::polydisc(2);
    SuiteOptions opts;
    opts.samples = 3;
    const SuiteReport r = run_suite("axioms", d, opts);
    Json j = report_to_json(r);

    auto it = j.begin();
    CHECK(it.key() == "schema_version");
    CHECK(it.value() == "1");
    CHECK(j.contains("suite"));
    CHECK(j.contains("descriptor"));
    CHECK(j.contains("seed"));
    CHECK(j.contains("samples"));
    CHECK(j.contains("checks"));
    CHECK(j.contains("all_pass"));
    auto last = j.end();
    --last;
    CHECK(last.key() == "wall_time_ms");

    for (const auto& c : j["checks"]) {
        CHECK(c.contains("name"));
        CHECK(c.contains("max_residual"));
        CHECK(c.contains("tolerance"));
        CHECK(c.contains("pass"));
    }

    // identical up to timing
    Json j2 = report_to_json(run_suite("axioms", d, opts));
    j.erase("wall_time_ms");
    j2.erase("wall_time_ms");
    CHECK(j == j2);
}
