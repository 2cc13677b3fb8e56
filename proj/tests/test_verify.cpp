#include "doctest.h"

#include "lpa/report.hpp"
#include "lpa/verify.hpp"

#include "corpus.hpp"

using namespace lpa;
using namespace lpa::testing;

TEST_CASE("all oracles pass on every corpus graph") {
    for (auto& named_graph : corpus()) {
        const std::string& name = named_graph.first;
        const Graph& g = named_graph.second;
        CAPTURE(name);
        VerifyOptions opts;
        opts.limits.max_len = 2;
        auto results = run_verification(g, opts);
        CHECK(results.size() == 8);
        for (const auto& r : results) {
            CAPTURE(r.name);
            CAPTURE(r.certificate);
            CHECK(r.passed);
        }
    }
}

TEST_CASE("the empty graph passes verification") {
    Graph g({}, {});
    CHECK(all_passed(run_verification(g)));
}

TEST_CASE("injected faults are caught with certificates") {
    auto failing_oracles = [](const Graph& g, Fault fault) {
        VerifyOptions opts;
        opts.fault = fault;
        opts.limits.max_len = 2;
        std::vector<OracleResult> failures;
        for (const auto& r : run_verification(g, opts))
            if (!r.passed) failures.push_back(r);
        return failures;
    };

    SUBCASE("flipped reflexivity verdicts break the equivalence oracle") {
        auto failures = failing_oracles(two_petal_rose(), Fault::FlipReflexiveVerdicts);
        REQUIRE(!failures.empty());
        bool hit = false;
        for (const auto& f : failures) {
            CHECK(!f.certificate.empty());
            if (f.name == "all_reflexive_equivalence") hit = true;
        }
        CHECK(hit);
    }
    SUBCASE("tampered annihilator pairs break the closure laws") {
        auto failures = failing_oracles(breaking_basic(), Fault::TamperAnnihilatorPair);
        REQUIRE(!failures.empty());
        bool hit = false;
        for (const auto& f : failures)
            if (f.name == "closure_laws") hit = true;
        CHECK(hit);
        CHECK(!failures.front().certificate.empty());
    }
    SUBCASE("a corrupted lattice verdict breaks the Boolean equivalence") {
        auto failures = failing_oracles(fork_graph(), Fault::ForceNotDistributive);
        REQUIRE(!failures.empty());
        CHECK(failures.front().name == "boolean_iff_all_reflexive");
        CHECK(!failures.front().certificate.empty());
    }
    SUBCASE("a smuggled generator breaks the symbolic annihilation oracle") {
        auto failures = failing_oracles(fork_graph(), Fault::CorruptGenerators);
        REQUIRE(!failures.empty());
        CHECK(failures.front().name == "symbolic_annihilation");
        CHECK(failures.front().certificate.find("nonzero product") != std::string::npos);
    }
}

TEST_CASE("verify report aggregates results with a stable shape") {
    Graph g = fork_graph();
    VerifyOptions opts;
    auto report = verify_report(g, opts, "full");
    CHECK(report["all_passed"] == true);
    CHECK(report["oracles"].size() == 8);
    CHECK(report["maxlen"] == 2);
    CHECK(report["omega_instance_cap"] == 3);
    for (const auto& row : report["oracles"]) {
        CHECK(row.contains("name"));
        CHECK(row.contains("passed"));
    }
    CHECK(report.dump() == verify_report(g, opts, "full").dump());
}
