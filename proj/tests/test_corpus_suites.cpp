#include <doctest.h>

#include <cstdlib>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "annigraph/suites.hpp"

using namespace annigraph;

namespace {

CorpusSpec ints_only(int64_t bound) {
    CorpusSpec s;
    s.zmod = false;
    s.product = false;
    s.max_module_order = bound;
    return s;
}

CorpusSpec zmod_only(int64_t ring_bound, int64_t module_bound = 64) {
    CorpusSpec s;
    s.integers = false;
    s.product = false;
    s.max_ring_order = ring_bound;
    s.max_module_order = module_bound;
    return s;
}

std::vector<std::string> names_of(const std::vector<InstanceSpec>& v) {
    std::vector<std::string> out;
    for (const auto& i : v) out.push_back(i.name());
    return out;
}

bool has(const SuiteReport& r, const std::string& needle) {
    REQUIRE(r.witness.has_value());
    return r.witness->find(needle) != std::string::npos;
}

} // namespace

TEST_CASE("integer corpus at bound eight") {
    auto names = names_of(enumerate_corpus(ints_only(8)));
    CHECK(names == std::vector<std::string>(
                       {"[2] over Z", "[3] over Z", "[2,2] over Z", "[4] over Z",
                        "[5] over Z", "[6] over Z", "[7] over Z", "[2,2,2] over Z",
                        "[2,4] over Z", "[8] over Z"}));
}

TEST_CASE("residue corpus counts and shapes") {
    auto v = enumerate_corpus(zmod_only(4, 16));
    CHECK(v.size() == 14);
    /* factors always divide the modulus and come nondecreasing */
    for (const auto& i : v) {
        int64_t n = std::stoll(i.ring.substr(2));
        for (std::size_t k = 0; k < i.factors.size(); ++k) {
            CHECK(n % i.factors[k].order == 0);
            if (k) CHECK(i.factors[k - 1].order <= i.factors[k].order);
        }
    }
}

TEST_CASE("product corpus tags components") {
    CorpusSpec s;
    s.integers = false;
    s.zmod = false;
    s.max_ring_order = 6;
    auto v = enumerate_corpus(s);
    REQUIRE(!v.empty());
    CHECK(v.front().ring == "Z/2 x Z/2");
    std::set<std::string> rings;
    for (const auto& i : v) {
        rings.insert(i.ring);
        CHECK(i.name().find('@') != std::string::npos);
        for (const auto& f : i.factors) CHECK((f.comp == 0 || f.comp == 1));
    }
    CHECK(rings == std::set<std::string>({"Z/2 x Z/2", "Z/2 x Z/3"}));
}

TEST_CASE("corpus names are unique and instances well formed") {
    CorpusSpec s;
    s.max_module_order = 16;
    s.max_ring_order = 9;
    auto v = enumerate_corpus(s);
    std::set<std::string> seen;
    for (const auto& i : v) CHECK(seen.insert(i.name()).second);
    for (std::size_t k = 0; k < v.size(); k += 7) {
        ModulePtr m = instantiate(v[k]);
        check_module_axioms(*m);
    }
    /* integers block keeps invariant factor chains */
    for (const auto& i : v) {
        if (i.ring != "Z") continue;
        for (std::size_t k = 1; k < i.factors.size(); ++k)
            CHECK(i.factors[k].order % i.factors[k - 1].order == 0);
    }
}

TEST_CASE("suite registry") {
    const auto& names = suite_names();
    CHECK(names.size() == 37);
    CHECK(names.front() == "containment");
    CHECK(names.back() == "essential-modes");
    CHECK_THROWS_AS(run_suite("nope", ints_only(4)), std::invalid_argument);
}

TEST_CASE("structural suites pass on the small integer corpus") {
    for (const char* suite : {"containment", "annihilator-membership",
                              "no-large-cycles", "exp-reduction",
                              "class-cardinality", "similar-square-flags"}) {
        SuiteReport r = run_suite(suite, ints_only(16));
        CHECK(r.status == "pass");
        CHECK(r.instances_checked == 24);
        CHECK_FALSE(r.witness.has_value());
    }
}

TEST_CASE("full and semi flavors split over a field") {
    SuiteReport r = run_suite("coincidence", zmod_only(2, 4));
    CHECK(r.status == "counterexample");
    CHECK(has(r, "[2,2] over Z/2"));
}

TEST_CASE("neighbourhood similarity does not bound cyclic size") {
    SuiteReport r = run_suite("theta-classes", ints_only(12));
    CHECK(r.status == "counterexample");
    CHECK(has(r, "[2,6] over Z"));
    CHECK(run_suite("theta-classes", ints_only(11)).status == "pass");
}

TEST_CASE("neighbourhood classes can refine annihilator classes") {
    SuiteReport r16 = run_suite("nbd-vs-submodule", ints_only(16));
    CHECK(r16.status == "counterexample");
    CHECK(has(r16, "[16] over Z"));
    SuiteReport r15 = run_suite("nbd-vs-submodule", ints_only(15));
    CHECK(r15.status == "pass");
    CHECK(r15.hypothesis_satisfied > 0);
}

TEST_CASE("star conclusion fails on the bipartite instance") {
    SuiteReport r = run_suite("star-structure", ints_only(15));
    CHECK(r.status == "counterexample");
    CHECK(has(r, "[15] over Z"));
    CHECK(run_suite("star-structure", ints_only(14)).status == "pass");
}

TEST_CASE("nil formula and prime intersection disagree") {
    SuiteReport r = run_suite("nil-consistency", ints_only(4));
    CHECK(r.status == "counterexample");
    CHECK(has(r, "[2,2] over Z"));
}

TEST_CASE("nil membership is not the squared colon condition") {
    SuiteReport r = run_suite("nil-square-equivalence", ints_only(8));
    CHECK(r.status == "counterexample");
    CHECK(has(r, "[2,4] over Z"));
    CHECK(has(r, "(0,1)"));
}

TEST_CASE("isomorphic graphs with different socles") {
    SuiteReport r = run_suite("socle-from-graph", ints_only(8));
    CHECK(r.status == "counterexample");
    CHECK(has(r, "[6] over Z"));
    CHECK(has(r, "[8] over Z"));
}

TEST_CASE("semisimple modules are not determined by their full graphs") {
    CorpusSpec s;
    s.integers = false;
    s.zmod = false;
    s.max_ring_order = 4;
    s.max_module_order = 4;
    SuiteReport r = run_suite("semisimple-reconstruction", s);
    CHECK(r.status == "counterexample");
    CHECK(has(r, "[2@0,2@0]"));
    CHECK(has(r, "[2@1,2@1]"));
    /* with only simple modules every graph is empty and no pair qualifies */
    s.max_module_order = 2;
    CHECK(run_suite("semisimple-reconstruction", s).status ==
          "hypothesis-never-satisfied");
}

TEST_CASE("semi graph collapses under localization over Z/6") {
    SuiteReport r = run_suite("fraction-semi-star", zmod_only(6));
    CHECK(r.status == "counterexample");
    CHECK(has(r, "[2,2] over Z/6"));
}

TEST_CASE("zero divisor oracle covers one mirror per modulus") {
    CorpusSpec s = zmod_only(12);
    SuiteReport r = run_suite("zdg-oracle", s);
    CHECK(r.status == "pass");
    CHECK(r.hypothesis_satisfied == 11);
}

TEST_CASE("worked example class count") {
    SuiteReport r = run_suite("fixed-graph-classes", ints_only(2));
    CHECK(r.status == "counterexample");
    CHECK(r.instances_checked == 1);
    CHECK(has(r, "6"));
    CHECK(has(r, "5 claimed"));
}

TEST_CASE("intersection scan reports its disagreement tally") {
    SuiteReport r = run_suite("essential-intersection-scan", ints_only(12));
    CHECK(r.status != "counterexample");
    bool tallied = false;
    for (const auto& a : r.assumptions)
        if (a.find("disagreements:") != std::string::npos) tallied = true;
    CHECK(tallied);
}

TEST_CASE("reports serialize identically for any worker count") {
    CorpusSpec s = ints_only(12);
    setenv("ANNIGRAPH_WORKERS", "1", 1);
    std::string one = serialize_reports(run_all(s));
    setenv("ANNIGRAPH_WORKERS", "5", 1);
    std::string five = serialize_reports(run_all(s));
    unsetenv("ANNIGRAPH_WORKERS");
    CHECK(one == five);
    CHECK(one.find("\"suite\": \"containment\"") != std::string::npos);
}
