#include <doctest.h>

#include "semidp/completability.hpp"
#include "semidp/errors.hpp"
#include "semidp/fixtures.hpp"
#include "semidp/oracle.hpp"

using namespace semidp;

namespace {

const Variable X{0, 2}, Y{1, 2};

}  // namespace

TEST_CASE("fixtures: every fixture check passes") {
    const auto checks = run_fixture_checks();
    CHECK(checks.size() >= 20);
    for (const auto& c : checks) CHECK_MESSAGE(c.passed, std::string(c.fixture + " / " + c.check + ": " + c.detail));
}

TEST_CASE("fixtures: lookup by name") {
    for (const auto& f : all_fixtures()) CHECK(fixture_by_name(f.name).name == f.name);
    CHECK_THROWS_AS(fixture_by_name("nope"), DomainError);
    auto q = completability_quadrants();
    REQUIRE(q.size() == 4);
    CHECK(q[0].name == "quadrant-neither");
    CHECK(q[1].name == "quadrant-projective-only");
    CHECK(q[2].name == "quadrant-piecewise-only");
    CHECK(q[3].name == "quadrant-both");
}

TEST_CASE("fixtures: indicator-induced system") {
    auto f = counterexample_2();
    const auto& w = f.extension_system();
    const Valuation phi = combine(f.factors[0], f.factors[1]);
    CHECK(w.solutions(phi) == SolutionSet::of(Scope{X, Y}, {Tuple(Scope{X, Y}, {0, 0}), Tuple(Scope{X, Y}, {1, 1})}));
    auto cx = w.solutions(f.factors[0]);
    CHECK(completions(cx, f.factors[1], w).size() == 4);
    CHECK(check_fces(w, {phi}).passed());
    const Variable z{2, 2};
    CHECK_THROWS_AS(w.solutions(Valuation::constant(Semiring::boolean(), Scope{z}, 1)), ValidationError);
    CHECK_THROWS_AS(w.solutions(Valuation::constant(Semiring::max_plus(), Scope{X}, 1)), ValidationError);
}

TEST_CASE("fixtures: four-element semiring instance") {
    auto f = counterexample_3();
    CHECK(f.semiring->name() == "counter3");
    for (Value b = 0; b < 4; ++b) CHECK(f.semiring->mul(2, b) == std::vector<Value>{0, 2, 2, 3}[b]);
    CHECK(oracle::brute_solutions(f.factors).value.size() == 3);
    CHECK(classify(*f.semiring).at("EGP", "complete").verdict == Soundness::NotGuaranteed);
    CHECK(f.expect_projective == false);
    CHECK(f.expect_piecewise == true);
}

TEST_CASE("fixtures: restricted-solution family") {
    RestrictedSolutionSystem w(X, Y);
    auto p1 = w.member(1, 0, 0);
    CHECK(p1.label() == Scope{X});
    CHECK(p1.table() == std::vector<Value>{2, 1});
    CHECK(w.in_family(p1));
    CHECK(w.restricted_solutions(p1) == SolutionSet::all(Scope{X}));
    auto both = w.member(1, 1, 2);
    CHECK(both.table() == std::vector<Value>{6, 5, 5, 4});
    CHECK(w.restricted_solutions(both) == SolutionSet::of(Tuple(Scope{X, Y}, {0, 0})));
    CHECK(w.in_family(Valuation::identity(Semiring::max_plus())));
    const Valuation outside(Semiring::max_plus(), Scope{X}, {1, 2});
    CHECK_FALSE(w.in_family(outside));
    CHECK_THROWS_AS(w.solutions(outside), ValidationError);
    CHECK_THROWS_AS(RestrictedSolutionSystem(Variable{0, 3}, Y), ValidationError);
}

TEST_CASE("fixtures: maxmin ties") {
    auto f = maxmin_ties();
    CHECK(oracle::brute_solutions(f.factors).value.size() == 8);
}
