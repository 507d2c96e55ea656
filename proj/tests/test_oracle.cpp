#include <doctest.h>

#include "semidp/errors.hpp"
#include "semidp/fixtures.hpp"
#include "semidp/oracle.hpp"
#include "support/generators.hpp"

using namespace semidp;

namespace {

const Variable X{0, 2}, Y{1, 2};

}  // namespace

TEST_CASE("oracle: indicator instance") {
    auto f = counterexample_1();
    auto p = oracle::brute_project(f.factors, Scope{});
    CHECK(p.value.table() == std::vector<Value>{1});
    CHECK(p.enumerated == 4);
    CHECK(oracle::brute_project(f.factors, Scope{X, Y}).value == f.factors[0]);
    auto c = oracle::brute_solutions(f.factors).value;
    CHECK(c == SolutionSet::of(Scope{X, Y}, {Tuple(Scope{X, Y}, {0, 0}), Tuple(Scope{X, Y}, {1, 1})}));
    CHECK(c.optimum() == Value{1});
    auto w = oracle::brute_extension_set(f.factors[0], Tuple(Scope{X}, {1})).value;
    CHECK(w == SolutionSet::of(Tuple(Scope{Y}, {1})));
    auto full = oracle::brute_extension_set(f.factors[0], Tuple(Scope{X, Y}, {0, 1})).value;
    CHECK(full.size() == 1);
}

TEST_CASE("oracle: four-element semiring instance") {
    auto f = counterexample_3();
    auto c = oracle::brute_solutions(f.factors).value;
    CHECK(c == SolutionSet::of(Scope{X, Y}, {Tuple(Scope{X, Y}, {0, 1}), Tuple(Scope{X, Y}, {1, 0}),
                                             Tuple(Scope{X, Y}, {1, 1})}));
}

TEST_CASE("oracle: constant valuation") {
    std::vector<Valuation> flat{Valuation::constant(Semiring::max_plus(), Scope{X, Y}, 4)};
    CHECK(oracle::brute_solutions(flat).value.size() == 4);
}

TEST_CASE("oracle: cap") {
    std::vector<Variable> vs;
    for (VarId v = 0; v < 12; ++v) vs.push_back({v, 2});
    std::vector<Valuation> f{Valuation::constant(Semiring::boolean(), Scope(vs), 1)};
    CHECK_THROWS_AS(oracle::brute_solutions(f, 100), ResourceError);
}

TEST_CASE("oracle: evaluate") {
    auto mp = Semiring::max_plus();
    std::vector<Valuation> f{Valuation(mp, Scope{X}, {0, 5}), Valuation(mp, Scope{X, Y}, {0, 1, 2, 0})};
    CHECK(oracle::evaluate(f, Tuple(Scope{X, Y}, {1, 0})) == 7);
    CHECK_THROWS_AS(oracle::evaluate({}, Tuple{}), ValidationError);
}
