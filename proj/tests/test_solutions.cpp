#include <doctest.h>

#include "semidp/completability.hpp"
#include "semidp/errors.hpp"
#include "semidp/fixtures.hpp"
#include "semidp/message_passing.hpp"
#include "semidp/oracle.hpp"
#include "semidp/solutions.hpp"
#include "semidp/solve.hpp"
#include "support/generators.hpp"

using namespace semidp;

namespace {

const Variable X{0, 2}, Y{1, 2}, Z{2, 2};

std::vector<Valuation> two_node_factors() {
    auto s = Semiring::max_plus();
    return {Valuation(s, Scope{X}, {0, 5}), Valuation(s, Scope{X, Y}, {0, 1, 2, 0})};
}

SolutionSet ets(const std::vector<Valuation>& factors) {
    std::vector<Scope> scopes;
    for (const auto& f : factors) scopes.push_back(f.label());
    auto t = build_join_tree(scopes).tree;
    return extend_to_subtree(collect(t, factors).psi_prime, t);
}

Tuple sets(const std::vector<Valuation>& factors) {
    std::vector<Scope> scopes;
    for (const auto& f : factors) scopes.push_back(f.label());
    auto t = build_join_tree(scopes).tree;
    return single_extend_to_subtree(collect(t, factors).psi_prime, t);
}

SolutionSet egp(const std::vector<Valuation>& factors) {
    std::vector<Scope> scopes;
    for (const auto& f : factors) scopes.push_back(f.label());
    auto t = build_join_tree(scopes).tree;
    return extend_to_global_projection(collect_distribute(t, factors), t);
}

// Optimization extensions with the last element dropped whenever x is non-empty.
class DroppingSystem final : public ExtensionSystem {
public:
    std::string name() const override { return "dropping"; }
    SolutionSet extensions(const Valuation& phi, const Tuple& x) const override {
        SolutionSet w = optimization_system().extensions(phi, x);
        if (x.scope().empty() || w.size() < 2) return w;
        auto idx = w.indices();
        idx.pop_back();
        return SolutionSet(w.scope(), idx);
    }
};

}  // namespace

TEST_CASE("solutions: solution set basics") {
    auto s = SolutionSet::of(Scope{X, Y}, {Tuple(Scope{X, Y}, {1, 0}), Tuple(Scope{X, Y}, {0, 1})});
    CHECK(s.indices() == std::vector<Index>{1, 2});
    CHECK(s.contains(Tuple(Scope{X, Y}, {1, 0})));
    CHECK_FALSE(s.contains(Tuple(Scope{X, Y}, {1, 1})));
    CHECK(s.is_subset_of(SolutionSet::all(Scope{X, Y})));
    CHECK_THROWS_AS(s.is_subset_of(SolutionSet::all(Scope{X})), DomainError);
    auto capped = SolutionSet::all(Scope{X, Y, Z}, 5);
    CHECK(capped.truncated());
    CHECK(capped.size() == 5);
}

TEST_CASE("solutions: extension sets") {
    const auto phi = counterexample_1().factors[0];
    auto w = extension_set(phi, Scope{X}, Tuple(Scope{X}, {0}));
    CHECK(w == SolutionSet::of(Tuple(Scope{Y}, {0})));
    CHECK(extension_set(phi, Scope{X}, Tuple(Scope{X}, {1})) == SolutionSet::of(Tuple(Scope{Y}, {1})));
    auto full = extension_set(phi, Scope{X, Y}, Tuple(Scope{X, Y}, {0, 1}));
    CHECK(full.size() == 1);
    CHECK(full.scope().empty());
    auto c = extension_set(phi, Scope{}, Tuple{});
    CHECK(c == oracle::brute_solutions(std::vector<Valuation>{phi}).value);
    CHECK_THROWS_AS(extension_set(Valuation(Semiring::natural(), Scope{X}, {1, 2}), Scope{}, Tuple{}),
                    RefusedError);
}

TEST_CASE("solutions: completions") {
    const auto phi = counterexample_1().factors[0];
    auto cx = optimization_system().solutions(project(phi, Scope{X}));
    CHECK(cx.size() == 2);
    auto co = completions(cx, project(phi, Scope{Y}));
    CHECK(co.scope() == Scope({X, Y}));
    CHECK(co.size() == 4);
    CHECK(completions(SolutionSet(Scope{X}, {}), phi).empty());
    auto exact = completions(cx, phi);
    CHECK(exact == oracle::brute_solutions(std::vector<Valuation>{phi}).value);
}

TEST_CASE("solutions: completions respect the cap") {
    auto s = Semiring::boolean();
    Valuation flat = Valuation::constant(s, Scope{X, Y, Z}, 1);
    auto co = completions(SolutionSet::all(Scope{X}), flat, optimization_system(), 3);
    CHECK(co.truncated());
    CHECK(co.size() <= 3);
}

TEST_CASE("solutions: extend-to-global-projection") {
    auto ce3 = counterexample_3();
    auto r3 = egp(ce3.factors);
    CHECK(r3.contains(Tuple(Scope{X, Y}, {0, 0})));
    auto oc3 = oracle::brute_solutions(ce3.factors).value;
    CHECK_FALSE(oc3.contains(Tuple(Scope{X, Y}, {0, 0})));
    CHECK(oc3.size() == 3);

    // Marginals on {x} and {y} joined by an empty separator.
    const auto phi = counterexample_1().factors[0];
    RootedJoinTree split({kNoParent, 0}, {Scope{X}, Scope{Y}}, {});
    auto r1 = extend_to_global_projection({project(phi, Scope{X}), project(phi, Scope{Y})}, split);
    CHECK(r1 == SolutionSet::all(Scope{X, Y}));
    CHECK(oracle::brute_solutions(std::vector<Valuation>{phi}).value.size() == 2);
}

TEST_CASE("solutions: extend-to-subtree") {
    auto r = ets(two_node_factors());
    CHECK(r == SolutionSet::of(Tuple(Scope{X, Y}, {1, 0})));
    CHECK(r == oracle::brute_solutions(two_node_factors()).value);

    auto s = Semiring::max_plus();
    std::vector<Valuation> null{Valuation::zero(s, Scope{X, Y}), Valuation(s, Scope{Y, Z}, {1, 2, 3, 4})};
    auto all = ets(null);
    CHECK(all.size() == 8);
}

TEST_CASE("solutions: single-extend-to-subtree") {
    CHECK(sets(counterexample_1().factors) == Tuple(Scope{X, Y}, {0, 0}));
    CHECK(sets(two_node_factors()) == Tuple(Scope{X, Y}, {1, 0}));
}

TEST_CASE("solutions: extension algorithms against the oracle") {
    testing::Rng rng(29);
    for (const auto& s : testing::selective_builtins()) {
        const auto m = classify(*s);
        for (int n = 0; n < 60; ++n) {
            auto inst = testing::random_instance(s, rng);
            const auto oc = oracle::brute_solutions(inst.factors).value;
            CHECK(oc.contains(sets(inst.factors)));
            const auto e = ets(inst.factors);
            CHECK(!e.empty());
            CHECK(e.is_subset_of(oc));
            if (trusted(m.at("ETS", "complete").verdict)) CHECK(e == oc);
            if (trusted(m.at("EGP", "complete").verdict)) CHECK(egp(inst.factors) == oc);
        }
    }
}

TEST_CASE("solutions: solve dispatch") {
    auto ce3 = counterexample_3();
    auto r = solve(ce3.factors, Task::Complete);
    CHECK(r.path == "extend-to-subtree+filter");
    CHECK(r.annotation == "sound subset, completeness not guaranteed");
    CHECK(r.solutions.is_subset_of(oracle::brute_solutions(ce3.factors).value));

    auto mp = solve(two_node_factors(), Task::Complete);
    CHECK(mp.path.rfind("extend-to-subtree", 0) == 0);
    CHECK(mp.solutions == oracle::brute_solutions(two_node_factors()).value);
    CHECK(mp.optimum == 7);

    auto single = solve(counterexample_1().factors, Task::Single, SolveOptions{.verify = true});
    REQUIRE(single.solutions.size() == 1);
    CHECK(oracle::brute_solutions(counterexample_1().factors).value.contains(single.solutions.tuple(0)));
    CHECK(single.verified);

    auto proj = solve(two_node_factors(), Task::Project, SolveOptions{.query = Scope{X}});
    REQUIRE(proj.projection);
    CHECK(proj.projection->table() == std::vector<Value>{1, 7});

    auto mm = maxmin_ties();
    auto t = solve(mm.factors, Task::Complete);
    const auto mm_all = oracle::brute_solutions(mm.factors).value;
    CHECK(t.path == "extend-to-subtree+filter");
    CHECK(t.solutions.is_subset_of(mm_all));
    CHECK(t.solutions.size() < mm_all.size());

    std::vector<Valuation> nat{Valuation(Semiring::natural(), Scope{X}, {1, 2})};
    CHECK_THROWS_AS(solve(nat, Task::Single), RefusedError);
    CHECK(solve(nat, Task::Project, SolveOptions{.query = Scope{}}).projection->table() == std::vector<Value>{3});
}

TEST_CASE("solutions: solve truncates at max_solutions") {
    auto s = Semiring::boolean();
    std::vector<Valuation> flat{Valuation::constant(s, Scope{X, Y, Z}, 1)};
    auto r = solve(flat, Task::Complete, SolveOptions{.max_solutions = 3});
    CHECK(r.solutions.truncated());
    CHECK(r.solutions.size() <= 3);
}

TEST_CASE("completability: extension system law") {
    testing::Rng rng(31);
    std::vector<Valuation> inst;
    for (const auto& s : {Semiring::boolean(), Semiring::max_plus()})
        for (int n = 0; n < 30; ++n) inst.push_back(testing::random_valuation(s, Scope{X, Y, Z}, rng));
    CHECK(check_fces(optimization_system(), inst).passed());

    auto ce2 = counterexample_2();
    std::vector<Valuation> family;
    for (const auto& smp : ce2.samples) family.push_back(combine(smp.xi1, smp.xi2));
    CHECK(check_fces(ce2.extension_system(), family).passed());

    std::vector<Valuation> flat{Valuation::constant(Semiring::boolean(), Scope{X, Y}, 1)};
    auto bad = check_fces(DroppingSystem{}, flat);
    CHECK(bad.verdict() == Verdict::Fails);
    REQUIRE(bad.first_failure());
    CHECK(bad.first_failure()->sample == std::size_t{0});
}

TEST_CASE("completability: projective") {
    auto ce3 = counterexample_3();
    auto r3 = check_projective_completability(optimization_system(), ce3.samples);
    REQUIRE(r3.find("projective-completability"));
    CHECK(r3.find("projective-completability")->verdict == Verdict::Fails);

    testing::Rng rng(37);
    auto mp = Semiring::max_plus();
    std::vector<ProductSample> samples;
    for (int n = 0; n < 500; ++n)
        samples.push_back({testing::random_valuation(mp, testing::random_subset(Scope{X, Y, Z}, rng), rng),
                           testing::random_valuation(mp, testing::random_subset(Scope{X, Y, Z}, rng), rng)});
    auto r = check_projective_completability(optimization_system(), samples);
    CHECK(r.find("projective-completability")->verdict == Verdict::NotFalsified);
    CHECK(r.find("projective-superset")->verdict == Verdict::NotFalsified);
}

TEST_CASE("completability: piecewise flavours") {
    testing::Rng rng(41);
    for (const auto& s : testing::selective_builtins()) {
        std::vector<ProductSample> samples;
        for (int n = 0; n < 80; ++n)
            samples.push_back({testing::random_valuation(s, testing::random_subset(Scope{X, Y, Z}, rng), rng),
                               testing::random_valuation(s, testing::random_subset(Scope{X, Y, Z}, rng), rng)});
        CHECK(check_piecewise_completability(optimization_system(), samples, PiecewiseFlavor::Plain).passed());
        CHECK(check_piecewise_completability(optimization_system(), samples, PiecewiseFlavor::GuaranteedNonEmpty)
                  .passed());
    }

    auto mm = maxmin_ties();
    std::vector<ProductSample> tie{{mm.factors[0], mm.factors[1]}};
    CHECK(check_piecewise_completability(optimization_system(), tie, PiecewiseFlavor::Total).verdict() ==
          Verdict::Fails);

    auto mp = Semiring::max_plus();
    std::vector<ProductSample> nn;
    while (nn.size() < 200) {
        ProductSample smp{testing::random_non_null(mp, testing::random_subset(Scope{X, Y, Z}, rng), rng),
                          testing::random_non_null(mp, testing::random_subset(Scope{X, Y, Z}, rng), rng)};
        if (!combine(smp.xi1, smp.xi2).is_null()) nn.push_back(std::move(smp));
    }
    CHECK(check_piecewise_completability(optimization_system(), nn, PiecewiseFlavor::Total).passed());
}

TEST_CASE("completability: CPK properties") {
    testing::Rng rng(43);
    auto mp = Semiring::max_plus();
    std::vector<ProductSample> samples;
    for (int n = 0; n < 100; ++n)
        samples.push_back({testing::random_valuation(mp, testing::random_subset(Scope{X, Y, Z}, rng), rng),
                           testing::random_valuation(mp, testing::random_subset(Scope{X, Y, Z}, rng), rng)});
    CHECK(check_cpk(optimization_system(), samples, Cpk::One).passed());
    CHECK(check_cpk(optimization_system(), samples, Cpk::Two).passed());

    auto mm = maxmin_ties();
    std::vector<ProductSample> tie{{mm.factors[0], mm.factors[1]}};
    auto three = check_cpk(optimization_system(), tie, Cpk::Three);
    CHECK(three.verdict() == Verdict::Fails);
    REQUIRE(three.first_failure());
    CHECK_FALSE(three.first_failure()->note.empty());
}

TEST_CASE("completability: CPK1 and CPK2 imply guaranteed non-empty piecewise completability") {
    testing::Rng rng(47);
    for (const auto& s : testing::selective_builtins())
        for (int n = 0; n < 60; ++n) {
            std::vector<ProductSample> one{
                {testing::random_valuation(s, testing::random_subset(Scope{X, Y, Z}, rng), rng),
                 testing::random_valuation(s, testing::random_subset(Scope{X, Y, Z}, rng), rng)}};
            const bool cpk = check_cpk(optimization_system(), one, Cpk::One).passed() &&
                             check_cpk(optimization_system(), one, Cpk::Two).passed();
            if (cpk)
                CHECK(check_piecewise_completability(optimization_system(), one, PiecewiseFlavor::GuaranteedNonEmpty)
                          .passed());
        }
}
