#include <doctest.h>

#include "semidp/errors.hpp"
#include "semidp/fixtures.hpp"
#include "semidp/message_passing.hpp"
#include "semidp/oracle.hpp"
#include "support/generators.hpp"

using namespace semidp;

namespace {

const Variable X{0, 2}, Y{1, 2};

struct TwoNode {
    SemiringRef s = Semiring::max_plus();
    std::vector<Valuation> factors{Valuation(s, Scope{X}, {0, 5}), Valuation(s, Scope{X, Y}, {0, 1, 2, 0})};
    // Root {x,y} holds f2, leaf {x} holds f1.
    RootedJoinTree tree{{kNoParent, 0}, {Scope{X, Y}, Scope{X}}, {1, 0}};
};

}  // namespace

TEST_CASE("message passing: collect on the two-node example") {
    TwoNode e;
    auto st = collect(e.tree, e.factors);
    REQUIRE(st.up[1]);
    CHECK(*st.up[1] == e.factors[0]);
    CHECK_FALSE(st.up[0]);
    CHECK(st.psi_prime[0].table() == std::vector<Value>{0, 1, 7, 5});
    CHECK(st.psi_prime[0] == oracle::brute_project(e.factors, Scope{X, Y}).value);
}

TEST_CASE("message passing: distribute on the two-node example") {
    TwoNode e;
    auto marg = collect_distribute(e.tree, e.factors);
    CHECK(marg[1].table() == std::vector<Value>{1, 7});
    CHECK(marg[0].table() == std::vector<Value>{0, 1, 7, 5});
    auto st = collect_distribute_state(e.tree, e.factors);
    REQUIRE(st.down[1]);
    CHECK(st.down[1]->label() == e.tree.separator(1));
}

TEST_CASE("message passing: single node") {
    auto s = Semiring::boolean();
    std::vector<Valuation> f{Valuation(s, Scope{X, Y}, {1, 0, 0, 1})};
    RootedJoinTree t({kNoParent}, {Scope{X, Y}}, {0});
    auto marg = collect_distribute(t, f);
    REQUIRE(marg.size() == 1);
    CHECK(marg[0] == f[0]);
}

TEST_CASE("message passing: collect rejects trees that are not minimal or covering") {
    TwoNode e;
    RootedJoinTree padded({kNoParent, 0}, {Scope{X, Y}, Scope{X, Y}}, {1, 0});
    CHECK_THROWS_AS(collect(padded, e.factors), ValidationError);
    RootedJoinTree uncovered({kNoParent, 0}, {Scope{X}, Scope{X}}, {1, 0});
    CHECK_THROWS_AS(collect(uncovered, e.factors), ValidationError);
}

TEST_CASE("message passing: project_query examples") {
    auto f = counterexample_1();
    CHECK(project_query(f.factors, Scope{}).table() == std::vector<Value>{1});
    const Scope all = f.variables.all();
    CHECK(project_query(f.factors, all) == f.factors[0]);
}

TEST_CASE("message passing: marginals and messages on random instances") {
    testing::Rng rng(23);
    for (const auto& s : testing::builtin_semirings())
        for (int n = 0; n < 60; ++n) {
            auto inst = testing::random_instance(s, rng, 5, 3, 5);
            const auto scopes = inst.scopes();
            auto t = build_join_tree(scopes).tree;
            auto st = collect_distribute_state(t, inst.factors);
            for (NodeId i = 0; i < t.size(); ++i) {
                CHECK(st.psi_prime[i] == oracle::brute_project(inst.factors, t.label(i)).value);
                if (i != t.root()) {
                    CHECK(st.up[i]->label() == t.separator(i));
                    CHECK(st.down[i]->label() == t.separator(i));
                }
            }
            const Scope q = testing::random_subset(inst.domain(), rng);
            CHECK(project_query(inst.factors, q) == oracle::brute_project(inst.factors, q).value);
            CHECK(project_query(inst.factors, q, Exec::Serial) == project_query(inst.factors, q, Exec::Parallel));
        }
}
