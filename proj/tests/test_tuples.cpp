#include <doctest.h>

#include "semidp/errors.hpp"
#include "semidp/tuples.hpp"
#include "support/generators.hpp"

using namespace semidp;

namespace {

const Variable X{0, 2}, Y{1, 3}, Z{2, 2};

}  // namespace

TEST_CASE("tuples: scope algebra") {
    Scope a{Y, X};
    CHECK(a[0].id == 0);
    CHECK(a.cardinality() == 6);
    CHECK(unite(a, Scope{Z}) == Scope{X, Y, Z});
    CHECK(intersect(a, Scope{Y, Z}) == Scope{Y});
    CHECK(minus(a, Scope{X}) == Scope{Y});
    CHECK(Scope{}.cardinality() == 1);
    CHECK(Scope{X}.is_subset_of(a));
    CHECK_THROWS_AS((Scope{X, Variable{0, 2}}), ValidationError);
    CHECK_THROWS_AS((Scope{Variable{3, 0}}), ValidationError);
}

TEST_CASE("tuples: projection and concatenation") {
    Tuple t(Scope{X, Y, Z}, {1, 2, 0});
    CHECK(tuple_project(t, Scope{X, Z}) == Tuple(Scope{X, Z}, {1, 0}));
    CHECK(tuple_project(t, Scope{}) == Tuple{});
    CHECK_THROWS_AS(tuple_project(Tuple(Scope{X}, {1}), Scope{Y}), DomainError);

    Tuple xy(Scope{X, Y}, {1, 2});
    Tuple yz(Scope{Y, Z}, {2, 1});
    CHECK(tuple_concat(xy, yz) == Tuple(Scope{X, Y, Z}, {1, 2, 1}));
    CHECK(tuple_concat(Tuple{}, yz) == yz);
    CHECK_THROWS_AS(tuple_concat(xy, Tuple(Scope{Y}, {0})), ConcatenationError);
    CHECK_THROWS_AS(Tuple(Scope{X}, {2}), DomainError);
    CHECK(t.value_of(1) == 2);
}

TEST_CASE("tuples: enumeration order and indices") {
    auto all = enumerate_tuples(Scope{X, Y});
    REQUIRE(all.size() == 6);
    CHECK(all[0] == Tuple(Scope{X, Y}, {0, 0}));
    CHECK(all[1] == Tuple(Scope{X, Y}, {0, 1}));
    CHECK(all[3] == Tuple(Scope{X, Y}, {1, 0}));
    for (Index i = 0; i < all.size(); ++i) {
        CHECK(tuple_index(all[i]) == i);
        CHECK(index_tuple(Scope{X, Y}, i) == all[i]);
    }
    CHECK(enumerate_tuples(Scope{}).size() == 1);
    CHECK_THROWS_AS(index_tuple(Scope{X}, 2), DomainError);
}

TEST_CASE("tuples: strides map onto subset indices") {
    Scope super{X, Y, Z};
    Scope sub{X, Z};
    auto st = strides_within(sub, super);
    REQUIRE(st.size() == 3);
    for (const Tuple& t : enumerate_tuples(super)) {
        Index k = 0;
        for (std::size_t p = 0; p < 3; ++p) k += st[p] * t.values()[p];
        CHECK(k == tuple_index(tuple_project(t, sub)));
    }
}

TEST_CASE("tuples: random round trips") {
    testing::Rng rng(3);
    for (int n = 0; n < 200; ++n) {
        std::vector<Variable> vs;
        for (VarId v = 0; v < 5; ++v)
            if (rng() % 2) vs.push_back({v, static_cast<std::uint32_t>(1 + rng() % 4)});
        Scope s(vs);
        const Index i = s.cardinality() == 0 ? 0 : rng() % s.cardinality();
        const Tuple t = index_tuple(s, i);
        CHECK(tuple_index(t) == i);
        const Scope part = testing::random_subset(s, rng);
        const Tuple p = tuple_project(t, part);
        CHECK(tuple_concat(p, tuple_project(t, minus(s, part))) == t);
    }
}

TEST_CASE("tuples: variable table") {
    VariableTable vt;
    CHECK(vt.add("x", 2) == 0);
    CHECK(vt.add("y", 3) == 1);
    CHECK(vt.id("y") == 1);
    CHECK_FALSE(vt.find("z"));
    CHECK_THROWS_AS(vt.id("z"), DomainError);
    CHECK(vt.scope({"y", "x"}) == Scope{Variable{0, 2}, Variable{1, 3}});
    CHECK(vt.all().size() == 2);
}
