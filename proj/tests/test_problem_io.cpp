#include <doctest.h>

#include "semidp/errors.hpp"
#include "semidp/fixtures.hpp"
#include "semidp/problem_io.hpp"

using namespace semidp;

namespace {

std::size_t parse_error_line(const std::string& text) {
    try {
        parse_problem(text);
    } catch (const ParseError& e) {
        return e.line();
    }
    return 0;
}

std::string parse_error_detail(const std::string& text) {
    try {
        parse_problem(text);
    } catch (const ParseError& e) {
        return e.detail();
    }
    return "";
}

const std::string kSmall =
    "semiring: maxplus\n"
    "variables:\n"
    "x 2\n"
    "y 2\n"
    "factors:\n"
    "x : 0 5\n"
    "x y : 0 1 2 0\n";

}  // namespace

TEST_CASE("problem io: parse a small problem") {
    auto p = parse_problem(kSmall);
    CHECK(p.semiring->name() == "maxplus");
    CHECK(p.variables.size() == 2);
    REQUIRE(p.factors.size() == 2);
    CHECK(p.factors[1].table() == std::vector<Value>{0, 1, 2, 0});
    CHECK_FALSE(p.tree);
    CHECK_FALSE(p.query);
}

TEST_CASE("problem io: fixture export round trip") {
    for (const auto& f : all_fixtures()) {
        const Problem p = fixture_problem(f);
        const std::string text = export_problem(p);
        const Problem q = parse_problem(text);
        CHECK(*q.semiring == *p.semiring);
        CHECK(q.variables == p.variables);
        CHECK(q.factors == p.factors);
        CHECK(export_problem(q) == text);
    }
    const std::string ce3 = export_problem(fixture_problem(counterexample_3()));
    CHECK(ce3.find("semiring: counter3") != std::string::npos);
}

TEST_CASE("problem io: inline table semiring") {
    const std::string text =
        "semiring: table\n"
        "elements: lo hi\n"
        "zero: lo\n"
        "one: hi\n"
        "add:\n"
        "lo hi\n"
        "hi hi\n"
        "mul:\n"
        "lo lo\n"
        "lo hi\n"
        "variables:\n"
        "x 2\n"
        "factors:\n"
        "x : hi lo\n";
    auto p = parse_problem(text);
    CHECK(p.semiring->kind() == SemiringKind::Table);
    CHECK(p.factors[0].table() == std::vector<Value>{1, 0});
    CHECK(parse_problem(export_problem(p)).factors == p.factors);
}

TEST_CASE("problem io: semiring file") {
    auto p = load_problem(std::string(SEMIDP_TEST_DATA) + "/counter3_file.problem");
    REQUIRE(p.semiring->table());
    CHECK(p.semiring->table()->mul == Semiring::counter3()->table()->mul);
    CHECK(p.semiring->table()->add == Semiring::counter3()->table()->add);
    const std::string text = export_problem(p);
    CHECK(text.find("semiring: table") != std::string::npos);
    CHECK(parse_problem(text).factors == p.factors);
}

TEST_CASE("problem io: explicit tree is checked and re-minimized") {
    auto p = load_problem(std::string(SEMIDP_TEST_DATA) + "/chain_maxplus.problem");
    REQUIRE(p.tree);
    CHECK(p.tree_relabeled);
    CHECK(p.tree->label(1).size() == 2);
    REQUIRE(p.query);
    CHECK(p.query->size() == 1);
    CHECK(p.factors[0].table()[4] == kNegInf);
    const Problem q = parse_problem(export_problem(p));
    CHECK_FALSE(q.tree_relabeled);
    CHECK(q.tree->labels() == p.tree->labels());
}

TEST_CASE("problem io: errors carry line numbers") {
    CHECK(parse_error_detail(
              "semiring: boolean\nvariables:\nx 2\ny 2\nfactors:\nx y : 1 0 0\n") == "expected 4 values, got 3");
    CHECK(parse_error_line("semiring: boolean\nvariables:\nx 2\nfactors:\nx : -inf 1\n") == 5);
    CHECK(parse_error_line("semiring: boolean\nvariables:\nx 2\nfactors:\nq : 1 0\n") == 5);
    CHECK(parse_error_line("semiring: boolean\nvariables:\ny 2\nx 2\nfactors:\nx y : 1 0 0 1\n") == 6);
    CHECK(parse_error_line("semiring: nonsense\n") == 1);
    CHECK(parse_error_line("variables:\nx 0\n") == 2);
    CHECK(parse_error_line("semiring: boolean\nvariables:\nx 2\nx 2\n") == 4);
}

TEST_CASE("problem io: invalid trees are rejected") {
    const std::string head =
        "semiring: boolean\n"
        "variables:\n"
        "x 2\n"
        "y 2\n"
        "z 2\n"
        "factors:\n"
        "x y : 1 0 0 1\n"
        "y z : 1 1 0 1\n"
        "x z : 1 0 1 1\n"
        "tree:\n";
    // Covering fails: factor 2 is not within its node label.
    CHECK_THROWS_AS(parse_problem(head +
                                  "node 0 parent - label x y factors 0 2\n"
                                  "node 1 parent 0 label y z factors 1\n"),
                    ParseError);
    // Running intersection fails: x appears at both ends of the chain only.
    CHECK_THROWS_AS(parse_problem(head +
                                  "node 0 parent - label x y factors 0\n"
                                  "node 1 parent 0 label y z factors 1\n"
                                  "node 2 parent 1 label x z factors 2\n"),
                    ParseError);
    CHECK_THROWS_AS(parse_problem(head + "node 0 parent 0 label x y z factors 0 1 2\n"), ParseError);
    CHECK_NOTHROW(parse_problem(head + "node 0 parent - label x y z factors 0 1 2\n"));
}

TEST_CASE("problem io: describe_scope") {
    auto p = parse_problem(kSmall);
    CHECK(describe_scope(p.variables, p.variables.all()) == "x,y");
    CHECK(describe_scope(p.variables, Scope{}).empty());
}
