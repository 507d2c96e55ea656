#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "semidp/fixtures.hpp"
#include "semidp/join_tree.hpp"
#include "semidp/semiring.hpp"
#include "semidp/tuples.hpp"
#include "semidp/valuation.hpp"

namespace semidp {

// Line-oriented problem file:
//
//   semiring: maxplus | semiring: file <path> | semiring: table <table lines>
//   variables:
//     x 2
//   factors:
//     x y : 1 0 0 1        (scope in declaration order, last variable fastest)
//   query: x
//   tree:
//     node 0 parent - label x y factors 0
//
// '#' starts a comment.
struct Problem {
    SemiringRef semiring;
    VariableTable variables;
    std::vector<Valuation> factors;
    // Minimally labeled covering tree, re-minimized from the file's labels.
    std::optional<RootedJoinTree> tree;
    // Some file label differed from its minimal label.
    bool tree_relabeled = false;
    std::optional<Scope> query;

    std::vector<Scope> factor_scopes() const;
};

// base_dir resolves 'semiring: file' paths. Throws ParseError with the line number.
Problem parse_problem(std::string_view text, const std::string& base_dir = ".");
Problem load_problem(const std::string& path);

// Canonical text; parse_problem(export_problem(p)) reproduces p.
std::string export_problem(const Problem& p);

Problem fixture_problem(const Fixture& f);

// Names in declaration order, comma separated.
std::string describe_scope(const VariableTable& vars, const Scope& s);

}  // namespace semidp
