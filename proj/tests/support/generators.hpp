#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "semidp/join_tree.hpp"
#include "semidp/semiring.hpp"
#include "semidp/semiring_properties.hpp"
#include "semidp/tuples.hpp"
#include "semidp/valuation.hpp"

namespace semidp::testing {

using Rng = std::mt19937_64;

// boolean, maxplus, maxtimes-nat, maxmin:3, counter3, natural.
std::vector<SemiringRef> builtin_semirings();
std::vector<SemiringRef> selective_builtins();

Value random_value(const Semiring& s, Rng& rng);
Valuation random_valuation(const SemiringRef& s, const Scope& scope, Rng& rng);
// Random table over the carrier with at least one entry different from zero.
Valuation random_non_null(const SemiringRef& s, const Scope& scope, Rng& rng);

struct Instance {
    VariableTable vars;
    std::vector<Valuation> factors;

    Scope domain() const;
    std::vector<Scope> scopes() const;
};

// Up to max_vars variables of cardinality 2..max_card and 1..max_factors factors,
// each over a random non-empty subset.
Instance random_instance(const SemiringRef& s, Rng& rng, std::size_t max_vars = 4, std::uint32_t max_card = 3,
                         std::size_t max_factors = 4);

Scope random_subset(const Scope& s, Rng& rng);

struct Shape {
    std::vector<NodeId> parent;
    std::vector<NodeId> assignment;
};
// Random rooted tree on nodes 0..n-1 (random root) and a random factor -> node map.
Shape random_shape(std::size_t nodes, std::size_t factors, Rng& rng);

// Valid finite semiring with 2..max_size elements: random monotone chains,
// saturating arithmetic or small products, with relabeled element indices.
SemiringRef random_finite_semiring(Rng& rng, std::size_t max_size = 5);

// Table copy with one cell of add or mul replaced by another element.
SemiringRef inject_violation(const Semiring& s, Rng& rng, std::string* what = nullptr);

// Direct definitions over the whole finite carrier, independent of the checkers.
bool brute_holds(const Semiring& s, const std::string& property);
// True iff the witness of a failing result really violates its property.
bool witness_violates(const Semiring& s, const PropertyResult& r);

const std::vector<std::string>& axiom_names();
const std::vector<std::string>& property_names();

}  // namespace semidp::testing
