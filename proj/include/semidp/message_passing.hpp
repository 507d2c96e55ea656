#pragma once

#include <optional>
#include <span>
#include <vector>

#include "semidp/join_tree.hpp"
#include "semidp/valuation.hpp"

namespace semidp {

struct CollectState {
    std::vector<Valuation> psi;        // node potentials
    std::vector<Valuation> psi_prime;  // updated potentials
    std::vector<std::optional<Valuation>> up;    // mu_{i -> p_i}, empty at the root
    std::vector<std::optional<Valuation>> down;  // mu_{p_i -> i}, filled by distribute
};

// Node potentials psi_i = product of assigned factors (identity when none).
std::vector<Valuation> node_potentials(const RootedJoinTree& t, std::span<const Valuation> factors);

// Requires a minimally labeled covering tree; ValidationError otherwise.
CollectState collect(const RootedJoinTree& t, std::span<const Valuation> factors, Exec exec = Exec::Auto);

// Collect followed by the downward pass; psi_prime[i] becomes phi restricted to lambda(i).
CollectState collect_distribute_state(const RootedJoinTree& t, std::span<const Valuation> factors,
                                      Exec exec = Exec::Auto);
std::vector<Valuation> collect_distribute(const RootedJoinTree& t, std::span<const Valuation> factors,
                                          Exec exec = Exec::Auto);

// (phi_1 x ... x phi_n) restricted to X via a tree rooted at a node covering X.
Valuation project_query(std::span<const Valuation> factors, const Scope& x, Exec exec = Exec::Auto);

}  // namespace semidp
