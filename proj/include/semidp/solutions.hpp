#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "semidp/join_tree.hpp"
#include "semidp/valuation.hpp"

namespace semidp {

// Default 10^6 tuples, overridable through SEMIDP_SOLUTION_CAP.
Index default_solution_cap();

// Explicit set of tuples over one scope, kept sorted by tuple_index.
class SolutionSet {
public:
    SolutionSet() : SolutionSet(Scope{}, {}) {}
    SolutionSet(Scope scope, std::vector<Index> indices, bool truncated = false);

    static SolutionSet of(const Tuple& t);
    static SolutionSet of(const Scope& scope, const std::vector<Tuple>& tuples);
    // Omega_X, truncated at cap.
    static SolutionSet all(const Scope& scope, Index cap = default_solution_cap());

    const Scope& scope() const noexcept { return scope_; }
    const std::vector<Index>& indices() const noexcept { return indices_; }
    std::size_t size() const noexcept { return indices_.size(); }
    bool empty() const noexcept { return indices_.empty(); }
    bool truncated() const noexcept { return truncated_; }
    void mark_truncated() noexcept { truncated_ = true; }

    const std::optional<Value>& optimum() const noexcept { return optimum_; }
    void set_optimum(Value m) { optimum_ = m; }

    bool contains(const Tuple& t) const;
    Tuple tuple(std::size_t k) const { return index_tuple(scope_, indices_.at(k)); }
    std::vector<Tuple> tuples() const;
    // Requires equal scopes; DomainError otherwise.
    bool is_subset_of(const SolutionSet& other) const;

    friend bool operator==(const SolutionSet& a, const SolutionSet& b) {
        return a.scope_ == b.scope_ && a.indices_ == b.indices_;
    }

private:
    Scope scope_;
    std::vector<Index> indices_;
    bool truncated_ = false;
    std::optional<Value> optimum_;
};

// W_phi^X(x) for every valuation phi, X = d(x) within d(phi); c_phi = W_phi^{}(<>).
class ExtensionSystem {
public:
    virtual ~ExtensionSystem() = default;
    virtual std::string name() const = 0;
    // Set over d(phi) - d(x).
    virtual SolutionSet extensions(const Valuation& phi, const Tuple& x) const = 0;
    SolutionSet solutions(const Valuation& phi) const { return extensions(phi, Tuple{}); }
};

// W_phi^X(x) = { z | phi(<x,z>) = phi^{X}(x) }; refuses non-selective semirings.
class OptimizationExtensionSystem final : public ExtensionSystem {
public:
    std::string name() const override { return "optimization"; }
    SolutionSet extensions(const Valuation& phi, const Tuple& x) const override;
};

const OptimizationExtensionSystem& optimization_system();

SolutionSet extension_set(const Valuation& phi, const Scope& x_scope, const Tuple& x);

// CO(A, phi) = { <x,z> | x in A, z in W_phi^{d(phi) n X}(x restricted) }.
SolutionSet completions(const SolutionSet& a, const Valuation& phi,
                        const ExtensionSystem& es = optimization_system(),
                        Index cap = default_solution_cap());

// Extend-To-Global-Projection over node marginals phi^{lambda(i)}, downward order.
SolutionSet extend_to_global_projection(const std::vector<Valuation>& marginals, const RootedJoinTree& t,
                                        const ExtensionSystem& es = optimization_system(),
                                        Index cap = default_solution_cap());

// Extend-To-Subtree over collect output; returns Omega_{d(phi)} directly when phi is null.
SolutionSet extend_to_subtree(const std::vector<Valuation>& psi_prime, const RootedJoinTree& t,
                              const ExtensionSystem& es = optimization_system(),
                              Index cap = default_solution_cap());

// Single-Extend-To-Subtree: lowest-index completion at every node.
Tuple single_extend_to_subtree(const std::vector<Valuation>& psi_prime, const RootedJoinTree& t,
                               const ExtensionSystem& es = optimization_system());

}  // namespace semidp
