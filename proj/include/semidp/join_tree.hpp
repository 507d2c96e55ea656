#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "semidp/tuples.hpp"

namespace semidp {

using NodeId = std::size_t;
inline constexpr NodeId kNoParent = static_cast<NodeId>(-1);

// Rooted tree with node labels and a factor -> node assignment.
class RootedJoinTree {
public:
    RootedJoinTree() = default;
    // Throws ValidationError unless parents form a single rooted tree and
    // every assignment names an existing node.
    RootedJoinTree(std::vector<NodeId> parent, std::vector<Scope> labels, std::vector<NodeId> assignment);

    std::size_t size() const noexcept { return parent_.size(); }
    NodeId root() const noexcept { return root_; }
    NodeId parent(NodeId i) const { return parent_.at(i); }
    const std::vector<NodeId>& parents() const noexcept { return parent_; }
    const std::vector<NodeId>& children(NodeId i) const { return children_.at(i); }
    // Parent (if any) followed by children in ascending id.
    std::vector<NodeId> neighbors(NodeId i) const;
    const Scope& label(NodeId i) const { return labels_.at(i); }
    const std::vector<Scope>& labels() const noexcept { return labels_; }
    const std::vector<NodeId>& assignment() const noexcept { return assignment_; }
    // Factors assigned to node i, ascending.
    std::vector<std::size_t> factors_at(NodeId i) const;
    // s_i = lambda(i) n lambda(p_i); empty at the root.
    const Scope& separator(NodeId i) const { return separators_.at(i); }
    Scope separator(NodeId i, NodeId j) const { return intersect(label(i), label(j)); }

    // Same undirected tree and labels rooted at r.
    RootedJoinTree rerooted(NodeId r) const;

private:
    std::vector<NodeId> parent_;
    std::vector<std::vector<NodeId>> children_;
    std::vector<Scope> labels_;
    std::vector<Scope> separators_;
    std::vector<NodeId> assignment_;
    NodeId root_ = 0;
};

enum class Direction { Upward, Downward };

struct NodeOrder {
    std::vector<NodeId> nodes;
    Direction direction = Direction::Downward;
};

// Downward: breadth-first from the root, children in ascending id. Upward: its reverse.
NodeOrder node_order(const RootedJoinTree& t, Direction d);

struct RipResult {
    bool holds = true;
    NodeId i = 0, j = 0, k = 0;  // lambda(i) n lambda(j) not within lambda(k)
};
RipResult check_running_intersection(const RootedJoinTree& t);

struct CoveringResult {
    bool holds = true;
    std::size_t factor = 0;
};
CoveringResult check_covering(const RootedJoinTree& t, const std::vector<Scope>& factor_scopes);

struct MinimalityResult {
    bool holds = true;
    NodeId node = 0;
    std::optional<NodeId> excluded_neighbor;  // neighbour left out of the separator union; empty for an isolated node
    std::string detail;
};
// lambda(i) = d(psi_i) u U_{j in ne(i)-{k}} s_ij for every node i and neighbour k.
MinimalityResult check_minimally_labeled(const RootedJoinTree& t, const std::vector<Scope>& factor_scopes);

// d(psi_i): union of the scopes of factors assigned to i.
Scope node_domain(const RootedJoinTree& t, const std::vector<Scope>& factor_scopes, NodeId i);

// Labels from the alpha/beta/gamma upward pass and the lambda downward pass.
RootedJoinTree minimal_lambdas(const std::vector<NodeId>& parent, const std::vector<NodeId>& assignment,
                               const std::vector<Scope>& factor_scopes);

enum class Heuristic { MinFill, MinDegree };

struct BuiltTree {
    RootedJoinTree tree;
    // Set when the query scope was added as an extra factor (index = number of factors).
    bool query_anchor = false;
};

BuiltTree build_join_tree(const std::vector<Scope>& factor_scopes, Heuristic h = Heuristic::MinFill,
                          const std::optional<Scope>& query = std::nullopt);

struct DescendantSets {
    std::vector<NodeId> de, nde, ch;
    Scope lambda_de, lambda_nde;
};
DescendantSets descendant_sets(const RootedJoinTree& t, NodeId i);

}  // namespace semidp
