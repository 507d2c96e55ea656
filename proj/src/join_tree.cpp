#include "semidp/join_tree.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "semidp/errors.hpp"

namespace semidp {

RootedJoinTree::RootedJoinTree(std::vector<NodeId> parent, std::vector<Scope> labels,
                               std::vector<NodeId> assignment)
    : parent_(std::move(parent)), labels_(std::move(labels)), assignment_(std::move(assignment)) {
    const std::size_t n = parent_.size();
    if (n == 0) throw ValidationError("join tree has no nodes");
    if (labels_.size() != n) throw ValidationError("join tree needs one label per node");
    std::size_t roots = 0;
    for (NodeId i = 0; i < n; ++i) {
        if (parent_[i] == kNoParent) {
            ++roots;
            root_ = i;
        } else if (parent_[i] >= n || parent_[i] == i) {
            throw ValidationError("node " + std::to_string(i) + " has an invalid parent");
        }
    }
    if (roots != 1) throw ValidationError("join tree must have exactly one root, found " + std::to_string(roots));
    for (NodeId i = 0; i < n; ++i) {
        NodeId v = i;
        for (std::size_t steps = 0; v != root_; ++steps) {
            if (steps > n) throw ValidationError("cycle through node " + std::to_string(i));
            v = parent_[v];
        }
    }
    for (std::size_t f = 0; f < assignment_.size(); ++f)
        if (assignment_[f] >= n)
            throw ValidationError("factor " + std::to_string(f) + " assigned to unknown node");
    children_.assign(n, {});
    for (NodeId i = 0; i < n; ++i)
        if (parent_[i] != kNoParent) children_[parent_[i]].push_back(i);
    separators_.resize(n);
    for (NodeId i = 0; i < n; ++i)
        if (parent_[i] != kNoParent) separators_[i] = intersect(labels_[i], labels_[parent_[i]]);
}

std::vector<NodeId> RootedJoinTree::neighbors(NodeId i) const {
    std::vector<NodeId> out;
    if (parent(i) != kNoParent) out.push_back(parent_[i]);
    out.insert(out.end(), children_.at(i).begin(), children_.at(i).end());
    return out;
}

std::vector<std::size_t> RootedJoinTree::factors_at(NodeId i) const {
    std::vector<std::size_t> out;
    for (std::size_t f = 0; f < assignment_.size(); ++f)
        if (assignment_[f] == i) out.push_back(f);
    return out;
}

RootedJoinTree RootedJoinTree::rerooted(NodeId r) const {
    if (r >= size()) throw DomainError("unknown node " + std::to_string(r));
    std::vector<NodeId> par(size(), kNoParent);
    std::vector<bool> seen(size(), false);
    std::deque<NodeId> queue{r};
    seen[r] = true;
    while (!queue.empty()) {
        NodeId v = queue.front();
        queue.pop_front();
        auto ne = neighbors(v);
        std::sort(ne.begin(), ne.end());
        for (NodeId w : ne)
            if (!seen[w]) {
                seen[w] = true;
                par[w] = v;
                queue.push_back(w);
            }
    }
    return RootedJoinTree(std::move(par), labels_, assignment_);
}

NodeOrder node_order(const RootedJoinTree& t, Direction d) {
    NodeOrder o;
    o.direction = d;
    std::deque<NodeId> queue{t.root()};
    while (!queue.empty()) {
        NodeId v = queue.front();
        queue.pop_front();
        o.nodes.push_back(v);
        for (NodeId c : t.children(v)) queue.push_back(c);
    }
    if (d == Direction::Upward) std::reverse(o.nodes.begin(), o.nodes.end());
    return o;
}

namespace {

std::vector<std::size_t> depths(const RootedJoinTree& t) {
    std::vector<std::size_t> depth(t.size(), 0);
    for (NodeId v : node_order(t, Direction::Downward).nodes)
        if (t.parent(v) != kNoParent) depth[v] = depth[t.parent(v)] + 1;
    return depth;
}

// Nodes strictly between i and j, in path order from i.
std::vector<NodeId> inner_path(const RootedJoinTree& t, const std::vector<std::size_t>& depth, NodeId i,
                               NodeId j) {
    std::vector<NodeId> up, down;
    NodeId a = i, b = j;
    while (depth[a] > depth[b]) up.push_back(a = t.parent(a));
    while (depth[b] > depth[a]) down.push_back(b = t.parent(b));
    while (a != b) {
        up.push_back(a = t.parent(a));
        down.push_back(b = t.parent(b));
    }
    // a == b is the meeting node, present at the end of both lists.
    if (!down.empty()) down.pop_back();
    up.insert(up.end(), down.rbegin(), down.rend());
    up.erase(std::remove_if(up.begin(), up.end(), [&](NodeId v) { return v == i || v == j; }), up.end());
    return up;
}

}  // namespace

RipResult check_running_intersection(const RootedJoinTree& t) {
    const auto depth = depths(t);
    for (NodeId i = 0; i < t.size(); ++i)
        for (NodeId j = i + 1; j < t.size(); ++j) {
            Scope shared = intersect(t.label(i), t.label(j));
            if (shared.empty()) continue;
            for (NodeId k : inner_path(t, depth, i, j))
                if (!shared.is_subset_of(t.label(k))) return {false, i, j, k};
        }
    return {};
}

CoveringResult check_covering(const RootedJoinTree& t, const std::vector<Scope>& factor_scopes) {
    if (t.assignment().size() != factor_scopes.size()) return {false, std::min(t.assignment().size(), factor_scopes.size())};
    for (std::size_t f = 0; f < factor_scopes.size(); ++f)
        if (!factor_scopes[f].is_subset_of(t.label(t.assignment()[f]))) return {false, f};
    return {};
}

Scope node_domain(const RootedJoinTree& t, const std::vector<Scope>& factor_scopes, NodeId i) {
    Scope d;
    for (std::size_t f : t.factors_at(i)) d = unite(d, factor_scopes.at(f));
    return d;
}

MinimalityResult check_minimally_labeled(const RootedJoinTree& t, const std::vector<Scope>& factor_scopes) {
    for (NodeId i = 0; i < t.size(); ++i) {
        const Scope own = node_domain(t, factor_scopes, i);
        const auto ne = t.neighbors(i);
        if (ne.empty()) {
            if (t.label(i) != own) return {false, i, std::nullopt, "label differs from d(psi)"};
            continue;
        }
        for (NodeId k : ne) {
            Scope expected = own;
            for (NodeId j : ne)
                if (j != k) expected = unite(expected, t.separator(i, j));
            if (t.label(i) != expected) return {false, i, k, "label differs from d(psi_i) plus the other separators"};
        }
    }
    return {};
}

RootedJoinTree minimal_lambdas(const std::vector<NodeId>& parent, const std::vector<NodeId>& assignment,
                               const std::vector<Scope>& factor_scopes) {
    if (assignment.size() != factor_scopes.size())
        throw ValidationError("assignment and factor list differ in length");
    const RootedJoinTree shape(parent, std::vector<Scope>(parent.size()), assignment);
    const std::size_t n = shape.size();
    std::vector<Scope> alpha(n), beta(n), gamma(n), lambda(n);
    for (NodeId i = 0; i < n; ++i) beta[i] = alpha[i] = node_domain(shape, factor_scopes, i);
    for (NodeId i : node_order(shape, Direction::Upward).nodes) {
        if (i == shape.root()) continue;
        const NodeId p = shape.parent(i);
        alpha[p] = unite(alpha[p], alpha[i]);
        beta[p] = unite(beta[p], intersect(gamma[p], alpha[i]));
        gamma[p] = unite(gamma[p], alpha[i]);
    }
    lambda[shape.root()] = beta[shape.root()];
    for (NodeId i : node_order(shape, Direction::Downward).nodes) {
        if (i == shape.root()) continue;
        lambda[i] = unite(beta[i], intersect(lambda[shape.parent(i)], alpha[i]));
    }
    return RootedJoinTree(parent, std::move(lambda), assignment);
}

namespace {

struct Clique {
    Scope label;
    NodeId parent = kNoParent;
    bool alive = true;
};

std::vector<Clique> eliminate(const std::vector<Scope>& scopes, Heuristic h) {
    std::map<VarId, std::uint32_t> card;
    std::map<VarId, std::set<VarId>> adj;
    for (const auto& s : scopes)
        for (const auto& v : s) {
            card[v.id] = v.card;
            auto& a = adj[v.id];
            for (const auto& w : s)
                if (w.id != v.id) a.insert(w.id);
        }
    std::vector<Clique> cliques;
    std::map<VarId, std::size_t> clique_of;
    std::vector<VarId> eliminated_var;
    while (!adj.empty()) {
        VarId best = 0;
        std::size_t best_score = static_cast<std::size_t>(-1);
        for (const auto& [v, nb] : adj) {
            std::size_t score = 0;
            if (h == Heuristic::MinDegree) {
                score = nb.size();
            } else {
                for (auto a = nb.begin(); a != nb.end(); ++a)
                    for (auto b = std::next(a); b != nb.end(); ++b)
                        if (!adj.at(*a).count(*b)) ++score;
            }
            if (score < best_score) {
                best_score = score;
                best = v;
            }
        }
        const std::set<VarId> nb = adj[best];
        std::vector<Variable> vars{{best, card[best]}};
        for (VarId w : nb) vars.push_back({w, card[w]});
        for (VarId a : nb) {
            for (VarId b : nb)
                if (a != b) adj[a].insert(b);
            adj[a].erase(best);
        }
        adj.erase(best);
        clique_of[best] = cliques.size();
        eliminated_var.push_back(best);
        cliques.push_back({Scope(std::move(vars))});
    }
    // Parent: clique of the earliest-eliminated remaining neighbour.
    std::vector<NodeId> roots;
    for (std::size_t t = 0; t < cliques.size(); ++t) {
        std::size_t best = static_cast<std::size_t>(-1);
        for (const auto& v : cliques[t].label)
            if (v.id != eliminated_var[t]) best = std::min(best, clique_of[v.id]);
        if (best == static_cast<std::size_t>(-1))
            roots.push_back(t);
        else
            cliques[t].parent = best;
    }
    // Join disconnected components under the last component root.
    for (std::size_t r = 0; r + 1 < roots.size(); ++r) cliques[roots[r]].parent = roots.back();
    // Merge neighbouring cliques whose labels are nested.
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t c = 0; c < cliques.size(); ++c) {
            if (!cliques[c].alive || cliques[c].parent == kNoParent) continue;
            Clique& p = cliques[cliques[c].parent];
            const bool c_in_p = cliques[c].label.is_subset_of(p.label);
            if (!c_in_p && !p.label.is_subset_of(cliques[c].label)) continue;
            if (!c_in_p) p.label = cliques[c].label;
            for (auto& other : cliques)
                if (other.alive && other.parent == c) other.parent = cliques[c].parent;
            cliques[c].alive = false;
            changed = true;
        }
    }
    return cliques;
}

RootedJoinTree assemble(const std::vector<Scope>& scopes, Heuristic h) {
    auto cliques = eliminate(scopes, h);
    std::vector<NodeId> renumber(cliques.size(), kNoParent);
    std::vector<Scope> labels;
    for (std::size_t c = 0; c < cliques.size(); ++c)
        if (cliques[c].alive) {
            renumber[c] = labels.size();
            labels.push_back(cliques[c].label);
        }
    std::vector<NodeId> parent;
    for (const auto& c : cliques)
        if (c.alive) parent.push_back(c.parent == kNoParent ? kNoParent : renumber[c.parent]);
    if (labels.empty()) {
        labels.emplace_back();
        parent.push_back(kNoParent);
    }
    std::vector<NodeId> assignment;
    for (const auto& s : scopes) {
        NodeId target = kNoParent;
        for (NodeId i = 0; i < labels.size() && target == kNoParent; ++i)
            if (s.is_subset_of(labels[i])) target = i;
        if (target == kNoParent) throw ValidationError("internal: no clique covers a factor");
        assignment.push_back(target);
    }
    return minimal_lambdas(parent, assignment, scopes);
}

}  // namespace

BuiltTree build_join_tree(const std::vector<Scope>& factor_scopes, Heuristic h, const std::optional<Scope>& query) {
    RootedJoinTree t = assemble(factor_scopes, h);
    if (!query) return {t.rerooted(0), false};
    for (NodeId i = 0; i < t.size(); ++i)
        if (query->is_subset_of(t.label(i))) return {t.rerooted(i), false};
    auto anchored = factor_scopes;
    anchored.push_back(*query);
    RootedJoinTree a = assemble(anchored, h);
    return {a.rerooted(a.assignment().back()), true};
}

DescendantSets descendant_sets(const RootedJoinTree& t, NodeId i) {
    if (i >= t.size()) throw DomainError("unknown node " + std::to_string(i));
    DescendantSets d;
    d.ch = t.children(i);
    std::vector<bool> is_de(t.size(), false);
    std::deque<NodeId> queue(d.ch.begin(), d.ch.end());
    while (!queue.empty()) {
        NodeId v = queue.front();
        queue.pop_front();
        is_de[v] = true;
        for (NodeId c : t.children(v)) queue.push_back(c);
    }
    for (NodeId v = 0; v < t.size(); ++v) {
        if (v == i) continue;
        if (is_de[v]) {
            d.de.push_back(v);
            d.lambda_de = unite(d.lambda_de, t.label(v));
        } else {
            d.nde.push_back(v);
            d.lambda_nde = unite(d.lambda_nde, t.label(v));
        }
    }
    return d;
}

}  // namespace semidp
