#include "semidp/solutions.hpp"

#include <algorithm>
#include <cstdlib>

#include "semidp/errors.hpp"

namespace semidp {

Index default_solution_cap() {
    if (const char* v = std::getenv("SEMIDP_SOLUTION_CAP"); v && *v) {
        try {
            return std::stoull(v);
        } catch (...) {
        }
    }
    return 1000000;
}

SolutionSet::SolutionSet(Scope scope, std::vector<Index> indices, bool truncated)
    : scope_(std::move(scope)), indices_(std::move(indices)), truncated_(truncated) {
    std::sort(indices_.begin(), indices_.end());
    indices_.erase(std::unique(indices_.begin(), indices_.end()), indices_.end());
    if (!indices_.empty() && indices_.back() >= scope_.cardinality())
        throw DomainError("solution index outside the scope");
}

SolutionSet SolutionSet::of(const Tuple& t) { return SolutionSet(t.scope(), {tuple_index(t)}); }

SolutionSet SolutionSet::of(const Scope& scope, const std::vector<Tuple>& tuples) {
    std::vector<Index> idx;
    for (const auto& t : tuples) {
        if (t.scope() != scope) throw DomainError("tuple scope differs from the set scope");
        idx.push_back(tuple_index(t));
    }
    return SolutionSet(scope, std::move(idx));
}

SolutionSet SolutionSet::all(const Scope& scope, Index cap) {
    const Index n = scope.cardinality();
    const Index k = std::min(n, cap);
    std::vector<Index> idx(k);
    for (Index i = 0; i < k; ++i) idx[i] = i;
    return SolutionSet(scope, std::move(idx), k < n);
}

bool SolutionSet::contains(const Tuple& t) const {
    if (t.scope() != scope_) return false;
    return std::binary_search(indices_.begin(), indices_.end(), tuple_index(t));
}

std::vector<Tuple> SolutionSet::tuples() const {
    std::vector<Tuple> out;
    out.reserve(indices_.size());
    for (Index i : indices_) out.push_back(index_tuple(scope_, i));
    return out;
}

bool SolutionSet::is_subset_of(const SolutionSet& other) const {
    if (scope_ != other.scope_) throw DomainError("comparing solution sets over different scopes");
    return std::includes(other.indices_.begin(), other.indices_.end(), indices_.begin(), indices_.end());
}

SolutionSet OptimizationExtensionSystem::extensions(const Valuation& phi, const Tuple& x) const {
    const Scope& d = phi.label();
    const Scope& given = x.scope();
    if (!given.is_subset_of(d)) throw DomainError("extension base is not within the valuation label");
    const Semiring& s = *phi.semiring();
    if (!s.selective())
        throw RefusedError("optimization extension system undefined for non-selective " + s.name());
    const Scope rest = minus(d, given);
    const auto sx = strides_within(d, given);
    Index base = 0;
    for (std::size_t k = 0; k < given.size(); ++k) base += x.values()[k] * sx[k];
    const auto sr = strides_within(d, rest);
    const Index m = rest.cardinality();
    std::vector<Index> offset(m);
    std::vector<std::uint32_t> digit(rest.size(), 0);
    Index off = 0;
    for (Index j = 0; j < m; ++j) {
        offset[j] = base + off;
        for (std::size_t k = rest.size(); k-- > 0;) {
            if (++digit[k] < rest[k].card) {
                off += sr[k];
                break;
            }
            off -= static_cast<Index>(rest[k].card - 1) * sr[k];
            digit[k] = 0;
        }
    }
    const auto& table = phi.table();
    Value best = s.zero();
    for (Index j = 0; j < m; ++j) best = s.add(best, table[offset[j]]);
    std::vector<Index> keep;
    for (Index j = 0; j < m; ++j)
        if (table[offset[j]] == best) keep.push_back(j);
    return SolutionSet(rest, std::move(keep));
}

const OptimizationExtensionSystem& optimization_system() {
    static const OptimizationExtensionSystem es;
    return es;
}

SolutionSet extension_set(const Valuation& phi, const Scope& x_scope, const Tuple& x) {
    if (x.scope() != x_scope) throw DomainError("tuple does not range over the given scope");
    return optimization_system().extensions(phi, x);
}

SolutionSet completions(const SolutionSet& a, const Valuation& phi, const ExtensionSystem& es, Index cap) {
    const Scope& xs = a.scope();
    const Scope z = intersect(phi.label(), xs);
    const Scope out_scope = unite(xs, phi.label());
    std::vector<Index> out;
    bool truncated = a.truncated();
    for (Index xi : a.indices()) {
        const Tuple x = index_tuple(xs, xi);
        const SolutionSet w = es.extensions(phi, tuple_project(x, z));
        for (Index zi : w.indices()) {
            if (out.size() >= cap) {
                truncated = true;
                break;
            }
            out.push_back(tuple_index(tuple_concat(x, index_tuple(w.scope(), zi))));
        }
        if (truncated && out.size() >= cap) break;
    }
    return SolutionSet(out_scope, std::move(out), truncated);
}

namespace {

SolutionSet extend_over(const std::vector<Valuation>& vals, const RootedJoinTree& t, const ExtensionSystem& es,
                        Index cap) {
    if (vals.size() != t.size()) throw ValidationError("need one valuation per tree node");
    SolutionSet c = SolutionSet::of(Tuple{});
    for (NodeId i : node_order(t, Direction::Downward).nodes) c = completions(c, vals[i], es, cap);
    return c;
}

}  // namespace

SolutionSet extend_to_global_projection(const std::vector<Valuation>& marginals, const RootedJoinTree& t,
                                        const ExtensionSystem& es, Index cap) {
    return extend_over(marginals, t, es, cap);
}

SolutionSet extend_to_subtree(const std::vector<Valuation>& psi_prime, const RootedJoinTree& t,
                              const ExtensionSystem& es, Index cap) {
    if (psi_prime.size() != t.size()) throw ValidationError("need one valuation per tree node");
    const Valuation& root = psi_prime[t.root()];
    if (project(root, Scope{}).table()[0] == root.semiring()->zero()) {
        Scope all;
        for (const auto& v : psi_prime) all = unite(all, v.label());
        return SolutionSet::all(all, cap);
    }
    return extend_over(psi_prime, t, es, cap);
}

Tuple single_extend_to_subtree(const std::vector<Valuation>& psi_prime, const RootedJoinTree& t,
                               const ExtensionSystem& es) {
    if (psi_prime.size() != t.size()) throw ValidationError("need one valuation per tree node");
    Tuple x;
    for (NodeId i : node_order(t, Direction::Downward).nodes) {
        const Valuation& v = psi_prime[i];
        const SolutionSet w = es.extensions(v, tuple_project(x, intersect(v.label(), x.scope())));
        if (w.empty()) throw ValidationError("empty extension set at node " + std::to_string(i));
        x = tuple_concat(x, w.tuple(0));
    }
    return x;
}

}  // namespace semidp
