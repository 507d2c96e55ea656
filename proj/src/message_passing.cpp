#include "semidp/message_passing.hpp"

#include "semidp/errors.hpp"

namespace semidp {

namespace {

std::vector<Scope> scopes_of(std::span<const Valuation> factors) {
    std::vector<Scope> out;
    for (const auto& f : factors) out.push_back(f.label());
    return out;
}

void require_tree_fits(const RootedJoinTree& t, std::span<const Valuation> factors) {
    if (factors.empty()) throw ValidationError("message passing needs at least one factor");
    const auto scopes = scopes_of(factors);
    if (auto c = check_covering(t, scopes); !c.holds)
        throw ValidationError("tree does not cover factor " + std::to_string(c.factor));
    if (auto m = check_minimally_labeled(t, scopes); !m.holds)
        throw ValidationError("tree is not minimally labeled at node " + std::to_string(m.node));
    for (const auto& f : factors)
        if (!same_semiring(f.semiring(), factors[0].semiring()))
            throw SemiringMismatch("factors over different semirings");
}

}  // namespace

std::vector<Valuation> node_potentials(const RootedJoinTree& t, std::span<const Valuation> factors) {
    if (factors.empty()) throw ValidationError("node potentials need at least one factor");
    const SemiringRef& s = factors[0].semiring();
    std::vector<Valuation> psi(t.size(), Valuation::identity(s));
    for (std::size_t f = 0; f < factors.size(); ++f) {
        NodeId i = t.assignment().at(f);
        psi[i] = combine(psi[i], factors[f]);
    }
    return psi;
}

CollectState collect(const RootedJoinTree& t, std::span<const Valuation> factors, Exec exec) {
    require_tree_fits(t, factors);
    CollectState st;
    st.psi = node_potentials(t, factors);
    st.psi_prime = st.psi;
    st.up.assign(t.size(), std::nullopt);
    st.down.assign(t.size(), std::nullopt);
    for (NodeId i : node_order(t, Direction::Upward).nodes) {
        if (i == t.root()) continue;
        Valuation mu = project(st.psi_prime[i], t.separator(i), exec);
        const NodeId p = t.parent(i);
        st.psi_prime[p] = combine(st.psi_prime[p], mu, exec);
        st.up[i] = std::move(mu);
    }
    return st;
}

CollectState collect_distribute_state(const RootedJoinTree& t, std::span<const Valuation> factors, Exec exec) {
    CollectState st = collect(t, factors, exec);
    for (NodeId i : node_order(t, Direction::Downward).nodes) {
        if (i == t.root()) continue;
        const NodeId p = t.parent(i);
        Valuation acc = st.psi[p];
        for (NodeId j : t.neighbors(p)) {
            if (j == i) continue;
            acc = combine(acc, j == t.parent(p) ? *st.down[p] : *st.up[j], exec);
        }
        Valuation mu = project(acc, t.separator(i), exec);
        st.psi_prime[i] = combine(st.psi_prime[i], mu, exec);
        st.down[i] = std::move(mu);
    }
    return st;
}

std::vector<Valuation> collect_distribute(const RootedJoinTree& t, std::span<const Valuation> factors, Exec exec) {
    return collect_distribute_state(t, factors, exec).psi_prime;
}

Valuation project_query(std::span<const Valuation> factors, const Scope& x, Exec exec) {
    if (factors.empty()) throw ValidationError("projection query needs at least one factor");
    auto scopes = scopes_of(factors);
    Scope all_vars;
    for (const auto& s : scopes) all_vars = unite(all_vars, s);
    if (!x.is_subset_of(all_vars)) throw DomainError("query scope is not covered by the factors");
    BuiltTree built = build_join_tree(scopes, Heuristic::MinFill, x);
    std::vector<Valuation> all(factors.begin(), factors.end());
    if (built.query_anchor) {
        const SemiringRef& s = factors[0].semiring();
        all.push_back(Valuation::constant(s, x, s->one()));
    }
    CollectState st = collect(built.tree, all, exec);
    return project(st.psi_prime[built.tree.root()], x, exec);
}

}  // namespace semidp
