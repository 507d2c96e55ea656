#include "semidp/solve.hpp"

#include "semidp/errors.hpp"
#include "semidp/message_passing.hpp"

namespace semidp {

std::string_view to_string(Task t) {
    switch (t) {
        case Task::Project: return "project";
        case Task::Single: return "single";
        case Task::Partial: return "partial";
        case Task::Complete: return "complete";
    }
    return "?";
}

std::optional<Task> parse_task(std::string_view s) {
    if (s == "project") return Task::Project;
    if (s == "single") return Task::Single;
    if (s == "partial") return Task::Partial;
    if (s == "complete") return Task::Complete;
    return std::nullopt;
}

Value evaluate_product(std::span<const Valuation> factors, const Tuple& x) {
    if (factors.empty()) throw ValidationError("no factors to evaluate");
    const Semiring& s = *factors[0].semiring();
    Value v = s.one();
    for (const auto& f : factors) v = s.mul(v, f.at(x));
    return v;
}

namespace {

struct Prepared {
    RootedJoinTree tree;
    std::vector<Valuation> factors;
};

Prepared prepare(std::span<const Valuation> factors, const SolveOptions& opt) {
    std::vector<Valuation> all(factors.begin(), factors.end());
    if (opt.query) {
        Scope d;
        for (const auto& f : factors) d = unite(d, f.label());
        if (!opt.query->is_subset_of(d)) throw DomainError("query scope is not covered by the factors");
    }
    if (opt.tree) {
        RootedJoinTree t = *opt.tree;
        if (opt.query) {
            std::optional<NodeId> cover;
            for (NodeId i = 0; i < t.size() && !cover; ++i)
                if (opt.query->is_subset_of(t.label(i))) cover = i;
            if (!cover) throw DomainError("no node of the supplied tree covers the query scope");
            t = t.rerooted(*cover);
        }
        return {std::move(t), std::move(all)};
    }
    std::vector<Scope> scopes;
    for (const auto& f : factors) scopes.push_back(f.label());
    BuiltTree b = build_join_tree(scopes, opt.heuristic, opt.query);
    if (b.query_anchor) {
        const SemiringRef& s = factors[0].semiring();
        all.push_back(Valuation::constant(s, *opt.query, s->one()));
    }
    return {std::move(b.tree), std::move(all)};
}

void verify_and_filter(std::span<const Valuation> factors, SolveResult& r, bool count_rejections) {
    std::vector<Index> keep;
    std::size_t rejected = 0;
    for (Index i : r.solutions.indices()) {
        const Tuple x = index_tuple(r.solutions.scope(), i);
        if (evaluate_product(factors, x) == r.optimum)
            keep.push_back(i);
        else
            ++rejected;
    }
    SolutionSet filtered(r.solutions.scope(), std::move(keep), r.solutions.truncated());
    filtered.set_optimum(r.optimum);
    r.solutions = std::move(filtered);
    if (count_rejections) r.verify_rejected += rejected;
}

}  // namespace

SolveResult solve(std::span<const Valuation> factors, Task task, const SolveOptions& opt) {
    if (factors.empty()) throw ValidationError("problem has no factors");
    const SemiringRef& s = factors[0].semiring();
    for (const auto& f : factors)
        if (!same_semiring(f.semiring(), s)) throw SemiringMismatch("factors over different semirings");

    SolveResult r;
    r.task = task;
    if (task == Task::Project) {
        const Scope x = opt.query.value_or(Scope{});
        if (opt.tree) {
            Prepared p = prepare(factors, opt);
            CollectState st = collect(p.tree, p.factors, opt.exec);
            r.projection = project(st.psi_prime[p.tree.root()], x, opt.exec);
        } else {
            r.projection = project_query(factors, x, opt.exec);
        }
        r.path = "collect";
        r.annotation = "exact projection";
        r.optimum = project(*r.projection, Scope{}).table()[0];
        return r;
    }

    if (!s->selective())
        throw RefusedError("solution tasks need a selective semiring; " + s->name() + " is not");

    Prepared p = prepare(factors, opt);
    const Index cap = opt.max_solutions;
    const ExtensionSystem& es = optimization_system();

    CollectState st = collect(p.tree, p.factors, opt.exec);
    r.optimum = project(st.psi_prime[p.tree.root()], Scope{}, opt.exec).table()[0];

    switch (task) {
        case Task::Single: {
            r.solutions = SolutionSet::of(single_extend_to_subtree(st.psi_prime, p.tree, es));
            r.path = "single-extend-to-subtree";
            r.annotation = "one solution, guaranteed";
            break;
        }
        case Task::Partial: {
            r.solutions = extend_to_subtree(st.psi_prime, p.tree, es, cap);
            r.path = "extend-to-subtree";
            r.annotation = "non-empty subset of solutions, guaranteed sound";
            break;
        }
        case Task::Complete: {
            r.matrix = classify(*s, opt.check);
            const Soundness ets = r.matrix->at("ETS", "complete").verdict;
            const Soundness egp = r.matrix->at("EGP", "complete").verdict;
            if (trusted(ets)) {
                const bool null = r.optimum == s->zero();
                r.solutions = extend_to_subtree(st.psi_prime, p.tree, es, cap);
                r.path = null ? "extend-to-subtree+null-fast-path" : "extend-to-subtree";
                r.soundness = ets;
                r.annotation = ets == Soundness::Guaranteed ? "complete, guaranteed by weak multiplicative cancellativity"
                                                            : "complete, weak multiplicative cancellativity not falsified by sampling";
            } else if (trusted(egp)) {
                CollectState full = collect_distribute_state(p.tree, p.factors, opt.exec);
                r.solutions = extend_to_global_projection(full.psi_prime, p.tree, es, cap);
                r.path = "collect-distribute+extend-to-global-projection";
                r.soundness = egp;
                r.annotation = egp == Soundness::Guaranteed
                                   ? "complete, guaranteed by square multiplicative cancellativity on the image"
                                   : "complete, square multiplicative cancellativity not falsified by sampling";
            } else {
                r.solutions = extend_to_subtree(st.psi_prime, p.tree, es, cap);
                verify_and_filter(p.factors, r, false);
                r.path = "extend-to-subtree+filter";
                r.soundness = Soundness::NotGuaranteed;
                r.annotation = "sound subset, completeness not guaranteed";
            }
            break;
        }
        case Task::Project: break;
    }

    r.solutions.set_optimum(r.optimum);
    if (opt.verify) {
        verify_and_filter(p.factors, r, true);
        r.verified = true;
    }
    return r;
}

}  // namespace semidp
