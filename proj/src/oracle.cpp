#include "semidp/oracle.hpp"

#include <cstdlib>

#include "semidp/errors.hpp"

namespace semidp::oracle {

namespace {

Scope union_scope(std::span<const Valuation> factors) {
    Scope u;
    for (const auto& f : factors) u = unite(u, f.label());
    return u;
}

Value entry(const Valuation& f, const Tuple& x) {
    return f.table()[tuple_index(tuple_project(x, f.label()))];
}

void within_cap(const Scope& s, Index cap) {
    if (s.cardinality() > cap)
        throw ResourceError("oracle enumeration of " + std::to_string(s.cardinality()) + " tuples exceeds cap " +
                            std::to_string(cap));
}

}  // namespace

Index default_oracle_cap() {
    if (const char* v = std::getenv("SEMIDP_ORACLE_CAP"); v && *v) {
        try {
            return std::stoull(v);
        } catch (...) {
        }
    }
    return 1000000;
}

Value evaluate(std::span<const Valuation> factors, const Tuple& x) {
    if (factors.empty()) throw ValidationError("oracle needs at least one factor");
    const Semiring& s = *factors[0].semiring();
    Value v = s.one();
    for (const auto& f : factors) v = s.mul(v, entry(f, x));
    return v;
}

OracleResult<Valuation> brute_project(std::span<const Valuation> factors, const Scope& x, Index cap) {
    if (factors.empty()) throw ValidationError("oracle needs at least one factor");
    const SemiringRef& sr = factors[0].semiring();
    const Semiring& s = *sr;
    const Scope u = union_scope(factors);
    if (!x.is_subset_of(u)) throw DomainError("oracle projection target outside the factor scopes");
    within_cap(u, cap);
    std::vector<Value> table(x.cardinality(), s.zero());
    OracleResult<Valuation> r{Valuation::identity(sr), 0};
    for (Index i = 0; i < u.cardinality(); ++i) {
        const Tuple t = index_tuple(u, i);
        Index cell = tuple_index(tuple_project(t, x));
        table[cell] = s.add(table[cell], evaluate(factors, t));
        ++r.enumerated;
    }
    r.value = Valuation(sr, x, std::move(table));
    return r;
}

OracleResult<SolutionSet> brute_solutions(std::span<const Valuation> factors, Index cap) {
    if (factors.empty()) throw ValidationError("oracle needs at least one factor");
    const Semiring& s = *factors[0].semiring();
    const Scope u = union_scope(factors);
    within_cap(u, cap);
    const Index n = u.cardinality();
    std::vector<Value> values(n);
    Value best = s.zero();
    for (Index i = 0; i < n; ++i) {
        values[i] = evaluate(factors, index_tuple(u, i));
        best = s.add(best, values[i]);
    }
    std::vector<Index> keep;
    for (Index i = 0; i < n; ++i)
        if (values[i] == best) keep.push_back(i);
    OracleResult<SolutionSet> r{SolutionSet(u, std::move(keep)), n};
    r.value.set_optimum(best);
    return r;
}

OracleResult<SolutionSet> brute_extension_set(const Valuation& phi, const Tuple& x, Index cap) {
    const Semiring& s = *phi.semiring();
    if (!x.scope().is_subset_of(phi.label())) throw DomainError("oracle extension base outside the label");
    const Scope rest = minus(phi.label(), x.scope());
    within_cap(rest, cap);
    const Index n = rest.cardinality();
    Value best = s.zero();
    std::vector<Value> values(n);
    for (Index j = 0; j < n; ++j) {
        values[j] = entry(phi, tuple_concat(x, index_tuple(rest, j)));
        best = s.add(best, values[j]);
    }
    std::vector<Index> keep;
    for (Index j = 0; j < n; ++j)
        if (values[j] == best) keep.push_back(j);
    return {SolutionSet(rest, std::move(keep)), n};
}

}  // namespace semidp::oracle
