#include "semidp/valuation.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "semidp/errors.hpp"

namespace semidp {

namespace {
Index env_cap(const char* name, Index fallback) {
    const char* v = std::getenv(name);
    if (!v || !*v) return fallback;
    try {
        return std::stoull(v);
    } catch (...) {
        return fallback;
    }
}

Index checked_size(const Scope& scope) {
    const Index n = scope.cardinality();
    const Index cap = default_table_cap();
    if (n > cap)
        throw ResourceError("table over scope of " + std::to_string(scope.size()) + " variables needs " +
                            std::to_string(n) + " entries, cap is " + std::to_string(cap));
    return n;
}
}  // namespace

Index default_table_cap() { return env_cap("SEMIDP_TABLE_CAP", Index{1} << 20); }

Valuation::Valuation(SemiringRef s, Scope scope, std::vector<Value> table)
    : s_(std::move(s)), scope_(std::move(scope)), table_(std::move(table)) {
    if (!s_) throw ValidationError("valuation without semiring");
    const Index n = checked_size(scope_);
    if (table_.size() != n)
        throw ValidationError("valuation table has " + std::to_string(table_.size()) + " entries, expected " +
                              std::to_string(n));
    for (Value v : table_)
        if (!s_->contains(v)) throw ValidationError("table entry is not an element of " + s_->name());
}

Valuation Valuation::identity(SemiringRef s) {
    Value one = s->one();
    return Valuation(std::move(s), Scope{}, {one});
}

Valuation Valuation::constant(SemiringRef s, Scope scope, Value v) {
    const Index n = checked_size(scope);
    return Valuation(std::move(s), std::move(scope), std::vector<Value>(n, v));
}

Value Valuation::at(const Tuple& x) const {
    if (x.scope() == scope_) return table_[tuple_index(x)];
    return table_[tuple_index(tuple_project(x, scope_))];
}

bool Valuation::is_null() const {
    const Value z = s_->zero();
    return std::all_of(table_.begin(), table_.end(), [z](Value v) { return v == z; });
}

bool operator==(const Valuation& a, const Valuation& b) {
    return same_semiring(a.s_, b.s_) && a.scope_ == b.scope_ && a.table_ == b.table_;
}

Valuation combine(const Valuation& a, const Valuation& b, Exec exec) {
    if (!same_semiring(a.semiring(), b.semiring()))
        throw SemiringMismatch("combining valuations over " + a.semiring()->name() + " and " +
                               b.semiring()->name());
    Scope u = unite(a.label(), b.label());
    const Index n = checked_size(u);
    const Semiring& s = *a.semiring();
    auto table = kernels::use_parallel(exec, n)
                     ? kernels::combine_parallel(s, a.label(), a.table(), b.label(), b.table(), u)
                     : kernels::combine_serial(s, a.label(), a.table(), b.label(), b.table(), u);
    return Valuation(a.semiring(), std::move(u), std::move(table));
}

Valuation project(const Valuation& phi, const Scope& y, Exec exec) {
    if (!y.is_subset_of(phi.label())) throw DomainError("projection target is not a subset of the valuation label");
    if (y == phi.label()) return phi;
    const Semiring& s = *phi.semiring();
    auto table = kernels::use_parallel(exec, phi.table().size())
                     ? kernels::project_parallel(s, phi.label(), phi.table(), y)
                     : kernels::project_serial(s, phi.label(), phi.table(), y);
    return Valuation(phi.semiring(), y, std::move(table));
}

Valuation combine_all(const SemiringRef& s, std::span<const Valuation> factors, Exec exec) {
    Valuation acc = Valuation::identity(s);
    for (const auto& f : factors) acc = combine(acc, f, exec);
    return acc;
}

}  // namespace semidp
