#pragma once

#include <span>
#include <vector>

#include "semidp/kernels.hpp"
#include "semidp/semiring.hpp"
#include "semidp/tuples.hpp"

namespace semidp {

// Default 2^20 entries, overridable through SEMIDP_TABLE_CAP.
Index default_table_cap();

// Dense semiring valuation: one entry per tuple of its scope, enumerate_tuples order.
class Valuation {
public:
    // Throws ValidationError on a size mismatch or foreign entries, ResourceError above the cap.
    Valuation(SemiringRef s, Scope scope, std::vector<Value> table);

    static Valuation identity(SemiringRef s);
    static Valuation constant(SemiringRef s, Scope scope, Value v);
    static Valuation zero(SemiringRef s, Scope scope) {
        Value z = s->zero();
        return constant(std::move(s), std::move(scope), z);
    }

    const Scope& label() const noexcept { return scope_; }
    const SemiringRef& semiring() const noexcept { return s_; }
    const std::vector<Value>& table() const noexcept { return table_; }
    Value at(const Tuple& x) const;  // x restricted to the label
    Value at_index(Index i) const { return table_.at(i); }

    bool is_null() const;

    friend bool operator==(const Valuation& a, const Valuation& b);

private:
    SemiringRef s_;
    Scope scope_;
    std::vector<Value> table_;
};

Valuation combine(const Valuation& a, const Valuation& b, Exec exec = Exec::Auto);
// Y must be a subset of d(phi); DomainError otherwise.
Valuation project(const Valuation& phi, const Scope& y, Exec exec = Exec::Auto);
// Identity for an empty list.
Valuation combine_all(const SemiringRef& s, std::span<const Valuation> factors, Exec exec = Exec::Auto);

}  // namespace semidp
