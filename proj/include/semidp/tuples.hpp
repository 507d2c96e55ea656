#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace semidp {

using VarId = std::uint32_t;
using Index = std::uint64_t;

struct Variable {
    VarId id = 0;
    std::uint32_t card = 1;

    friend auto operator<=>(const Variable&, const Variable&) = default;
};

// Set of variables kept sorted by global index.
class Scope {
public:
    Scope() = default;
    // Sorts; throws ValidationError on duplicate ids or zero cardinality.
    Scope(std::initializer_list<Variable> vars);
    explicit Scope(std::vector<Variable> vars);

    std::size_t size() const noexcept { return vars_.size(); }
    bool empty() const noexcept { return vars_.empty(); }
    const Variable& operator[](std::size_t i) const { return vars_[i]; }
    auto begin() const noexcept { return vars_.begin(); }
    auto end() const noexcept { return vars_.end(); }
    const std::vector<Variable>& variables() const noexcept { return vars_; }

    bool contains(VarId id) const;
    std::optional<std::size_t> position(VarId id) const;
    bool is_subset_of(const Scope& other) const;
    // |Omega_X|; throws ResourceError if it does not fit in 64 bits.
    Index cardinality() const;

    friend Scope unite(const Scope& a, const Scope& b);
    friend Scope intersect(const Scope& a, const Scope& b);
    friend Scope minus(const Scope& a, const Scope& b);

    friend bool operator==(const Scope&, const Scope&) = default;

private:
    std::vector<Variable> vars_;
};

Scope unite(const Scope& a, const Scope& b);
Scope intersect(const Scope& a, const Scope& b);
Scope minus(const Scope& a, const Scope& b);

// Assignment of a domain value to every scope variable.
class Tuple {
public:
    Tuple() = default;  // the empty tuple
    // Throws DomainError when a value lies outside its domain.
    Tuple(Scope scope, std::vector<std::uint32_t> values);

    const Scope& scope() const noexcept { return scope_; }
    const std::vector<std::uint32_t>& values() const noexcept { return values_; }
    std::uint32_t value_of(VarId id) const;

    friend bool operator==(const Tuple&, const Tuple&) = default;

private:
    Scope scope_;
    std::vector<std::uint32_t> values_;
};

// x restricted to Y; DomainError unless Y is a subset of d(x).
Tuple tuple_project(const Tuple& x, const Scope& y);
// <x, y>; ConcatenationError on disagreement over shared variables.
Tuple tuple_concat(const Tuple& x, const Tuple& y);
// Mixed-radix position, last scope variable fastest.
Index tuple_index(const Tuple& x);
Tuple index_tuple(const Scope& x, Index i);
std::vector<Tuple> enumerate_tuples(const Scope& x);

// Strides mapping positions of a superset scope onto an index into a subset scope.
std::vector<Index> strides_within(const Scope& sub, const Scope& super);

// Names and cardinalities of the global variable set, in declaration order.
class VariableTable {
public:
    VarId add(std::string name, std::uint32_t card);
    std::size_t size() const noexcept { return names_.size(); }
    const std::string& name(VarId id) const;
    std::uint32_t card(VarId id) const;
    Variable variable(VarId id) const { return {id, card(id)}; }
    std::optional<VarId> find(std::string_view name) const;
    // Throws DomainError on an unknown name.
    VarId id(std::string_view name) const;
    Scope scope(const std::vector<std::string>& names) const;
    Scope all() const;

    friend bool operator==(const VariableTable&, const VariableTable&) = default;

private:
    std::vector<std::string> names_;
    std::vector<std::uint32_t> cards_;
};

}  // namespace semidp
