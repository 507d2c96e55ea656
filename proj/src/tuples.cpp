#include "semidp/tuples.hpp"

#include <algorithm>

#include "semidp/errors.hpp"

namespace semidp {

Scope::Scope(std::initializer_list<Variable> vars) : Scope(std::vector<Variable>(vars)) {}

Scope::Scope(std::vector<Variable> vars) : vars_(std::move(vars)) {
    std::sort(vars_.begin(), vars_.end());
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        if (vars_[i].card == 0) throw ValidationError("variable " + std::to_string(vars_[i].id) + " has empty domain");
        if (i > 0 && vars_[i].id == vars_[i - 1].id)
            throw ValidationError("variable " + std::to_string(vars_[i].id) + " listed twice in a scope");
    }
}

std::optional<std::size_t> Scope::position(VarId id) const {
    auto it = std::lower_bound(vars_.begin(), vars_.end(), id,
                               [](const Variable& v, VarId x) { return v.id < x; });
    if (it == vars_.end() || it->id != id) return std::nullopt;
    return static_cast<std::size_t>(it - vars_.begin());
}

bool Scope::contains(VarId id) const { return position(id).has_value(); }

bool Scope::is_subset_of(const Scope& other) const {
    return std::includes(other.vars_.begin(), other.vars_.end(), vars_.begin(), vars_.end(),
                         [](const Variable& a, const Variable& b) { return a.id < b.id; });
}

Index Scope::cardinality() const {
    Index n = 1;
    for (const auto& v : vars_)
        if (__builtin_mul_overflow(n, static_cast<Index>(v.card), &n))
            throw ResourceError("scope cardinality overflows 64 bits");
    return n;
}

namespace {
auto by_id = [](const Variable& a, const Variable& b) { return a.id < b.id; };
}

Scope unite(const Scope& a, const Scope& b) {
    Scope r;
    std::set_union(a.vars_.begin(), a.vars_.end(), b.vars_.begin(), b.vars_.end(),
                   std::back_inserter(r.vars_), by_id);
    return r;
}

Scope intersect(const Scope& a, const Scope& b) {
    Scope r;
    std::set_intersection(a.vars_.begin(), a.vars_.end(), b.vars_.begin(), b.vars_.end(),
                          std::back_inserter(r.vars_), by_id);
    return r;
}

Scope minus(const Scope& a, const Scope& b) {
    Scope r;
    std::set_difference(a.vars_.begin(), a.vars_.end(), b.vars_.begin(), b.vars_.end(),
                        std::back_inserter(r.vars_), by_id);
    return r;
}

Tuple::Tuple(Scope scope, std::vector<std::uint32_t> values)
    : scope_(std::move(scope)), values_(std::move(values)) {
    if (values_.size() != scope_.size()) throw DomainError("tuple arity does not match its scope");
    for (std::size_t i = 0; i < values_.size(); ++i)
        if (values_[i] >= scope_[i].card)
            throw DomainError("value " + std::to_string(values_[i]) + " outside the domain of variable " +
                              std::to_string(scope_[i].id));
}

std::uint32_t Tuple::value_of(VarId id) const {
    auto p = scope_.position(id);
    if (!p) throw DomainError("variable " + std::to_string(id) + " not in tuple scope");
    return values_[*p];
}

Tuple tuple_project(const Tuple& x, const Scope& y) {
    std::vector<std::uint32_t> vals;
    vals.reserve(y.size());
    for (const auto& v : y) {
        auto p = x.scope().position(v.id);
        if (!p) throw DomainError("projection onto variable " + std::to_string(v.id) + " outside the tuple scope");
        vals.push_back(x.values()[*p]);
    }
    return Tuple(y, std::move(vals));
}

Tuple tuple_concat(const Tuple& x, const Tuple& y) {
    Scope u = unite(x.scope(), y.scope());
    std::vector<std::uint32_t> vals;
    vals.reserve(u.size());
    for (const auto& v : u) {
        auto px = x.scope().position(v.id);
        auto py = y.scope().position(v.id);
        if (px && py && x.values()[*px] != y.values()[*py])
            throw ConcatenationError("tuples disagree on variable " + std::to_string(v.id));
        vals.push_back(px ? x.values()[*px] : y.values()[*py]);
    }
    return Tuple(std::move(u), std::move(vals));
}

Index tuple_index(const Tuple& x) {
    Index i = 0;
    for (std::size_t k = 0; k < x.values().size(); ++k) i = i * x.scope()[k].card + x.values()[k];
    return i;
}

Tuple index_tuple(const Scope& x, Index i) {
    if (i >= x.cardinality()) throw DomainError("tuple index " + std::to_string(i) + " out of range");
    std::vector<std::uint32_t> vals(x.size());
    for (std::size_t k = x.size(); k-- > 0;) {
        vals[k] = static_cast<std::uint32_t>(i % x[k].card);
        i /= x[k].card;
    }
    return Tuple(x, std::move(vals));
}

std::vector<Tuple> enumerate_tuples(const Scope& x) {
    const Index n = x.cardinality();
    std::vector<Tuple> out;
    out.reserve(n);
    for (Index i = 0; i < n; ++i) out.push_back(index_tuple(x, i));
    return out;
}

std::vector<Index> strides_within(const Scope& sub, const Scope& super) {
    std::vector<Index> sub_stride(sub.size());
    Index s = 1;
    for (std::size_t k = sub.size(); k-- > 0;) {
        sub_stride[k] = s;
        s *= sub[k].card;
    }
    std::vector<Index> out(super.size(), 0);
    for (std::size_t k = 0; k < super.size(); ++k)
        if (auto p = sub.position(super[k].id)) out[k] = sub_stride[*p];
    return out;
}

VarId VariableTable::add(std::string name, std::uint32_t card) {
    if (card == 0) throw ValidationError("variable '" + name + "' needs a positive cardinality");
    if (find(name)) throw ValidationError("variable '" + name + "' declared twice");
    names_.push_back(std::move(name));
    cards_.push_back(card);
    return static_cast<VarId>(names_.size() - 1);
}

const std::string& VariableTable::name(VarId id) const {
    if (id >= names_.size()) throw DomainError("unknown variable id " + std::to_string(id));
    return names_[id];
}

std::uint32_t VariableTable::card(VarId id) const {
    if (id >= cards_.size()) throw DomainError("unknown variable id " + std::to_string(id));
    return cards_[id];
}

std::optional<VarId> VariableTable::find(std::string_view name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return static_cast<VarId>(i);
    return std::nullopt;
}

VarId VariableTable::id(std::string_view name) const {
    auto v = find(name);
    if (!v) throw DomainError("unknown variable '" + std::string(name) + "'");
    return *v;
}

Scope VariableTable::scope(const std::vector<std::string>& names) const {
    std::vector<Variable> vars;
    for (const auto& n : names) vars.push_back(variable(id(n)));
    return Scope(std::move(vars));
}

Scope VariableTable::all() const {
    std::vector<Variable> vars;
    for (VarId i = 0; i < names_.size(); ++i) vars.push_back({i, cards_[i]});
    return Scope(std::move(vars));
}

}  // namespace semidp
