#pragma once

#include <cstdint>
#include <limits>
#include <memory>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace semidp {

// Raw carrier element. Interpretation depends on the owning semiring:
// boolean bit, extended integer (max-plus, kNegInf is -inf), nonnegative
// integer (max-times, natural), chain level (max-min) or element index (table).
using Value = std::int64_t;

inline constexpr Value kNegInf = std::numeric_limits<Value>::min();

enum class SemiringKind { Boolean, MaxPlus, MaxTimesNat, MaxMin, Natural, Table };

// Operation tables of a finite semiring, element names in canonical order.
struct SemiringTable {
    std::vector<std::string> elements;
    std::size_t zero = 0;
    std::size_t one = 0;
    std::vector<std::size_t> add;  // row-major |R| x |R|
    std::vector<std::size_t> mul;
};

class Semiring;
using SemiringRef = std::shared_ptr<const Semiring>;

class Semiring {
public:
    static SemiringRef boolean();
    static SemiringRef max_plus();
    static SemiringRef max_times_nat();
    static SemiringRef max_min(unsigned k);
    static SemiringRef natural();
    static SemiringRef counter3();
    // Validates indices; throws ValidationError naming the offending cell.
    static SemiringRef from_table(SemiringTable table, std::string name = "table");
    // Table whose cells are element names; unknown names are rejected per cell.
    static SemiringRef from_named_table(const std::vector<std::string>& elements,
                                        const std::string& zero, const std::string& one,
                                        const std::vector<std::vector<std::string>>& add,
                                        const std::vector<std::vector<std::string>>& mul,
                                        std::string name = "table");
    // boolean, maxplus, maxtimes-nat, maxmin:<k>, counter3, natural.
    static SemiringRef builtin(std::string_view name);

    SemiringKind kind() const noexcept { return kind_; }
    const std::string& name() const noexcept { return name_; }

    Value zero() const noexcept { return zero_; }
    Value one() const noexcept { return one_; }
    Value add(Value a, Value b) const;
    Value mul(Value a, Value b) const;
    // Canonical order a <= b iff a + b = b.
    bool leq(Value a, Value b) const { return add(a, b) == b; }

    // Selectivity known for built-ins, decided exhaustively for tables.
    bool selective() const noexcept { return selective_; }
    bool finite() const noexcept { return kind_ == SemiringKind::Boolean ||
                                          kind_ == SemiringKind::MaxMin ||
                                          kind_ == SemiringKind::Table; }
    // Carrier in canonical order; empty for infinite carriers.
    std::span<const Value> elements() const noexcept { return elements_; }
    bool contains(Value v) const;

    std::string format(Value v) const;
    // Throws std::invalid_argument when the token is not a carrier element.
    Value parse(std::string_view token) const;

    // Small deterministic probes plus a seeded sampler for infinite carriers.
    std::vector<Value> anchors() const;
    Value sample(std::mt19937_64& rng) const;

    const SemiringTable* table() const noexcept { return table_ ? table_.get() : nullptr; }

    bool operator==(const Semiring& other) const;

private:
    Semiring() = default;

    SemiringKind kind_ = SemiringKind::Boolean;
    std::string name_;
    Value zero_ = 0;
    Value one_ = 1;
    Value top_ = 1;  // max-min chain top
    bool selective_ = true;
    std::vector<Value> elements_;
    std::shared_ptr<const SemiringTable> table_;
};

bool same_semiring(const SemiringRef& a, const SemiringRef& b);

// Value tagged with its semiring; mixing semirings throws SemiringMismatch.
class Element {
public:
    Element(SemiringRef s, Value v);

    const SemiringRef& semiring() const noexcept { return s_; }
    Value value() const noexcept { return v_; }

    friend Element operator+(const Element& a, const Element& b);
    friend Element operator*(const Element& a, const Element& b);
    friend bool operator<=(const Element& a, const Element& b);
    friend bool operator==(const Element& a, const Element& b);

private:
    SemiringRef s_;
    Value v_;
};

// Finite semiring table file: elements:, zero:, one:, add: rows, mul: rows.
SemiringRef parse_semiring_table(std::string_view text, std::size_t first_line = 1,
                                 std::string name = "table");
SemiringRef load_semiring_file(const std::string& path);
std::string format_semiring_table(const Semiring& s);

}  // namespace semidp
