#include "semidp/semiring.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "semidp/errors.hpp"

namespace semidp {

namespace {

Value parse_int(std::string_view token) {
    Value v = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (ec != std::errc() || ptr != token.data() + token.size())
        throw std::invalid_argument("not an integer: '" + std::string(token) + "'");
    return v;
}

Value checked_add(Value a, Value b) {
    Value r;
    if (__builtin_add_overflow(a, b, &r) || r == kNegInf)
        throw OverflowError("integer overflow in semiring operation");
    return r;
}

Value checked_mul(Value a, Value b) {
    Value r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in semiring operation");
    return r;
}

std::vector<std::string> split_ws(std::string_view line) {
    std::vector<std::string> out;
    std::istringstream in{std::string(line)};
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

}  // namespace

SemiringRef Semiring::boolean() {
    static const SemiringRef s = [] {
        auto* r = new Semiring();
        r->kind_ = SemiringKind::Boolean;
        r->name_ = "boolean";
        r->zero_ = 0;
        r->one_ = 1;
        r->elements_ = {0, 1};
        return SemiringRef(r);
    }();
    return s;
}

SemiringRef Semiring::max_plus() {
    static const SemiringRef s = [] {
        auto* r = new Semiring();
        r->kind_ = SemiringKind::MaxPlus;
        r->name_ = "maxplus";
        r->zero_ = kNegInf;
        r->one_ = 0;
        return SemiringRef(r);
    }();
    return s;
}

SemiringRef Semiring::max_times_nat() {
    static const SemiringRef s = [] {
        auto* r = new Semiring();
        r->kind_ = SemiringKind::MaxTimesNat;
        r->name_ = "maxtimes-nat";
        r->zero_ = 0;
        r->one_ = 1;
        return SemiringRef(r);
    }();
    return s;
}

SemiringRef Semiring::max_min(unsigned k) {
    if (k == 0) throw ValidationError("maxmin chain needs k >= 1");
    auto* r = new Semiring();
    r->kind_ = SemiringKind::MaxMin;
    r->name_ = "maxmin:" + std::to_string(k);
    r->zero_ = 0;
    r->one_ = static_cast<Value>(k);
    r->top_ = static_cast<Value>(k);
    for (Value v = 0; v <= r->top_; ++v) r->elements_.push_back(v);
    return SemiringRef(r);
}

SemiringRef Semiring::natural() {
    static const SemiringRef s = [] {
        auto* r = new Semiring();
        r->kind_ = SemiringKind::Natural;
        r->name_ = "natural";
        r->zero_ = 0;
        r->one_ = 1;
        r->selective_ = false;
        return SemiringRef(r);
    }();
    return s;
}

SemiringRef Semiring::counter3() {
    static const SemiringRef s = [] {
        SemiringTable t;
        t.elements = {"0", "1", "2", "3"};
        t.zero = 0;
        t.one = 1;
        for (std::size_t a = 0; a < 4; ++a)
            for (std::size_t b = 0; b < 4; ++b) t.add.push_back(std::max(a, b));
        t.mul = {0, 0, 0, 0,
                 0, 1, 2, 3,
                 0, 2, 2, 3,
                 0, 3, 3, 3};
        return from_table(std::move(t), "counter3");
    }();
    return s;
}

SemiringRef Semiring::from_table(SemiringTable table, std::string name) {
    const std::size_t n = table.elements.size();
    if (n == 0) throw ValidationError("semiring table has no elements");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (table.elements[i] == table.elements[j])
                throw ValidationError("duplicate element name '" + table.elements[i] + "'");
    if (table.zero >= n) throw ValidationError("zero is not an element");
    if (table.one >= n) throw ValidationError("one is not an element");
    auto check = [&](const std::vector<std::size_t>& cells, const char* op) {
        if (cells.size() != n * n)
            throw ValidationError(std::string(op) + " table must have " + std::to_string(n * n) +
                                  " cells");
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                if (cells[a * n + b] >= n)
                    throw ValidationError(std::string(op) + " table cell (" + table.elements[a] +
                                          "," + table.elements[b] + ") is not an element");
    };
    check(table.add, "add");
    check(table.mul, "mul");

    auto* r = new Semiring();
    r->kind_ = SemiringKind::Table;
    r->name_ = std::move(name);
    r->zero_ = static_cast<Value>(table.zero);
    r->one_ = static_cast<Value>(table.one);
    for (std::size_t i = 0; i < n; ++i) r->elements_.push_back(static_cast<Value>(i));
    r->selective_ = true;
    for (std::size_t a = 0; a < n && r->selective_; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            std::size_t s = table.add[a * n + b];
            if (s != a && s != b) {
                r->selective_ = false;
                break;
            }
        }
    r->table_ = std::make_shared<const SemiringTable>(std::move(table));
    return SemiringRef(r);
}

SemiringRef Semiring::from_named_table(const std::vector<std::string>& elements,
                                       const std::string& zero, const std::string& one,
                                       const std::vector<std::vector<std::string>>& add,
                                       const std::vector<std::vector<std::string>>& mul,
                                       std::string name) {
    const std::size_t n = elements.size();
    auto lookup = [&](const std::string& e, const std::string& where) {
        auto it = std::find(elements.begin(), elements.end(), e);
        if (it == elements.end())
            throw ValidationError(where + ": unknown element '" + e + "'");
        return static_cast<std::size_t>(it - elements.begin());
    };
    SemiringTable t;
    t.elements = elements;
    t.zero = lookup(zero, "zero");
    t.one = lookup(one, "one");
    auto fill = [&](const std::vector<std::vector<std::string>>& rows, const char* op,
                    std::vector<std::size_t>& out) {
        if (rows.size() != n)
            throw ValidationError(std::string(op) + " table must have " + std::to_string(n) + " rows");
        for (std::size_t a = 0; a < n; ++a) {
            if (rows[a].size() != n)
                throw ValidationError(std::string(op) + " row " + elements[a] + " must have " +
                                      std::to_string(n) + " entries");
            for (std::size_t b = 0; b < n; ++b)
                out.push_back(lookup(rows[a][b], std::string(op) + " table cell (" + elements[a] +
                                                     "," + elements[b] + ")"));
        }
    };
    fill(add, "add", t.add);
    fill(mul, "mul", t.mul);
    return from_table(std::move(t), std::move(name));
}

SemiringRef Semiring::builtin(std::string_view name) {
    if (name == "boolean") return boolean();
    if (name == "maxplus") return max_plus();
    if (name == "maxtimes-nat") return max_times_nat();
    if (name == "counter3") return counter3();
    if (name == "natural") return natural();
    if (name.starts_with("maxmin:")) {
        Value k = 0;
        try {
            k = parse_int(name.substr(7));
        } catch (const std::invalid_argument&) {
            k = 0;
        }
        if (k < 1 || k > 1000000) throw ValidationError("invalid maxmin chain '" + std::string(name) + "'");
        return max_min(static_cast<unsigned>(k));
    }
    throw ValidationError("unknown semiring '" + std::string(name) + "'");
}

Value Semiring::add(Value a, Value b) const {
    switch (kind_) {
        case SemiringKind::Boolean: return a | b;
        case SemiringKind::MaxPlus:
        case SemiringKind::MaxTimesNat:
        case SemiringKind::MaxMin: return std::max(a, b);
        case SemiringKind::Natural: return checked_add(a, b);
        case SemiringKind::Table: {
            const std::size_t n = table_->elements.size();
            return static_cast<Value>(table_->add[static_cast<std::size_t>(a) * n + static_cast<std::size_t>(b)]);
        }
    }
    return a;
}

Value Semiring::mul(Value a, Value b) const {
    switch (kind_) {
        case SemiringKind::Boolean: return a & b;
        case SemiringKind::MaxPlus:
            if (a == kNegInf || b == kNegInf) return kNegInf;
            return checked_add(a, b);
        case SemiringKind::MaxTimesNat:
        case SemiringKind::Natural: return checked_mul(a, b);
        case SemiringKind::MaxMin: return std::min(a, b);
        case SemiringKind::Table: {
            const std::size_t n = table_->elements.size();
            return static_cast<Value>(table_->mul[static_cast<std::size_t>(a) * n + static_cast<std::size_t>(b)]);
        }
    }
    return a;
}

bool Semiring::contains(Value v) const {
    switch (kind_) {
        case SemiringKind::Boolean: return v == 0 || v == 1;
        case SemiringKind::MaxPlus: return true;
        case SemiringKind::MaxTimesNat:
        case SemiringKind::Natural: return v >= 0;
        case SemiringKind::MaxMin: return v >= 0 && v <= top_;
        case SemiringKind::Table: return v >= 0 && static_cast<std::size_t>(v) < elements_.size();
    }
    return false;
}

std::string Semiring::format(Value v) const {
    if (kind_ == SemiringKind::Table) return table_->elements.at(static_cast<std::size_t>(v));
    if (kind_ == SemiringKind::MaxPlus && v == kNegInf) return "-inf";
    return std::to_string(v);
}

Value Semiring::parse(std::string_view token) const {
    if (kind_ == SemiringKind::Table) {
        const auto& names = table_->elements;
        auto it = std::find(names.begin(), names.end(), token);
        if (it == names.end())
            throw std::invalid_argument("unknown element '" + std::string(token) + "' of " + name_);
        return static_cast<Value>(it - names.begin());
    }
    if (kind_ == SemiringKind::MaxPlus && token == "-inf") return kNegInf;
    Value v = parse_int(token);
    if (!contains(v) || (kind_ == SemiringKind::MaxPlus && v == kNegInf))
        throw std::invalid_argument("'" + std::string(token) + "' is not an element of " + name_);
    return v;
}

std::vector<Value> Semiring::anchors() const {
    if (finite()) return elements_;
    return {zero_, one_};
}

Value Semiring::sample(std::mt19937_64& rng) const {
    switch (kind_) {
        case SemiringKind::MaxPlus: {
            std::uniform_int_distribution<int> d(-7, 6);
            int v = d(rng);
            return v == -7 ? kNegInf : v;
        }
        case SemiringKind::MaxTimesNat:
        case SemiringKind::Natural: {
            std::uniform_int_distribution<Value> d(0, 8);
            return d(rng);
        }
        default: {
            std::uniform_int_distribution<std::size_t> d(0, elements_.size() - 1);
            return elements_[d(rng)];
        }
    }
}

bool Semiring::operator==(const Semiring& other) const {
    if (kind_ != other.kind_ || name_ != other.name_) return false;
    if (kind_ == SemiringKind::MaxMin) return top_ == other.top_;
    if (kind_ == SemiringKind::Table)
        return table_->elements == other.table_->elements && table_->zero == other.table_->zero &&
               table_->one == other.table_->one && table_->add == other.table_->add &&
               table_->mul == other.table_->mul;
    return true;
}

bool same_semiring(const SemiringRef& a, const SemiringRef& b) {
    return a == b || (a && b && *a == *b);
}

Element::Element(SemiringRef s, Value v) : s_(std::move(s)), v_(v) {
    if (!s_) throw SemiringMismatch("element without semiring");
    if (!s_->contains(v)) throw DomainError("value is not an element of " + s_->name());
}

namespace {
const Semiring& common(const Element& a, const Element& b) {
    if (!same_semiring(a.semiring(), b.semiring()))
        throw SemiringMismatch("operands from semirings " + a.semiring()->name() + " and " +
                               b.semiring()->name());
    return *a.semiring();
}
}  // namespace

Element operator+(const Element& a, const Element& b) {
    return Element(a.s_, common(a, b).add(a.v_, b.v_));
}

Element operator*(const Element& a, const Element& b) {
    return Element(a.s_, common(a, b).mul(a.v_, b.v_));
}

bool operator<=(const Element& a, const Element& b) { return common(a, b).leq(a.v_, b.v_); }

bool operator==(const Element& a, const Element& b) {
    return same_semiring(a.s_, b.s_) && a.v_ == b.v_;
}

SemiringRef parse_semiring_table(std::string_view text, std::size_t first_line, std::string name) {
    std::vector<std::string> elements;
    std::string zero, one;
    std::vector<std::vector<std::string>> add, mul;
    std::vector<std::vector<std::string>>* rows = nullptr;
    bool have_elements = false, have_zero = false, have_one = false;

    std::istringstream in{std::string(text)};
    std::string raw;
    std::size_t lineno = first_line - 1;
    std::size_t expected = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string_view line = raw;
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        auto toks = split_ws(line);
        if (toks.empty()) continue;
        const std::string& head = toks[0];
        if (head == "elements:") {
            elements.assign(toks.begin() + 1, toks.end());
            if (elements.empty()) throw ParseError(lineno, "no elements listed");
            expected = elements.size();
            have_elements = true;
            rows = nullptr;
        } else if (head == "zero:" || head == "one:") {
            if (toks.size() != 2) throw ParseError(lineno, "expected one element after " + head);
            (head == "zero:" ? zero : one) = toks[1];
            (head == "zero:" ? have_zero : have_one) = true;
            rows = nullptr;
        } else if (head == "add:" || head == "mul:") {
            if (!have_elements) throw ParseError(lineno, "elements: must precede " + head);
            if (toks.size() != 1) throw ParseError(lineno, head + " rows start on the next line");
            rows = head == "add:" ? &add : &mul;
            if (!rows->empty()) throw ParseError(lineno, "duplicate " + head + " section");
        } else {
            if (!rows) throw ParseError(lineno, "unexpected '" + head + "'");
            if (rows->size() == expected) throw ParseError(lineno, "too many table rows");
            if (toks.size() != expected)
                throw ParseError(lineno, "expected " + std::to_string(expected) + " entries, got " +
                                             std::to_string(toks.size()));
            for (const auto& t : toks)
                if (std::find(elements.begin(), elements.end(), t) == elements.end())
                    throw ParseError(lineno, "unknown element '" + t + "'");
            rows->push_back(toks);
        }
    }
    if (!have_elements) throw ParseError(0, "missing elements:");
    if (!have_zero) throw ParseError(0, "missing zero:");
    if (!have_one) throw ParseError(0, "missing one:");
    if (add.size() != expected) throw ParseError(0, "add: needs " + std::to_string(expected) + " rows");
    if (mul.size() != expected) throw ParseError(0, "mul: needs " + std::to_string(expected) + " rows");
    return Semiring::from_named_table(elements, zero, one, add, mul, std::move(name));
}

SemiringRef load_semiring_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(0, "cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_semiring_table(buf.str(), 1, "table");
}

std::string format_semiring_table(const Semiring& s) {
    const SemiringTable* t = s.table();
    if (!t) throw ValidationError(s.name() + " is not a table semiring");
    const std::size_t n = t->elements.size();
    std::string out = "elements:";
    for (const auto& e : t->elements) out += " " + e;
    out += "\nzero: " + t->elements[t->zero] + "\none: " + t->elements[t->one] + "\n";
    for (auto [label, cells] : {std::pair{"add:", &t->add}, std::pair{"mul:", &t->mul}}) {
        out += label;
        out += "\n";
        for (std::size_t a = 0; a < n; ++a) {
            for (std::size_t b = 0; b < n; ++b) {
                out += (b ? " " : "");
                out += t->elements[(*cells)[a * n + b]];
            }
            out += "\n";
        }
    }
    return out;
}

}  // namespace semidp
