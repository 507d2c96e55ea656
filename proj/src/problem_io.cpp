#include "semidp/problem_io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "semidp/errors.hpp"

namespace semidp {

std::vector<Scope> Problem::factor_scopes() const {
    std::vector<Scope> out;
    for (const auto& f : factors) out.push_back(f.label());
    return out;
}

std::string describe_scope(const VariableTable& vars, const Scope& s) {
    std::string out;
    for (const auto& v : s) out += (out.empty() ? "" : ",") + vars.name(v.id);
    return out;
}

namespace {

enum class Section { None, Table, Variables, Factors, Tree };


std::vector<std::string> tokens(std::string_view line) {
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    std::istringstream in{std::string(line)};
    std::vector<std::string> out;
    for (std::string t; in >> t;) out.push_back(t);
    return out;
}

std::uint32_t parse_count(const std::string& tok, std::size_t line, const char* what) {
    try {
        std::size_t used = 0;
        const unsigned long long v = std::stoull(tok, &used);
        if (used == tok.size() && v > 0 && v <= 0xffffffffULL) return static_cast<std::uint32_t>(v);
    } catch (const std::exception&) {
    }
    throw ParseError(line, std::string("invalid ") + what + " '" + tok + "'");
}

struct TreeNode {
    std::size_t line;
    std::optional<NodeId> parent;
    std::vector<std::string> label;
    std::vector<std::size_t> factors;
};

class Parser {
public:
    explicit Parser(std::string base_dir) : base_dir_(std::move(base_dir)) {}

    Problem run(std::string_view text) {
        std::istringstream in{std::string(text)};
        std::string raw;
        std::size_t n = 0;
        while (std::getline(in, raw)) {
            ++n;
            auto toks = tokens(raw);
            if (toks.empty()) {
                if (section_ == Section::Table) table_text_ += "\n";
                continue;
            }
            line(n, raw, std::move(toks));
        }
        finish_table();
        if (!p_.semiring) throw ParseError(0, "missing semiring:");
        if (p_.factors.empty()) throw ParseError(0, "no factors");
        build_tree();
        return std::move(p_);
    }

private:
    void line(std::size_t n, const std::string& raw, std::vector<std::string> toks) {
        const std::string& head = toks[0];
        if (head == "semiring:") return semiring(n, toks);
        if (head == "variables:" || head == "factors:" || head == "tree:") {
            finish_table();
            if (toks.size() != 1) throw ParseError(n, head + " takes no arguments");
            if (head == "variables:") {
                if (!p_.factors.empty() || !nodes_.empty()) throw ParseError(n, "variables: must precede factors and tree");
                section_ = Section::Variables;
            } else {
                if (!p_.semiring) throw ParseError(n, "semiring: must come first");
                section_ = head == "factors:" ? Section::Factors : Section::Tree;
            }
            return;
        }
        if (head == "query:") {
            finish_table();
            section_ = Section::None;
            if (p_.query) throw ParseError(n, "duplicate query:");
            p_.query = scope_of(n, {toks.begin() + 1, toks.end()});
            return;
        }
        switch (section_) {
            case Section::Table:
                table_text_ += raw + "\n";
                return;
            case Section::Variables: return variable(n, toks);
            case Section::Factors: return factor(n, toks);
            case Section::Tree: return node(n, toks);
            case Section::None: throw ParseError(n, "unexpected '" + head + "' outside a section");
        }
    }

    void semiring(std::size_t n, const std::vector<std::string>& toks) {
        finish_table();
        if (p_.semiring) throw ParseError(n, "duplicate semiring:");
        if (toks.size() == 2 && toks[1] == "table") {
            section_ = Section::Table;
            table_line_ = n + 1;
            table_text_.clear();
            pending_table_ = true;
            return;
        }
        section_ = Section::None;
        if (toks.size() == 3 && toks[1] == "file") {
            std::filesystem::path path(toks[2]);
            if (path.is_relative()) path = std::filesystem::path(base_dir_) / path;
            try {
                p_.semiring = load_semiring_file(path.string());
            } catch (const ParseError& e) {
                throw ParseError(n, path.string() + ": " + e.what());
            } catch (const ValidationError& e) {
                throw ParseError(n, path.string() + ": " + e.what());
            }
            return;
        }
        if (toks.size() != 2) throw ParseError(n, "expected 'semiring: <name>', 'semiring: file <path>' or 'semiring: table'");
        try {
            p_.semiring = Semiring::builtin(toks[1]);
        } catch (const Error& e) {
            throw ParseError(n, e.what());
        }
    }

    void finish_table() {
        if (!pending_table_) return;
        pending_table_ = false;
        try {
            p_.semiring = parse_semiring_table(table_text_, table_line_, "table");
        } catch (const ValidationError& e) {
            throw ParseError(table_line_ - 1, e.what());
        }
    }

    void variable(std::size_t n, const std::vector<std::string>& toks) {
        if (toks.size() != 2) throw ParseError(n, "expected '<name> <cardinality>'");
        if (p_.variables.find(toks[0])) throw ParseError(n, "duplicate variable '" + toks[0] + "'");
        if (toks[0].find(',') != std::string::npos || toks[0].back() == ':')
            throw ParseError(n, "invalid variable name '" + toks[0] + "'");
        p_.variables.add(toks[0], parse_count(toks[1], n, "cardinality"));
    }

    VarId var(std::size_t n, const std::string& name) const {
        if (auto id = p_.variables.find(name)) return *id;
        throw ParseError(n, "unknown variable '" + name + "'");
    }

    Scope scope_of(std::size_t n, const std::vector<std::string>& names) const {
        std::vector<Variable> vs;
        for (const auto& name : names) {
            const VarId id = var(n, name);
            for (const auto& v : vs)
                if (v.id == id) throw ParseError(n, "variable '" + name + "' listed twice");
            vs.push_back(p_.variables.variable(id));
        }
        return Scope(std::move(vs));
    }

    void factor(std::size_t n, const std::vector<std::string>& toks) {
        std::size_t colon = 0;
        while (colon < toks.size() && toks[colon] != ":") ++colon;
        if (colon == toks.size()) throw ParseError(n, "expected '<variables> : <values>'");
        std::vector<std::string> names(toks.begin(), toks.begin() + colon);
        const Scope sc = scope_of(n, names);
        for (std::size_t i = 0; i < names.size(); ++i)
            if (sc[i].id != p_.variables.id(names[i]))
                throw ParseError(n, "factor scope must follow declaration order");
        const Index expected = sc.cardinality();
        const std::size_t got = toks.size() - colon - 1;
        if (got != expected)
            throw ParseError(n, "expected " + std::to_string(expected) + " values, got " + std::to_string(got));
        std::vector<Value> values;
        values.reserve(got);
        for (std::size_t i = colon + 1; i < toks.size(); ++i) {
            try {
                values.push_back(p_.semiring->parse(toks[i]));
            } catch (const std::invalid_argument&) {
                throw ParseError(n, "'" + toks[i] + "' is not an element of " + p_.semiring->name());
            }
        }
        try {
            p_.factors.emplace_back(p_.semiring, sc, std::move(values));
        } catch (const Error& e) {
            throw ParseError(n, e.what());
        }
    }

    void node(std::size_t n, const std::vector<std::string>& toks) {
        if (toks.size() < 6 || toks[0] != "node" || toks[2] != "parent" || toks[4] != "label")
            throw ParseError(n, "expected 'node <id> parent <id|-> label <variables> factors <indices>'");
        const std::size_t id = parse_count_or_zero(toks[1], n, "node id");
        if (id != nodes_.size()) throw ParseError(n, "node ids must be listed as 0, 1, 2, ...");
        TreeNode t;
        t.line = n;
        if (toks[3] != "-") t.parent = parse_count_or_zero(toks[3], n, "parent id");
        std::size_t k = 5;
        for (; k < toks.size() && toks[k] != "factors"; ++k) t.label.push_back(toks[k]);
        if (k == toks.size()) throw ParseError(n, "missing 'factors'");
        for (++k; k < toks.size(); ++k) t.factors.push_back(parse_count_or_zero(toks[k], n, "factor index"));
        scope_of(n, t.label);
        nodes_.push_back(std::move(t));
    }

    static std::size_t parse_count_or_zero(const std::string& tok, std::size_t line, const char* what) {
        if (tok == "0") return 0;
        return parse_count(tok, line, what);
    }

    void build_tree() {
        if (nodes_.empty()) return;
        const std::size_t nf = p_.factors.size();
        std::vector<NodeId> parent(nodes_.size(), kNoParent);
        std::vector<Scope> labels;
        std::vector<std::optional<NodeId>> assigned(nf);
        for (NodeId i = 0; i < nodes_.size(); ++i) {
            const TreeNode& t = nodes_[i];
            if (t.parent) {
                if (*t.parent >= nodes_.size()) throw ParseError(t.line, "unknown parent node");
                parent[i] = *t.parent;
            }
            labels.push_back(scope_of(t.line, t.label));
            for (std::size_t f : t.factors) {
                if (f >= nf) throw ParseError(t.line, "unknown factor " + std::to_string(f));
                if (assigned[f]) throw ParseError(t.line, "factor " + std::to_string(f) + " assigned twice");
                assigned[f] = i;
            }
        }
        std::vector<NodeId> assignment;
        for (std::size_t f = 0; f < nf; ++f) {
            if (!assigned[f]) throw ParseError(nodes_.front().line, "factor " + std::to_string(f) + " not assigned");
            assignment.push_back(*assigned[f]);
        }
        const std::size_t tree_line = nodes_.front().line;
        RootedJoinTree t;
        try {
            t = RootedJoinTree(parent, labels, assignment);
        } catch (const Error& e) {
            throw ParseError(tree_line, std::string("invalid tree: ") + e.what());
        }
        const auto scopes = p_.factor_scopes();
        if (auto cov = check_covering(t, scopes); !cov.holds)
            throw ParseError(nodes_[assignment[cov.factor]].line,
                             "invalid tree: node does not cover factor " + std::to_string(cov.factor));
        if (auto rip = check_running_intersection(t); !rip.holds)
            throw ParseError(tree_line, "invalid tree: running intersection fails for nodes " + std::to_string(rip.i) +
                                            ", " + std::to_string(rip.j) + " at " + std::to_string(rip.k));
        p_.tree = minimal_lambdas(parent, assignment, scopes);
        p_.tree_relabeled = p_.tree->labels() != labels;
    }

    std::string base_dir_;
    Problem p_;
    Section section_ = Section::None;
    bool pending_table_ = false;
    std::size_t table_line_ = 0;
    std::string table_text_;
    std::vector<TreeNode> nodes_;
};

bool is_builtin(const Semiring& s) {
    try {
        return *Semiring::builtin(s.name()) == s;
    } catch (const Error&) {
        return false;
    }
}

}  // namespace

Problem parse_problem(std::string_view text, const std::string& base_dir) { return Parser(base_dir).run(text); }

Problem load_problem(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(0, "cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    const auto dir = std::filesystem::path(path).parent_path();
    return parse_problem(buf.str(), dir.empty() ? "." : dir.string());
}

std::string export_problem(const Problem& p) {
    std::ostringstream out;
    const Semiring& s = *p.semiring;
    if (is_builtin(s))
        out << "semiring: " << s.name() << "\n";
    else
        out << "semiring: table\n" << format_semiring_table(s);
    out << "variables:\n";
    for (VarId i = 0; i < p.variables.size(); ++i) out << "  " << p.variables.name(i) << " " << p.variables.card(i) << "\n";
    auto names = [&](const Scope& sc) {
        std::string r;
        for (const auto& v : sc) r += " " + p.variables.name(v.id);
        return r;
    };
    out << "factors:\n";
    for (const auto& f : p.factors) {
        out << " " << names(f.label()) << " :";
        for (Value v : f.table()) out << " " << s.format(v);
        out << "\n";
    }
    if (p.query) out << "query:" << names(*p.query) << "\n";
    if (p.tree) {
        out << "tree:\n";
        for (NodeId i = 0; i < p.tree->size(); ++i) {
            out << "  node " << i << " parent ";
            if (p.tree->parent(i) == kNoParent)
                out << "-";
            else
                out << p.tree->parent(i);
            out << " label" << names(p.tree->label(i)) << " factors";
            for (std::size_t f : p.tree->factors_at(i)) out << " " << f;
            out << "\n";
        }
    }
    return out.str();
}

Problem fixture_problem(const Fixture& f) {
    Problem p;
    p.semiring = f.semiring;
    p.variables = f.variables;
    p.factors = f.factors;
    return p;
}

}  // namespace semidp
