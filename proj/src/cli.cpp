#include "semidp/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "semidp/errors.hpp"
#include "semidp/fixtures.hpp"
#include "semidp/oracle.hpp"
#include "semidp/problem_io.hpp"
#include "semidp/semiring_properties.hpp"
#include "semidp/solve.hpp"

namespace semidp {

namespace {

using Json = nlohmann::ordered_json;

struct SolveArgs {
    std::string task;
    std::string file;
    std::string root_vars;
    bool verify = false;
    Index max_solutions = default_solution_cap();
    bool oracle = false;
    std::uint64_t seed = 1;
    std::uint64_t budget = 10000;
    bool report = false;
    bool timing = false;
};

struct CheckSemiringArgs {
    std::string file;
    std::string name;
    std::uint64_t budget = 10000;
    std::uint64_t seed = 1;
};

Json scope_json(const VariableTable& vars, const Scope& s) {
    Json a = Json::array();
    for (const auto& v : s) a.push_back(vars.name(v.id));
    return a;
}

Json tuple_json(const VariableTable& vars, const Tuple& t) {
    Json o = Json::object();
    for (std::size_t i = 0; i < t.scope().size(); ++i) o[vars.name(t.scope()[i].id)] = t.values()[i];
    return o;
}

Json result_json(const PropertyResult& r, const Semiring& s) {
    Json o;
    o["property"] = r.property;
    o["verdict"] = std::string(to_string(r.verdict));
    if (!r.witness.empty()) {
        Json w = Json::object();
        for (std::size_t i = 0; i < r.witness.size(); ++i) {
            const std::string key = i < r.witness_names.size() ? r.witness_names[i] : "w" + std::to_string(i);
            w[key] = s.format(r.witness[i]);
        }
        o["witness"] = w;
    }
    if (r.sample) o["sample"] = *r.sample;
    if (!r.note.empty()) o["note"] = r.note;
    return o;
}

Json report_json(const PropertyReport& rep, const Semiring& s) {
    Json o;
    o["verdict"] = std::string(to_string(rep.verdict()));
    o["exhaustive"] = rep.exhaustive;
    o["budget"] = rep.budget;
    o["evaluations"] = rep.evaluations;
    Json rs = Json::array();
    for (const auto& r : rep.results) rs.push_back(result_json(r, s));
    o["results"] = rs;
    return o;
}

Json matrix_json(const SoundnessMatrix& m) {
    Json a = Json::array();
    for (const auto& e : m.entries)
        a.push_back({{"algorithm", e.algorithm}, {"task", e.task}, {"verdict", std::string(to_string(e.verdict))},
                     {"basis", e.basis}});
    return a;
}

Json tree_json(const VariableTable& vars, const RootedJoinTree& t) {
    Json nodes = Json::array();
    for (NodeId i = 0; i < t.size(); ++i) {
        Json n;
        n["id"] = i;
        n["parent"] = t.parent(i) == kNoParent ? Json(nullptr) : Json(t.parent(i));
        n["label"] = scope_json(vars, t.label(i));
        n["separator"] = scope_json(vars, t.separator(i));
        n["factors"] = t.factors_at(i);
        nodes.push_back(n);
    }
    return nodes;
}

Scope parse_vars(const VariableTable& vars, const std::string& list) {
    std::vector<Variable> vs;
    std::stringstream in(list);
    for (std::string name; std::getline(in, name, ',');) {
        if (name.empty()) continue;
        const auto id = vars.find(name);
        if (!id) throw DomainError("unknown variable '" + name + "' in --root-vars");
        vs.push_back(vars.variable(*id));
    }
    return Scope(std::move(vs));
}

void print(std::ostream& out, const Json& doc) { out << doc.dump(2) << "\n"; }

struct Agreement {
    bool agrees = false;
    bool equal = false;
    std::string relation;
};

Agreement compare_solutions(const SolveResult& r, const SolutionSet& oracle_c) {
    Agreement a;
    const SolutionSet& got = r.solutions;
    a.equal = got == oracle_c;
    const bool subset = got.scope() == oracle_c.scope() && got.is_subset_of(oracle_c);
    switch (r.task) {
        case Task::Single:
            a.agrees = got.size() == 1 && subset;
            a.relation = a.agrees ? "member" : "not-a-member";
            break;
        case Task::Partial:
            a.agrees = !got.empty() && subset;
            a.relation = a.equal ? "equal" : (a.agrees ? "subset" : "mismatch");
            break;
        default: {
            const bool complete_claimed = trusted(r.soundness) && !got.truncated();
            a.agrees = complete_claimed ? a.equal : subset;
            a.relation = a.equal ? "equal" : (subset ? "subset" : "mismatch");
            break;
        }
    }
    return a;
}

int cmd_solve(const SolveArgs& a, std::ostream& out) {
    const auto start = std::chrono::steady_clock::now();
    const Problem p = load_problem(a.file);
    const Semiring& s = *p.semiring;
    const auto task = parse_task(a.task);
    if (!task) throw DomainError("unknown task '" + a.task + "'");

    SolveOptions opt;
    opt.verify = a.verify;
    opt.max_solutions = a.max_solutions;
    opt.check = {a.budget, a.seed};
    opt.tree = p.tree;
    opt.query = a.root_vars.empty() ? p.query : std::optional<Scope>(parse_vars(p.variables, a.root_vars));
    const SolveResult r = solve(p.factors, *task, opt);

    Json doc;
    doc["task"] = std::string(to_string(r.task));
    doc["semiring"] = s.name();
    doc["path"] = r.path;
    doc["annotation"] = r.annotation;
    if (r.task == Task::Complete) doc["completeness"] = std::string(to_string(r.soundness));
    doc["optimum"] = s.format(r.optimum);
    int code = kExitOk;

    if (r.task == Task::Project) {
        const Valuation& v = *r.projection;
        Json table = Json::array();
        for (Value x : v.table()) table.push_back(s.format(x));
        doc["projection"] = {{"scope", scope_json(p.variables, v.label())}, {"values", table}};
        if (a.oracle) {
            const auto o = oracle::brute_project(p.factors, v.label());
            const bool eq = o.value == v;
            doc["oracle"] = {{"agrees", eq}, {"equal", eq}, {"relation", eq ? "equal" : "mismatch"},
                             {"enumerated", o.enumerated}};
            if (!eq) code = kExitDisagree;
        }
    } else {
        doc["scope"] = scope_json(p.variables, r.solutions.scope());
        Json sols = Json::array();
        for (const Tuple& t : r.solutions.tuples()) sols.push_back(tuple_json(p.variables, t));
        doc["solutions"] = sols;
        doc["count"] = r.solutions.size();
        doc["truncated"] = r.solutions.truncated();
        doc["verified"] = r.verified;
        if (r.verified) doc["verify_rejected"] = r.verify_rejected;
        if (r.matrix) {
            doc["soundness_matrix"] = matrix_json(*r.matrix);
            if (a.report) doc["properties"] = report_json(r.matrix->properties, s);
        }
        if (a.oracle) {
            const auto o = oracle::brute_solutions(p.factors);
            const Agreement ag = compare_solutions(r, o.value);
            doc["oracle"] = {{"agrees", ag.agrees}, {"equal", ag.equal}, {"relation", ag.relation},
                             {"oracle_count", o.value.size()}, {"enumerated", o.enumerated}};
            if (!ag.agrees) code = kExitDisagree;
        }
    }
    if (a.timing) {
        const std::chrono::duration<double, std::milli> ms = std::chrono::steady_clock::now() - start;
        doc["timing_ms"] = ms.count();
    }
    print(out, doc);
    return code;
}

int cmd_check_semiring(const CheckSemiringArgs& a, std::ostream& out) {
    SemiringRef s;
    if (!a.file.empty())
        s = load_semiring_file(a.file);
    else if (!a.name.empty())
        s = Semiring::builtin(a.name);
    else
        throw DomainError("check-semiring needs --file or --semiring");
    const CheckOptions opt{a.budget, a.seed};

    PropertyReport rep = check_semiring_axioms(*s, opt);
    for (auto* check : {&check_selective, &check_idempotent, &check_totally_ordered,
                        &check_square_mult_cancellative_on_image, &check_square_ordered,
                        &check_weakly_mult_cancellative, &check_strict_monotonic, &check_mult_cancellative})
        rep.merge(check(*s, opt));

    Json doc;
    doc["semiring"] = s->name();
    doc["finite"] = s->finite();
    doc["report"] = report_json(rep, *s);
    if (s->selective()) {
        doc["soundness_matrix"] = matrix_json(classify(*s, opt));
    } else {
        doc["soundness_matrix"] = nullptr;
        doc["refused"] = "solution extraction needs a selective semiring";
    }
    print(out, doc);
    return kExitOk;
}

int cmd_check_tree(const std::string& file, std::ostream& out) {
    const Problem p = load_problem(file);
    const auto scopes = p.factor_scopes();
    Json doc;
    RootedJoinTree t;
    if (p.tree) {
        t = *p.tree;
        doc["source"] = "file";
        doc["relabeled"] = p.tree_relabeled;
    } else {
        const BuiltTree b = build_join_tree(scopes, Heuristic::MinFill, p.query);
        t = b.tree;
        doc["source"] = "built";
        doc["query_anchor"] = b.query_anchor;
    }
    std::vector<Scope> checked = scopes;
    if (t.assignment().size() > scopes.size()) checked.push_back(*p.query);
    const auto rip = check_running_intersection(t);
    const auto cov = check_covering(t, checked);
    const auto min = check_minimally_labeled(t, checked);
    doc["root"] = t.root();
    doc["nodes"] = tree_json(p.variables, t);
    doc["running_intersection"] = rip.holds;
    doc["covering"] = cov.holds;
    doc["minimally_labeled"] = min.holds;
    if (!min.holds) doc["minimality_detail"] = min.detail;
    print(out, doc);
    return rip.holds && cov.holds && min.holds ? kExitOk : kExitDisagree;
}

int cmd_fixtures_run(std::ostream& out) {
    const auto checks = run_fixture_checks();
    Json list = Json::array();
    std::size_t failed = 0;
    for (const auto& c : checks) {
        Json o{{"fixture", c.fixture}, {"check", c.check}, {"passed", c.passed}};
        if (!c.detail.empty()) o["detail"] = c.detail;
        list.push_back(o);
        failed += !c.passed;
    }
    Json doc{{"checks", list}, {"passed", checks.size() - failed}, {"failed", failed}};
    print(out, doc);
    return failed ? kExitDisagree : kExitOk;
}

int cmd_fixtures_export(const std::string& name, const std::string& path, std::ostream& out) {
    const std::string text = export_problem(fixture_problem(fixture_by_name(name)));
    if (path.empty()) {
        out << text;
        return kExitOk;
    }
    std::ofstream f(path);
    if (!f) throw DomainError("cannot write " + path);
    f << text;
    return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Semiring dynamic programming over join trees"};
    app.require_subcommand(1);

    SolveArgs sa;
    auto* solve_cmd = app.add_subcommand("solve", "Project or extract solutions of a problem file");
    solve_cmd->add_option("--task", sa.task, "project | single | partial | complete")->required();
    solve_cmd->add_option("--file", sa.file, "Problem file")->required();
    solve_cmd->add_option("--root-vars", sa.root_vars, "Comma-separated variables the root must cover");
    solve_cmd->add_flag("--verify", sa.verify, "Re-evaluate every emitted tuple and drop non-optimal ones");
    solve_cmd->add_option("--max-solutions", sa.max_solutions, "Solution cap");
    solve_cmd->add_flag("--oracle", sa.oracle, "Compare against brute-force enumeration");
    solve_cmd->add_option("--seed", sa.seed, "Seed for sampled property checks");
    solve_cmd->add_option("--budget", sa.budget, "Sampling budget for property checks");
    solve_cmd->add_flag("--report", sa.report, "Include the property report digest");
    solve_cmd->add_flag("--timing", sa.timing, "Include wall-clock timing");

    CheckSemiringArgs ca;
    auto* check_cmd = app.add_subcommand("check-semiring", "Axiom and property report with soundness matrix");
    auto* file_opt = check_cmd->add_option("--file", ca.file, "Semiring table file");
    check_cmd->add_option("--semiring", ca.name, "Built-in semiring name")->excludes(file_opt);
    check_cmd->add_option("--budget", ca.budget, "Sampling budget for infinite carriers");
    check_cmd->add_option("--seed", ca.seed, "Sampling seed");

    std::string tree_file;
    auto* tree_cmd = app.add_subcommand("check-tree", "Validate or build the join tree of a problem file");
    tree_cmd->add_option("--file", tree_file, "Problem file")->required();

    auto* fixtures_cmd = app.add_subcommand("fixtures", "Built-in regression fixtures");
    fixtures_cmd->require_subcommand(1);
    auto* run_cmd = fixtures_cmd->add_subcommand("run", "Run every fixture check");
    std::string export_name, export_out;
    auto* export_cmd = fixtures_cmd->add_subcommand("export", "Write a fixture as a problem file");
    export_cmd->add_option("--name", export_name, "Fixture name")->required();
    export_cmd->add_option("--out", export_out, "Output path (default: standard output)");

    try {
        app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInput;
    }

    try {
        if (*solve_cmd) return cmd_solve(sa, out);
        if (*check_cmd) return cmd_check_semiring(ca, out);
        if (*tree_cmd) return cmd_check_tree(tree_file, out);
        if (*run_cmd) return cmd_fixtures_run(out);
        if (*export_cmd) return cmd_fixtures_export(export_name, export_out, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitInput;
}

}  // namespace semidp
