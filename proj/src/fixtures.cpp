#include "semidp/fixtures.hpp"

#include "semidp/errors.hpp"
#include "semidp/message_passing.hpp"
#include "semidp/oracle.hpp"
#include "semidp/semiring_properties.hpp"
#include "semidp/solve.hpp"

namespace semidp {

SolutionSet IndicatorInducedSystem::extensions(const Valuation& phi, const Tuple& x) const {
    if (!same_semiring(phi.semiring(), eta_.semiring()) || !phi.label().is_subset_of(eta_.label()))
        throw ValidationError("valuation outside the indicator-induced family");
    return optimization_system().extensions(project(eta_, phi.label()), x);
}

RestrictedSolutionSystem::RestrictedSolutionSystem(Variable x, Variable y) : x_(x), y_(y) {
    if (x.card != 2 || y.card != 2 || x.id >= y.id) throw ValidationError("restricted system needs binary x < y");
}

Valuation RestrictedSolutionSystem::member(unsigned a, unsigned b, unsigned k) const {
    const SemiringRef s = Semiring::max_plus();
    std::vector<Variable> vars;
    if (a) vars.push_back(x_);
    if (b) vars.push_back(y_);
    Scope sc(vars);
    std::vector<Value> t;
    for (const Tuple& u : enumerate_tuples(sc)) {
        Value v = k;
        if (a) v += a * (u.value_of(x_.id) == 0 ? 2 : 1);
        if (b) v += b * (u.value_of(y_.id) == 0 ? 2 : 1);
        t.push_back(v);
    }
    return Valuation(s, sc, std::move(t));
}

bool RestrictedSolutionSystem::in_family(const Valuation& phi) const {
    if (phi.semiring()->kind() != SemiringKind::MaxPlus) return false;
    const auto& t = phi.table();
    for (Value v : t)
        if (v == kNegInf) return false;
    const Scope& d = phi.label();
    auto even_nonneg = [](Value k) { return k >= 0 && k % 2 == 0; };
    if (d.empty()) return even_nonneg(t[0]);
    if (d == Scope{x_} || d == Scope{y_}) {
        const Value a = t[0] - t[1];
        return a >= 1 && even_nonneg(t[1] - a);
    }
    if (d == Scope{x_, y_}) {
        // t(x,y) = a p1(x) + b p2(y) + k, index = 2x + y.
        const Value a = t[2] - t[0] == t[3] - t[1] ? t[0] - t[2] : -1;
        const Value b = t[1] - t[0] == t[3] - t[2] ? t[0] - t[1] : -1;
        return a >= 1 && b >= 1 && even_nonneg(t[3] - a - b);
    }
    return false;
}

SolutionSet RestrictedSolutionSystem::restricted_solutions(const Valuation& phi) const {
    if (!in_family(phi)) throw ValidationError("valuation outside the restricted-solution family");
    const Scope& d = phi.label();
    if (d.empty()) return SolutionSet::of(Tuple{});
    if (d.size() == 1 && phi.table() == std::vector<Value>{2, 1}) return SolutionSet::all(d);
    return SolutionSet(d, {0});
}

SolutionSet RestrictedSolutionSystem::extensions(const Valuation& phi, const Tuple& x) const {
    const SolutionSet c = restricted_solutions(phi);
    if (!x.scope().is_subset_of(phi.label())) throw DomainError("extension base outside the label");
    const Scope rest = minus(phi.label(), x.scope());
    std::vector<Index> keep;
    for (Index j = 0; j < rest.cardinality(); ++j)
        if (c.contains(tuple_concat(x, index_tuple(rest, j)))) keep.push_back(j);
    return SolutionSet(rest, std::move(keep));
}

namespace {

struct Vars {
    VariableTable table;
    Variable x, y;
};

Vars two_binary() {
    Vars v;
    v.x = v.table.variable(v.table.add("x", 2));
    v.y = v.table.variable(v.table.add("y", 2));
    return v;
}

std::vector<Valuation> all_tables(const SemiringRef& s, const Scope& sc, const std::vector<Value>& values) {
    std::vector<Valuation> out;
    const Index n = sc.cardinality();
    Index combos = 1;
    for (Index i = 0; i < n; ++i) combos *= values.size();
    for (Index c = 0; c < combos; ++c) {
        std::vector<Value> t(n);
        Index r = c;
        for (Index i = n; i-- > 0;) {
            t[i] = values[r % values.size()];
            r /= values.size();
        }
        out.emplace_back(s, sc, std::move(t));
    }
    return out;
}

std::vector<ProductSample> pairs(const std::vector<Valuation>& left, const std::vector<Valuation>& right) {
    std::vector<ProductSample> out;
    for (const auto& a : left)
        for (const auto& b : right) out.push_back({a, b});
    return out;
}

}  // namespace

Fixture counterexample_1() {
    Vars v = two_binary();
    Fixture f;
    f.name = "counterexample-1";
    f.summary = "boolean indicator of x == y; completing projected solutions yields every tuple";
    f.semiring = Semiring::boolean();
    f.variables = v.table;
    f.factors.emplace_back(f.semiring, Scope{v.x, v.y}, std::vector<Value>{1, 0, 0, 1});
    return f;
}

Fixture counterexample_2() {
    Vars v = two_binary();
    Fixture f;
    f.name = "counterexample-2";
    f.summary = "extension system induced by a fixed indicator: a valid system without projective completability";
    f.semiring = Semiring::boolean();
    f.variables = v.table;
    const Valuation eta(f.semiring, Scope{v.x, v.y}, {1, 0, 0, 1});
    f.factors.emplace_back(f.semiring, Scope{v.x}, std::vector<Value>{1, 1});
    f.factors.emplace_back(f.semiring, Scope{v.y}, std::vector<Value>{1, 1});
    f.system = std::make_shared<IndicatorInducedSystem>(eta);
    std::vector<Valuation> family;
    for (const Scope& sc : {Scope{}, Scope{v.x}, Scope{v.y}, Scope{v.x, v.y}})
        for (auto& val : all_tables(f.semiring, sc, {0, 1})) family.push_back(val);
    f.samples = pairs(family, family);
    f.samples_exhaustive = true;
    f.expect_projective = false;
    f.expect_piecewise = false;
    return f;
}

Fixture counterexample_3() {
    Vars v = two_binary();
    Fixture f;
    f.name = "counterexample-3";
    f.summary = "four-element selective semiring where global-projection extension admits a non-solution";
    f.semiring = Semiring::counter3();
    f.variables = v.table;
    f.factors.emplace_back(f.semiring, Scope{v.x}, std::vector<Value>{2, 3});
    f.factors.emplace_back(f.semiring, Scope{v.y}, std::vector<Value>{2, 3});
    f.samples = pairs(all_tables(f.semiring, Scope{v.x}, {0, 1, 2, 3}), all_tables(f.semiring, Scope{v.y}, {0, 1, 2, 3}));
    f.expect_projective = false;
    f.expect_piecewise = true;
    return f;
}

Fixture maxmin_ties() {
    Fixture f;
    f.name = "maxmin-ties";
    f.summary = "max-min chain with ties: extend-to-subtree misses solutions";
    f.semiring = Semiring::max_min(2);
    const Variable x = f.variables.variable(f.variables.add("x", 2));
    const Variable y = f.variables.variable(f.variables.add("y", 2));
    const Variable z = f.variables.variable(f.variables.add("z", 2));
    f.factors.emplace_back(f.semiring, Scope{x, y}, std::vector<Value>{1, 1, 1, 1});
    f.factors.emplace_back(f.semiring, Scope{y, z}, std::vector<Value>{1, 2, 1, 2});
    return f;
}

std::vector<Fixture> completability_quadrants() {
    std::vector<Fixture> out;

    Fixture neither = counterexample_2();
    neither.name = "quadrant-neither";
    out.push_back(neither);

    {
        Vars v = two_binary();
        auto sys = std::make_shared<RestrictedSolutionSystem>(v.x, v.y);
        Fixture f;
        f.name = "quadrant-projective-only";
        f.summary = "max-plus derived family with restricted solutions: projective but not piecewise";
        f.semiring = Semiring::max_plus();
        f.variables = v.table;
        f.factors = {sys->member(1, 0, 0), sys->member(0, 1, 0)};
        std::vector<Valuation> family;
        for (unsigned a = 0; a <= 2; ++a)
            for (unsigned b = 0; b <= 2; ++b)
                for (unsigned k : {0u, 2u}) family.push_back(sys->member(a, b, k));
        f.samples = pairs(family, family);
        f.system = sys;
        f.expect_projective = true;
        f.expect_piecewise = false;
        out.push_back(std::move(f));
    }

    Fixture piecewise = counterexample_3();
    piecewise.name = "quadrant-piecewise-only";
    out.push_back(piecewise);

    {
        Vars v = two_binary();
        Fixture f;
        f.name = "quadrant-both";
        f.summary = "max-times optimization system: projective and piecewise";
        f.semiring = Semiring::max_times_nat();
        f.variables = v.table;
        f.factors.emplace_back(f.semiring, Scope{v.x}, std::vector<Value>{1, 2});
        f.factors.emplace_back(f.semiring, Scope{v.y}, std::vector<Value>{3, 1});
        const std::vector<Value> vals{0, 1, 2, 3};
        f.samples = pairs(all_tables(f.semiring, Scope{v.x}, vals), all_tables(f.semiring, Scope{v.y}, vals));
        auto mixed = pairs(all_tables(f.semiring, Scope{v.x}, {0, 2, 3}), all_tables(f.semiring, Scope{v.x, v.y}, {1, 3}));
        f.samples.insert(f.samples.end(), mixed.begin(), mixed.end());
        f.expect_projective = true;
        f.expect_piecewise = true;
        out.push_back(std::move(f));
    }
    return out;
}

std::vector<Fixture> all_fixtures() {
    std::vector<Fixture> out{counterexample_1(), counterexample_2(), counterexample_3(), maxmin_ties()};
    for (auto& q : completability_quadrants()) out.push_back(std::move(q));
    return out;
}

Fixture fixture_by_name(const std::string& name) {
    for (auto& f : all_fixtures())
        if (f.name == name) return f;
    throw DomainError("unknown fixture '" + name + "'");
}

namespace {

SolutionSet tuples_of(const Scope& sc, std::vector<std::vector<std::uint32_t>> rows) {
    std::vector<Tuple> ts;
    for (auto& r : rows) ts.emplace_back(sc, std::move(r));
    return SolutionSet::of(sc, ts);
}

class Recorder {
public:
    explicit Recorder(std::string fixture) : fixture_(std::move(fixture)) {}
    void check(std::string what, bool ok, std::string detail = {}) {
        out_.push_back({fixture_, std::move(what), ok, std::move(detail)});
    }
    template <class F>
    void guarded(std::string what, F&& body) {
        try {
            body();
        } catch (const std::exception& e) {
            check(std::move(what), false, e.what());
        }
    }
    std::vector<FixtureCheck>& results() { return out_; }

private:
    std::string fixture_;
    std::vector<FixtureCheck> out_;
};

void two_factor_expectations(Recorder& rec, const Fixture& f, const SolutionSet& expected_c) {
    const ExtensionSystem& es = f.extension_system();
    const Valuation phi = combine_all(f.semiring, f.factors);
    const Scope x{f.variables.variable(0)}, y{f.variables.variable(1)};
    const SolutionSet c = es.solutions(phi);
    rec.check("solution set", c == expected_c, std::to_string(c.size()) + " tuples");
    const SolutionSet co = completions(es.solutions(project(phi, x)), project(phi, y), es);
    rec.check("completion of projected solutions is every tuple", co == SolutionSet::all(phi.label()),
              std::to_string(co.size()) + " tuples");
}

void quadrant_expectations(Recorder& rec, const Fixture& f) {
    SampleOptions so;
    so.exhaustive = f.samples_exhaustive;
    const auto proj = check_projective_completability(f.extension_system(), f.samples, so);
    const auto piece = check_piecewise_completability(f.extension_system(), f.samples, PiecewiseFlavor::Plain, so);
    const bool p = proj.find("projective-completability")->passed();
    const bool w = piece.passed();
    if (f.expect_projective)
        rec.check("projective completability " + std::string(*f.expect_projective ? "holds" : "fails"),
                  p == *f.expect_projective, std::string(to_string(proj.find("projective-completability")->verdict)));
    if (f.expect_piecewise)
        rec.check("piecewise completability " + std::string(*f.expect_piecewise ? "holds" : "fails"),
                  w == *f.expect_piecewise, std::string(to_string(piece.verdict())));
}

}  // namespace

std::vector<FixtureCheck> run_fixture_checks() {
    std::vector<FixtureCheck> all;
    auto absorb = [&](Recorder& r) { all.insert(all.end(), r.results().begin(), r.results().end()); };

    {
        Fixture f = counterexample_1();
        Recorder rec(f.name);
        rec.guarded("evaluation", [&] {
            const Scope xy = f.factors[0].label();
            two_factor_expectations(rec, f, tuples_of(xy, {{0, 0}, {1, 1}}));
            const auto oracle_c = oracle::brute_solutions(f.factors).value;
            rec.check("oracle agrees on the solution set", oracle_c == tuples_of(xy, {{0, 0}, {1, 1}}));
            const auto r = solve(f.factors, Task::Single);
            rec.check("single solution is a member", oracle_c.contains(r.solutions.tuple(0)));
            const RootedJoinTree split({kNoParent, 0}, {Scope{xy[0]}, Scope{xy[1]}}, {0});
            const Valuation phi = f.factors[0];
            const SolutionSet egp =
                extend_to_global_projection({project(phi, Scope{xy[0]}), project(phi, Scope{xy[1]})}, split);
            rec.check("global-projection extension over {x},{y} returns all 4 tuples", egp.size() == 4);
        });
        absorb(rec);
    }
    {
        Fixture f = counterexample_2();
        Recorder rec(f.name);
        rec.guarded("evaluation", [&] {
            const Scope xy{f.variables.variable(0), f.variables.variable(1)};
            two_factor_expectations(rec, f, tuples_of(xy, {{0, 0}, {1, 1}}));
            std::vector<Valuation> family;
            for (const auto& s : f.samples) family.push_back(s.xi2);
            SampleOptions so;
            so.exhaustive = true;
            rec.check("extension-system law holds", check_fces(f.extension_system(), family, so).passed());
            quadrant_expectations(rec, f);
        });
        absorb(rec);
    }
    {
        Fixture f = counterexample_3();
        Recorder rec(f.name);
        rec.guarded("evaluation", [&] {
            const Semiring& s = *f.semiring;
            rec.check("mul row for 2 is [0,2,2,3]",
                      s.mul(2, 0) == 0 && s.mul(2, 1) == 2 && s.mul(2, 2) == 2 && s.mul(2, 3) == 3);
            const Scope xy{f.variables.variable(0), f.variables.variable(1)};
            const auto oracle_c = oracle::brute_solutions(f.factors).value;
            rec.check("oracle solution set excludes (0,0)", oracle_c == tuples_of(xy, {{0, 1}, {1, 0}, {1, 1}}));
            std::vector<Scope> scopes{f.factors[0].label(), f.factors[1].label()};
            const RootedJoinTree t = build_join_tree(scopes).tree;
            const SolutionSet egp = extend_to_global_projection(collect_distribute(t, f.factors), t);
            rec.check("global-projection extension contains (0,0)", egp.contains(Tuple(xy, {0, 0})));
            const SolutionSet ets = extend_to_subtree(collect(t, f.factors).psi_prime, t);
            rec.check("subtree extension is a non-empty subset", !ets.empty() && ets.is_subset_of(oracle_c));
            const auto m = classify(s);
            rec.check("EGP/complete not guaranteed", m.at("EGP", "complete").verdict == Soundness::NotGuaranteed);
            rec.check("ETS/complete not guaranteed", m.at("ETS", "complete").verdict == Soundness::NotGuaranteed);
            const auto so_rep = check_square_ordered(s);
            const auto so = so_rep.first_failure();
            rec.check("square-ordered witness (3,2)", so && so->witness == std::vector<Value>{3, 2});
            const auto wc_rep = check_weakly_mult_cancellative(s);
            const auto wc = wc_rep.first_failure();
            rec.check("weak cancellativity witness (2,3,3)", wc && wc->witness == std::vector<Value>{2, 3, 3});
            SolveOptions opt;
            opt.verify = true;
            const auto r = solve(f.factors, Task::Complete, opt);
            rec.check("complete solve takes the filter path and stays sound",
                      r.path == "extend-to-subtree+filter" && r.solutions.is_subset_of(oracle_c) &&
                          r.verify_rejected == 0);
        });
        absorb(rec);
    }
    {
        Fixture f = maxmin_ties();
        Recorder rec(f.name);
        rec.guarded("evaluation", [&] {
            const auto oracle_c = oracle::brute_solutions(f.factors).value;
            const auto r = solve(f.factors, Task::Partial);
            rec.check("subtree extension is a strict non-empty subset",
                      !r.solutions.empty() && r.solutions.is_subset_of(oracle_c) && r.solutions.size() < oracle_c.size(),
                      std::to_string(r.solutions.size()) + " of " + std::to_string(oracle_c.size()));
        });
        absorb(rec);
    }
    for (const Fixture& f : completability_quadrants()) {
        Recorder rec(f.name);
        rec.guarded("evaluation", [&] { quadrant_expectations(rec, f); });
        absorb(rec);
    }
    return all;
}

}  // namespace semidp
