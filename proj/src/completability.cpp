#include "semidp/completability.hpp"

#include <string>

#include "semidp/errors.hpp"

namespace semidp {

namespace {

std::vector<Scope> subsets(const Scope& s) {
    std::vector<Scope> out;
    const std::size_t n = s.size();
    if (n > 20) throw ResourceError("too many variables to enumerate subsets");
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        std::vector<Variable> vars;
        for (std::size_t k = 0; k < n; ++k)
            if (mask >> k & 1) vars.push_back(s[k]);
        out.emplace_back(std::move(vars));
    }
    return out;
}

std::string describe(const Scope& s) {
    std::string out = "{";
    for (std::size_t k = 0; k < s.size(); ++k) out += (k ? "," : "") + std::string("v") + std::to_string(s[k].id);
    return out + "}";
}

std::string describe(const Tuple& t) {
    std::string out = "<";
    for (std::size_t k = 0; k < t.values().size(); ++k)
        out += (k ? "," : "") + std::string("v") + std::to_string(t.scope()[k].id) + "=" +
               std::to_string(t.values()[k]);
    return out + ">";
}

PropertyResult passing(std::string name, const SampleOptions& opt, std::size_t count) {
    PropertyResult r;
    r.property = std::move(name);
    r.verdict = opt.exhaustive ? Verdict::Holds : Verdict::NotFalsified;
    r.note = "checked on " + std::to_string(count) + " instances";
    return r;
}

PropertyResult failing(std::string name, std::size_t sample, std::string note) {
    PropertyResult r;
    r.property = std::move(name);
    r.verdict = Verdict::Fails;
    r.sample = sample;
    r.note = std::move(note);
    return r;
}

PropertyReport wrap(std::vector<PropertyResult> results, const SampleOptions& opt, std::uint64_t evals) {
    PropertyReport rep;
    rep.results = std::move(results);
    rep.exhaustive = opt.exhaustive;
    rep.evaluations = evals;
    return rep;
}

}  // namespace

PropertyReport check_fces(const ExtensionSystem& es, const std::vector<Valuation>& instances,
                          const SampleOptions& opt) {
    const std::string name = "extension-system-law";
    std::uint64_t evals = 0;
    for (std::size_t n = 0; n < instances.size(); ++n) {
        const Valuation& phi = instances[n];
        const Scope& d = phi.label();
        for (const Scope& x_scope : subsets(d)) {
            const Valuation phi_x = project(phi, x_scope);
            const SolutionSet base = es.solutions(phi_x);
            const Scope rest = minus(d, x_scope);
            for (const Scope& y_extra : subsets(rest)) {
                const Scope y_scope = unite(x_scope, y_extra);
                const Valuation phi_y = project(phi, y_scope);
                for (const Tuple& x : base.tuples()) {
                    ++evals;
                    const SolutionSet lhs = es.extensions(phi, x);
                    std::vector<Index> rhs;
                    const SolutionSet wy = es.extensions(phi_y, x);
                    for (const Tuple& y : wy.tuples()) {
                        const SolutionSet wz = es.extensions(phi, tuple_concat(x, y));
                        for (const Tuple& z : wz.tuples()) rhs.push_back(tuple_index(tuple_concat(y, z)));
                    }
                    if (lhs != SolutionSet(rest, std::move(rhs)))
                        return wrap({failing(name, n,
                                             "X=" + describe(x_scope) + " Y=" + describe(y_scope) + " x=" + describe(x))},
                                    opt, evals);
                }
            }
        }
    }
    return wrap({passing(name, opt, instances.size())}, opt, evals);
}

PropertyReport check_projective_completability(const ExtensionSystem& es, const std::vector<ProductSample>& samples,
                                               const SampleOptions& opt) {
    std::optional<PropertyResult> sub, sup;
    std::uint64_t evals = 0;
    for (std::size_t n = 0; n < samples.size() && !(sub && sup); ++n) {
        const Valuation phi = combine(samples[n].xi1, samples[n].xi2);
        const Scope& x = samples[n].xi1.label();
        const Scope& y = samples[n].xi2.label();
        const SolutionSet lhs = completions(es.solutions(project(phi, x)), project(phi, y), es, opt.cap);
        const SolutionSet c = es.solutions(phi);
        ++evals;
        if (!sub && !lhs.is_subset_of(c))
            sub = failing("projective-completability", n,
                          "CO(c_{phi^X}, phi^Y) has " + std::to_string(lhs.size()) + " tuples, c_phi has " +
                              std::to_string(c.size()));
        if (!sup && !c.is_subset_of(lhs))
            sup = failing("projective-superset", n, "c_phi not within CO(c_{phi^X}, phi^Y)");
    }
    return wrap({sub ? *sub : passing("projective-completability", opt, samples.size()),
                 sup ? *sup : passing("projective-superset", opt, samples.size())},
                opt, evals);
}

PropertyReport check_piecewise_completability(const ExtensionSystem& es, const std::vector<ProductSample>& samples,
                                              PiecewiseFlavor flavor, const SampleOptions& opt) {
    const std::string name = flavor == PiecewiseFlavor::Plain                ? "piecewise-completability"
                             : flavor == PiecewiseFlavor::GuaranteedNonEmpty ? "piecewise-guaranteed-non-empty"
                                                                             : "piecewise-total";
    std::uint64_t evals = 0;
    for (std::size_t n = 0; n < samples.size(); ++n) {
        const Valuation phi = combine(samples[n].xi1, samples[n].xi2);
        const SolutionSet base = es.solutions(project(phi, samples[n].xi1.label()));
        const SolutionSet lhs = completions(base, samples[n].xi2, es, opt.cap);
        const SolutionSet c = es.solutions(phi);
        ++evals;
        if (!lhs.is_subset_of(c))
            return wrap({failing(name, n, "CO(c_{phi^X}, xi2) not within c_phi")}, opt, evals);
        if (flavor == PiecewiseFlavor::GuaranteedNonEmpty) {
            for (const Tuple& x : base.tuples())
                if (completions(SolutionSet::of(x), samples[n].xi2, es, opt.cap).empty())
                    return wrap({failing(name, n, "CO({" + describe(x) + "}, xi2) is empty")}, opt, evals);
        }
        if (flavor == PiecewiseFlavor::Total && lhs != c)
            return wrap({failing(name, n,
                                 "CO(c_{phi^X}, xi2) has " + std::to_string(lhs.size()) + " tuples, c_phi has " +
                                     std::to_string(c.size()))},
                        opt, evals);
    }
    return wrap({passing(name, opt, samples.size())}, opt, evals);
}

PropertyReport check_cpk(const ExtensionSystem& es, const std::vector<ProductSample>& samples, Cpk which,
                         const SampleOptions& opt) {
    const std::string name = which == Cpk::One ? "CPK1" : which == Cpk::Two ? "CPK2" : "CPK3";
    std::uint64_t evals = 0;
    for (std::size_t n = 0; n < samples.size(); ++n) {
        const Valuation& xi1 = samples[n].xi1;
        const Valuation& xi2 = samples[n].xi2;
        const Valuation phi = combine(xi1, xi2);
        if (which == Cpk::One) {
            for (const Valuation* v : {&xi1, &xi2, &phi})
                for (const Scope& z : subsets(v->label()))
                    for (const Tuple& x : enumerate_tuples(z)) {
                        ++evals;
                        if (es.extensions(*v, x).empty())
                            return wrap({failing(name, n, "empty W over Z=" + describe(z) + " at " + describe(x))},
                                        opt, evals);
                    }
            continue;
        }
        const Scope& x_scope = xi1.label();
        const Scope& y_scope = xi2.label();
        for (const Scope& extra : subsets(minus(y_scope, x_scope))) {
            const Scope z = unite(x_scope, extra);
            const Scope zy = intersect(z, y_scope);
            for (const Tuple& x : enumerate_tuples(z)) {
                ++evals;
                const SolutionSet w2 = es.extensions(xi2, tuple_project(x, zy));
                const SolutionSet wphi = es.extensions(phi, x);
                const bool ok = which == Cpk::Two ? w2.is_subset_of(wphi) : w2 == wphi;
                if (!ok) return wrap({failing(name, n, "Z=" + describe(z) + " x=" + describe(x))}, opt, evals);
            }
        }
    }
    return wrap({passing(name, opt, samples.size())}, opt, evals);
}

}  // namespace semidp
