#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "semidp/completability.hpp"
#include "semidp/solutions.hpp"
#include "semidp/tuples.hpp"
#include "semidp/valuation.hpp"

namespace semidp {

// W(xi, Z, a) = W_opt(eta restricted to d(xi), Z, a) for a fixed eta; defined on
// valuations whose label lies within d(eta), a hard error elsewhere.
class IndicatorInducedSystem final : public ExtensionSystem {
public:
    explicit IndicatorInducedSystem(Valuation eta) : eta_(std::move(eta)) {}
    std::string name() const override { return "indicator-induced"; }
    SolutionSet extensions(const Valuation& phi, const Tuple& x) const override;

private:
    Valuation eta_;
};

// Max-plus family psi = p1^a x p2^b x const, p1(x) = [2,1], p2(y) = [2,1], with
// restricted solutions: Omega_X for p1 itself, Omega_Y for p2 itself, the
// all-zero tuple otherwise. Extensions are the solution-consistent completions.
class RestrictedSolutionSystem final : public ExtensionSystem {
public:
    RestrictedSolutionSystem(Variable x, Variable y);
    std::string name() const override { return "restricted-solutions"; }
    SolutionSet extensions(const Valuation& phi, const Tuple& x) const override;
    bool in_family(const Valuation& phi) const;
    SolutionSet restricted_solutions(const Valuation& phi) const;

    // The member with exponents a, b and constant k (k even, >= 0).
    Valuation member(unsigned a, unsigned b, unsigned k) const;

private:
    Variable x_, y_;
};

struct Fixture {
    std::string name;
    std::string summary;
    SemiringRef semiring;
    VariableTable variables;
    std::vector<Valuation> factors;
    // Null means the optimization extension system.
    std::shared_ptr<const ExtensionSystem> system;
    std::vector<ProductSample> samples;
    bool samples_exhaustive = false;
    std::optional<bool> expect_projective;
    std::optional<bool> expect_piecewise;

    const ExtensionSystem& extension_system() const { return system ? *system : optimization_system(); }
};

Fixture counterexample_1();
Fixture counterexample_2();
Fixture counterexample_3();
// Max-min instance where Extend-To-Subtree returns a strict subset of the solutions.
Fixture maxmin_ties();
// Neither, projective-only, piecewise-only, both.
std::vector<Fixture> completability_quadrants();

std::vector<Fixture> all_fixtures();
// Throws DomainError for an unknown name.
Fixture fixture_by_name(const std::string& name);

struct FixtureCheck {
    std::string fixture;
    std::string check;
    bool passed = false;
    std::string detail;
};

std::vector<FixtureCheck> run_fixture_checks();

}  // namespace semidp
