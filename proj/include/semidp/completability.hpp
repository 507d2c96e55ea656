#pragma once

#include <vector>

#include "semidp/semiring_properties.hpp"
#include "semidp/solutions.hpp"

namespace semidp {

// phi = xi1 x xi2 with X = d(xi1), Y = d(xi2).
struct ProductSample {
    Valuation xi1;
    Valuation xi2;
};

// When the instances enumerate the whole family, passing checks report Holds;
// otherwise NotFalsified. Failures name the offending sample in the note.
struct SampleOptions {
    bool exhaustive = false;
    Index cap = default_solution_cap();
};

// W_phi^X(x) = { <y,z> : y in W_{phi^Y}^X(x), z in W_phi^Y(<x,y>) } for every x in c_{phi^X}, X within Y within d(phi).
PropertyReport check_fces(const ExtensionSystem& es, const std::vector<Valuation>& instances,
                          const SampleOptions& opt = {});

// CO(c_{phi^X}, phi^Y) within c_phi, plus the unconditional superset direction.
PropertyReport check_projective_completability(const ExtensionSystem& es, const std::vector<ProductSample>& samples,
                                               const SampleOptions& opt = {});

enum class PiecewiseFlavor { Plain, GuaranteedNonEmpty, Total };

PropertyReport check_piecewise_completability(const ExtensionSystem& es, const std::vector<ProductSample>& samples,
                                              PiecewiseFlavor flavor, const SampleOptions& opt = {});

enum class Cpk { One, Two, Three };

// Quantifies over all tuples of Omega_Z, not only solutions.
PropertyReport check_cpk(const ExtensionSystem& es, const std::vector<ProductSample>& samples, Cpk which,
                         const SampleOptions& opt = {});

}  // namespace semidp
