#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "semidp/semiring.hpp"
#include "semidp/solutions.hpp"
#include "semidp/tuples.hpp"
#include "semidp/valuation.hpp"

// Brute-force reference computations by full enumeration. Valuations and
// solution sets are used only as containers; no combination, projection,
// join tree or message passing code is involved.
namespace semidp::oracle {

// Default 10^6 tuples, overridable through SEMIDP_ORACLE_CAP.
Index default_oracle_cap();

template <class T>
struct OracleResult {
    T value;
    std::uint64_t enumerated = 0;
};

// Product of all factors evaluated at x.
Value evaluate(std::span<const Valuation> factors, const Tuple& x);

OracleResult<Valuation> brute_project(std::span<const Valuation> factors, const Scope& x,
                                      Index cap = default_oracle_cap());
OracleResult<SolutionSet> brute_solutions(std::span<const Valuation> factors, Index cap = default_oracle_cap());
OracleResult<SolutionSet> brute_extension_set(const Valuation& phi, const Tuple& x, Index cap = default_oracle_cap());

}  // namespace semidp::oracle
