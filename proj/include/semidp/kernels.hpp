#pragma once

#include <span>
#include <vector>

#include "semidp/semiring.hpp"
#include "semidp/tuples.hpp"

namespace semidp {

enum class Exec { Auto, Serial, Parallel };

namespace kernels {

// Tables at least this large use the OpenMP kernels under Exec::Auto.
inline constexpr Index kParallelThreshold = Index{1} << 15;

// Pointwise product over the target scope d(a) u d(b).
std::vector<Value> combine_serial(const Semiring& s, const Scope& sa, std::span<const Value> a,
                                  const Scope& sb, std::span<const Value> b, const Scope& target);
std::vector<Value> combine_parallel(const Semiring& s, const Scope& sa, std::span<const Value> a,
                                    const Scope& sb, std::span<const Value> b, const Scope& target);

// Semiring sum over eliminated variables; every cell folds its inputs in
// ascending source index order, so both kernels are table-identical.
std::vector<Value> project_serial(const Semiring& s, const Scope& src, std::span<const Value> t,
                                  const Scope& target);
std::vector<Value> project_parallel(const Semiring& s, const Scope& src, std::span<const Value> t,
                                    const Scope& target);

bool use_parallel(Exec e, Index size);

}  // namespace kernels
}  // namespace semidp
