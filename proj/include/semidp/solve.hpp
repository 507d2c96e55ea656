#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "semidp/join_tree.hpp"
#include "semidp/semiring_properties.hpp"
#include "semidp/solutions.hpp"

namespace semidp {

enum class Task { Project, Single, Partial, Complete };

std::string_view to_string(Task t);
std::optional<Task> parse_task(std::string_view s);

struct SolveOptions {
    bool verify = false;
    Index max_solutions = default_solution_cap();
    CheckOptions check;
    // Projection target for Task::Project; otherwise the root must cover it.
    std::optional<Scope> query;
    // Minimally labeled covering tree to use instead of build_join_tree.
    std::optional<RootedJoinTree> tree;
    Heuristic heuristic = Heuristic::MinFill;
    Exec exec = Exec::Auto;
};

struct SolveResult {
    Task task = Task::Project;
    std::string path;
    std::string annotation;
    // Completeness guarantee of the chosen path (soundness is always guaranteed).
    Soundness soundness = Soundness::Guaranteed;
    Value optimum = 0;
    SolutionSet solutions;
    std::optional<Valuation> projection;
    std::optional<SoundnessMatrix> matrix;
    bool verified = false;
    std::size_t verify_rejected = 0;
};

// prod_k phi_k(x restricted to d(phi_k)).
Value evaluate_product(std::span<const Valuation> factors, const Tuple& x);

// Solution tasks throw RefusedError on non-selective semirings.
SolveResult solve(std::span<const Valuation> factors, Task task, const SolveOptions& opt = {});

}  // namespace semidp
