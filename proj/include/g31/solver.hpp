#ifndef G31_SOLVER_HPP
#define G31_SOLVER_HPP

#include "g31/graph.hpp"

#include <stdexcept>

namespace g31 {

struct SearchConfig {
    std::int64_t node_budget = -1;  // -1 = unlimited
    double time_budget_s = 0.0;     // 0 = unlimited
    int threads = 1;
    std::uint64_t seed = 0;
    int restarts = 1;
    bool root_symmetry = false;  // fix {1,2,3} as the first chosen vertex
};

enum class SolveStatus { proven_optimal, heuristic_upper, oracle };

std::string to_string(SolveStatus s);

struct SolveResult {
    int n = 0;
    std::int64_t l = 0;
    std::int64_t min_edges = 0;
    VertexSubset witness;
    SolveStatus status = SolveStatus::heuristic_upper;
    std::int64_t nodes_explored = 0;
    double elapsed_s = 0.0;
};

// Thrown when an enumeration would exceed the guard; carries the size estimate.
struct BudgetRefusal : std::runtime_error {
    double estimated_size;
    BudgetRefusal(const std::string& what, double est)
        : std::runtime_error(what), estimated_size(est) {}
};

// Exhaustive enumeration. Guarded: n <= 6 for any l, n = 7 only for l <= 8 or
// l >= C(7,3) - 8 (the large-l side runs on the complement through the
// edge-accounting identity).
SolveResult brute_force_r(int n, std::int64_t l);

// Exact search: DFS in colex order with an admissible completion bound
// (suffix clique-cover water-filling plus smallest cross degrees), incumbent
// seeded from the block construction. l > C(n,3)/2 is solved on the
// complement via |E(W)| = |E_n| - d_n |W1| + |E(W1)|.
SolveResult branch_and_bound_r(int n, std::int64_t l, const SearchConfig& cfg = {});

// Steepest-descent 1-swap from the construction witness plus seeded random
// restarts. Deterministic for fixed (seed, restarts).
SolveResult local_search_r(int n, std::int64_t l, const SearchConfig& cfg = {});

} // namespace g31

#endif
