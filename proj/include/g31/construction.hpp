#ifndef G31_CONSTRUCTION_HPP
#define G31_CONSTRUCTION_HPP

#include "g31/bounds_types.hpp"
#include "g31/graph.hpp"

#include <utility>
#include <vector>

namespace g31 {

struct ConstructionPlan {
    int n = 0;
    std::int64_t l = 0;
    int t = 0;                // block width
    int num_blocks = 0;       // floor(n / t)
    std::vector<std::pair<int, int>> blocks;  // inclusive element intervals
    std::int64_t raw_size = 0;        // num_blocks * C(t,3), >= l
    VertexSubset trimmed;             // exactly l vertices
    std::int64_t predicted_edges = 0; // untrimmed: num_blocks * C(t,3)*3*C(t-3,2)/2
    std::int64_t actual_edges = 0;    // trimmed, counted
};

// Minimal t in {3..n} with C(t,3) * floor(n/t) >= l.
int select_block_width(int n, std::int64_t l);

// Untrimmed edge count of the block construction, formula only.
std::int64_t untrimmed_edges(int n, std::int64_t l);

// Full materialized plan. Excess vertices beyond l are removed from the tail
// blocks, highest within-block degree first, ties broken by largest colex
// index. Refuses (std::length_error) when the raw set is too large to
// materialize; use predicted_upper_bound for formula-only evaluation.
ConstructionPlan build_construction(int n, std::int64_t l);

struct UpperBoundPair {
    BoundEstimate exact_construction;   // untrimmed edge count, a valid witness value
    BoundEstimate asymptotic_reference; // 9 l^2 / (2 n)
};

UpperBoundPair predicted_upper_bound(int n, std::int64_t l);

} // namespace g31

#endif
