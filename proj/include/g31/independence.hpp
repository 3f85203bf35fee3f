#ifndef G31_INDEPENDENCE_HPP
#define G31_INDEPENDENCE_HPP

#include "g31/graph.hpp"

#include <optional>
#include <string>
#include <vector>

namespace g31 {

bool is_independent(const Graph& g, const VertexSubset& W);

struct AlphaResult {
    int n = 0;
    std::int64_t alpha = 0;
    VertexSubset witness;
    bool proven = false;
    std::int64_t nodes_explored = 0;
};

// Maximum independent set via branch-and-bound (max-degree-first ordering,
// greedy clique-cover upper bound). proven=false only on budget exhaustion.
AlphaResult independence_number(const Graph& g, std::int64_t node_budget = -1);

// Independent exhaustive oracle: plain DFS over all subsets, no bounding
// beyond adjacency feasibility. For test use at small n.
std::int64_t brute_force_alpha(const Graph& g);

enum class FamilyKind { type1, type2, type3 };

struct FamilyType {
    FamilyKind kind;
    std::vector<int> params;  // type1: {i,j}; type2: {i,j,k,t}; type3: empty
};

// The maximal family of the given type: type1 -> all n-2 triples through the
// pair, type2 -> the 4 triples inside the 4-set, type3 -> floor(n/3) disjoint
// consecutive triples.
VertexSubset generate_family(const FamilyType& ft, int n);

struct DecompositionPart {
    FamilyType type;
    std::vector<Triple> members;
    std::vector<int> support;  // union of members, sorted
};

struct Decomposition {
    bool ok = false;
    std::string failure;
    std::vector<DecompositionPart> parts;
};

// Greedy type1 -> type2 -> type3 grouping of an independent set, with full
// structural re-validation (partition, type predicates, pairwise disjoint
// supports) before returning ok=true.
Decomposition decompose_claim1(const Graph& g, const VertexSubset& U);

// Checks a decomposition against the input set; used by decompose_claim1 and
// directly by tests.
bool validate_decomposition(const VertexSubset& U, const Decomposition& d,
                            std::string* why = nullptr);

// Every independent set of g (including the empty set), by DFS. Intended for
// small n only; throws if the universe exceeds the bitrow limit.
std::vector<VertexSubset> all_independent_sets(const Graph& g);

} // namespace g31

#endif
