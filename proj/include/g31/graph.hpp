#ifndef G31_GRAPH_HPP
#define G31_GRAPH_HPP

#include "g31/combinat.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace g31 {

// Two triples are adjacent in G(n,3,1) iff they share exactly one element.
inline bool adjacent(const Triple& u, const Triple& v) {
    return intersection_size(u, v) == 1;
}

struct GraphParams {
    int n = 0;
    std::int64_t vertex_count = 0;  // C(n,3)
    std::int64_t degree = 0;        // 3 * C(n-3,2)
    std::int64_t edge_count = 0;    // degree * vertex_count / 2
};

GraphParams graph_stats(int n);

// Subset of the C(n,3)-element vertex universe, stored as a packed bitset
// over colex ranks.
class VertexSubset {
public:
    VertexSubset() : VertexSubset(3) {}
    explicit VertexSubset(int n);

    int ground_set() const { return n_; }
    std::int64_t universe_size() const { return universe_; }
    std::int64_t size() const { return count_; }

    bool contains(std::int64_t idx) const;
    void add(std::int64_t idx);
    void remove(std::int64_t idx);
    void add_triple(const Triple& t) { add(rank_triple(t, n_)); }

    const std::vector<std::uint64_t>& words() const { return bits_; }

    void for_each(const std::function<void(std::int64_t)>& fn) const;
    std::vector<std::int64_t> indices() const;
    std::vector<Triple> triples() const;

    VertexSubset complement() const;

    bool operator==(const VertexSubset& o) const {
        return n_ == o.n_ && bits_ == o.bits_;
    }
    // Lexicographic on the index sequence; used for deterministic tie-breaks.
    bool lex_less(const VertexSubset& o) const;

    static VertexSubset from_triples(int n, const std::vector<Triple>& ts);

private:
    void check(std::int64_t idx) const;

    int n_;
    std::int64_t universe_;
    std::int64_t count_ = 0;
    std::vector<std::uint64_t> bits_;
};

struct EdgeCountReport {
    std::int64_t edges_within = 0;      // |E(W)|
    std::int64_t edges_complement = 0;  // |E(W1)|
    std::int64_t edges_crossing = 0;    // |E1|
    bool degree_inequality_holds = false;  // |E(W1)| + |E1| <= d_n * |W1|
};

// Adjacency provider. Packed bitrows are materialized when C(n,3) <= 4096
// (n <= 30); larger n falls back to on-the-fly triple intersection.
class Graph {
public:
    static constexpr std::int64_t kBitrowLimit = 4096;

    explicit Graph(int n);

    int ground_set() const { return n_; }
    const GraphParams& params() const { return params_; }
    bool has_rows() const { return !rows_.empty(); }

    const Triple& triple_of(std::int64_t idx) const { return verts_[idx]; }
    bool adjacent_idx(std::int64_t i, std::int64_t j) const;

    // Row i as packed words (only when has_rows()).
    const std::vector<std::uint64_t>& row(std::int64_t i) const { return rows_[i]; }

    // Degree of vertex idx inside W.
    std::int64_t degree_in(const VertexSubset& W, std::int64_t idx) const;

    // |E(W)|, choosing the direct or dense-complement path by |W|.
    std::int64_t count_induced_edges(const VertexSubset& W) const;
    // Both paths exposed so their agreement is testable.
    std::int64_t count_induced_edges_direct(const VertexSubset& W) const;
    std::int64_t count_induced_edges_dense(const VertexSubset& W) const;

    EdgeCountReport complement_accounting(const VertexSubset& W) const;

private:
    int n_;
    GraphParams params_;
    std::vector<Triple> verts_;
    std::vector<std::vector<std::uint64_t>> rows_;
};

// Serialization. Triple form: JSON array of 3-element arrays, e.g.
// [[1,2,3],[1,4,5]]. Hex form: big-endian hex digits of the bitset over
// colex ranks. Both round-trip losslessly.
std::string subset_to_json(const VertexSubset& W);
VertexSubset subset_from_json(int n, const std::string& json_text);
std::string subset_to_hex(const VertexSubset& W);
VertexSubset subset_from_hex(int n, const std::string& hex);

} // namespace g31

#endif
