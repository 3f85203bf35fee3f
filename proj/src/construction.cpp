#include "g31/construction.hpp"

#include <algorithm>
#include <stdexcept>

namespace g31 {

namespace {
// materialization guard for build_construction
constexpr std::int64_t kMaxRawVertices = 200000;
} // namespace

int select_block_width(int n, std::int64_t l) {
    if (l < 1 || l > binomial(n, 3))
        throw std::invalid_argument("select_block_width: l outside [1, C(n,3)]");
    for (int t = 3; t <= n; ++t)
        if (binomial(t, 3) * (n / t) >= l)
            return t;
    throw std::invalid_argument("select_block_width: no feasible block width");
}

std::int64_t untrimmed_edges(int n, std::int64_t l) {
    int t = select_block_width(n, l);
    std::int64_t blocks = n / t;
    // each block induces a complete G(t,3,1)
    return blocks * (binomial(t, 3) * 3 * binomial(t - 3, 2) / 2);
}

ConstructionPlan build_construction(int n, std::int64_t l) {
    ConstructionPlan plan;
    plan.n = n;
    plan.l = l;
    plan.t = select_block_width(n, l);
    plan.num_blocks = n / plan.t;
    std::int64_t per_block = binomial(plan.t, 3);
    plan.raw_size = per_block * plan.num_blocks;
    plan.predicted_edges =
        plan.num_blocks * (per_block * 3 * binomial(plan.t - 3, 2) / 2);
    if (plan.raw_size > kMaxRawVertices)
        throw std::length_error("build_construction: raw set too large to materialize");

    for (int b = 0; b < plan.num_blocks; ++b)
        plan.blocks.emplace_back(b * plan.t + 1, (b + 1) * plan.t);

    plan.trimmed = VertexSubset(n);
    // all triples inside each block, by iterating within-block combinations
    std::vector<std::vector<Triple>> block_triples(plan.num_blocks);
    for (int b = 0; b < plan.num_blocks; ++b) {
        int lo = plan.blocks[b].first;
        for (int x = 0; x < plan.t; ++x)
            for (int y = x + 1; y < plan.t; ++y)
                for (int z = y + 1; z < plan.t; ++z) {
                    Triple tr{{lo + x, lo + y, lo + z}};
                    plan.trimmed.add_triple(tr);
                    block_triples[b].push_back(tr);
                }
    }

    // Trim the excess from the tail blocks: within a block drop the vertex of
    // highest current within-block degree first, ties toward the larger colex
    // index. Small blocks may be consumed whole before the excess runs out.
    std::int64_t excess = plan.raw_size - l;
    for (int b = plan.num_blocks - 1; b >= 0 && excess > 0; --b) {
        const std::vector<Triple>& blk = block_triples[b];
        std::vector<bool> alive(blk.size(), true);
        std::vector<int> deg(blk.size(), 0);
        for (std::size_t i = 0; i < blk.size(); ++i)
            for (std::size_t j = i + 1; j < blk.size(); ++j)
                if (adjacent(blk[i], blk[j])) { ++deg[i]; ++deg[j]; }
        std::int64_t take = std::min<std::int64_t>(excess, blk.size());
        for (std::int64_t step = 0; step < take; ++step) {
            int pick = -1;
            // blk is in increasing colex order
            for (std::size_t i = 0; i < blk.size(); ++i)
                if (alive[i] && (pick < 0 || deg[i] >= deg[pick]))
                    pick = static_cast<int>(i);
            alive[pick] = false;
            plan.trimmed.remove(rank_triple(blk[pick], n));
            for (std::size_t j = 0; j < blk.size(); ++j)
                if (alive[j] && adjacent(blk[pick], blk[j]))
                    --deg[j];
        }
        excess -= take;
    }

    // supports in different blocks are disjoint, so edges only live within
    // blocks; count per block
    plan.actual_edges = 0;
    for (int b = 0; b < plan.num_blocks; ++b) {
        std::vector<Triple> in_block;
        int lo = plan.blocks[b].first, hi = plan.blocks[b].second;
        plan.trimmed.for_each([&](std::int64_t idx) {
            Triple tr = unrank_triple(idx, n);
            if (tr.e[0] >= lo && tr.e[2] <= hi)
                in_block.push_back(tr);
        });
        for (std::size_t i = 0; i < in_block.size(); ++i)
            for (std::size_t j = i + 1; j < in_block.size(); ++j)
                if (adjacent(in_block[i], in_block[j]))
                    ++plan.actual_edges;
    }
    return plan;
}

UpperBoundPair predicted_upper_bound(int n, std::int64_t l) {
    UpperBoundPair p;
    p.exact_construction = {
        static_cast<double>(untrimmed_edges(n, l)),
        Direction::upper, Validity::exact_finite_n, Source::construction, 0.0};
    p.asymptotic_reference = {
        9.0 * static_cast<double>(l) * static_cast<double>(l) / (2.0 * n),
        Direction::upper, Validity::asymptotic_reference, Source::T3_1, 0.0};
    return p;
}

} // namespace g31
