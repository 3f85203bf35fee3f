#include "g31/solver.hpp"

#include "g31/construction.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <limits>
#include <random>

namespace g31 {

std::string to_string(SolveStatus s) {
    switch (s) {
    case SolveStatus::proven_optimal: return "proven-optimal";
    case SolveStatus::heuristic_upper: return "heuristic-upper";
    case SolveStatus::oracle: return "oracle";
    }
    return "?";
}

namespace {

double now_s() {
    using clock = std::chrono::steady_clock;
    return std::chrono::duration<double>(clock::now().time_since_epoch()).count();
}

// Exhaustive min over k-subsets of a <=64-vertex graph given as single-word
// adjacency rows. Returns {min_edges, best_mask}.
struct EnumResult {
    std::int64_t min_edges;
    std::uint64_t best_mask;
    std::int64_t nodes;
};

void enum_dfs(const std::vector<std::uint64_t>& rows, int vcount, int start,
              int remaining, std::uint64_t mask, std::int64_t edges, EnumResult& r) {
    ++r.nodes;
    if (remaining == 0) {
        if (edges < r.min_edges) {
            r.min_edges = edges;
            r.best_mask = mask;
        }
        return;
    }
    if (edges >= r.min_edges)
        return;  // adding vertices never removes edges
    for (int v = start; v <= vcount - remaining; ++v)
        enum_dfs(rows, vcount, v + 1, remaining - 1,
                 mask | (std::uint64_t{1} << v),
                 edges + std::popcount(rows[v] & mask), r);
}

EnumResult enumerate_min(const Graph& g, int k) {
    int vcount = static_cast<int>(g.params().vertex_count);
    std::vector<std::uint64_t> rows(vcount);
    for (int i = 0; i < vcount; ++i)
        rows[i] = g.row(i)[0];
    EnumResult r{std::numeric_limits<std::int64_t>::max(), 0, 0};
    enum_dfs(rows, vcount, 0, k, 0, 0, r);
    return r;
}

VertexSubset subset_from_mask(int n, std::uint64_t mask) {
    VertexSubset w(n);
    while (mask) {
        int b = std::countr_zero(mask);
        w.add(b);
        mask &= mask - 1;
    }
    return w;
}

double choose_estimate(double n, double k) {
    double r = 1.0;
    for (int i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}

} // namespace

SolveResult brute_force_r(int n, std::int64_t l) {
    GraphParams p = graph_stats(n);
    if (l < 0 || l > p.vertex_count)
        throw std::invalid_argument("brute_force_r: l outside [0, C(n,3)]");
    std::int64_t comp = p.vertex_count - l;
    bool use_complement = comp < l;
    std::int64_t k = use_complement ? comp : l;
    bool allowed = (n <= 6) || (n == 7 && k <= 8);
    if (!allowed) {
        double est = choose_estimate(static_cast<double>(p.vertex_count),
                                     static_cast<double>(k));
        throw BudgetRefusal("brute_force_r: enumeration of about " +
                                std::to_string(est) + " subsets is over budget",
                            est);
    }

    double t0 = now_s();
    Graph g(n);
    EnumResult er = enumerate_min(g, static_cast<int>(k));

    SolveResult res;
    res.n = n;
    res.l = l;
    res.status = SolveStatus::oracle;
    res.nodes_explored = er.nodes;
    if (!use_complement) {
        res.min_edges = er.min_edges;
        res.witness = subset_from_mask(n, er.best_mask);
    } else {
        // min |E(W)| = |E_n| - d_n |W1| + min |E(W1)| over |W1| = comp
        res.min_edges = p.edge_count - p.degree * comp + er.min_edges;
        res.witness = subset_from_mask(n, er.best_mask).complement();
    }
    res.elapsed_s = now_s() - t0;
    return res;
}

namespace {

using Words = std::vector<std::uint64_t>;

struct BnB {
    const Graph& g;
    int vcount;
    std::int64_t l;
    const SearchConfig& cfg;
    std::vector<std::vector<std::int64_t>> suffix_fill;  // [i][m] forced within-edges
    std::vector<int> deg_chosen;
    Words chosen;
    std::vector<std::int64_t> chosen_list;

    std::int64_t best;
    std::vector<std::int64_t> best_list;
    std::int64_t nodes = 0;
    bool aborted = false;
    double deadline = 0.0;

    BnB(const Graph& graph, std::int64_t target, const SearchConfig& config)
        : g(graph), vcount(static_cast<int>(graph.params().vertex_count)),
          l(target), cfg(config), deg_chosen(vcount, 0),
          chosen((vcount + 63) / 64, 0) {
        precompute_suffix_bounds();
    }

    // Greedy clique cover of each suffix {i..V-1}; then the water-filling
    // table: picking m vertices from a cover with clique sizes q_1..q_k
    // forces at least min sum C(m_j,2) edges (edges within cliques alone),
    // achieved by spreading picks evenly.
    void precompute_suffix_bounds() {
        suffix_fill.assign(vcount + 1, {});
        for (int i = vcount; i >= 0; --i) {
            std::vector<int> sizes = suffix_cover_sizes(i);
            std::int64_t cap = vcount - i;
            std::vector<std::int64_t> fill(cap + 1, 0);
            std::vector<int> taken(sizes.size(), 0);
            std::int64_t cost = 0;
            for (std::int64_t m = 1; m <= cap; ++m) {
                int pick = -1;
                for (std::size_t c = 0; c < sizes.size(); ++c)
                    if (taken[c] < sizes[c] && (pick < 0 || taken[c] < taken[pick]))
                        pick = static_cast<int>(c);
                cost += taken[pick];
                ++taken[pick];
                fill[m] = cost;
            }
            suffix_fill[i] = std::move(fill);
        }
    }

    std::vector<int> suffix_cover_sizes(int from) {
        std::vector<Words> common;
        std::vector<int> sizes;
        for (int v = from; v < vcount; ++v) {
            bool placed = false;
            for (std::size_t c = 0; c < common.size(); ++c) {
                if ((common[c][v >> 6] >> (v & 63)) & 1) {
                    const auto& row = g.row(v);
                    for (std::size_t k = 0; k < common[c].size(); ++k)
                        common[c][k] &= row[k];
                    ++sizes[c];
                    placed = true;
                    break;
                }
            }
            if (!placed) {
                common.push_back(g.row(v));
                sizes.push_back(1);
            }
        }
        return sizes;
    }

    // Sum of the m smallest deg_chosen values over the suffix.
    std::int64_t cross_lower_bound(int from, std::int64_t m) {
        if (m == 0)
            return 0;
        // deg_chosen <= |chosen| <= l, small; counting sort
        std::vector<int> buckets(chosen_list.size() + 1, 0);
        for (int v = from; v < vcount; ++v)
            ++buckets[deg_chosen[v]];
        std::int64_t sum = 0, left = m;
        for (std::size_t d = 0; d < buckets.size() && left > 0; ++d) {
            std::int64_t take = std::min<std::int64_t>(buckets[d], left);
            sum += take * static_cast<std::int64_t>(d);
            left -= take;
        }
        return sum;
    }

    void include(int v) {
        chosen[v >> 6] |= std::uint64_t{1} << (v & 63);
        chosen_list.push_back(v);
        const auto& row = g.row(v);
        for (std::size_t wi = 0; wi < row.size(); ++wi) {
            std::uint64_t w = row[wi];
            while (w) {
                int b = std::countr_zero(w);
                w &= w - 1;
                ++deg_chosen[static_cast<std::int64_t>(wi) * 64 + b];
            }
        }
    }

    void exclude(int v) {
        chosen[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
        chosen_list.pop_back();
        const auto& row = g.row(v);
        for (std::size_t wi = 0; wi < row.size(); ++wi) {
            std::uint64_t w = row[wi];
            while (w) {
                int b = std::countr_zero(w);
                w &= w - 1;
                --deg_chosen[static_cast<std::int64_t>(wi) * 64 + b];
            }
        }
    }

    void dfs(int i, std::int64_t edges) {
        if (aborted)
            return;
        ++nodes;
        if ((nodes & 0xFFF) == 0 && deadline > 0 && now_s() > deadline) {
            aborted = true;
            return;
        }
        if (cfg.node_budget >= 0 && nodes > cfg.node_budget) {
            aborted = true;
            return;
        }
        std::int64_t m = l - static_cast<std::int64_t>(chosen_list.size());
        if (m == 0) {
            if (edges < best) {
                best = edges;
                best_list = chosen_list;
            }
            return;
        }
        if (vcount - i < m)
            return;
        std::int64_t bound = edges + cross_lower_bound(i, m) +
                             suffix_fill[i][m];
        if (bound >= best)
            return;
        std::int64_t added = 0;
        const auto& row = g.row(i);
        for (std::size_t k = 0; k < chosen.size(); ++k)
            added += std::popcount(row[k] & chosen[k]);
        include(i);
        dfs(i + 1, edges + added);
        exclude(i);
        if (aborted)
            return;
        dfs(i + 1, edges);
    }
};

} // namespace

SolveResult branch_and_bound_r(int n, std::int64_t l, const SearchConfig& cfg) {
    GraphParams p = graph_stats(n);
    if (l < 0 || l > p.vertex_count)
        throw std::invalid_argument("branch_and_bound_r: l outside [0, C(n,3)]");
    if (p.vertex_count > Graph::kBitrowLimit)
        throw std::invalid_argument("branch_and_bound_r: requires C(n,3) <= 4096");

    double t0 = now_s();

    // edge cases that need no search
    if (l == 0 || l == p.vertex_count) {
        SolveResult res;
        res.n = n;
        res.l = l;
        res.min_edges = l == 0 ? 0 : p.edge_count;
        VertexSubset w(n);
        if (l > 0) w = w.complement();
        res.witness = w;
        res.status = SolveStatus::proven_optimal;
        res.elapsed_s = now_s() - t0;
        return res;
    }

    // Large l: minimize over the complement side; the accounting identity
    // converts values back and forth exactly.
    if (l > p.vertex_count / 2) {
        std::int64_t comp = p.vertex_count - l;
        std::int64_t shift = p.edge_count - p.degree * comp;

        Graph g(n);
        ConstructionPlan seed = build_construction(n, l);
        VertexSubset seed_comp = seed.trimmed.complement();

        BnB search(g, comp, cfg);
        search.best = g.count_induced_edges(seed_comp);
        search.best_list = seed_comp.indices();
        search.deadline = cfg.time_budget_s > 0 ? t0 + cfg.time_budget_s : 0.0;
        if (cfg.node_budget != 0)
            search.dfs(0, 0);

        SolveResult res;
        res.n = n;
        res.l = l;
        res.min_edges = shift + search.best;
        VertexSubset w1(n);
        for (std::int64_t v : search.best_list)
            w1.add(v);
        res.witness = w1.complement();
        res.status = (cfg.node_budget != 0 && !search.aborted)
                         ? SolveStatus::proven_optimal
                         : SolveStatus::heuristic_upper;
        res.nodes_explored = search.nodes;
        res.elapsed_s = now_s() - t0;
        return res;
    }

    Graph g(n);
    ConstructionPlan seed = build_construction(n, l);

    BnB search(g, l, cfg);
    search.best = seed.actual_edges;
    search.best_list = seed.trimmed.indices();
    search.deadline = cfg.time_budget_s > 0 ? t0 + cfg.time_budget_s : 0.0;
    if (cfg.node_budget != 0) {
        if (cfg.root_symmetry) {
            // sound for the vertex-transitive G(n,3,1): some optimal subset
            // contains {1,2,3}
            std::int64_t added = 0;
            search.include(0);
            search.dfs(1, added);
        } else {
            search.dfs(0, 0);
        }
    }

    SolveResult res;
    res.n = n;
    res.l = l;
    res.min_edges = search.best;
    VertexSubset w(n);
    for (std::int64_t v : search.best_list)
        w.add(v);
    res.witness = w;
    res.status = (cfg.node_budget != 0 && !search.aborted)
                     ? SolveStatus::proven_optimal
                     : SolveStatus::heuristic_upper;
    res.nodes_explored = search.nodes;
    res.elapsed_s = now_s() - t0;
    return res;
}

namespace {

// Seeded uniform draw; mt19937_64 output is pinned by the standard, and the
// modulo reduction keeps restarts reproducible across platforms.
std::int64_t bounded_draw(std::mt19937_64& rng, std::int64_t bound) {
    return static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(bound));
}

VertexSubset random_subset(int n, std::int64_t universe, std::int64_t l,
                           std::mt19937_64& rng) {
    std::vector<std::int64_t> pool(universe);
    for (std::int64_t i = 0; i < universe; ++i)
        pool[i] = i;
    VertexSubset w(n);
    for (std::int64_t i = 0; i < l; ++i) {
        std::int64_t j = i + bounded_draw(rng, universe - i);
        std::swap(pool[i], pool[j]);
        w.add(pool[i]);
    }
    return w;
}

struct DescentOutcome {
    std::int64_t edges;
    VertexSubset witness;
    std::int64_t iterations;
};

DescentOutcome steepest_descent(const Graph& g, VertexSubset w) {
    std::int64_t vcount = g.params().vertex_count;
    std::vector<std::int64_t> deg(vcount, 0);
    for (std::int64_t v = 0; v < vcount; ++v)
        deg[v] = g.degree_in(w, v);
    std::int64_t edges = 0;
    w.for_each([&](std::int64_t v) { edges += deg[v]; });
    edges /= 2;

    std::vector<std::int64_t> in = w.indices();
    std::vector<std::int64_t> out;
    out.reserve(vcount - in.size());
    for (std::int64_t v = 0; v < vcount; ++v)
        if (!w.contains(v))
            out.push_back(v);

    std::int64_t iterations = 0;
    for (;;) {
        std::int64_t best_delta = 0;
        std::size_t best_u = 0, best_v = 0;
        bool found = false;
        for (std::size_t ui = 0; ui < in.size(); ++ui) {
            for (std::size_t vi = 0; vi < out.size(); ++vi) {
                std::int64_t u = in[ui], v = out[vi];
                std::int64_t delta = deg[v] - deg[u] -
                                     (g.adjacent_idx(u, v) ? 1 : 0);
                if (delta < best_delta ||
                    (delta == best_delta && found &&
                     (in[best_u] > u || (in[best_u] == u && out[best_v] > v)))) {
                    if (delta < 0) {
                        best_delta = delta;
                        best_u = ui;
                        best_v = vi;
                        found = true;
                    }
                }
            }
        }
        if (!found)
            break;
        ++iterations;
        std::int64_t u = in[best_u], v = out[best_v];
        // apply swap u -> v
        w.remove(u);
        w.add(v);
        edges += best_delta;
        for (std::int64_t x = 0; x < vcount; ++x) {
            if (g.adjacent_idx(u, x)) --deg[x];
        }
        for (std::int64_t x = 0; x < vcount; ++x) {
            if (g.adjacent_idx(v, x)) ++deg[x];
        }
        std::swap(in[best_u], out[best_v]);
    }
    return {edges, std::move(w), iterations};
}

} // namespace

SolveResult local_search_r(int n, std::int64_t l, const SearchConfig& cfg) {
    GraphParams p = graph_stats(n);
    if (l < 0 || l > p.vertex_count)
        throw std::invalid_argument("local_search_r: l outside [0, C(n,3)]");

    double t0 = now_s();
    Graph g(n);

    SolveResult res;
    res.n = n;
    res.l = l;
    res.status = SolveStatus::heuristic_upper;

    std::int64_t best = std::numeric_limits<std::int64_t>::max();
    VertexSubset best_w(n);
    std::int64_t iters = 0;

    int restarts = std::max(1, cfg.restarts);
    for (int r = 0; r < restarts; ++r) {
        VertexSubset start(n);
        if (r == 0 && l >= 1) {
            start = build_construction(n, l).trimmed;
        } else {
            std::mt19937_64 rng(cfg.seed + static_cast<std::uint64_t>(r));
            start = random_subset(n, p.vertex_count, l, rng);
        }
        DescentOutcome out = steepest_descent(g, start);
        iters += out.iterations;
        if (out.edges < best ||
            (out.edges == best && out.witness.lex_less(best_w))) {
            best = out.edges;
            best_w = out.witness;
        }
    }

    res.min_edges = best;
    res.witness = best_w;
    res.nodes_explored = iters;
    res.elapsed_s = now_s() - t0;
    return res;
}

} // namespace g31
