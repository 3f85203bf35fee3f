#include "g31/independence.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <stdexcept>

namespace g31 {

bool is_independent(const Graph& g, const VertexSubset& W) {
    return g.count_induced_edges(W) == 0;
}

namespace {

using Words = std::vector<std::uint64_t>;

std::int64_t popcount_words(const Words& w) {
    std::int64_t c = 0;
    for (auto x : w) c += std::popcount(x);
    return c;
}

int lowest_bit(const Words& w) {
    for (std::size_t i = 0; i < w.size(); ++i)
        if (w[i])
            return static_cast<int>(i) * 64 + std::countr_zero(w[i]);
    return -1;
}

// Greedy clique cover of the candidate pool; its size upper-bounds the
// independence number of the pool (an independent set meets each clique at
// most once).
int clique_cover_size(const Graph& g, const Words& pool) {
    std::vector<Words> common;  // vertices adjacent to every member of each clique
    int count = 0;
    Words p = pool;
    for (std::size_t wi = 0; wi < p.size(); ++wi) {
        std::uint64_t w = p[wi];
        while (w) {
            int b = std::countr_zero(w);
            w &= w - 1;
            std::int64_t v = static_cast<std::int64_t>(wi) * 64 + b;
            bool placed = false;
            for (std::size_t c = 0; c < common.size(); ++c) {
                if ((common[c][wi] >> b) & 1) {
                    for (std::size_t k = 0; k < common[c].size(); ++k)
                        common[c][k] &= g.row(v)[k];
                    placed = true;
                    break;
                }
            }
            if (!placed) {
                common.push_back(g.row(v));
                ++count;
            }
        }
    }
    return count;
}

struct AlphaSearch {
    const Graph& g;
    std::int64_t budget;  // -1 = unlimited
    std::int64_t nodes = 0;
    bool exhausted_budget = false;
    std::int64_t best = -1;
    Words best_set;
    Words cur;

    explicit AlphaSearch(const Graph& graph, std::int64_t node_budget)
        : g(graph), budget(node_budget),
          cur((graph.params().vertex_count + 63) / 64, 0) {}

    void dfs(Words pool, std::int64_t chosen) {
        ++nodes;
        if (budget >= 0 && nodes > budget) { exhausted_budget = true; return; }
        if (chosen > best) {
            best = chosen;
            best_set = cur;
        }
        std::int64_t pool_size = popcount_words(pool);
        if (pool_size == 0)
            return;
        if (chosen + pool_size <= best)
            return;
        if (chosen + clique_cover_size(g, pool) <= best)
            return;
        int v = lowest_bit(pool);
        // include v
        Words sub = pool;
        sub[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
        const auto& row = g.row(v);
        for (std::size_t k = 0; k < sub.size(); ++k)
            sub[k] &= ~row[k];
        cur[v >> 6] |= std::uint64_t{1} << (v & 63);
        dfs(sub, chosen + 1);
        cur[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
        if (exhausted_budget) return;
        // exclude v
        pool[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
        dfs(std::move(pool), chosen);
    }
};

} // namespace

AlphaResult independence_number(const Graph& g, std::int64_t node_budget) {
    if (!g.has_rows())
        throw std::invalid_argument("independence_number: requires n <= 30 (adjacency bitrows)");
    std::int64_t vc = g.params().vertex_count;
    Words full((vc + 63) / 64, ~std::uint64_t{0});
    std::int64_t tail = vc & 63;
    if (tail) full.back() &= (std::uint64_t{1} << tail) - 1;

    AlphaSearch s(g, node_budget);
    s.dfs(full, 0);

    AlphaResult r;
    r.n = g.ground_set();
    r.alpha = s.best;
    r.proven = !s.exhausted_budget;
    r.nodes_explored = s.nodes;
    VertexSubset w(g.ground_set());
    for (std::size_t wi = 0; wi < s.best_set.size(); ++wi) {
        std::uint64_t x = s.best_set[wi];
        while (x) {
            int b = std::countr_zero(x);
            x &= x - 1;
            w.add(static_cast<std::int64_t>(wi) * 64 + b);
        }
    }
    r.witness = w;
    return r;
}

namespace {
void brute_dfs(const Graph& g, std::int64_t idx, Words& cur, std::int64_t chosen,
               std::int64_t& best, std::vector<VertexSubset>* collect) {
    std::int64_t vc = g.params().vertex_count;
    if (collect || chosen > best) {
        best = std::max(best, chosen);
        if (collect) {
            VertexSubset w(g.ground_set());
            for (std::size_t wi = 0; wi < cur.size(); ++wi) {
                std::uint64_t x = cur[wi];
                while (x) {
                    int b = std::countr_zero(x);
                    x &= x - 1;
                    w.add(static_cast<std::int64_t>(wi) * 64 + b);
                }
            }
            collect->push_back(std::move(w));
        }
    }
    for (std::int64_t v = idx; v < vc; ++v) {
        const auto& row = g.row(v);
        bool clash = false;
        for (std::size_t k = 0; k < cur.size(); ++k)
            if (row[k] & cur[k]) { clash = true; break; }
        if (clash) continue;
        cur[v >> 6] |= std::uint64_t{1} << (v & 63);
        brute_dfs(g, v + 1, cur, chosen + 1, best, collect);
        cur[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
    }
}
} // namespace

std::int64_t brute_force_alpha(const Graph& g) {
    if (!g.has_rows())
        throw std::invalid_argument("brute_force_alpha: requires adjacency bitrows");
    Words cur((g.params().vertex_count + 63) / 64, 0);
    std::int64_t best = 0;
    brute_dfs(g, 0, cur, 0, best, nullptr);
    return best;
}

std::vector<VertexSubset> all_independent_sets(const Graph& g) {
    if (!g.has_rows())
        throw std::invalid_argument("all_independent_sets: requires adjacency bitrows");
    Words cur((g.params().vertex_count + 63) / 64, 0);
    std::int64_t best = 0;
    std::vector<VertexSubset> out;
    brute_dfs(g, 0, cur, 0, best, &out);
    return out;
}

VertexSubset generate_family(const FamilyType& ft, int n) {
    VertexSubset W(n);
    switch (ft.kind) {
    case FamilyKind::type1: {
        if (ft.params.size() != 2)
            throw std::invalid_argument("generate_family: type1 needs a pair {i,j}");
        int i = ft.params[0], j = ft.params[1];
        if (i == j || i < 1 || j < 1 || i > n || j > n)
            throw std::invalid_argument("generate_family: bad type1 pair");
        for (int x = 1; x <= n; ++x) {
            if (x == i || x == j) continue;
            std::array<int, 3> e{i, j, x};
            std::sort(e.begin(), e.end());
            W.add_triple(Triple{e});
        }
        break;
    }
    case FamilyKind::type2: {
        if (ft.params.size() != 4)
            throw std::invalid_argument("generate_family: type2 needs a 4-set");
        std::vector<int> s = ft.params;
        std::sort(s.begin(), s.end());
        if (std::adjacent_find(s.begin(), s.end()) != s.end() || s.front() < 1 || s.back() > n)
            throw std::invalid_argument("generate_family: bad type2 4-set");
        for (int skip = 0; skip < 4; ++skip) {
            std::array<int, 3> e{};
            int k = 0;
            for (int p = 0; p < 4; ++p)
                if (p != skip) e[k++] = s[p];
            W.add_triple(Triple{e});
        }
        break;
    }
    case FamilyKind::type3: {
        for (int b = 0; b + 3 <= n; b += 3)
            W.add_triple(Triple{{b + 1, b + 2, b + 3}});
        break;
    }
    }
    return W;
}

namespace {
std::vector<int> support_of(const std::vector<Triple>& ts) {
    std::set<int> s;
    for (const Triple& t : ts)
        s.insert(t.e.begin(), t.e.end());
    return {s.begin(), s.end()};
}
} // namespace

bool validate_decomposition(const VertexSubset& U, const Decomposition& d,
                            std::string* why) {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    std::multiset<Triple> input;
    for (const Triple& t : U.triples())
        input.insert(t);
    std::multiset<Triple> covered;
    std::vector<std::vector<int>> supports;
    for (const auto& part : d.parts) {
        for (const Triple& t : part.members)
            covered.insert(t);
        switch (part.type.kind) {
        case FamilyKind::type1: {
            if (part.members.size() < 3)
                return fail("type1 part with fewer than 3 members");
            if (part.type.params.size() != 2)
                return fail("type1 part without pair parameters");
            for (const Triple& t : part.members)
                if (std::find(t.e.begin(), t.e.end(), part.type.params[0]) == t.e.end() ||
                    std::find(t.e.begin(), t.e.end(), part.type.params[1]) == t.e.end())
                    return fail("type1 member missing the shared pair");
            break;
        }
        case FamilyKind::type2: {
            if (part.members.size() < 2)
                return fail("type2 part with fewer than 2 members");
            if (part.type.params.size() != 4)
                return fail("type2 part without 4-set parameters");
            for (const Triple& t : part.members)
                for (int e : t.e)
                    if (std::find(part.type.params.begin(), part.type.params.end(), e) ==
                        part.type.params.end())
                        return fail("type2 member outside the 4-set");
            break;
        }
        case FamilyKind::type3: {
            for (std::size_t a = 0; a < part.members.size(); ++a)
                for (std::size_t b = a + 1; b < part.members.size(); ++b)
                    if (intersection_size(part.members[a], part.members[b]) != 0)
                        return fail("type3 members not pairwise disjoint");
            break;
        }
        }
        supports.push_back(support_of(part.members));
    }
    if (covered != input)
        return fail("parts do not partition the input set");
    for (std::size_t a = 0; a < supports.size(); ++a)
        for (std::size_t b = a + 1; b < supports.size(); ++b) {
            std::vector<int> inter;
            std::set_intersection(supports[a].begin(), supports[a].end(),
                                  supports[b].begin(), supports[b].end(),
                                  std::back_inserter(inter));
            if (!inter.empty())
                return fail("part supports overlap");
        }
    return true;
}

Decomposition decompose_claim1(const Graph& g, const VertexSubset& U) {
    Decomposition d;
    if (!is_independent(g, U)) {
        d.failure = "input set is not independent";
        return d;
    }
    std::vector<Triple> members = U.triples();
    std::vector<bool> used(members.size(), false);

    // type1: pairs shared by at least 3 members
    std::map<std::pair<int, int>, std::vector<std::size_t>> by_pair;
    for (std::size_t m = 0; m < members.size(); ++m) {
        const auto& e = members[m].e;
        by_pair[{e[0], e[1]}].push_back(m);
        by_pair[{e[0], e[2]}].push_back(m);
        by_pair[{e[1], e[2]}].push_back(m);
    }
    for (const auto& [pr, idxs] : by_pair) {
        std::vector<std::size_t> free;
        for (std::size_t m : idxs)
            if (!used[m]) free.push_back(m);
        if (free.size() < 3) continue;
        DecompositionPart part;
        part.type = {FamilyKind::type1, {pr.first, pr.second}};
        for (std::size_t m : free) {
            part.members.push_back(members[m]);
            used[m] = true;
        }
        part.support = support_of(part.members);
        d.parts.push_back(std::move(part));
    }

    // type2: groups of remaining members related by |a ∩ b| = 2 (union <= 4)
    for (std::size_t m = 0; m < members.size(); ++m) {
        if (used[m]) continue;
        std::vector<std::size_t> group{m};
        for (std::size_t k = m + 1; k < members.size(); ++k) {
            if (used[k]) continue;
            bool related = false;
            for (std::size_t gm : group)
                if (intersection_size(members[gm], members[k]) == 2) { related = true; break; }
            if (related) group.push_back(k);
        }
        if (group.size() < 2) continue;
        DecompositionPart part;
        for (std::size_t gm : group) {
            part.members.push_back(members[gm]);
            used[gm] = true;
        }
        part.support = support_of(part.members);
        if (part.support.size() > 4) {
            d.failure = "type2 candidate group spans more than 4 elements";
            return d;
        }
        std::vector<int> four = part.support;
        // a group lying in only 3 elements is impossible for distinct triples,
        // but the 4-set parameter must have exactly 4 entries
        for (int x = 1; four.size() < 4 && x <= g.ground_set(); ++x)
            if (std::find(four.begin(), four.end(), x) == four.end())
                four.push_back(x);
        std::sort(four.begin(), four.end());
        part.type = {FamilyKind::type2, four};
        d.parts.push_back(std::move(part));
    }

    // type3: everything left (pairwise disjoint, singletons included)
    DecompositionPart rest;
    rest.type = {FamilyKind::type3, {}};
    for (std::size_t m = 0; m < members.size(); ++m)
        if (!used[m]) rest.members.push_back(members[m]);
    if (!rest.members.empty()) {
        rest.support = support_of(rest.members);
        d.parts.push_back(std::move(rest));
    }

    std::string why;
    if (!validate_decomposition(U, d, &why)) {
        d.parts.clear();
        d.failure = "greedy decomposition failed validation: " + why;
        return d;
    }
    d.ok = true;
    return d;
}

} // namespace g31
