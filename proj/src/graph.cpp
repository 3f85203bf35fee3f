#include "g31/graph.hpp"

#include <nlohmann/json.hpp>

#include <bit>
#include <stdexcept>

namespace g31 {

GraphParams graph_stats(int n) {
    if (n < 3)
        throw std::invalid_argument("graph_stats: n must be at least 3");
    GraphParams p;
    p.n = n;
    p.vertex_count = binomial(n, 3);
    p.degree = 3 * binomial(n - 3, 2);
    p.edge_count = p.degree * p.vertex_count / 2;
    return p;
}

VertexSubset::VertexSubset(int n) : n_(n), universe_(binomial(n, 3)) {
    bits_.assign((universe_ + 63) / 64, 0);
}

void VertexSubset::check(std::int64_t idx) const {
    if (idx < 0 || idx >= universe_)
        throw std::out_of_range("VertexSubset: index out of range");
}

bool VertexSubset::contains(std::int64_t idx) const {
    check(idx);
    return (bits_[idx >> 6] >> (idx & 63)) & 1;
}

void VertexSubset::add(std::int64_t idx) {
    check(idx);
    std::uint64_t& w = bits_[idx >> 6];
    std::uint64_t m = std::uint64_t{1} << (idx & 63);
    if (!(w & m)) { w |= m; ++count_; }
}

void VertexSubset::remove(std::int64_t idx) {
    check(idx);
    std::uint64_t& w = bits_[idx >> 6];
    std::uint64_t m = std::uint64_t{1} << (idx & 63);
    if (w & m) { w &= ~m; --count_; }
}

void VertexSubset::for_each(const std::function<void(std::int64_t)>& fn) const {
    for (std::size_t wi = 0; wi < bits_.size(); ++wi) {
        std::uint64_t w = bits_[wi];
        while (w) {
            int b = std::countr_zero(w);
            fn(static_cast<std::int64_t>(wi) * 64 + b);
            w &= w - 1;
        }
    }
}

std::vector<std::int64_t> VertexSubset::indices() const {
    std::vector<std::int64_t> out;
    out.reserve(count_);
    for_each([&](std::int64_t i) { out.push_back(i); });
    return out;
}

std::vector<Triple> VertexSubset::triples() const {
    std::vector<Triple> out;
    out.reserve(count_);
    for_each([&](std::int64_t i) { out.push_back(unrank_triple(i, n_)); });
    return out;
}

VertexSubset VertexSubset::complement() const {
    VertexSubset c(n_);
    for (std::size_t wi = 0; wi < bits_.size(); ++wi)
        c.bits_[wi] = ~bits_[wi];
    // clear padding past the universe
    std::int64_t tail = universe_ & 63;
    if (tail)
        c.bits_.back() &= (std::uint64_t{1} << tail) - 1;
    c.count_ = universe_ - count_;
    return c;
}

bool VertexSubset::lex_less(const VertexSubset& o) const {
    // first differing bit, lower index set in *this => lex smaller index list
    for (std::size_t wi = 0; wi < bits_.size(); ++wi) {
        std::uint64_t d = bits_[wi] ^ o.bits_[wi];
        if (d) {
            int b = std::countr_zero(d);
            return (bits_[wi] >> b) & 1;
        }
    }
    return false;
}

VertexSubset VertexSubset::from_triples(int n, const std::vector<Triple>& ts) {
    VertexSubset W(n);
    for (const Triple& t : ts)
        W.add_triple(t);
    return W;
}

Graph::Graph(int n) : n_(n), params_(graph_stats(n)) {
    verts_.reserve(params_.vertex_count);
    for (std::int64_t i = 0; i < params_.vertex_count; ++i)
        verts_.push_back(unrank_triple(i, n));
    if (params_.vertex_count <= kBitrowLimit) {
        std::int64_t words = (params_.vertex_count + 63) / 64;
        rows_.assign(params_.vertex_count, std::vector<std::uint64_t>(words, 0));
        for (std::int64_t i = 0; i < params_.vertex_count; ++i)
            for (std::int64_t j = i + 1; j < params_.vertex_count; ++j)
                if (adjacent(verts_[i], verts_[j])) {
                    rows_[i][j >> 6] |= std::uint64_t{1} << (j & 63);
                    rows_[j][i >> 6] |= std::uint64_t{1} << (i & 63);
                }
    }
}

bool Graph::adjacent_idx(std::int64_t i, std::int64_t j) const {
    if (!rows_.empty())
        return (rows_[i][j >> 6] >> (j & 63)) & 1;
    return adjacent(verts_[i], verts_[j]);
}

std::int64_t Graph::degree_in(const VertexSubset& W, std::int64_t idx) const {
    std::int64_t d = 0;
    if (!rows_.empty()) {
        const auto& r = rows_[idx];
        const auto& w = W.words();
        for (std::size_t k = 0; k < w.size(); ++k)
            d += std::popcount(r[k] & w[k]);
        return d;
    }
    const Triple& t = verts_[idx];
    W.for_each([&](std::int64_t j) {
        if (j != idx && adjacent(t, verts_[j])) ++d;
    });
    return d;
}

std::int64_t Graph::count_induced_edges_direct(const VertexSubset& W) const {
    std::int64_t twice = 0;
    if (!rows_.empty()) {
        W.for_each([&](std::int64_t i) { twice += degree_in(W, i); });
        return twice / 2;
    }
    auto ts = W.triples();
    std::int64_t edges = 0;
    for (std::size_t i = 0; i < ts.size(); ++i)
        for (std::size_t j = i + 1; j < ts.size(); ++j)
            if (adjacent(ts[i], ts[j])) ++edges;
    return edges;
}

std::int64_t Graph::count_induced_edges_dense(const VertexSubset& W) const {
    // |E(W)| = |E_n| - d_n * |W1| + |E(W1)|
    VertexSubset w1 = W.complement();
    return params_.edge_count - params_.degree * w1.size() +
           count_induced_edges_direct(w1);
}

std::int64_t Graph::count_induced_edges(const VertexSubset& W) const {
    if (W.size() > params_.vertex_count / 2)
        return count_induced_edges_dense(W);
    return count_induced_edges_direct(W);
}

EdgeCountReport Graph::complement_accounting(const VertexSubset& W) const {
    EdgeCountReport r;
    VertexSubset w1 = W.complement();
    r.edges_within = count_induced_edges(W);
    r.edges_complement = count_induced_edges(w1);
    r.edges_crossing = params_.edge_count - r.edges_within - r.edges_complement;
    r.degree_inequality_holds =
        r.edges_complement + r.edges_crossing <= params_.degree * w1.size();
    return r;
}

std::string subset_to_json(const VertexSubset& W) {
    nlohmann::json arr = nlohmann::json::array();
    for (const Triple& t : W.triples())
        arr.push_back({t.e[0], t.e[1], t.e[2]});
    return arr.dump();
}

VertexSubset subset_from_json(int n, const std::string& json_text) {
    nlohmann::json arr = nlohmann::json::parse(json_text);
    if (!arr.is_array())
        throw std::invalid_argument("subset_from_json: expected array");
    VertexSubset W(n);
    for (const auto& item : arr) {
        if (!item.is_array() || item.size() != 3)
            throw std::invalid_argument("subset_from_json: expected 3-element arrays");
        Triple t{{item[0].get<int>(), item[1].get<int>(), item[2].get<int>()}};
        if (!valid_triple(t, n))
            throw std::invalid_argument("subset_from_json: malformed triple");
        W.add_triple(t);
    }
    return W;
}

std::string subset_to_hex(const VertexSubset& W) {
    std::int64_t digits = (W.universe_size() + 3) / 4;
    std::string out(digits, '0');
    const auto& words = W.words();
    for (std::int64_t d = 0; d < digits; ++d) {
        std::int64_t bit = d * 4;
        int nib = static_cast<int>((words[bit >> 6] >> (bit & 63)) & 0xF);
        out[digits - 1 - d] = "0123456789abcdef"[nib];
    }
    return out;
}

VertexSubset subset_from_hex(int n, const std::string& hex) {
    VertexSubset W(n);
    std::int64_t digits = (W.universe_size() + 3) / 4;
    if (static_cast<std::int64_t>(hex.size()) != digits)
        throw std::invalid_argument("subset_from_hex: wrong digit count for n");
    for (std::int64_t d = 0; d < digits; ++d) {
        char c = hex[digits - 1 - d];
        int nib;
        if (c >= '0' && c <= '9') nib = c - '0';
        else if (c >= 'a' && c <= 'f') nib = c - 'a' + 10;
        else if (c >= 'A' && c <= 'F') nib = c - 'A' + 10;
        else throw std::invalid_argument("subset_from_hex: invalid digit");
        for (int b = 0; b < 4; ++b)
            if (nib & (1 << b)) {
                std::int64_t idx = d * 4 + b;
                if (idx >= W.universe_size())
                    throw std::invalid_argument("subset_from_hex: bit past universe");
                W.add(idx);
            }
    }
    return W;
}

} // namespace g31
