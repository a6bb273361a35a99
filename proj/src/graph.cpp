#include "dgs/graph.hpp"

#include "dgs/error.hpp"
#include "dgs/rng.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace dgs {

Graph::Graph(std::size_t n) : n_(n), stride_((n + 63) / 64), rows_(n * stride_, 0)
{
    if (n == 0 || n > max_vertices)
        throw PreconditionError("graph order must be in [1, 65536], got " + std::to_string(n));
}

void Graph::add_edge(std::size_t i, std::size_t j)
{
    if (i >= n_ || j >= n_)
        throw FormatError(FormatError::Kind::vertex_out_of_range,
                          "vertex index out of range: (" + std::to_string(i) + ", " + std::to_string(j) +
                              ") with n = " + std::to_string(n_));
    if (i == j)
        throw FormatError(FormatError::Kind::self_loop, "self-loop at vertex " + std::to_string(i));
    if (!adjacent(i, j)) {
        flip(i, j);
        flip(j, i);
    }
}

void Graph::toggle_edge(std::size_t i, std::size_t j)
{
    if (i >= n_ || j >= n_ || i == j)
        throw PreconditionError("toggle_edge: invalid pair");
    flip(i, j);
    flip(j, i);
}

Graph Graph::from_edges(std::size_t n, std::span<const std::pair<std::size_t, std::size_t>> edges)
{
    Graph g(n);
    for (auto [u, v] : edges)
        g.add_edge(u, v);
    return g;
}

Graph Graph::from_adjacency(const std::vector<std::vector<int>>& rows)
{
    Graph g(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != rows.size())
            throw PreconditionError("adjacency matrix is not square");
        if (rows[i][i] != 0)
            throw PreconditionError("adjacency matrix has a nonzero diagonal entry");
        for (std::size_t j = 0; j < rows.size(); ++j) {
            if (rows[i][j] != rows[j][i] || (rows[i][j] != 0 && rows[i][j] != 1))
                throw PreconditionError("adjacency matrix is not a symmetric 0/1 matrix");
            if (j > i && rows[i][j]) g.add_edge(i, j);
        }
    }
    return g;
}

Graph Graph::complete(std::size_t n)
{
    Graph g(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            g.add_edge(i, j);
    return g;
}

Graph Graph::cycle(std::size_t n)
{
    if (n < 3) throw PreconditionError("cycle needs at least 3 vertices");
    Graph g(n);
    for (std::size_t i = 0; i < n; ++i)
        g.add_edge(i, (i + 1) % n);
    return g;
}

Graph Graph::path(std::size_t n)
{
    Graph g(n);
    for (std::size_t i = 0; i + 1 < n; ++i)
        g.add_edge(i, i + 1);
    return g;
}

Graph Graph::star(std::size_t leaves)
{
    Graph g(leaves + 1);
    for (std::size_t i = 1; i <= leaves; ++i)
        g.add_edge(0, i);
    return g;
}

Graph Graph::disjoint_union(const Graph& a, const Graph& b)
{
    Graph g(a.order() + b.order());
    for (auto [u, v] : a.edges())
        g.add_edge(u, v);
    for (auto [u, v] : b.edges())
        g.add_edge(u + a.order(), v + a.order());
    return g;
}

Graph Graph::from_upper_mask(std::size_t n, std::uint64_t mask)
{
    if (n > 11) throw PreconditionError("from_upper_mask supports n <= 11");
    Graph g(n);
    std::size_t bit = 0;
    for (std::size_t j = 1; j < n; ++j)
        for (std::size_t i = 0; i < j; ++i, ++bit)
            if ((mask >> bit) & 1u) g.add_edge(i, j);
    return g;
}

std::vector<std::size_t> Graph::neighbors(std::size_t i) const
{
    std::vector<std::size_t> out;
    const auto r = row(i);
    for (std::size_t w = 0; w < r.size(); ++w) {
        std::uint64_t bits = r[w];
        while (bits) {
            out.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
            bits &= bits - 1;
        }
    }
    return out;
}

std::size_t Graph::edge_count() const
{
    std::size_t twice = 0;
    for (auto w : rows_)
        twice += static_cast<std::size_t>(std::popcount(w));
    return twice / 2;
}

std::vector<std::pair<std::size_t, std::size_t>> Graph::edges() const
{
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 0; i < n_; ++i)
        for (auto j : neighbors(i))
            if (j > i) out.emplace_back(i, j);
    return out;
}

Graph Graph::relabeled(std::span<const std::size_t> perm) const
{
    if (perm.size() != n_) throw PreconditionError("permutation size mismatch");
    Graph g(n_);
    for (auto [u, v] : edges())
        g.add_edge(perm[u], perm[v]);
    return g;
}

std::vector<std::size_t> degrees(const Graph& g)
{
    std::vector<std::size_t> d(g.order());
    for (std::size_t i = 0; i < g.order(); ++i) {
        std::size_t c = 0;
        for (auto w : g.row(i))
            c += static_cast<std::size_t>(std::popcount(w));
        d[i] = c;
    }
    return d;
}

bool is_connected(const Graph& g)
{
    const std::size_t n = g.order();
    std::vector<char> seen(n, 0);
    std::vector<std::size_t> stack{0};
    seen[0] = 1;
    std::size_t count = 1;
    while (!stack.empty()) {
        const auto v = stack.back();
        stack.pop_back();
        for (auto u : g.neighbors(v)) {
            if (!seen[u]) {
                seen[u] = 1;
                ++count;
                stack.push_back(u);
            }
        }
    }
    return count == n;
}

bool all_degrees_even(const Graph& g)
{
    const auto d = degrees(g);
    return std::all_of(d.begin(), d.end(), [](std::size_t x) { return x % 2 == 0; });
}

bool all_degrees_odd(const Graph& g)
{
    const auto d = degrees(g);
    return std::all_of(d.begin(), d.end(), [](std::size_t x) { return x % 2 == 1; });
}

bool is_eulerian(const Graph& g)
{
    return all_degrees_even(g) && is_connected(g);
}

Graph complement(const Graph& g)
{
    const std::size_t n = g.order();
    Graph c(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (!g.adjacent(i, j)) c.add_edge(i, j);
    return c;
}

Graph random_graph(std::size_t n, std::uint64_t seed)
{
    BitStream bits(mix_seed(seed, n));
    Graph g(n);
    for (std::size_t j = 1; j < n; ++j)
        for (std::size_t i = 0; i < j; ++i)
            if (bits.next_bit()) g.add_edge(i, j);
    return g;
}

Graph random_even_graph(std::size_t n, std::uint64_t seed, bool require_connected, unsigned max_retries)
{
    if (n == 0) throw PreconditionError("random_even_graph: n must be >= 1");
    BitStream bits(mix_seed(seed, n));
    for (unsigned attempt = 0; attempt < max_retries; ++attempt) {
        Graph g(n);
        for (std::size_t j = 1; j < n; ++j)
            for (std::size_t i = 0; i < j; ++i)
                if (bits.next_bit()) g.toggle_edge(i, j);

        const auto d = degrees(g);
        std::vector<std::size_t> odd;
        for (std::size_t v = 0; v < n; ++v)
            if (d[v] % 2) odd.push_back(v);
        for (std::size_t k = 0; k + 1 < odd.size(); k += 2)
            g.toggle_edge(odd[k], odd[k + 1]);

        if (!all_degrees_even(g)) throw InvariantError("random_even_graph: parity repair failed");
        if (!require_connected || is_connected(g)) return g;
    }
    throw HypothesisError("random_even_graph: no connected even-degree graph on " + std::to_string(n) +
                          " vertices after " + std::to_string(max_retries) + " retries");
}

namespace {

struct IsoSearch {
    const Graph& g;
    const Graph& h;
    const std::vector<std::size_t>& dg;
    const std::vector<std::size_t>& dh;
    std::vector<std::size_t> order; // vertices of g, highest degree first
    std::vector<std::size_t> map;   // g vertex -> h vertex
    std::vector<char> used;

    bool extend(std::size_t depth)
    {
        if (depth == order.size()) return true;
        const auto v = order[depth];
        for (std::size_t w = 0; w < h.order(); ++w) {
            if (used[w] || dh[w] != dg[v]) continue;
            bool ok = true;
            for (std::size_t k = 0; k < depth && ok; ++k) {
                const auto u = order[k];
                ok = g.adjacent(u, v) == h.adjacent(map[u], w);
            }
            if (!ok) continue;
            map[v] = w;
            used[w] = 1;
            if (extend(depth + 1)) return true;
            used[w] = 0;
        }
        return false;
    }
};

} // namespace

bool is_isomorphic_bruteforce(const Graph& g, const Graph& h)
{
    if (g.order() != h.order()) throw PreconditionError("is_isomorphic_bruteforce: orders differ");
    if (g.order() > isomorphism_guard)
        throw PreconditionError("is_isomorphic_bruteforce: n = " + std::to_string(g.order()) +
                                " exceeds the guard of " + std::to_string(isomorphism_guard));
    const auto dg = degrees(g);
    const auto dh = degrees(h);
    auto sg = dg, sh = dh;
    std::sort(sg.begin(), sg.end());
    std::sort(sh.begin(), sh.end());
    if (sg != sh) return false;

    IsoSearch s{g, h, dg, dh, {}, std::vector<std::size_t>(g.order()), std::vector<char>(g.order(), 0)};
    s.order.resize(g.order());
    std::iota(s.order.begin(), s.order.end(), std::size_t{0});
    std::stable_sort(s.order.begin(), s.order.end(), [&](auto a, auto b) { return dg[a] > dg[b]; });
    return s.extend(0);
}

} // namespace dgs
