#include "dgs/error.hpp"
#include "dgs/oracle.hpp"

namespace dgs::oracle {

namespace {

void guard(const Graph& g, const char* who)
{
    if (g.order() > sachs_guard)
        throw PreconditionError(std::string(who) + ": n = " + std::to_string(g.order()) + " exceeds the guard of 14");
}

template <class Visit>
class ElementaryEnumerator {
public:
    ElementaryEnumerator(const Graph& g, Visit& visit, std::size_t max_vertices)
        : n_(g.order()), visit_(visit), limit_(max_vertices), used_(n_, 0)
    {
        adj_.resize(n_);
        for (std::size_t v = 0; v < n_; ++v)
            adj_[v] = g.neighbors(v);
        is_adj_.assign(n_ * n_, 0);
        for (std::size_t v = 0; v < n_; ++v)
            for (auto u : adj_[v])
                is_adj_[v * n_ + u] = 1;
    }

    void run() { descend(0); }

private:
    void descend(std::size_t v)
    {
        while (v < n_ && used_[v])
            ++v;
        if (v == n_) {
            visit_(cur_);
            return;
        }
        descend(v + 1);
        used_[v] = 1;
        if (cur_.vertex_count + 2 <= limit_) {
            for (auto u : adj_[v]) {
                if (u < v || used_[u]) continue;
                used_[u] = 1;
                push({false, {v, u}});
                descend(v + 1);
                pop();
                used_[u] = 0;
            }
        }
        if (cur_.vertex_count + 3 <= limit_) {
            path_.assign(1, v);
            extend_cycle(v);
        }
        used_[v] = 0;
    }

    // Paths v -> u1 -> ... -> uk over unused vertices above v; each closes into
    // a cycle once when u1 < uk.
    void extend_cycle(std::size_t root)
    {
        const std::size_t last = path_.back();
        for (auto u : adj_[last]) {
            if (u < root || used_[u]) continue;
            if (cur_.vertex_count + path_.size() + 1 > limit_) return;
            used_[u] = 1;
            path_.push_back(u);
            if (path_.size() >= 3 && path_[1] < u && is_adj_[u * n_ + root]) {
                const auto saved = path_;
                push({true, path_});
                descend(root + 1);
                pop();
                path_ = saved;
            }
            extend_cycle(root);
            path_.pop_back();
            used_[u] = 0;
        }
    }

    void push(ElementarySubgraph::Component c)
    {
        cur_.vertex_count += c.vertices.size();
        if (c.is_cycle) ++cur_.cycle_count;
        cur_.components.push_back(std::move(c));
    }

    void pop()
    {
        const auto& c = cur_.components.back();
        cur_.vertex_count -= c.vertices.size();
        if (c.is_cycle) --cur_.cycle_count;
        cur_.components.pop_back();
    }

    std::size_t n_;
    Visit& visit_;
    std::size_t limit_;
    std::vector<char> used_;
    std::vector<std::vector<std::size_t>> adj_;
    std::vector<char> is_adj_;
    std::vector<std::size_t> path_;
    ElementarySubgraph cur_;
};

// Sachs sums for all sizes up to `limit`, as word-size integers.
std::vector<std::int64_t> sachs_sums(const Graph& g, std::size_t limit)
{
    std::vector<std::int64_t> c(g.order() + 1, 0);
    auto visit = [&](const ElementarySubgraph& h) {
        const std::int64_t w = std::int64_t{1} << h.c();
        c[h.vertex_count] += (h.p() % 2) ? -w : w;
    };
    ElementaryEnumerator<decltype(visit)> e(g, visit, limit);
    e.run();
    return c;
}

} // namespace

void for_each_elementary_subgraph(const Graph& g, const std::function<void(const ElementarySubgraph&)>& visit)
{
    guard(g, "for_each_elementary_subgraph");
    auto fn = [&](const ElementarySubgraph& h) { visit(h); };
    ElementaryEnumerator<decltype(fn)> e(g, fn, g.order());
    e.run();
}

std::uint64_t count_elementary_subgraphs(const Graph& g, std::size_t i)
{
    guard(g, "count_elementary_subgraphs");
    std::uint64_t count = 0;
    auto fn = [&](const ElementarySubgraph& h) {
        if (h.vertex_count == i) ++count;
    };
    ElementaryEnumerator<decltype(fn)> e(g, fn, i);
    e.run();
    return count;
}

BigInt sachs_coefficient(const Graph& g, std::size_t i)
{
    guard(g, "sachs_coefficient");
    if (i < 1 || i > g.order()) throw PreconditionError("sachs_coefficient: index out of range");
    const auto c = sachs_sums(g, i);
    return BigInt(static_cast<long>(c[i]));
}

IntPolynomial charpoly_via_sachs(const Graph& g)
{
    guard(g, "charpoly_via_sachs");
    const std::size_t n = g.order();
    const auto c = sachs_sums(g, n);
    std::vector<BigInt> coeffs(n + 1);
    for (std::size_t i = 0; i <= n; ++i)
        coeffs[n - i] = BigInt(static_cast<long>(c[i]));
    return IntPolynomial(std::move(coeffs));
}

bool odd_index_parity_check(const Graph& g)
{
    guard(g, "odd_index_parity_check");
    const auto c = sachs_sums(g, g.order());
    for (std::size_t i = 1; i < c.size(); i += 2)
        if (c[i] % 2 != 0) return false;
    return true;
}

} // namespace dgs::oracle
