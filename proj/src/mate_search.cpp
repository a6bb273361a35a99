#include "dgs/error.hpp"
#include "dgs/oracle.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <map>
#include <thread>

namespace dgs::oracle {

namespace {

using Key = std::array<std::int64_t, 16>;

struct Bucket {
    std::uint64_t population = 0;
    std::vector<std::uint64_t> reps; ///< one mask per isomorphism class, ascending
};

using BucketMap = std::map<Key, Bucket>;

Key bucket_key(const Graph& g, Bucketing bucketing)
{
    Key key{};
    const auto p = char_poly_small(g);
    std::copy(p.begin(), p.end(), key.begin());
    if (bucketing == Bucketing::generalized) {
        const auto q = char_poly_small(complement(g));
        std::copy(q.begin(), q.end(), key.begin() + 8);
    }
    return key;
}

void add_representative(Bucket& b, std::size_t n, std::uint64_t mask)
{
    const Graph g = Graph::from_upper_mask(n, mask);
    for (auto r : b.reps)
        if (is_isomorphic_bruteforce(g, Graph::from_upper_mask(n, r))) return;
    b.reps.push_back(mask);
}

} // namespace

MateSearchResult exhaustive_mate_search(std::size_t n, const MateSearchOptions& options)
{
    if (n > mate_search_guard)
        throw PreconditionError("exhaustive_mate_search: n = " + std::to_string(n) + " exceeds the guard of 7");

    const unsigned bits = static_cast<unsigned>(n * (n - (n > 0)) / 2);
    const std::uint64_t total = std::uint64_t{1} << bits;
    // The chunk layout is fixed, so the merged result does not depend on how
    // many workers pick chunks.
    const std::size_t chunk_count = std::min<std::uint64_t>(total, 256);
    const std::uint64_t chunk_size = (total + chunk_count - 1) / chunk_count;

    std::vector<BucketMap> partial(chunk_count);
    std::vector<std::uint64_t> admitted(chunk_count, 0);
    std::atomic<std::size_t> next{0};

    auto work = [&] {
        for (std::size_t c; (c = next.fetch_add(1)) < chunk_count;) {
            const std::uint64_t lo = c * chunk_size;
            const std::uint64_t hi = std::min(total, lo + chunk_size);
            auto& buckets = partial[c];
            for (std::uint64_t mask = lo; mask < hi; ++mask) {
                const Graph g = Graph::from_upper_mask(n, mask);
                if (options.filter && !options.filter(g)) continue;
                ++admitted[c];
                auto& b = buckets[bucket_key(g, options.bucketing)];
                ++b.population;
                add_representative(b, n, mask);
            }
        }
    };

    const unsigned workers = std::max(1u, options.workers);
    if (workers == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w)
            pool.emplace_back(work);
        for (auto& t : pool)
            t.join();
    }

    BucketMap merged;
    MateSearchResult result;
    result.n = n;
    for (std::size_t c = 0; c < chunk_count; ++c) {
        result.labeled_graphs += admitted[c];
        for (auto& [key, b] : partial[c]) {
            auto& m = merged[key];
            m.population += b.population;
            for (auto r : b.reps)
                add_representative(m, n, r);
        }
        partial[c].clear();
    }

    result.buckets = merged.size();
    std::vector<std::uint64_t> class_masks;
    std::vector<std::pair<std::uint64_t, std::uint64_t>> pair_masks;
    for (const auto& [key, b] : merged) {
        result.bucketed_graphs += b.population;
        class_masks.insert(class_masks.end(), b.reps.begin(), b.reps.end());
        for (std::size_t i = 0; i < b.reps.size(); ++i)
            for (std::size_t j = i + 1; j < b.reps.size(); ++j)
                pair_masks.emplace_back(std::min(b.reps[i], b.reps[j]), std::max(b.reps[i], b.reps[j]));
    }
    std::sort(class_masks.begin(), class_masks.end());
    std::sort(pair_masks.begin(), pair_masks.end());
    for (auto m : class_masks)
        result.classes.push_back(Graph::from_upper_mask(n, m));
    for (auto [a, b] : pair_masks)
        result.pairs.emplace_back(Graph::from_upper_mask(n, a), Graph::from_upper_mask(n, b));

    if (result.bucketed_graphs != result.labeled_graphs)
        throw InvariantError("exhaustive_mate_search: bucket populations do not sum to the graph count");
    return result;
}

} // namespace dgs::oracle
