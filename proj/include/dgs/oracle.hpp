#pragma once

#include "dgs/exact_linalg.hpp"
#include "dgs/graph.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace dgs::oracle {

/// Vertex-disjoint union of single edges and cycles (length ≥ 3).
struct ElementarySubgraph {
    struct Component {
        bool is_cycle = false;
        std::vector<std::size_t> vertices; ///< in traversal order for cycles
    };
    std::vector<Component> components;
    std::size_t vertex_count = 0;
    std::size_t cycle_count = 0;

    std::size_t p() const noexcept { return components.size(); }
    std::size_t c() const noexcept { return cycle_count; }
};

inline constexpr std::size_t sachs_guard = 14;

/// Visits every elementary subgraph exactly once (the empty one included).
/// Components are chosen for the lowest undecided vertex: leave it out, pair
/// it with a higher neighbour, or close a cycle through higher vertices.
void for_each_elementary_subgraph(const Graph& g, const std::function<void(const ElementarySubgraph&)>& visit);

/// Number of elementary subgraphs on exactly i vertices.
std::uint64_t count_elementary_subgraphs(const Graph& g, std::size_t i);

/// c_i = sum over elementary subgraphs H on i vertices of (-1)^{p(H)} 2^{c(H)}.
/// 1 ≤ i ≤ n ≤ 14.
BigInt sachs_coefficient(const Graph& g, std::size_t i);

/// x^n + sum_i c_i x^{n-i} from the Sachs expansion. n ≤ 14.
IntPolynomial charpoly_via_sachs(const Graph& g);

/// Every odd-index Sachs coefficient is even. n ≤ 14.
bool odd_index_parity_check(const Graph& g);

// --- exhaustive generalized-cospectral mate search --------------------------

inline constexpr std::size_t mate_search_guard = 7;

enum class Bucketing { generalized, cospectral_only };

struct MateSearchOptions {
    Bucketing bucketing = Bucketing::generalized;
    /// Only graphs passing the filter are bucketed; empty means all.
    std::function<bool(const Graph&)> filter;
    unsigned workers = 1;
};

struct MateSearchResult {
    std::size_t n = 0;
    std::uint64_t labeled_graphs = 0;   ///< graphs that passed the filter
    std::uint64_t bucketed_graphs = 0;  ///< sum of bucket populations (== labeled_graphs)
    std::size_t buckets = 0;
    /// One graph per isomorphism class, lowest upper-triangle mask first.
    std::vector<Graph> classes;
    /// Non-isomorphic bucket-mates, each unordered pair once.
    std::vector<std::pair<Graph, Graph>> pairs;
};

/// Enumerates all labeled graphs on n ≤ 7 vertices by upper-triangle mask,
/// buckets them by (char poly of G, char poly of the complement) and reports
/// non-isomorphic bucket-mates. Output does not depend on the worker count.
MateSearchResult exhaustive_mate_search(std::size_t n, const MateSearchOptions& options = {});

// --- property harness --------------------------------------------------------

enum class Suite { thm4, thm9, remark2, eq2, valuation, snf_shape };

const char* to_string(Suite s) noexcept;
Suite suite_from_string(const std::string& s);

struct HarnessOptions {
    std::size_t samples = 500;
    std::uint64_t seed = 7;
    unsigned workers = 1;
};

struct HarnessReport {
    Suite suite = Suite::thm4;
    std::uint64_t seed = 0;
    std::size_t samples = 0;    ///< graphs drawn
    std::size_t applicable = 0; ///< graphs meeting the suite's hypothesis
    std::size_t passed = 0;
    std::size_t failed = 0;
    std::size_t skipped = 0;    ///< samples - applicable
    std::size_t min_n = 0, max_n = 0;
    std::size_t even_n = 0;     ///< applicable graphs of even order
    /// graph6 strings of failing graphs (first 20).
    std::vector<std::string> counterexamples;

    bool ok() const noexcept { return failed == 0; }
};

/// Draws seeded random even-degree graphs and checks the suite's invariant:
///   thm4       v(A) = 0 over GF(2) and minpoly | v            n in [2, 64]
///   thm9       odd n, k ≥ 3 odd: A^{(k-1)/2} phi1(A) = 0       n in [3, 63]
///   remark2    odd n, k = 1: phi1(A) = J and rank2 A = n - 1   n in [3, 63]
///   eq2        exact mod-4 congruence                          n in [1, 32]
///   valuation  det W != 0: v2 ≥ floor((3n-3)/2); even n: What   n in [3, 32]
///              integral with det W = 2^{3n/2-2} det What
///   snf-shape  certified members: SNF templates match          n in [3, 20]
/// For valuation and snf-shape each sample redraws until it finds an
/// applicable graph (at most 1000 and 400 draws); a sample that never does
/// counts as skipped. For thm9/remark2 every other draw appends one to four
/// isolated vertices.
HarnessReport property_harness(Suite suite, const HarnessOptions& options = {});

} // namespace dgs::oracle
