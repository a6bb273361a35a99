#include "dgs/error.hpp"
#include "dgs/graph.hpp"
#include "support.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>

using namespace dgs;

namespace {

bool well_formed(const Graph& g)
{
    for (std::size_t i = 0; i < g.order(); ++i) {
        if (g.adjacent(i, i)) return false;
        for (std::size_t j = 0; j < g.order(); ++j)
            if (g.adjacent(i, j) != g.adjacent(j, i)) return false;
    }
    return true;
}

FormatError::Kind kind_of(auto&& fn)
{
    try {
        fn();
    } catch (const FormatError& e) {
        return e.kind();
    }
    FAIL("no FormatError thrown");
    return FormatError::Kind::io;
}

} // namespace

TEST_CASE("factories")
{
    CHECK(Graph::complete(5).edge_count() == 10);
    CHECK(Graph::cycle(6).edge_count() == 6);
    CHECK(Graph::path(4).edge_count() == 3);
    CHECK(Graph::star(4).order() == 5);
    CHECK(degrees(Graph::star(4))[0] == 4);
    const auto u = Graph::disjoint_union(Graph::cycle(4), Graph(1));
    CHECK(u.order() == 5);
    CHECK(u.edge_count() == 4);
    CHECK(!is_connected(u));
    for (const auto& g : {Graph::complete(7), Graph::cycle(9), u, Graph::star(3)})
        CHECK(well_formed(g));
}

TEST_CASE("add_edge rejects loops and out-of-range vertices")
{
    Graph g(4);
    CHECK(kind_of([&] { g.add_edge(2, 2); }) == FormatError::Kind::self_loop);
    CHECK(kind_of([&] { g.add_edge(0, 4); }) == FormatError::Kind::vertex_out_of_range);
}

TEST_CASE("upper mask order matches graph6")
{
    // bit 0 is (0,1), bit 1 is (0,2), bit 2 is (1,2)
    CHECK(Graph::from_upper_mask(3, 0b001).adjacent(0, 1));
    CHECK(Graph::from_upper_mask(3, 0b010).adjacent(0, 2));
    CHECK(Graph::from_upper_mask(3, 0b100).adjacent(1, 2));
    CHECK(write_graph6(Graph::from_upper_mask(3, 0b111)) == "Bw");
}

TEST_CASE("graph6 known strings")
{
    CHECK(write_graph6(Graph::complete(4)) == "C~");
    CHECK(parse_graph6("C~") == Graph::complete(4));
    CHECK(parse_graph6(">>graph6<<C~\n") == Graph::complete(4));
    // n = 100 uses the four-byte size form
    const auto big = Graph::cycle(100);
    const auto s = write_graph6(big);
    CHECK(s[0] == '~');
    CHECK(parse_graph6(s) == big);
}

TEST_CASE("graph6 errors")
{
    CHECK(kind_of([] { parse_graph6("C"); }) == FormatError::Kind::truncated);
    CHECK(kind_of([] { parse_graph6("C~~"); }) == FormatError::Kind::trailing_data);
    CHECK(kind_of([] { parse_graph6("C\x7f"); }) == FormatError::Kind::bad_character);
    // n = 2 has one data bit; the five padding bits after it must be zero
    CHECK(kind_of([] { parse_graph6("A\x41"); }) == FormatError::Kind::bad_character);
    CHECK(kind_of([] { parse_graph6("~~????????"); }) == FormatError::Kind::size_limit);
}

TEST_CASE("edge list parsing")
{
    const auto g = parse_edge_list("# triangle\n3\n0 1\n1 2 # inline\n2 0\n");
    CHECK(g == Graph::complete(3));
    CHECK(kind_of([] { parse_edge_list("3\n0 3\n"); }) == FormatError::Kind::vertex_out_of_range);
    CHECK(kind_of([] { parse_edge_list("3\n1 1\n"); }) == FormatError::Kind::self_loop);
    CHECK(kind_of([] { parse_edge_list("3\n0 1\n1 0\n"); }) == FormatError::Kind::duplicate_edge);
    CHECK(kind_of([] { parse_edge_list("3\n0 x\n"); }) == FormatError::Kind::bad_token);
    CHECK(kind_of([] { parse_edge_list("3\n0\n"); }) == FormatError::Kind::bad_token);
    CHECK(kind_of([] { parse_edge_list("three\n"); }) == FormatError::Kind::malformed_header);
}

TEST_CASE("format sniffing")
{
    CHECK(sniff_format("3\n0 1\n") == GraphFormat::edge_list);
    CHECK(sniff_format("C~") == GraphFormat::graph6);
    CHECK(sniff_format(">>graph6<<C~") == GraphFormat::graph6);
}

TEST_CASE("round trips on random graphs")
{
    for (std::size_t n = 1; n <= 64; ++n) {
        const auto g = random_graph(n, 1000 + n);
        CHECK(well_formed(g));
        CHECK(parse_graph6(write_graph6(g)) == g);
        CHECK(parse_edge_list(write_edge_list(g)) == g);
    }
}

TEST_CASE("complement")
{
    for (std::size_t n = 1; n <= 30; ++n) {
        const auto g = random_graph(n, n);
        const auto c = complement(g);
        CHECK(well_formed(c));
        CHECK(complement(c) == g);
        const auto dg = degrees(g), dc = degrees(c);
        for (std::size_t v = 0; v < n; ++v)
            CHECK(dc[v] == n - 1 - dg[v]);
    }
}

TEST_CASE("random even graphs")
{
    for (std::size_t n = 1; n <= 64; ++n) {
        const auto g = random_even_graph(n, 17 * n, false);
        CHECK(well_formed(g));
        CHECK(all_degrees_even(g));
        CHECK(random_even_graph(n, 17 * n, false) == g);
        if (n >= 3) CHECK(is_eulerian(random_even_graph(n, n, true)));
    }
    CHECK_THROWS_AS(random_even_graph(2, 1, true), HypothesisError);
}

TEST_CASE("Eulerian and degree predicates")
{
    CHECK(is_eulerian(Graph::cycle(5)));
    CHECK(!is_eulerian(Graph::path(3)));
    CHECK(!is_eulerian(Graph::disjoint_union(Graph::cycle(3), Graph::cycle(3))));
    CHECK(all_degrees_odd(Graph::complete(4)));
    CHECK(!all_degrees_odd(Graph::complete(5)));
}

TEST_CASE("brute-force isomorphism")
{
    CHECK(!is_isomorphic_bruteforce(Graph::cycle(6), Graph::disjoint_union(Graph::cycle(3), Graph::cycle(3))));
    std::mt19937_64 rng(3);
    for (std::size_t n = 1; n <= 10; ++n) {
        const auto g = random_graph(n, 77 + n);
        std::vector<std::size_t> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        const auto h = g.relabeled(perm);
        CHECK(is_isomorphic_bruteforce(g, h));
        CHECK(h.edge_count() == g.edge_count());
        if (g.edge_count() > 0 && g.edge_count() < n * (n - 1) / 2) {
            auto k = h;
            const auto e = g.edges().front();
            k.toggle_edge(e.first, e.second);
            CHECK(!is_isomorphic_bruteforce(g, k));
        }
    }
    CHECK_THROWS_AS(is_isomorphic_bruteforce(Graph(11), Graph(11)), PreconditionError);
}

TEST_CASE("example fixtures agree across formats")
{
    const auto g = parse_graph6(testing::fixture("example1-G.g6"));
    const auto h = parse_graph6(testing::fixture("example1-H.g6"));
    CHECK(parse_edge_list(testing::fixture("example1-G.edges")) == g);
    CHECK(parse_edge_list(testing::fixture("example1-H.edges")) == h);
    CHECK(g.edge_count() == 17);
    CHECK(h.edge_count() == 17);
    CHECK(is_eulerian(g));
    CHECK(!is_eulerian(h));
}
