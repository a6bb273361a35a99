#include "dgs/certify.hpp"
#include "dgs/error.hpp"
#include "dgs/f2.hpp"
#include "dgs/walk.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace dgs;

namespace {

BigIntMatrix walks_oracle(const Graph& g)
{
    const auto n = g.order();
    BigIntMatrix w(n, n);
    std::vector<BigInt> v(n, 1);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < n; ++i)
            w(i, j) = v[i];
        std::vector<BigInt> next(n, 0);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < n; ++k)
                if (g.adjacent(i, k)) next[i] += v[k];
        v = std::move(next);
    }
    return w;
}

F2Matrix columns_mod2(const BigIntMatrix& m, std::size_t count)
{
    F2Matrix f(m.rows(), count);
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < count; ++j)
            f.set(i, j, mpz_odd_p(m(i, j).get_mpz_t()));
    return f;
}

} // namespace

TEST_CASE("walk matrix counts walks")
{
    for (std::size_t n = 1; n <= 20; ++n) {
        const auto g = random_graph(n, 3 * n);
        CHECK(walk_matrix(g) == walks_oracle(g));
    }
    const auto w = walk_matrix(Graph::complete(3));
    CHECK(w(0, 1) == 2);
    CHECK(w(0, 2) == 4);
}

TEST_CASE("reduced walk matrix and determinant relation")
{
    for (std::size_t n = 1; n <= 24; ++n) {
        const auto g = random_even_graph(n, 5 * n, false);
        const auto w = walk_matrix(g);
        const auto wbar = reduced_walk_matrix(g);
        for (std::size_t i = 0; i < n; ++i) {
            CHECK(wbar(i, 0) == w(i, 0));
            for (std::size_t j = 1; j < n; ++j)
                CHECK(2 * wbar(i, j) == w(i, j));
        }
        CHECK(determinant(w) == (BigInt(1) << (n - 1)) * determinant(wbar));
        CHECK(f2_rank(reduce_mod2(w)) == 1);
    }
    CHECK_THROWS_AS(reduced_walk_matrix(Graph::path(3)), PreconditionError);
}

TEST_CASE("integer lift reduces to the GF(2) square root")
{
    for (std::size_t n = 1; n <= 30; ++n) {
        const auto g = random_even_graph(n, 7 * n, false);
        const auto phi = char_poly(g);
        CHECK(poly_mod2(varphi_integer_lift(phi, n)) == varphi_from_charpoly(phi, n));
    }
    CHECK_THROWS_AS(varphi_integer_lift(char_poly(Graph::cycle(4)), 5), PreconditionError);
}

TEST_CASE("mod-4 congruence on both parities")
{
    for (std::size_t n = 1; n <= 30; ++n)
        for (std::uint64_t s = 0; s < 3; ++s) {
            const auto g = random_even_graph(n, 11 * n + s, false);
            CHECK(mod4_congruence_check(g));
            CHECK(mod4_congruence_check(g, char_poly(g)));
        }
    CHECK(mod4_congruence_check(Graph::cycle(5)));
    CHECK(mod4_congruence_check(parse_graph6(testing::fixture("example1-G.g6"))));
}

TEST_CASE("hat walk matrix for even n")
{
    const auto g = parse_graph6(testing::fixture("example1-G.g6"));
    const auto hat = hat_walk_matrix(g);
    CHECK(hat.det * (BigInt(1) << 13) == BigInt(-352256));
    CHECK(hat.det == -43);
    for (std::size_t n = 2; n <= 24; n += 2) {
        const auto h = random_even_graph(n, 13 * n, false);
        const auto r = hat_walk_matrix(h);
        CHECK(r.det * (BigInt(1) << (3 * n / 2 - 2)) == determinant(walk_matrix(h)));
    }
    CHECK_THROWS_AS(hat_walk_matrix(Graph::cycle(5)), PreconditionError);
}

TEST_CASE("walk_matrices bundles the variants")
{
    const auto odd = walk_matrices(Graph::cycle(5));
    CHECK(odd.Wbar);
    CHECK(!odd.What);
    const auto mixed = walk_matrices(Graph::path(4));
    CHECK(!mixed.Wbar);
    const auto ex = walk_matrices(parse_graph6(testing::fixture("example1-G.g6")));
    REQUIRE(ex.What);
    CHECK(ex.detW == -352256);
    CHECK(*ex.detWbar == -688);
    CHECK(*ex.detWhat == -43);
}

TEST_CASE("column prefix of the reduced walk matrix for members")
{
    std::size_t members = 0;
    for (std::uint64_t s = 0; s < 3000 && members < 25; ++s) {
        const auto g = random_even_graph(9 + s % 10, s, false);
        const auto cert = certify_main(g);
        if (!cert.sigma_member) continue;
        ++members;
        const auto n = g.order();
        const auto r = (n + 2) / 2;  // ceil((n+1)/2)
        const auto wbar = reduced_walk_matrix(g);
        CHECK(f2_rank(reduce_mod2(wbar)) == r);
        CHECK(f2_rank(columns_mod2(wbar, r)) == r);
    }
    CHECK(members >= 10);
}
