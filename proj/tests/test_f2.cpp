#include "dgs/error.hpp"
#include "dgs/f2.hpp"
#include "support.hpp"

#include <doctest.h>

#include <random>

using namespace dgs;

namespace {

using Bits = std::vector<std::vector<int>>;

Bits to_bits(const F2Matrix& m)
{
    Bits b(m.rows(), std::vector<int>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            b[i][j] = m.get(i, j);
    return b;
}

// Plain Gaussian elimination on int vectors.
std::size_t rank_oracle(Bits b)
{
    std::size_t rank = 0;
    const std::size_t cols = b.empty() ? 0 : b[0].size();
    for (std::size_t c = 0; c < cols && rank < b.size(); ++c) {
        std::size_t p = rank;
        while (p < b.size() && !b[p][c])
            ++p;
        if (p == b.size()) continue;
        std::swap(b[p], b[rank]);
        for (std::size_t r = 0; r < b.size(); ++r)
            if (r != rank && b[r][c])
                for (std::size_t k = 0; k < cols; ++k)
                    b[r][k] ^= b[rank][k];
        ++rank;
    }
    return rank;
}

Bits mul_oracle(const Bits& a, const Bits& b)
{
    Bits c(a.size(), std::vector<int>(b[0].size(), 0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t k = 0; k < b.size(); ++k)
            if (a[i][k])
                for (std::size_t j = 0; j < b[0].size(); ++j)
                    c[i][j] ^= b[k][j];
    return c;
}

F2Matrix random_f2(std::mt19937_64& rng, std::size_t r, std::size_t c)
{
    F2Matrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
            m.set(i, j, rng() & 1);
    return m;
}

F2Polynomial random_poly(std::mt19937_64& rng, std::size_t max_degree)
{
    F2Polynomial p;
    for (std::size_t i = 0; i <= max_degree; ++i)
        p.set_coefficient(i, rng() & 1);
    return p;
}

} // namespace

TEST_CASE("polynomial arithmetic")
{
    const auto x1 = F2Polynomial::from_exponents({1, 0});
    CHECK(x1.squared() == F2Polynomial::from_exponents({2, 0}));
    CHECK((x1 * x1) == x1.squared());
    CHECK(F2Polynomial::from_exponents({5, 4, 3}).to_string() == "x^5 + x^4 + x^3");
    CHECK(F2Polynomial().to_string() == "0");
    CHECK(F2Polynomial::from_exponents({1, 0}).to_string() == "x + 1");
    CHECK(x1.divides(F2Polynomial::from_exponents({3, 0})));  // x^3 + 1 = (x + 1)(x^2 + x + 1)
    CHECK(F2Polynomial::from_exponents({6, 3}).trailing_zeros() == 3);
    CHECK(F2Polynomial::from_exponents({6, 3}).shifted_down(3) == F2Polynomial::from_exponents({3, 0}));

    std::mt19937_64 rng(1);
    for (int t = 0; t < 200; ++t) {
        const auto a = random_poly(rng, 1 + t % 150), b = random_poly(rng, 1 + t % 70);
        if (b.is_zero()) continue;
        const auto r = a % b;
        CHECK(r.degree() < b.degree());
        CHECK(b.divides(a + r));
        CHECK(a * b == b * a);
        CHECK(a.squared() == a * a);
    }
}

TEST_CASE("square roots and the x^k phi1^2 decomposition")
{
    std::mt19937_64 rng(2);
    for (int t = 0; t < 200; ++t) {
        const auto p = random_poly(rng, t % 100);
        CHECK(f2_poly_sqrt(p.squared()) == p);
        const auto q = p.squared().shifted_up(t % 7);
        if (q.is_zero()) continue;
        const auto d = decompose_phi_mod2(q);
        CHECK(d.phi1.coefficient(0));
        CHECK(d.phi1.squared().shifted_up(d.k) == q);
    }
    CHECK_THROWS_AS(f2_poly_sqrt(F2Polynomial::from_exponents({1})), PreconditionError);
}

TEST_CASE("rank and product agree with plain elimination")
{
    std::mt19937_64 rng(3);
    for (int t = 0; t < 120; ++t) {
        const std::size_t r = 1 + rng() % 90, c = 1 + rng() % 90, k = 1 + rng() % 90;
        const auto a = random_f2(rng, r, c), b = random_f2(rng, c, k);
        CHECK(f2_rank(a) == rank_oracle(to_bits(a)));
        CHECK(to_bits(a * b) == mul_oracle(to_bits(a), to_bits(b)));
    }
    CHECK(f2_rank(F2Matrix::identity(130)) == 130);
    CHECK(f2_rank(F2Matrix::all_ones(70)) == 1);
}

TEST_CASE("char poly and min poly over GF(2)")
{
    for (std::size_t n = 1; n <= 30; ++n) {
        const auto g = random_graph(n, 400 + n);
        const auto a = reduce_mod2(g);
        const auto chi = f2_char_poly(a);
        CHECK(chi == poly_mod2(char_poly(g)));
        const auto mu = f2_min_poly(a);
        CHECK(f2_eval_poly_at_matrix(mu, a).is_zero());
        CHECK(mu.divides(chi));
        // I, A, ..., A^{deg mu - 1} are independent
        const auto d = static_cast<std::size_t>(mu.degree());
        F2Matrix flat(d, n * n);
        auto power = F2Matrix::identity(n);
        for (std::size_t k = 0; k < d; ++k) {
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    flat.set(k, i * n + j, power.get(i, j));
            power = power * a;
        }
        CHECK(f2_rank(flat) == d);
    }
    std::mt19937_64 rng(4);
    for (int t = 0; t < 20; ++t) {
        const std::size_t n = 2 + t;
        BigIntMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                m(i, j) = static_cast<long>(rng() % 5) - 2;
        CHECK(f2_char_poly(reduce_mod2(m)) == poly_mod2(char_poly(m)));
    }
}

TEST_CASE("varphi squares back to phi")
{
    for (std::size_t n = 1; n <= 40; ++n) {
        const auto g = random_even_graph(n, 9 * n, false);
        const auto phi = char_poly(g);
        const auto v = varphi_from_charpoly(phi, n);
        const auto target = n % 2 == 0 ? poly_mod2(phi) : poly_mod2(phi).shifted_up(1);
        CHECK(v.squared() == target);
        CHECK(f2_eval_poly_at_matrix(v, reduce_mod2(g)).is_zero());
    }
}

TEST_CASE("both annihilation routes agree")
{
    for (std::size_t n = 2; n <= 28; ++n)
        for (std::uint64_t s = 0; s < 3; ++s) {
            const auto g = random_even_graph(n, 50 * n + s, false);
            const auto a = check_annihilation(g);
            const auto b = check_annihilation(g, char_poly(g));
            CHECK(a.varphi == b.varphi);
            CHECK(a.phi_mod2 == b.phi_mod2);
            CHECK(a.k == b.k);
            CHECK(a.all_hold());
            CHECK(a.theorem9_applicable == (n % 2 == 1 && a.k >= 3 && a.k % 2 == 1));
            CHECK(a.remark2_holds.has_value() == (n % 2 == 1 && a.k == 1));
        }
    CHECK_THROWS_AS(check_annihilation(Graph::path(3)), PreconditionError);
}

TEST_CASE("example graph annihilation report")
{
    const auto g = parse_graph6(testing::fixture("example1-G.g6"));
    const auto r = check_annihilation(g);
    CHECK(r.phi_mod2.to_string() == "x^10 + x^8 + x^6");
    CHECK(r.varphi.to_string() == "x^5 + x^4 + x^3");
    CHECK(r.k == 6);
    CHECK(r.phi1.to_string() == "x^2 + x + 1");
    CHECK(r.varphi_at_A_is_zero);
    CHECK(r.minpoly_divides_varphi);
    CHECK(!r.theorem9_applicable);
}

TEST_CASE("odd-order cases by hand")
{
    // C5: phi = x^5 - 5x^3 + 5x - 2, phi mod 2 = x^5 + x^3 + x = x (x^2 + x + 1)^2
    const auto r = check_annihilation(Graph::cycle(5));
    CHECK(r.k == 1);
    CHECK(r.phi1.to_string() == "x^2 + x + 1");
    REQUIRE(r.remark2_holds);
    CHECK(*r.remark2_holds);
    CHECK(r.rank_A == 4u);
    // C3 plus two isolated vertices: phi mod 2 = x^3 (x + 1)^2
    const auto s = check_annihilation(Graph::disjoint_union(Graph::cycle(3), Graph(2)));
    CHECK(s.k == 3);
    CHECK(s.theorem9_applicable);
    CHECK(s.theorem9_holds == true);
}
