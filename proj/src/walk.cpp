#include "dgs/walk.hpp"

#include "dgs/error.hpp"
#include "dgs/f2.hpp"

namespace dgs {

namespace {

std::vector<BigInt> adjacency_times(const Graph& g, const std::vector<BigInt>& v)
{
    std::vector<BigInt> out(g.order());
    for (std::size_t i = 0; i < g.order(); ++i)
        for (auto j : g.neighbors(i))
            out[i] += v[j];
    return out;
}

// Columns A^j e for j = 0..count-1.
std::vector<std::vector<BigInt>> walk_vectors(const Graph& g, std::size_t count)
{
    std::vector<std::vector<BigInt>> cols;
    cols.reserve(count);
    std::vector<BigInt> v(g.order(), BigInt(1));
    for (std::size_t j = 0; j < count; ++j) {
        cols.push_back(v);
        if (j + 1 < count) v = adjacency_times(g, v);
    }
    return cols;
}

void require_even(const Graph& g, const char* who)
{
    if (!all_degrees_even(g)) throw PreconditionError(std::string(who) + ": graph has an odd-degree vertex");
}

// sum_j coef_j * walks[j + shift]
std::vector<BigInt> combine(const IntPolynomial& p, const std::vector<std::vector<BigInt>>& walks, std::size_t shift,
                            std::size_t n)
{
    std::vector<BigInt> out(n);
    const auto& c = p.coefficients();
    for (std::size_t j = 0; j < c.size(); ++j) {
        if (c[j] == 0) continue;
        const auto& col = walks.at(j + shift);
        for (std::size_t i = 0; i < n; ++i)
            out[i] += c[j] * col[i];
    }
    return out;
}

bool all_divisible_by_4(const std::vector<BigInt>& v)
{
    for (const auto& x : v)
        if (!mpz_divisible_2exp_p(x.get_mpz_t(), 2)) return false;
    return true;
}

} // namespace

BigIntMatrix walk_matrix(const Graph& g)
{
    const std::size_t n = g.order();
    const auto cols = walk_vectors(g, n);
    BigIntMatrix w(n, n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i)
            w(i, j) = cols[j][i];
    return w;
}

BigIntMatrix reduced_walk_matrix(const Graph& g)
{
    require_even(g, "reduced_walk_matrix");
    BigIntMatrix w = walk_matrix(g);
    for (std::size_t j = 1; j < w.cols(); ++j)
        for (std::size_t i = 0; i < w.rows(); ++i) {
            if (mpz_odd_p(w(i, j).get_mpz_t())) throw InvariantError("reduced_walk_matrix: odd walk count");
            mpz_divexact_ui(w(i, j).get_mpz_t(), w(i, j).get_mpz_t(), 2);
        }
    return w;
}

IntPolynomial varphi_integer_lift(const IntPolynomial& phi, std::size_t n)
{
    if (phi.degree() != static_cast<int>(n) || !phi.is_monic())
        throw PreconditionError("varphi_integer_lift: polynomial is not monic of degree n");
    const std::size_t top = (n % 2 == 0) ? n / 2 : (n + 1) / 2;
    std::vector<BigInt> c(top + 1);
    for (std::size_t i = 0; i <= n; i += 2)
        c[top - i / 2] = phi.coefficient(n - i);
    return IntPolynomial(std::move(c));
}

HatWalkMatrix hat_walk_matrix(const Graph& g)
{
    return hat_walk_matrix(g, char_poly(g));
}

HatWalkMatrix hat_walk_matrix(const Graph& g, const IntPolynomial& phi)
{
    const std::size_t n = g.order();
    if (n % 2) throw PreconditionError("hat_walk_matrix: n must be even");
    require_even(g, "hat_walk_matrix");
    const auto walks = walk_vectors(g, n);
    const auto lift = varphi_integer_lift(phi, n);
    const std::size_t half = n / 2;

    HatWalkMatrix out{BigIntMatrix(n, n), 0};
    for (std::size_t i = 0; i < n; ++i)
        out.matrix(i, 0) = 1;
    for (std::size_t j = 1; j <= half; ++j)
        for (std::size_t i = 0; i < n; ++i) {
            mpz_divexact_ui(out.matrix(i, j).get_mpz_t(), walks[j][i].get_mpz_t(), 2);
        }
    for (std::size_t s = 1; s < half; ++s) {
        auto col = combine(lift, walks, s, n);
        if (!all_divisible_by_4(col))
            throw InvariantError("hat_walk_matrix: compressed column " + std::to_string(s) + " is not integral");
        for (std::size_t i = 0; i < n; ++i)
            mpz_divexact_ui(out.matrix(i, half + s).get_mpz_t(), col[i].get_mpz_t(), 4);
    }
    out.det = determinant(out.matrix);

    const BigInt detW = determinant(walk_matrix(g));
    BigInt scaled;
    mpz_mul_2exp(scaled.get_mpz_t(), out.det.get_mpz_t(), 3 * half - 2);
    if (scaled != detW) throw InvariantError("hat_walk_matrix: det W != 2^(3n/2-2) det What");
    return out;
}

bool mod4_congruence_check(const Graph& g)
{
    return mod4_congruence_check(g, char_poly(g));
}

bool mod4_congruence_check(const Graph& g, const IntPolynomial& phi)
{
    require_even(g, "mod4_congruence_check");
    const std::size_t n = g.order();
    IntPolynomial lift = varphi_integer_lift(phi, n);
    std::size_t shift = 1;
    if (n % 2 == 1) {
        shift = 0;
        if (decompose_phi_mod2(poly_mod2(phi)).k == 1) {
            auto c = lift.coefficients();
            c.resize(std::max<std::size_t>(c.size(), 1));
            c[0] -= BigInt(static_cast<unsigned long>(2 * g.edge_count())); // e^T A e
            lift = IntPolynomial(std::move(c));
        }
    }
    const auto walks = walk_vectors(g, static_cast<std::size_t>(std::max(lift.degree(), 0)) + shift + 1);
    return all_divisible_by_4(combine(lift, walks, shift, n));
}

WalkMatrices walk_matrices(const Graph& g)
{
    WalkMatrices m;
    m.W = walk_matrix(g);
    m.detW = determinant(m.W);
    if (all_degrees_even(g)) {
        m.Wbar = reduced_walk_matrix(g);
        m.detWbar = determinant(*m.Wbar);
        if (g.order() % 2 == 0) {
            auto hat = hat_walk_matrix(g);
            m.What = std::move(hat.matrix);
            m.detWhat = std::move(hat.det);
        }
    }
    return m;
}

} // namespace dgs
