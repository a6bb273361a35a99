#include "dgs/exact_linalg.hpp"

#include "dgs/error.hpp"

#include <algorithm>
#include <sstream>

namespace dgs {

BigIntMatrix adjacency_matrix(const Graph& g)
{
    const std::size_t n = g.order();
    BigIntMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (auto j : g.neighbors(i))
            a(i, j) = 1;
    return a;
}

RationalMatrix to_rational(const BigIntMatrix& m)
{
    RationalMatrix r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            r(i, j) = Rational(m(i, j));
    return r;
}

// --- IntPolynomial ---------------------------------------------------------

IntPolynomial::IntPolynomial(std::vector<BigInt> ascending) : coeffs_(std::move(ascending))
{
    while (!coeffs_.empty() && coeffs_.back() == 0)
        coeffs_.pop_back();
}

BigInt IntPolynomial::evaluate(const BigInt& x) const
{
    BigInt acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

std::string IntPolynomial::to_string() const
{
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
        const BigInt& c = coeffs_[k];
        if (c == 0) continue;
        const BigInt mag = abs(c);
        if (first) {
            if (c < 0) os << '-';
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (k == 0 || mag != 1) os << mag.get_str();
        if (k >= 1) os << 'x';
        if (k >= 2) os << '^' << k;
    }
    return os.str();
}

// --- determinant -----------------------------------------------------------

BigInt determinant(const BigIntMatrix& m)
{
    if (!m.square()) throw PreconditionError("determinant: matrix is not square");
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    BigIntMatrix a = m;
    int sign = 1;
    BigInt prev = 1;
    BigInt t1, t2;
    for (std::size_t k = 0; k < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && a(p, k) == 0)
                ++p;
            if (p == n) return 0;
            for (std::size_t j = k; j < n; ++j)
                swap(a(k, j), a(p, j));
            sign = -sign;
        }
        const BigInt& piv = a(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                mpz_mul(t1.get_mpz_t(), a(i, j).get_mpz_t(), piv.get_mpz_t());
                mpz_mul(t2.get_mpz_t(), a(i, k).get_mpz_t(), a(k, j).get_mpz_t());
                mpz_sub(t1.get_mpz_t(), t1.get_mpz_t(), t2.get_mpz_t());
                mpz_divexact(a(i, j).get_mpz_t(), t1.get_mpz_t(), prev.get_mpz_t());
            }
            a(i, k) = 0;
        }
        prev = piv;
    }
    return sign * a(n - 1, n - 1);
}

// --- characteristic polynomial ---------------------------------------------

IntPolynomial char_poly_faddeev_leverrier(const BigIntMatrix& a)
{
    if (!a.square()) throw PreconditionError("char_poly: matrix is not square");
    const std::size_t n = a.rows();
    std::vector<BigInt> coeffs(n + 1);
    coeffs[n] = 1;
    BigIntMatrix m = BigIntMatrix::identity(n);
    for (std::size_t k = 1; k <= n; ++k) {
        BigIntMatrix am = a * m;
        BigInt tr = 0;
        for (std::size_t i = 0; i < n; ++i)
            tr += am(i, i);
        BigInt c = -tr;
        if (!mpz_divisible_ui_p(c.get_mpz_t(), k))
            throw InvariantError("Faddeev-LeVerrier: trace not divisible by k");
        mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), k);
        coeffs[n - k] = c;
        for (std::size_t i = 0; i < n; ++i)
            am(i, i) += c;
        m = std::move(am);
    }
    return IntPolynomial(std::move(coeffs));
}

IntPolynomial char_poly(const BigIntMatrix& a)
{
    if (!a.square()) throw PreconditionError("char_poly: matrix is not square");
    const std::size_t n = a.rows();

    // Sample points 0, 1, -1, 2, -2, ... keep |x| small so the minors stay short.
    std::vector<Rational> xs(n + 1), dd(n + 1);
    BigIntMatrix shifted(n, n);
    for (std::size_t k = 0; k <= n; ++k) {
        const long x = (k % 2 == 1) ? static_cast<long>((k + 1) / 2) : -static_cast<long>(k / 2);
        xs[k] = x;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                shifted(i, j) = (i == j ? BigInt(x) : BigInt(0)) - a(i, j);
        dd[k] = Rational(determinant(shifted));
    }

    // Newton divided differences, then expansion into the monomial basis.
    for (std::size_t level = 1; level <= n; ++level)
        for (std::size_t k = n; k >= level; --k)
            dd[k] = (dd[k] - dd[k - 1]) / (xs[k] - xs[k - level]);

    std::vector<Rational> poly{dd[n]};
    for (std::size_t k = n; k-- > 0;) {
        std::vector<Rational> next(poly.size() + 1);
        for (std::size_t i = 0; i < poly.size(); ++i) {
            next[i + 1] += poly[i];
            next[i] -= poly[i] * xs[k];
        }
        next[0] += dd[k];
        poly = std::move(next);
    }

    std::vector<BigInt> coeffs(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        if (poly[i].get_den() != 1) throw InvariantError("char_poly: interpolation produced a non-integer coefficient");
        coeffs[i] = poly[i].get_num();
    }
    IntPolynomial result(std::move(coeffs));
    if (result.degree() != static_cast<int>(n) || !result.is_monic())
        throw InvariantError("char_poly: result is not monic of degree n");
#ifndef NDEBUG
    if (!(result == char_poly_faddeev_leverrier(a)))
        throw InvariantError("char_poly: interpolation disagrees with Faddeev-LeVerrier");
#endif
    return result;
}

IntPolynomial char_poly(const Graph& g)
{
    return char_poly(adjacency_matrix(g));
}

std::vector<std::int64_t> char_poly_small(const Graph& g)
{
    constexpr std::size_t cap = 12;
    const std::size_t n = g.order();
    if (n > cap) throw PreconditionError("char_poly_small: n exceeds 12");
    std::int64_t a[cap][cap] = {};
    std::int64_t m[cap][cap] = {};
    std::int64_t am[cap][cap];
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            a[i][j] = g.adjacent(i, j) ? 1 : 0;
        m[i][i] = 1;
    }
    std::vector<std::int64_t> coeffs(n + 1);
    coeffs[n] = 1;
    for (std::size_t k = 1; k <= n; ++k) {
        std::int64_t tr = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                std::int64_t s = 0;
                for (std::size_t l = 0; l < n; ++l)
                    if (a[i][l]) s += m[l][j];
                am[i][j] = s;
                if (i == j) tr += s;
            }
        const std::int64_t c = -tr / static_cast<std::int64_t>(k);
        coeffs[n - k] = c;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                m[i][j] = am[i][j] + (i == j ? c : 0);
    }
    return coeffs;
}

// --- Smith normal form -----------------------------------------------------

namespace {

class SmithEliminator {
public:
    SmithEliminator(BigIntMatrix a, std::optional<BigInt> modulus) : a_(std::move(a)), mod_(std::move(modulus)) {}

    std::vector<BigInt> run()
    {
        const std::size_t n = a_.rows(), m = a_.cols();
        const std::size_t r = std::min(n, m);
        std::vector<BigInt> d(r, 0);
        if (mod_)
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < m; ++j)
                    reduce(a_(i, j));

        for (std::size_t t = 0; t < r; ++t) {
            if (!settle_pivot(t)) break;
            d[t] = abs(a_(t, t));
        }
        if (mod_)
            for (auto& x : d)
                x = gcd(x, *mod_);
        return d;
    }

private:
    void reduce(BigInt& x) const
    {
        if (!mod_) return;
        mpz_mod(x.get_mpz_t(), x.get_mpz_t(), mod_->get_mpz_t());
        if (2 * x > *mod_) x -= *mod_;
    }

    bool move_smallest_to(std::size_t t)
    {
        const std::size_t n = a_.rows(), m = a_.cols();
        std::size_t bi = n, bj = m;
        for (std::size_t i = t; i < n; ++i)
            for (std::size_t j = t; j < m; ++j) {
                const BigInt& x = a_(i, j);
                if (x == 0) continue;
                if (bi == n || mpz_cmpabs(x.get_mpz_t(), a_(bi, bj).get_mpz_t()) < 0) {
                    bi = i;
                    bj = j;
                }
            }
        if (bi == n) return false;
        if (bi != t)
            for (std::size_t j = 0; j < m; ++j)
                swap(a_(t, j), a_(bi, j));
        if (bj != t)
            for (std::size_t i = 0; i < n; ++i)
                swap(a_(i, t), a_(i, bj));
        return true;
    }

    // Returns false when the trailing block is entirely zero.
    bool settle_pivot(std::size_t t)
    {
        const std::size_t n = a_.rows(), m = a_.cols();
        BigInt q, tmp;
        for (;;) {
            if (!move_smallest_to(t)) return false;
            const BigInt piv = a_(t, t);
            bool clean = true;
            for (std::size_t i = t + 1; i < n; ++i) {
                if (a_(i, t) == 0) continue;
                mpz_fdiv_q(q.get_mpz_t(), a_(i, t).get_mpz_t(), piv.get_mpz_t());
                for (std::size_t j = t; j < m; ++j) {
                    if (a_(t, j) == 0) continue;
                    tmp = q * a_(t, j);
                    a_(i, j) -= tmp;
                    reduce(a_(i, j));
                }
                if (a_(i, t) != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < m; ++j) {
                if (a_(t, j) == 0) continue;
                mpz_fdiv_q(q.get_mpz_t(), a_(t, j).get_mpz_t(), piv.get_mpz_t());
                for (std::size_t i = t; i < n; ++i) {
                    if (a_(i, t) == 0) continue;
                    tmp = q * a_(i, t);
                    a_(i, j) -= tmp;
                    reduce(a_(i, j));
                }
                if (a_(t, j) != 0) clean = false;
            }
            if (!clean) continue;

            // Row and column t are clear; the pivot must divide the rest.
            std::size_t bad = n;
            for (std::size_t i = t + 1; i < n && bad == n; ++i)
                for (std::size_t j = t + 1; j < m; ++j)
                    if (!mpz_divisible_p(a_(i, j).get_mpz_t(), piv.get_mpz_t())) {
                        bad = i;
                        break;
                    }
            if (bad == n) return true;
            for (std::size_t j = t; j < m; ++j) {
                a_(t, j) += a_(bad, j);
                reduce(a_(t, j));
            }
        }
    }

    BigIntMatrix a_;
    std::optional<BigInt> mod_;
};

} // namespace

SmithNormalForm smith_normal_form(const BigIntMatrix& m)
{
    SmithNormalForm snf;
    std::optional<BigInt> modulus;
    if (m.square() && m.rows() > 0) {
        const BigInt det = determinant(m);
        if (det != 0) {
            snf.det_sign = sgn(det);
            modulus = abs(det);
        }
    }
    snf.invariant_factors = SmithEliminator(m, modulus).run();

    const auto& d = snf.invariant_factors;
    for (std::size_t i = 0; i + 1 < d.size(); ++i)
        if (d[i + 1] != 0 && !mpz_divisible_p(d[i + 1].get_mpz_t(), d[i].get_mpz_t()))
            throw InvariantError("smith_normal_form: divisibility chain broken");
    return snf;
}

// --- inverse / rank --------------------------------------------------------

std::size_t rank_rational(const BigIntMatrix& m)
{
    RationalMatrix a = to_rational(m);
    std::size_t rank = 0;
    for (std::size_t c = 0; c < a.cols() && rank < a.rows(); ++c) {
        std::size_t p = rank;
        while (p < a.rows() && a(p, c) == 0)
            ++p;
        if (p == a.rows()) continue;
        for (std::size_t j = 0; j < a.cols(); ++j)
            swap(a(rank, j), a(p, j));
        for (std::size_t i = rank + 1; i < a.rows(); ++i) {
            if (a(i, c) == 0) continue;
            const Rational f = a(i, c) / a(rank, c);
            for (std::size_t j = c; j < a.cols(); ++j)
                a(i, j) -= f * a(rank, j);
        }
        ++rank;
    }
    return rank;
}

RationalMatrix invert_rational(const BigIntMatrix& m)
{
    if (!m.square()) throw PreconditionError("invert_rational: matrix is not square");
    const std::size_t n = m.rows();
    RationalMatrix a = to_rational(m);
    RationalMatrix inv = RationalMatrix::identity(n);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a(p, c) == 0)
            ++p;
        if (p == n)
            throw HypothesisError("invert_rational: matrix is singular (rank " + std::to_string(rank_rational(m)) +
                                  " of " + std::to_string(n) + ")");
        if (p != c)
            for (std::size_t j = 0; j < n; ++j) {
                swap(a(c, j), a(p, j));
                swap(inv(c, j), inv(p, j));
            }
        const Rational piv = a(c, c);
        for (std::size_t j = 0; j < n; ++j) {
            a(c, j) /= piv;
            inv(c, j) /= piv;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || a(i, c) == 0) continue;
            const Rational f = a(i, c);
            for (std::size_t j = 0; j < n; ++j) {
                a(i, j) -= f * a(c, j);
                inv(i, j) -= f * inv(c, j);
            }
        }
    }
    return inv;
}

// --- 2-adic helpers --------------------------------------------------------

std::size_t two_adic_valuation(const BigInt& z)
{
    if (z == 0) throw PreconditionError("two_adic_valuation: argument is zero");
    return mpz_scan1(z.get_mpz_t(), 0);
}

BigInt odd_part(const BigInt& z)
{
    const auto v = two_adic_valuation(z);
    BigInt r;
    mpz_tdiv_q_2exp(r.get_mpz_t(), z.get_mpz_t(), v);
    return r;
}

} // namespace dgs
