#include "dgs/error.hpp"
#include "dgs/f2.hpp"
#include "dgs/f2_kernels.hpp"

#include <algorithm>
#include <bit>

namespace dgs {

F2Matrix::F2Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), stride_((cols + 63) / 64), data_(rows * stride_, 0)
{
}

F2Matrix F2Matrix::identity(std::size_t n)
{
    F2Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.set(i, i, true);
    return m;
}

F2Matrix F2Matrix::all_ones(std::size_t n)
{
    F2Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m.set(i, j, true);
    return m;
}

bool F2Matrix::is_zero() const noexcept
{
    return f2::active_kernels().is_zero(data_.data(), data_.size());
}

void F2Matrix::swap_rows(std::size_t a, std::size_t b) noexcept
{
    if (a == b) return;
    std::swap_ranges(data_.begin() + static_cast<std::ptrdiff_t>(a * stride_),
                     data_.begin() + static_cast<std::ptrdiff_t>((a + 1) * stride_),
                     data_.begin() + static_cast<std::ptrdiff_t>(b * stride_));
}

F2Matrix& F2Matrix::operator+=(const F2Matrix& other)
{
    if (rows_ != other.rows_ || cols_ != other.cols_) throw PreconditionError("F2Matrix +: shape mismatch");
    f2::active_kernels().xor_into(data_.data(), other.data_.data(), data_.size());
    return *this;
}

F2Matrix operator*(const F2Matrix& a, const F2Matrix& b)
{
    if (a.cols_ != b.rows_) throw PreconditionError("F2Matrix *: inner dimensions differ");
    F2Matrix c(a.rows_, b.cols_);
    const auto& k = f2::active_kernels();
    for (std::size_t i = 0; i < a.rows_; ++i)
        k.row_times_matrix(a.data_.data() + i * a.stride_, a.cols_, b.data_.data(), b.stride_,
                           c.data_.data() + i * c.stride_, c.stride_);
    return c;
}

F2Matrix reduce_mod2(const BigIntMatrix& m)
{
    F2Matrix r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (mpz_odd_p(m(i, j).get_mpz_t())) r.set(i, j, true);
    return r;
}

F2Matrix reduce_mod2(const Graph& g)
{
    const std::size_t n = g.order();
    F2Matrix r(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        auto src = g.row(i);
        std::copy(src.begin(), src.end(), r.row(i).begin());
    }
    return r;
}

std::size_t f2_rank(const F2Matrix& m)
{
    F2Matrix a = m;
    const auto& k = f2::active_kernels();
    std::size_t rank = 0;
    for (std::size_t c = 0; c < a.cols() && rank < a.rows(); ++c) {
        std::size_t p = rank;
        while (p < a.rows() && !a.get(p, c))
            ++p;
        if (p == a.rows()) continue;
        a.swap_rows(rank, p);
        for (std::size_t i = rank + 1; i < a.rows(); ++i)
            if (a.get(i, c)) k.xor_into(a.row(i).data(), a.row(rank).data(), a.stride());
        ++rank;
    }
    return rank;
}

F2Matrix f2_eval_poly_at_matrix(const F2Polynomial& p, const F2Matrix& a)
{
    if (!a.square()) throw PreconditionError("f2_eval_poly_at_matrix: matrix is not square");
    const std::size_t n = a.rows();
    F2Matrix acc(n, n);
    for (int d = p.degree(); d >= 0; --d) {
        acc = acc * a;
        if (p.coefficient(static_cast<std::size_t>(d)))
            for (std::size_t i = 0; i < n; ++i)
                acc.flip(i, i);
    }
    return acc;
}

F2Polynomial f2_min_poly(const F2Matrix& a)
{
    if (!a.square()) throw PreconditionError("f2_min_poly: matrix is not square");
    const std::size_t n = a.rows();
    const auto& k = f2::active_kernels();
    const std::size_t vec_words = n * a.stride();
    const std::size_t comb_words = (n + 1 + 63) / 64 + 1;

    struct BasisVector {
        std::vector<std::uint64_t> bits;
        std::vector<std::uint64_t> comb; // which powers were combined
        std::size_t pivot;
    };
    std::vector<BasisVector> basis;

    F2Matrix power = F2Matrix::identity(n);
    for (std::size_t i = 0; i <= n; ++i) {
        std::vector<std::uint64_t> v(power.words().begin(), power.words().end());
        std::vector<std::uint64_t> comb(comb_words, 0);
        comb[i / 64] |= std::uint64_t{1} << (i % 64);
        for (const auto& b : basis) {
            if ((v[b.pivot / 64] >> (b.pivot % 64)) & 1u) {
                k.xor_into(v.data(), b.bits.data(), vec_words);
                k.xor_into(comb.data(), b.comb.data(), comb_words);
            }
        }
        if (k.is_zero(v.data(), vec_words)) {
            F2Polynomial p;
            for (std::size_t e = 0; e <= i; ++e)
                if ((comb[e / 64] >> (e % 64)) & 1u) p.set_coefficient(e, true);
            return p;
        }
        std::size_t pivot = 0;
        while (v[pivot / 64] == 0)
            pivot += 64;
        pivot += static_cast<std::size_t>(std::countr_zero(v[pivot / 64]));
        basis.push_back({std::move(v), std::move(comb), pivot});
        power = power * a;
    }
    throw InvariantError("f2_min_poly: no dependency among the first n+1 powers");
}

F2Polynomial f2_char_poly(const F2Matrix& m)
{
    if (!m.square()) throw PreconditionError("f2_char_poly: matrix is not square");
    const std::size_t n = m.rows();
    F2Matrix h = m;
    const auto& k = f2::active_kernels();

    // Similarity transforms to upper Hessenberg form. Over GF(2) the
    // elimination matrix is its own inverse: row i += row p pairs with
    // column p += column i.
    for (std::size_t c = 0; c + 2 < n; ++c) {
        std::size_t p = c + 1;
        while (p < n && !h.get(p, c))
            ++p;
        if (p == n) continue;
        if (p != c + 1) {
            h.swap_rows(p, c + 1);
            for (std::size_t r = 0; r < n; ++r) {
                const bool x = h.get(r, p), y = h.get(r, c + 1);
                h.set(r, p, y);
                h.set(r, c + 1, x);
            }
        }
        for (std::size_t i = c + 2; i < n; ++i) {
            if (!h.get(i, c)) continue;
            k.xor_into(h.row(i).data(), h.row(c + 1).data(), h.stride());
            for (std::size_t r = 0; r < n; ++r)
                if (h.get(r, i)) h.flip(r, c + 1);
        }
    }

    // p_m = (x + h_mm) p_{m-1} + sum_{i<m} h_im (prod_{j=i+1..m} h_{j,j-1}) p_{i-1}, 1-indexed.
    std::vector<F2Polynomial> p(n + 1);
    p[0] = F2Polynomial::monomial(0);
    for (std::size_t mm = 1; mm <= n; ++mm) {
        F2Polynomial next = p[mm - 1].shifted_up(1);
        if (h.get(mm - 1, mm - 1)) next += p[mm - 1];
        bool chain = true;
        for (std::size_t i = mm - 1; i >= 1 && chain; --i) {
            chain = h.get(i, i - 1); // h_{i+1,i} in 1-indexed terms
            if (chain && h.get(i - 1, mm - 1)) next += p[i - 1];
        }
        p[mm] = std::move(next);
    }
    return p[n];
}

} // namespace dgs
