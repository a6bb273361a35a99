#pragma once

#include "dgs/graph.hpp"

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace dgs {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Dense row-major matrix over an exact ring.
template <class T>
class DenseMatrix {
public:
    DenseMatrix() = default;
    DenseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    DenseMatrix(std::initializer_list<std::initializer_list<T>> rows);

    static DenseMatrix identity(std::size_t n)
    {
        DenseMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            m(i, i) = 1;
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool square() const noexcept { return rows_ == cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::vector<T> column(std::size_t j) const
    {
        std::vector<T> c(rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            c[i] = (*this)(i, j);
        return c;
    }

    DenseMatrix transpose() const
    {
        DenseMatrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                t(j, i) = (*this)(i, j);
        return t;
    }

    friend bool operator==(const DenseMatrix& a, const DenseMatrix& b)
    {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    friend DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b)
    {
        if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product: inner dimensions differ");
        DenseMatrix c(a.rows_, b.cols_);
        T tmp;
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const T& aik = a(i, k);
                if (aik == 0) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) {
                    tmp = aik * b(k, j);
                    c(i, j) += tmp;
                }
            }
        return c;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

template <class T>
DenseMatrix<T>::DenseMatrix(std::initializer_list<std::initializer_list<T>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0)
{
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
        data_.insert(data_.end(), r.begin(), r.end());
    }
}

using BigIntMatrix = DenseMatrix<BigInt>;

/// Entries are kept canonical (lowest terms, positive denominator): every
/// mpq_class produced by GMP arithmetic is canonical, and the text parser
/// canonicalizes explicitly.
using RationalMatrix = DenseMatrix<Rational>;

BigIntMatrix adjacency_matrix(const Graph& g);
RationalMatrix to_rational(const BigIntMatrix& m);

/// Integer polynomial c0 + c1 x + ... + cd x^d, stored lowest degree first
/// with no trailing zero coefficients.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<BigInt> ascending);

    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

    /// Coefficient of x^i (0 beyond the degree).
    BigInt coefficient(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : BigInt(0); }
    const std::vector<BigInt>& coefficients() const noexcept { return coeffs_; }

    BigInt evaluate(const BigInt& x) const;

    /// Human-readable form such as "x^3 - 3x - 2".
    std::string to_string() const;

    friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

private:
    std::vector<BigInt> coeffs_;
};

struct SmithNormalForm {
    std::vector<BigInt> invariant_factors; ///< d1 | d2 | ... ; zeros trail for singular input
    std::optional<int> det_sign;           ///< sign of det for square nonsingular input

    friend bool operator==(const SmithNormalForm&, const SmithNormalForm&) = default;
};

/// Fraction-free (Bareiss) elimination; every intermediate division is exact.
BigInt determinant(const BigIntMatrix& m);

/// det(xI - A). Evaluated at n+1 small integer points with `determinant`
/// and interpolated exactly; debug builds cross-check against Faddeev-LeVerrier.
IntPolynomial char_poly(const BigIntMatrix& a);
IntPolynomial char_poly(const Graph& g);

/// Faddeev-LeVerrier recurrence with exact integer divisions, O(n^4).
IntPolynomial char_poly_faddeev_leverrier(const BigIntMatrix& a);

/// Word-size characteristic polynomial of a graph, n ≤ 12. Coefficients
/// lowest degree first. Used by the exhaustive enumerators.
std::vector<std::int64_t> char_poly_small(const Graph& g);

/// Invariant factors by unimodular elimination with a smallest-magnitude
/// pivot rule. Nonsingular input is reduced modulo |det| throughout.
SmithNormalForm smith_normal_form(const BigIntMatrix& m);

/// Exact inverse over Q. Throws HypothesisError (reporting the rank) on a
/// singular matrix.
RationalMatrix invert_rational(const BigIntMatrix& m);

std::size_t rank_rational(const BigIntMatrix& m);

/// z = 2^v * odd_part(z) with odd_part odd and carrying the sign of z.
std::size_t two_adic_valuation(const BigInt& z);
BigInt odd_part(const BigInt& z);

} // namespace dgs
