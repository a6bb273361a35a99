#pragma once

#include "dgs/exact_linalg.hpp"
#include "dgs/graph.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace dgs {

/// Bit-packed matrix over GF(2). Rows are padded to whole 64-bit words and
/// the padding bits are always zero.
class F2Matrix {
public:
    F2Matrix() = default;
    F2Matrix(std::size_t rows, std::size_t cols);

    static F2Matrix identity(std::size_t n);
    static F2Matrix all_ones(std::size_t n);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    std::size_t stride() const noexcept { return stride_; }
    bool square() const noexcept { return rows_ == cols_; }

    bool get(std::size_t i, std::size_t j) const noexcept { return (data_[i * stride_ + j / 64] >> (j % 64)) & 1u; }
    void set(std::size_t i, std::size_t j, bool v) noexcept
    {
        auto& w = data_[i * stride_ + j / 64];
        const std::uint64_t m = std::uint64_t{1} << (j % 64);
        w = v ? (w | m) : (w & ~m);
    }
    void flip(std::size_t i, std::size_t j) noexcept { data_[i * stride_ + j / 64] ^= std::uint64_t{1} << (j % 64); }

    std::span<std::uint64_t> row(std::size_t i) noexcept { return {data_.data() + i * stride_, stride_}; }
    std::span<const std::uint64_t> row(std::size_t i) const noexcept { return {data_.data() + i * stride_, stride_}; }
    std::span<const std::uint64_t> words() const noexcept { return data_; }

    bool is_zero() const noexcept;
    void swap_rows(std::size_t a, std::size_t b) noexcept;

    F2Matrix& operator+=(const F2Matrix& other);
    friend F2Matrix operator+(F2Matrix a, const F2Matrix& b) { return a += b; }
    friend F2Matrix operator*(const F2Matrix& a, const F2Matrix& b);
    friend bool operator==(const F2Matrix&, const F2Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::size_t stride_ = 0;
    std::vector<std::uint64_t> data_;
};

/// Polynomial over GF(2); bit i is the coefficient of x^i. No trailing zero words.
class F2Polynomial {
public:
    F2Polynomial() = default;
    static F2Polynomial monomial(std::size_t k);
    static F2Polynomial from_exponents(std::initializer_list<std::size_t> exps);

    /// -1 for the zero polynomial.
    int degree() const noexcept;
    bool is_zero() const noexcept { return bits_.empty(); }
    bool coefficient(std::size_t i) const noexcept
    {
        return i / 64 < bits_.size() && ((bits_[i / 64] >> (i % 64)) & 1u);
    }
    void set_coefficient(std::size_t i, bool v);
    /// Number of trailing zero coefficients (multiplicity of x). p != 0.
    std::size_t trailing_zeros() const noexcept;

    F2Polynomial shifted_up(std::size_t k) const;   ///< x^k p
    F2Polynomial shifted_down(std::size_t k) const; ///< p / x^k, dropping low terms

    F2Polynomial& operator+=(const F2Polynomial& other);
    friend F2Polynomial operator+(F2Polynomial a, const F2Polynomial& b) { return a += b; }
    friend F2Polynomial operator*(const F2Polynomial& a, const F2Polynomial& b);
    friend F2Polynomial operator%(const F2Polynomial& a, const F2Polynomial& b);
    friend bool operator==(const F2Polynomial&, const F2Polynomial&) = default;

    F2Polynomial squared() const;
    bool divides(const F2Polynomial& other) const { return (other % *this).is_zero(); }

    /// "x^5 + x^4 + x^3"; "0" for the zero polynomial.
    std::string to_string() const;

private:
    void trim();
    std::vector<std::uint64_t> bits_;
};

F2Matrix reduce_mod2(const BigIntMatrix& m);
F2Matrix reduce_mod2(const Graph& g);
F2Polynomial poly_mod2(const IntPolynomial& p);

std::size_t f2_rank(const F2Matrix& m);

/// Square root over GF(2): keeps even-exponent terms at halved exponents.
/// Throws PreconditionError ("not a square") on any odd-exponent term.
F2Polynomial f2_poly_sqrt(const F2Polynomial& p);

/// The square-root polynomial of the characteristic polynomial built from its
/// even-index coefficients c0 = 1, c2, c4, ...:
///   n even: x^{n/2} + c2 x^{n/2-1} + ... + c_n
///   n odd:  x^{(n+1)/2} + c2 x^{(n-1)/2} + ... + c_{n-1} x
/// reduced mod 2. Throws PreconditionError if some odd-index c_i is odd.
F2Polynomial varphi_from_charpoly(const IntPolynomial& phi, std::size_t n);

/// Horner evaluation p(A) over GF(2).
F2Matrix f2_eval_poly_at_matrix(const F2Polynomial& p, const F2Matrix& a);

struct PhiDecomposition {
    std::size_t k = 0;
    F2Polynomial phi1; ///< phi1(0) = 1
};

/// p = x^k phi1^2 with gcd(x, phi1) = 1. Throws PreconditionError when the
/// x-free part is not a perfect square.
PhiDecomposition decompose_phi_mod2(const F2Polynomial& p);

/// Minimal polynomial from the first linear dependency among I, A, A^2, ...,
/// each power flattened to an n^2-bit vector.
F2Polynomial f2_min_poly(const F2Matrix& a);

/// det(xI + A) over GF(2) via Hessenberg reduction, O(n^3) bit operations.
F2Polynomial f2_char_poly(const F2Matrix& a);

struct AnnihilationReport {
    std::size_t n = 0;
    bool n_even = false;
    bool is_eulerian = false;
    F2Polynomial phi_mod2;
    F2Polynomial varphi;
    std::size_t k = 0;
    F2Polynomial phi1;
    bool varphi_at_A_is_zero = false;
    F2Polynomial minpoly;
    bool minpoly_divides_varphi = false;
    bool theorem9_applicable = false;
    std::optional<bool> theorem9_holds;
    std::optional<bool> remark2_holds;
    std::optional<std::size_t> rank_A; ///< recorded on the k = 1 branch

    /// Every applicable check passed.
    bool all_hold() const noexcept
    {
        return varphi_at_A_is_zero && minpoly_divides_varphi && theorem9_holds.value_or(true) &&
               remark2_holds.value_or(true);
    }
};

/// Annihilation checks for an even-degree graph (connectivity not required).
/// phi mod 2 comes from the GF(2) Hessenberg route.
AnnihilationReport check_annihilation(const Graph& g);
/// Same, with phi supplied as the exact integer characteristic polynomial.
AnnihilationReport check_annihilation(const Graph& g, const IntPolynomial& phi);

} // namespace dgs
