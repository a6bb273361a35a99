#include "dgs/error.hpp"
#include "dgs/f2.hpp"

#include <bit>
#include <sstream>

namespace dgs {

void F2Polynomial::trim()
{
    while (!bits_.empty() && bits_.back() == 0)
        bits_.pop_back();
}

F2Polynomial F2Polynomial::monomial(std::size_t k)
{
    F2Polynomial p;
    p.set_coefficient(k, true);
    return p;
}

F2Polynomial F2Polynomial::from_exponents(std::initializer_list<std::size_t> exps)
{
    F2Polynomial p;
    for (auto e : exps)
        p.set_coefficient(e, !p.coefficient(e));
    return p;
}

int F2Polynomial::degree() const noexcept
{
    if (bits_.empty()) return -1;
    return static_cast<int>((bits_.size() - 1) * 64 + 63 - static_cast<std::size_t>(std::countl_zero(bits_.back())));
}

void F2Polynomial::set_coefficient(std::size_t i, bool v)
{
    if (i / 64 >= bits_.size()) {
        if (!v) return;
        bits_.resize(i / 64 + 1, 0);
    }
    const std::uint64_t m = std::uint64_t{1} << (i % 64);
    bits_[i / 64] = v ? (bits_[i / 64] | m) : (bits_[i / 64] & ~m);
    trim();
}

std::size_t F2Polynomial::trailing_zeros() const noexcept
{
    std::size_t w = 0;
    while (w < bits_.size() && bits_[w] == 0)
        ++w;
    if (w == bits_.size()) return 0;
    return w * 64 + static_cast<std::size_t>(std::countr_zero(bits_[w]));
}

F2Polynomial F2Polynomial::shifted_up(std::size_t k) const
{
    F2Polynomial r;
    if (is_zero()) return r;
    const std::size_t ws = k / 64, bs = k % 64;
    r.bits_.assign(bits_.size() + ws + 1, 0);
    for (std::size_t i = 0; i < bits_.size(); ++i) {
        r.bits_[i + ws] |= bits_[i] << bs;
        if (bs) r.bits_[i + ws + 1] |= bits_[i] >> (64 - bs);
    }
    r.trim();
    return r;
}

F2Polynomial F2Polynomial::shifted_down(std::size_t k) const
{
    F2Polynomial r;
    const std::size_t ws = k / 64, bs = k % 64;
    if (ws >= bits_.size()) return r;
    r.bits_.assign(bits_.size() - ws, 0);
    for (std::size_t i = ws; i < bits_.size(); ++i) {
        r.bits_[i - ws] |= bits_[i] >> bs;
        if (bs && i > ws) r.bits_[i - ws - 1] |= bits_[i] << (64 - bs);
    }
    r.trim();
    return r;
}

F2Polynomial& F2Polynomial::operator+=(const F2Polynomial& other)
{
    if (other.bits_.size() > bits_.size()) bits_.resize(other.bits_.size(), 0);
    for (std::size_t i = 0; i < other.bits_.size(); ++i)
        bits_[i] ^= other.bits_[i];
    trim();
    return *this;
}

F2Polynomial operator*(const F2Polynomial& a, const F2Polynomial& b)
{
    F2Polynomial r;
    for (int i = 0; i <= a.degree(); ++i)
        if (a.coefficient(static_cast<std::size_t>(i))) r += b.shifted_up(static_cast<std::size_t>(i));
    return r;
}

F2Polynomial operator%(const F2Polynomial& a, const F2Polynomial& b)
{
    if (b.is_zero()) throw PreconditionError("F2Polynomial %: division by zero");
    F2Polynomial r = a;
    const int db = b.degree();
    for (int d = r.degree(); d >= db; d = r.degree())
        r += b.shifted_up(static_cast<std::size_t>(d - db));
    return r;
}

F2Polynomial F2Polynomial::squared() const
{
    F2Polynomial r;
    for (int i = 0; i <= degree(); ++i)
        if (coefficient(static_cast<std::size_t>(i))) r.set_coefficient(2 * static_cast<std::size_t>(i), true);
    return r;
}

std::string F2Polynomial::to_string() const
{
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        if (!coefficient(static_cast<std::size_t>(i))) continue;
        if (!first) os << " + ";
        first = false;
        if (i == 0)
            os << '1';
        else if (i == 1)
            os << 'x';
        else
            os << "x^" << i;
    }
    return os.str();
}

F2Polynomial poly_mod2(const IntPolynomial& p)
{
    F2Polynomial r;
    const auto& c = p.coefficients();
    for (std::size_t i = 0; i < c.size(); ++i)
        if (mpz_odd_p(c[i].get_mpz_t())) r.set_coefficient(i, true);
    return r;
}

F2Polynomial f2_poly_sqrt(const F2Polynomial& p)
{
    F2Polynomial r;
    for (int i = 0; i <= p.degree(); ++i) {
        if (!p.coefficient(static_cast<std::size_t>(i))) continue;
        if (i % 2)
            throw PreconditionError("f2_poly_sqrt: not a square (x^" + std::to_string(i) + " has odd exponent)");
        r.set_coefficient(static_cast<std::size_t>(i) / 2, true);
    }
    return r;
}

F2Polynomial varphi_from_charpoly(const IntPolynomial& phi, std::size_t n)
{
    if (phi.degree() != static_cast<int>(n) || !phi.is_monic())
        throw PreconditionError("varphi_from_charpoly: polynomial is not monic of degree n");
    // c_i is the coefficient of x^{n-i}.
    for (std::size_t i = 1; i <= n; i += 2)
        if (mpz_odd_p(phi.coefficient(n - i).get_mpz_t()))
            throw PreconditionError("varphi_from_charpoly: c_" + std::to_string(i) + " is odd");
    F2Polynomial r;
    const std::size_t top = (n % 2 == 0) ? n / 2 : (n + 1) / 2;
    for (std::size_t i = 0; i <= n; i += 2)
        if (mpz_odd_p(phi.coefficient(n - i).get_mpz_t())) r.set_coefficient(top - i / 2, true);
    return r;
}

PhiDecomposition decompose_phi_mod2(const F2Polynomial& p)
{
    if (p.is_zero()) throw PreconditionError("decompose_phi_mod2: zero polynomial");
    PhiDecomposition d;
    d.k = p.trailing_zeros();
    try {
        d.phi1 = f2_poly_sqrt(p.shifted_down(d.k));
    } catch (const PreconditionError&) {
        throw PreconditionError("decompose_phi_mod2: " + p.to_string() + " is not x^k times a square");
    }
    return d;
}

} // namespace dgs
