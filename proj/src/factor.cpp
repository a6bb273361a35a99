#include "dgs/factor.hpp"

#include "dgs/error.hpp"

#include <algorithm>
#include <map>

namespace dgs {

namespace {

constexpr std::uint32_t trial_limit = 1'000'000;

const std::vector<std::uint32_t>& small_primes()
{
    static const std::vector<std::uint32_t> primes = [] {
        std::vector<char> composite(trial_limit + 1, 0);
        std::vector<std::uint32_t> out;
        for (std::uint32_t p = 2; p <= trial_limit; ++p) {
            if (composite[p]) continue;
            out.push_back(p);
            for (std::uint64_t q = std::uint64_t{p} * p; q <= trial_limit; q += p)
                composite[q] = 1;
        }
        return out;
    }();
    return primes;
}

bool miller_rabin_round(const BigInt& n, const BigInt& d, std::size_t s, unsigned long base)
{
    const BigInt nm1 = n - 1;
    BigInt x;
    const BigInt a = base;
    mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    if (x == 1 || x == nm1) return true;
    for (std::size_t r = 1; r < s; ++r) {
        x = x * x % n;
        if (x == nm1) return true;
        if (x == 1) return false;
    }
    return false;
}

// Perfect power test: returns (root, k) with |n| = root^k, k maximal, or k = 1.
std::pair<BigInt, unsigned> perfect_power(const BigInt& n)
{
    if (n < 4 || !mpz_perfect_power_p(n.get_mpz_t())) return {n, 1};
    const std::size_t bits = mpz_sizeinbase(n.get_mpz_t(), 2);
    for (unsigned long k = bits; k >= 2; --k) {
        BigInt r;
        if (mpz_root(r.get_mpz_t(), n.get_mpz_t(), k) != 0) return {r, static_cast<unsigned>(k)};
    }
    return {n, 1};
}

class RhoFactorizer {
public:
    explicit RhoFactorizer(std::uint64_t budget) : budget_(budget) {}

    // Nontrivial factor of composite odd n, or nullopt when out of budget.
    std::optional<BigInt> split(const BigInt& n)
    {
        for (unsigned long c = 1; c < 64; ++c) {
            auto f = brent(n, c);
            if (!f) return std::nullopt;
            if (*f != n) return f;
        }
        return std::nullopt;
    }

private:
    // Brent's cycle detection with batched gcds (m steps per gcd).
    std::optional<BigInt> brent(const BigInt& n, unsigned long c)
    {
        constexpr std::uint64_t m = 128;
        BigInt y = 2, x, ys, q = 1, g = 1, diff;
        std::uint64_t r = 1;
        auto step = [&](BigInt& v) {
            v = v * v + c;
            mpz_mod(v.get_mpz_t(), v.get_mpz_t(), n.get_mpz_t());
        };
        while (g == 1) {
            x = y;
            for (std::uint64_t i = 0; i < r; ++i)
                step(y);
            std::uint64_t k = 0;
            while (k < r && g == 1) {
                ys = y;
                const std::uint64_t lim = std::min(m, r - k);
                for (std::uint64_t i = 0; i < lim; ++i) {
                    step(y);
                    diff = x - y;
                    q = q * abs(diff) % n;
                }
                if (used_ + lim > budget_) return std::nullopt;
                used_ += lim;
                g = gcd(q, n);
                k += lim;
            }
            r *= 2;
        }
        if (g == n) {
            do {
                step(ys);
                diff = x - ys;
                g = gcd(abs(diff), n);
            } while (g == 1);
        }
        return g;
    }

    std::uint64_t budget_;
    std::uint64_t used_ = 0;
};

bool factor_into(const BigInt& n, std::map<BigInt, unsigned>& out, unsigned multiplicity, RhoFactorizer& rho)
{
    if (n == 1) return true;
    if (is_probable_prime(n)) {
        out[n] += multiplicity;
        return true;
    }
    if (auto [root, k] = perfect_power(n); k > 1) return factor_into(root, out, multiplicity * k, rho);
    auto f = rho.split(n);
    if (!f) return false;
    const BigInt other = n / *f;
    return factor_into(*f, out, multiplicity, rho) && factor_into(other, out, multiplicity, rho);
}

} // namespace

const char* to_string(Squarefree s) noexcept
{
    switch (s) {
    case Squarefree::yes: return "true";
    case Squarefree::no: return "false";
    case Squarefree::unknown: return "unknown";
    }
    return "unknown";
}

bool is_probable_prime(const BigInt& n)
{
    if (n < 2) return false;
    static constexpr unsigned long bases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71};
    for (auto p : bases) {
        if (n == p) return true;
        if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;
    }
    BigInt d = n - 1;
    const std::size_t s = mpz_scan1(d.get_mpz_t(), 0);
    mpz_tdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);
    // The first 13 prime bases are a proof below 3.3e24.
    for (auto b : bases)
        if (!miller_rabin_round(n, d, s, b)) return false;
    return true;
}

std::optional<std::vector<std::pair<BigInt, unsigned>>> factorize(const BigInt& z, const FactorBudget& budget)
{
    if (z == 0) throw PreconditionError("factorize: argument is zero");
    BigInt n = abs(z);
    if (mpz_sizeinbase(n.get_mpz_t(), 2) > budget.max_bits) return std::nullopt;

    std::map<BigInt, unsigned> found;
    for (auto p : small_primes()) {
        if (n == 1) break;
        if (BigInt(p) * p > n) break;
        unsigned e = 0;
        while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
            ++e;
        }
        if (e) found[BigInt(p)] = e;
    }
    RhoFactorizer rho(budget.max_rho_iterations);
    if (!factor_into(n, found, 1, rho)) return std::nullopt;
    return std::vector<std::pair<BigInt, unsigned>>(found.begin(), found.end());
}

Squarefree is_squarefree(const BigInt& z, const FactorBudget& budget)
{
    if (z == 0) throw PreconditionError("is_squarefree: argument is zero");
    BigInt n = abs(z);
    if (mpz_sizeinbase(n.get_mpz_t(), 2) > budget.max_bits) return Squarefree::unknown;
    if (perfect_power(n).second > 1) return Squarefree::no;

    for (auto p : small_primes()) {
        if (n == 1) return Squarefree::yes;
        if (BigInt(p) * p > n) return Squarefree::yes; // what remains is 1 or prime
        if (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
            if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return Squarefree::no;
        }
    }
    if (n == 1) return Squarefree::yes;

    // All prime factors now exceed 1e6.
    std::map<BigInt, unsigned> found;
    RhoFactorizer rho(budget.max_rho_iterations);
    if (!factor_into(n, found, 1, rho)) return Squarefree::unknown;
    return std::all_of(found.begin(), found.end(), [](const auto& pe) { return pe.second == 1; }) ? Squarefree::yes
                                                                                                   : Squarefree::no;
}

} // namespace dgs
