#pragma once

#include "dgs/exact_linalg.hpp"

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace dgs {

struct FactorBudget {
    /// Inputs wider than this are not attempted; the answer is "unknown".
    std::size_t max_bits = 256;
    /// Total Pollard-rho iterations across all splits.
    std::uint64_t max_rho_iterations = std::uint64_t{1} << 20;
};

enum class Squarefree { yes, no, unknown };

const char* to_string(Squarefree s) noexcept;

/// Miller-Rabin; deterministic below 3.3e24, fixed prime bases above.
bool is_probable_prime(const BigInt& n);

/// Prime factorization of |z| (z != 0) as (prime, exponent) pairs in
/// increasing prime order, or nullopt when the budget is exhausted.
std::optional<std::vector<std::pair<BigInt, unsigned>>> factorize(const BigInt& z, const FactorBudget& budget = {});

/// Square-freeness of |z|: perfect-power pre-check, trial division to 1e6,
/// then Pollard-rho (Brent) with Miller-Rabin on the cofactors. Never guesses.
Squarefree is_squarefree(const BigInt& z, const FactorBudget& budget = {});

} // namespace dgs
