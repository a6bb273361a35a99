#pragma once

#include "dgs/exact_linalg.hpp"
#include "dgs/factor.hpp"
#include "dgs/graph.hpp"

#include <optional>
#include <string>
#include <vector>

namespace dgs {

enum class Theorem { wang, eulerian_main, none };
enum class Verdict { dgs, dgs_among_eulerian, inconclusive };

const char* to_string(Theorem t) noexcept;
const char* to_string(Verdict v) noexcept;

/// Outcome of one certification attempt. Emitted on every path, with the
/// reasons explaining an inconclusive verdict.
struct DgsCertificate {
    std::size_t n = 0;
    bool is_eulerian = false;
    bool all_degrees_even = false;
    BigInt detW = 0;
    std::size_t v2 = 0;   ///< meaningful when detW != 0
    BigInt odd_part = 0;  ///< signed; 0 when detW == 0
    Squarefree squarefree = Squarefree::unknown;
    bool sigma_member = false;
    Theorem theorem = Theorem::none;
    Verdict verdict = Verdict::inconclusive;
    std::vector<std::string> reasons;
    std::optional<SmithNormalForm> snf_W;
    std::optional<SmithNormalForm> snf_Wbar;
    std::optional<BigInt> b;
    /// Result of the SNF template comparison, recorded for Σn members.
    std::optional<bool> snf_shape_ok;
    /// Set when every degree was odd and the numbers above describe the complement.
    bool via_complement = false;

    friend bool operator==(const DgsCertificate&, const DgsCertificate&) = default;
};

/// Required 2-adic valuation of det W for the Eulerian criterion: floor((3n-3)/2).
std::size_t eulerian_valuation(std::size_t n) noexcept;

/// Eulerian criterion: even degrees (connectivity not required), det W with
/// valuation exactly floor((3n-3)/2) and square-free odd part.
DgsCertificate certify_main(const Graph& g, const FactorBudget& budget = {});

/// General criterion: det W with valuation exactly floor(n/2) and
/// square-free odd part.
DgsCertificate certify_wang(const Graph& g, const FactorBudget& budget = {});

/// SNF(W) = diag(1, 2 (x ceil((n+1)/2)-1), 4 (x floor((n-1)/2)-1), 4b) and
/// SNF(W̄) = diag(1 (x ceil((n+1)/2)), 2 (x floor((n-1)/2)-1), 2b).
/// Requires cert.sigma_member.
bool snf_shape_check(const Graph& g, const DgsCertificate& cert);

/// Expected invariant factors for a Σn member with odd part b.
std::vector<BigInt> expected_snf_W(std::size_t n, const BigInt& b);
std::vector<BigInt> expected_snf_Wbar(std::size_t n, const BigInt& b);

/// Equal characteristic polynomials for the graphs and for their complements.
bool verify_generalized_cospectral(const Graph& g, const Graph& h);

struct LevelDivisibilityReport {
    BigInt level;
    BigInt dn;                          ///< last invariant factor of W(G)
    bool level_divides_dn = false;
    bool sigma_member = false;
    std::optional<bool> level_divides_4;  ///< when G is a Σn member
    bool h_even_degree = false;
    std::optional<bool> level_is_one;     ///< when G ∈ Σn and H has even degrees
    std::optional<bool> isomorphic;       ///< brute force, n ≤ 10
    bool orthogonal = false;
    bool regular = false;
    bool conjugates = false;

    bool all_hold() const noexcept
    {
        return orthogonal && regular && conjugates && level_divides_dn && level_divides_4.value_or(true) &&
               level_is_one.value_or(true);
    }
};

/// Builds Q for a generalized-cospectral pair and checks the level against
/// d_n(W(G)), against 4 for Σn members, and against 1 when H has even degrees.
/// Throws HypothesisError listing the unmet hypotheses.
LevelDivisibilityReport level_divisibility_check(const Graph& g, const Graph& h, const FactorBudget& budget = {});

} // namespace dgs
