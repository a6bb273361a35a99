#pragma once

#include "dgs/exact_linalg.hpp"
#include "dgs/graph.hpp"

#include <string_view>

namespace dgs {

struct LevelResult {
    BigInt level;
    BigIntMatrix scaled_is_integral_witness; ///< level * Q
};

/// Q = W(G) W(H)^{-1}. Also checks Q W(H) = W(G) and, when Q is orthogonal,
/// Q^T W(G) = W(H); a failure of either is an InvariantError.
/// Throws HypothesisError (with the rank) if W(H) is singular.
RationalMatrix regular_orthogonal_from_walks(const Graph& g, const Graph& h);

bool is_orthogonal(const RationalMatrix& q);
/// Every row sum equals one (Qe = e).
bool is_regular(const RationalMatrix& q);
/// 0/1 entries with exactly one 1 per row and column.
bool is_permutation(const RationalMatrix& q);

/// Least k > 0 with kQ integral: the lcm of the reduced denominators.
LevelResult level(const RationalMatrix& q);

/// Q^T A(G) Q == A(H), exactly.
bool check_conjugation(const RationalMatrix& q, const Graph& g, const Graph& h);

/// Rows of whitespace-separated `num/den` (or integer) tokens, one row per line.
RationalMatrix parse_rational_matrix(std::string_view text);
std::string write_rational_matrix(const RationalMatrix& q);

} // namespace dgs
