#pragma once

#include "dgs/exact_linalg.hpp"
#include "dgs/graph.hpp"

#include <optional>

namespace dgs {

/// W = [e, Ae, ..., A^{n-1}e]; column j counts walks of length j.
BigIntMatrix walk_matrix(const Graph& g);

/// W with columns 1..n-1 halved; requires every degree even.
BigIntMatrix reduced_walk_matrix(const Graph& g);

/// Integer lift of the square-root polynomial: the characteristic polynomial's
/// even-index coefficients placed at halved exponents (n even), or shifted by
/// one more power of x (n odd). Coefficients are exact integers, not residues.
IntPolynomial varphi_integer_lift(const IntPolynomial& phi, std::size_t n);

struct HatWalkMatrix {
    BigIntMatrix matrix;
    BigInt det;
};

/// Even n, even degrees: [e, Ae/2, ..., A^{n/2}e/2, v(A)Ae/4, ..., v(A)A^{n/2-1}e/4]
/// with v the integer lift above. Throws InvariantError if a compressed column
/// is not integral or det W != 2^{3n/2-2} det.
HatWalkMatrix hat_walk_matrix(const Graph& g);
HatWalkMatrix hat_walk_matrix(const Graph& g, const IntPolynomial& phi);

/// Exact mod-4 congruence behind the compressed columns:
///   n even: v(A)Ae ≡ 0 (mod 4);
///   n odd:  v'(A)e ≡ 0 (mod 4) with v' = v - e^T A e when phi mod 2 has x to
///           the first power exactly, v' = v otherwise.
bool mod4_congruence_check(const Graph& g);
bool mod4_congruence_check(const Graph& g, const IntPolynomial& phi);

struct WalkMatrices {
    BigIntMatrix W;
    std::optional<BigIntMatrix> Wbar;
    std::optional<BigIntMatrix> What;
    BigInt detW;
    std::optional<BigInt> detWbar;
    std::optional<BigInt> detWhat;
};

/// W always; W̄ when degrees are even; Ŵ additionally when n is even.
WalkMatrices walk_matrices(const Graph& g);

} // namespace dgs
