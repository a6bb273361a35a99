#include "dgs/certify.hpp"

#include "dgs/error.hpp"
#include "dgs/ortho_level.hpp"
#include "dgs/walk.hpp"

#include <algorithm>

namespace dgs {

const char* to_string(Theorem t) noexcept
{
    switch (t) {
    case Theorem::wang: return "wang";
    case Theorem::eulerian_main: return "eulerian-main";
    case Theorem::none: return "none";
    }
    return "none";
}

const char* to_string(Verdict v) noexcept
{
    switch (v) {
    case Verdict::dgs: return "DGS";
    case Verdict::dgs_among_eulerian: return "DGS-among-Eulerian";
    case Verdict::inconclusive: return "inconclusive";
    }
    return "inconclusive";
}

std::size_t eulerian_valuation(std::size_t n) noexcept
{
    return (3 * n - 3) / 2;
}

namespace {

std::size_t ceil_half(std::size_t m) { return (m + 1) / 2; }

// Fills the determinant fields; returns false when det W = 0.
// Rho iterations spent on an odd part whose valuation already rules the graph out.
constexpr std::uint64_t courtesy_rho_iterations = 1u << 12;

bool fill_determinant(DgsCertificate& c, const Graph& g, const FactorBudget& budget,
                      std::optional<std::size_t> required_v2)
{
    c.detW = determinant(walk_matrix(g));
    if (c.detW == 0) {
        c.reasons.push_back("det W = 0 (graph is not controllable)");
        return false;
    }
    c.v2 = two_adic_valuation(c.detW);
    c.odd_part = odd_part(c.detW);
    FactorBudget b = budget;
    if (!required_v2 || c.v2 != *required_v2)
        b.max_rho_iterations = std::min(b.max_rho_iterations, courtesy_rho_iterations);
    c.squarefree = is_squarefree(c.odd_part, b);
    return true;
}

// Valuation and square-free test against `required`; true when the hypothesis holds.
bool hypothesis_met(DgsCertificate& c, std::size_t required, const char* formula)
{
    bool ok = true;
    if (c.v2 != required) {
        c.reasons.push_back("v2(det W) = " + std::to_string(c.v2) + " differs from " + formula + " = " +
                            std::to_string(required));
        ok = false;
    }
    if (c.squarefree == Squarefree::no) {
        c.reasons.push_back("odd part " + c.odd_part.get_str() + " is not square-free");
        ok = false;
    } else if (c.squarefree == Squarefree::unknown) {
        c.reasons.push_back("square-free status unknown: factorization budget exceeded");
        ok = false;
    }
    return ok;
}

void fill_degree_flags(DgsCertificate& c, const Graph& g)
{
    c.n = g.order();
    c.all_degrees_even = all_degrees_even(g);
    c.is_eulerian = c.all_degrees_even && is_connected(g);
}

} // namespace

std::vector<BigInt> expected_snf_W(std::size_t n, const BigInt& b)
{
    const std::size_t head = ceil_half(n + 1), tail = (n - 1) / 2;
    std::vector<BigInt> d;
    d.push_back(1);
    for (std::size_t i = 1; i < head; ++i)
        d.push_back(2);
    for (std::size_t i = 0; i + 1 < tail; ++i)
        d.push_back(4);
    if (tail > 0) d.push_back(4 * b);
    return d;
}

std::vector<BigInt> expected_snf_Wbar(std::size_t n, const BigInt& b)
{
    const std::size_t head = ceil_half(n + 1), tail = (n - 1) / 2;
    std::vector<BigInt> d(head, BigInt(1));
    for (std::size_t i = 0; i + 1 < tail; ++i)
        d.push_back(2);
    if (tail > 0) d.push_back(2 * b);
    return d;
}

bool snf_shape_check(const Graph& g, const DgsCertificate& cert)
{
    if (!cert.sigma_member || !cert.b) throw PreconditionError("snf_shape_check: graph is not a certified member");
    if (cert.via_complement) return snf_shape_check(complement(g), [&] {
            auto c = cert;
            c.via_complement = false;
            return c;
        }());
    const std::size_t n = g.order();
    const BigInt& b = *cert.b;
    // With an empty second block the template has no slot for b.
    if ((n - 1) / 2 == 0 && b != 1) return false;
    const auto snf_w = cert.snf_W ? *cert.snf_W : smith_normal_form(walk_matrix(g));
    const auto snf_wbar = cert.snf_Wbar ? *cert.snf_Wbar : smith_normal_form(reduced_walk_matrix(g));
    return snf_w.invariant_factors == expected_snf_W(n, b) && snf_wbar.invariant_factors == expected_snf_Wbar(n, b);
}

DgsCertificate certify_main(const Graph& g, const FactorBudget& budget)
{
    DgsCertificate c;
    fill_degree_flags(c, g);

    if (!c.all_degrees_even) {
        if (all_degrees_odd(g)) {
            DgsCertificate via = certify_main(complement(g), budget);
            via.via_complement = true;
            via.reasons.insert(via.reasons.begin(), "every degree is odd: certified through the complement");
            return via;
        }
        c.reasons.push_back("odd-degree vertex: the Eulerian criterion needs every degree even");
        fill_determinant(c, g, budget, std::nullopt);
        return c;
    }
    if (!fill_determinant(c, g, budget, eulerian_valuation(c.n))) return c;
    if (!hypothesis_met(c, eulerian_valuation(c.n), "floor((3n-3)/2)")) return c;

    c.sigma_member = true;
    c.theorem = Theorem::eulerian_main;
    c.verdict = Verdict::dgs_among_eulerian;
    c.b = abs(c.odd_part);
    if (!c.is_eulerian) c.reasons.push_back("graph is disconnected; every degree is even so the criterion still applies");
    c.snf_W = smith_normal_form(walk_matrix(g));
    c.snf_Wbar = smith_normal_form(reduced_walk_matrix(g));
    c.snf_shape_ok = snf_shape_check(g, c);
    if (!*c.snf_shape_ok) c.reasons.push_back("SNF of W or W-bar does not match the expected template");
    return c;
}

DgsCertificate certify_wang(const Graph& g, const FactorBudget& budget)
{
    DgsCertificate c;
    fill_degree_flags(c, g);
    if (!fill_determinant(c, g, budget, c.n / 2)) return c;
    if (!hypothesis_met(c, c.n / 2, "floor(n/2)")) return c;
    c.theorem = Theorem::wang;
    c.verdict = Verdict::dgs;
    c.snf_W = smith_normal_form(walk_matrix(g));
    return c;
}

bool verify_generalized_cospectral(const Graph& g, const Graph& h)
{
    if (g.order() != h.order()) return false;
    if (g.edge_count() != h.edge_count()) return false;
    return char_poly(g) == char_poly(h) && char_poly(complement(g)) == char_poly(complement(h));
}

LevelDivisibilityReport level_divisibility_check(const Graph& g, const Graph& h, const FactorBudget& budget)
{
    std::string unmet;
    if (g.order() != h.order()) unmet += "graphs have different orders; ";
    else if (!verify_generalized_cospectral(g, h)) unmet += "graphs are not generalized cospectral; ";
    const BigIntMatrix wg = walk_matrix(g);
    if (determinant(wg) == 0) unmet += "G is not controllable (det W(G) = 0); ";
    if (!unmet.empty()) {
        unmet.resize(unmet.size() - 2);
        throw HypothesisError("level_divisibility_check: " + unmet);
    }

    LevelDivisibilityReport r;
    const RationalMatrix q = regular_orthogonal_from_walks(g, h);
    r.orthogonal = is_orthogonal(q);
    r.regular = is_regular(q);
    r.conjugates = check_conjugation(q, g, h);
    r.level = level(q).level;
    r.dn = smith_normal_form(wg).invariant_factors.back();
    r.level_divides_dn = mpz_divisible_p(r.dn.get_mpz_t(), r.level.get_mpz_t());

    const auto cert = certify_main(g, budget);
    r.sigma_member = cert.sigma_member && !cert.via_complement;
    r.h_even_degree = all_degrees_even(h);
    if (r.sigma_member) {
        r.level_divides_4 = mpz_divisible_p(BigInt(4).get_mpz_t(), r.level.get_mpz_t()) != 0;
        if (r.h_even_degree) r.level_is_one = r.level == 1;
    }
    if (g.order() <= isomorphism_guard) r.isomorphic = is_isomorphic_bruteforce(g, h);
    return r;
}

} // namespace dgs
