#include "dgs/error.hpp"
#include "dgs/f2.hpp"

namespace dgs {

namespace {

void require_even_degrees(const Graph& g)
{
    const auto d = degrees(g);
    std::string odd;
    for (std::size_t v = 0; v < d.size(); ++v)
        if (d[v] % 2) odd += (odd.empty() ? "" : ", ") + std::to_string(v);
    if (!odd.empty()) throw PreconditionError("check_annihilation: odd-degree vertices: " + odd);
}

AnnihilationReport build_report(const Graph& g, F2Polynomial phi_mod2, F2Polynomial varphi)
{
    const std::size_t n = g.order();
    AnnihilationReport r;
    r.n = n;
    r.n_even = n % 2 == 0;
    r.is_eulerian = is_connected(g);
    r.phi_mod2 = std::move(phi_mod2);
    r.varphi = std::move(varphi);

    const F2Polynomial square = r.varphi.squared();
    const F2Polynomial expected = r.n_even ? r.phi_mod2 : r.phi_mod2.shifted_up(1);
    if (!(square == expected))
        throw InvariantError("check_annihilation: varphi^2 does not reproduce phi mod 2");

    const auto dec = decompose_phi_mod2(r.phi_mod2);
    r.k = dec.k;
    r.phi1 = dec.phi1;

    const F2Matrix a = reduce_mod2(g);
    r.varphi_at_A_is_zero = f2_eval_poly_at_matrix(r.varphi, a).is_zero();
    r.minpoly = f2_min_poly(a);
    r.minpoly_divides_varphi = r.minpoly.divides(r.varphi);

    if (!r.n_even) {
        r.theorem9_applicable = r.k >= 3 && r.k % 2 == 1;
        if (r.theorem9_applicable) {
            const auto poly = r.phi1.shifted_up((r.k - 1) / 2);
            r.theorem9_holds = f2_eval_poly_at_matrix(poly, a).is_zero();
        } else if (r.k == 1) {
            r.rank_A = f2_rank(a);
            r.remark2_holds = f2_eval_poly_at_matrix(r.phi1, a) == F2Matrix::all_ones(n) && *r.rank_A == n - 1;
        }
    }
    return r;
}

} // namespace

AnnihilationReport check_annihilation(const Graph& g)
{
    require_even_degrees(g);
    const F2Polynomial phi = f2_char_poly(reduce_mod2(g));
    const F2Polynomial target = (g.order() % 2 == 0) ? phi : phi.shifted_up(1);
    return build_report(g, phi, f2_poly_sqrt(target));
}

AnnihilationReport check_annihilation(const Graph& g, const IntPolynomial& phi)
{
    require_even_degrees(g);
    return build_report(g, poly_mod2(phi), varphi_from_charpoly(phi, g.order()));
}

} // namespace dgs
