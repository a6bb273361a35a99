#include "dgs/error.hpp"
#include "dgs/json_io.hpp"

namespace dgs {

namespace {

template <class T, class F>
Json optional_json(const std::optional<T>& v, F&& f)
{
    return v ? f(*v) : Json(nullptr);
}

Theorem theorem_from_string(const std::string& s)
{
    for (auto t : {Theorem::wang, Theorem::eulerian_main, Theorem::none})
        if (s == to_string(t)) return t;
    throw FormatError(FormatError::Kind::bad_token, "unknown theorem '" + s + "'");
}

Verdict verdict_from_string(const std::string& s)
{
    for (auto v : {Verdict::dgs, Verdict::dgs_among_eulerian, Verdict::inconclusive})
        if (s == to_string(v)) return v;
    throw FormatError(FormatError::Kind::bad_token, "unknown verdict '" + s + "'");
}

Squarefree squarefree_from_string(const std::string& s)
{
    for (auto v : {Squarefree::yes, Squarefree::no, Squarefree::unknown})
        if (s == to_string(v)) return v;
    throw FormatError(FormatError::Kind::bad_token, "unknown squarefree value '" + s + "'");
}

} // namespace

Json to_json(const BigInt& z) { return z.get_str(); }

BigInt bigint_from_json(const Json& j)
{
    if (!j.is_string()) throw FormatError(FormatError::Kind::bad_token, "expected a decimal string");
    BigInt z;
    if (z.set_str(j.get<std::string>(), 10) != 0)
        throw FormatError(FormatError::Kind::bad_token, "not a decimal integer: " + j.get<std::string>());
    return z;
}

Json to_json(const IntPolynomial& p)
{
    Json coeffs = Json::array();
    for (const auto& c : p.coefficients())
        coeffs.push_back(to_json(c));
    return {{"text", p.to_string()}, {"ascending", coeffs}};
}

Json to_json(const SmithNormalForm& s)
{
    Json d = Json::array();
    for (const auto& f : s.invariant_factors)
        d.push_back(to_json(f));
    return {{"invariant_factors", d}, {"det_sign", s.det_sign ? Json(*s.det_sign) : Json(nullptr)}};
}

SmithNormalForm snf_from_json(const Json& j)
{
    SmithNormalForm s;
    for (const auto& f : j.at("invariant_factors"))
        s.invariant_factors.push_back(bigint_from_json(f));
    if (!j.at("det_sign").is_null()) s.det_sign = j.at("det_sign").get<int>();
    return s;
}

Json to_json(const BigIntMatrix& m)
{
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json r = Json::array();
        for (std::size_t k = 0; k < m.cols(); ++k)
            r.push_back(to_json(m(i, k)));
        rows.push_back(std::move(r));
    }
    return rows;
}

Json to_json(const DgsCertificate& c)
{
    auto snf = [](const SmithNormalForm& s) { return to_json(s); };
    return {
        {"n", c.n},
        {"is_eulerian", c.is_eulerian},
        {"all_degrees_even", c.all_degrees_even},
        {"detW", to_json(c.detW)},
        {"v2", c.v2},
        {"odd_part", to_json(c.odd_part)},
        {"squarefree", to_string(c.squarefree)},
        {"sigma_member", c.sigma_member},
        {"theorem", to_string(c.theorem)},
        {"verdict", to_string(c.verdict)},
        {"reasons", c.reasons},
        {"snf_W", optional_json(c.snf_W, snf)},
        {"snf_Wbar", optional_json(c.snf_Wbar, snf)},
        {"b", optional_json(c.b, [](const BigInt& b) { return to_json(b); })},
        {"snf_shape_ok", optional_json(c.snf_shape_ok, [](bool v) { return Json(v); })},
        {"via_complement", c.via_complement},
    };
}

DgsCertificate certificate_from_json(const Json& j)
{
    try {
        DgsCertificate c;
        c.n = j.at("n").get<std::size_t>();
        c.is_eulerian = j.at("is_eulerian").get<bool>();
        c.all_degrees_even = j.at("all_degrees_even").get<bool>();
        c.detW = bigint_from_json(j.at("detW"));
        c.v2 = j.at("v2").get<std::size_t>();
        c.odd_part = bigint_from_json(j.at("odd_part"));
        c.squarefree = squarefree_from_string(j.at("squarefree").get<std::string>());
        c.sigma_member = j.at("sigma_member").get<bool>();
        c.theorem = theorem_from_string(j.at("theorem").get<std::string>());
        c.verdict = verdict_from_string(j.at("verdict").get<std::string>());
        c.reasons = j.at("reasons").get<std::vector<std::string>>();
        if (!j.at("snf_W").is_null()) c.snf_W = snf_from_json(j.at("snf_W"));
        if (!j.at("snf_Wbar").is_null()) c.snf_Wbar = snf_from_json(j.at("snf_Wbar"));
        if (!j.at("b").is_null()) c.b = bigint_from_json(j.at("b"));
        if (!j.at("snf_shape_ok").is_null()) c.snf_shape_ok = j.at("snf_shape_ok").get<bool>();
        c.via_complement = j.at("via_complement").get<bool>();
        return c;
    } catch (const nlohmann::json::exception& e) {
        throw FormatError(FormatError::Kind::bad_token, std::string("certificate JSON: ") + e.what());
    }
}

Json to_json(const F2Polynomial& p) { return p.to_string(); }

Json to_json(const AnnihilationReport& r)
{
    return {
        {"n", r.n},
        {"n_even", r.n_even},
        {"is_eulerian", r.is_eulerian},
        {"phi_mod2", to_json(r.phi_mod2)},
        {"varphi", to_json(r.varphi)},
        {"k", r.k},
        {"phi1", to_json(r.phi1)},
        {"varphi_at_A_is_zero", r.varphi_at_A_is_zero},
        {"minpoly", to_json(r.minpoly)},
        {"minpoly_divides_varphi", r.minpoly_divides_varphi},
        {"theorem9_applicable", r.theorem9_applicable},
        {"theorem9_holds", optional_json(r.theorem9_holds, [](bool v) { return Json(v); })},
        {"remark2_holds", optional_json(r.remark2_holds, [](bool v) { return Json(v); })},
        {"rank_A", optional_json(r.rank_A, [](std::size_t v) { return Json(v); })},
        {"all_hold", r.all_hold()},
    };
}

Json to_json(const LevelDivisibilityReport& r)
{
    auto flag = [](bool v) { return Json(v); };
    return {
        {"level", to_json(r.level)},
        {"dn", to_json(r.dn)},
        {"level_divides_dn", r.level_divides_dn},
        {"sigma_member", r.sigma_member},
        {"level_divides_4", optional_json(r.level_divides_4, flag)},
        {"h_even_degree", r.h_even_degree},
        {"level_is_one", optional_json(r.level_is_one, flag)},
        {"isomorphic", optional_json(r.isomorphic, flag)},
        {"orthogonal", r.orthogonal},
        {"regular", r.regular},
        {"conjugates", r.conjugates},
        {"all_hold", r.all_hold()},
    };
}

Json to_json(const oracle::HarnessReport& r)
{
    return {
        {"suite", oracle::to_string(r.suite)},
        {"seed", r.seed},
        {"samples", r.samples},
        {"applicable", r.applicable},
        {"passed", r.passed},
        {"failed", r.failed},
        {"skipped", r.skipped},
        {"min_n", r.min_n},
        {"max_n", r.max_n},
        {"even_n", r.even_n},
        {"counterexamples", r.counterexamples},
        {"ok", r.ok()},
    };
}

Json to_json(const oracle::MateSearchResult& r)
{
    Json pairs = Json::array();
    for (const auto& [g, h] : r.pairs)
        pairs.push_back({write_graph6(g), write_graph6(h)});
    return {
        {"n", r.n},
        {"labeled_graphs", r.labeled_graphs},
        {"buckets", r.buckets},
        {"classes", r.classes.size()},
        {"pairs", pairs},
    };
}

} // namespace dgs
