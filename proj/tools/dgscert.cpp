// dgscert: command-line front end for the certification pipelines.
//
// Exit codes: 0 success, 1 graph/format/usage error, 2 hypothesis not met
// (inconclusive), 3 internal invariant violation.

#include "dgs/certify.hpp"
#include "dgs/error.hpp"
#include "dgs/f2.hpp"
#include "dgs/json_io.hpp"
#include "dgs/oracle.hpp"
#include "dgs/ortho_level.hpp"
#include "dgs/walk.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace dgs;

enum Exit { ok = 0, format_error = 1, hypothesis = 2, invariant = 3 };

std::string read_source(const std::string& arg)
{
    std::error_code ec;
    if (!std::filesystem::is_regular_file(arg, ec)) return arg;
    std::ifstream in(arg, std::ios::binary);
    if (!in) throw FormatError(FormatError::Kind::io, "cannot read " + arg);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Graph load_graph(const std::string& arg, const std::string& format)
{
    const std::string text = read_source(arg);
    if (format == "graph6") return parse_graph6(text);
    if (format == "edges") return parse_edge_list(text);
    return parse_graph(text, sniff_format(text));
}

void print_json(const Json& j) { std::cout << j.dump(2) << '\n'; }

std::string join(const std::vector<BigInt>& v)
{
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? " " : "") + v[i].get_str();
    return s;
}

void print_matrix(const char* name, const BigIntMatrix& m)
{
    std::cout << name << ":\n";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j)
            std::cout << (j ? " " : "  ") << m(i, j).get_str();
        std::cout << '\n';
    }
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

template <class T>
std::string opt(const std::optional<T>& v)
{
    if (!v) return "n/a";
    if constexpr (std::is_same_v<T, bool>)
        return *v ? "yes" : "no";
    else
        return std::to_string(*v);
}

// --- subcommands --------------------------------------------------------------

int cmd_certify(const Graph& g, const std::string& theorem, unsigned budget_bits, bool json)
{
    FactorBudget budget;
    budget.max_bits = budget_bits;
    DgsCertificate cert;
    if (theorem == "wang") {
        cert = certify_wang(g, budget);
    } else {
        cert = certify_main(g, budget);
        if (theorem == "auto" && cert.verdict == Verdict::inconclusive) {
            auto wang = certify_wang(g, budget);
            if (wang.verdict != Verdict::inconclusive) cert = std::move(wang);
        }
    }
    if (json) {
        print_json(to_json(cert));
    } else {
        std::cout << "n             " << cert.n << '\n'
                  << "det W         " << cert.detW.get_str() << '\n'
                  << "v2            " << cert.v2 << '\n'
                  << "odd part      " << cert.odd_part.get_str() << '\n'
                  << "square-free   " << to_string(cert.squarefree) << '\n'
                  << "eulerian      " << yes_no(cert.is_eulerian) << '\n'
                  << "member        " << yes_no(cert.sigma_member) << '\n'
                  << "theorem       " << to_string(cert.theorem) << '\n'
                  << "verdict       " << to_string(cert.verdict) << '\n';
        if (cert.snf_W) std::cout << "SNF(W)        " << join(cert.snf_W->invariant_factors) << '\n';
        if (cert.snf_Wbar) std::cout << "SNF(Wbar)     " << join(cert.snf_Wbar->invariant_factors) << '\n';
        if (cert.via_complement) std::cout << "(computed on the complement)\n";
        for (const auto& r : cert.reasons)
            std::cout << "reason: " << r << '\n';
    }
    return cert.verdict == Verdict::inconclusive ? hypothesis : ok;
}

int cmd_charpoly(const Graph& g, bool of_complement, bool json)
{
    const auto p = char_poly(of_complement ? complement(g) : g);
    if (json)
        print_json(to_json(p));
    else
        std::cout << p.to_string() << '\n';
    return ok;
}

int cmd_walkmatrix(const Graph& g, bool json)
{
    const auto m = walk_matrices(g);
    const auto snf = smith_normal_form(m.W);
    std::optional<SmithNormalForm> snf_bar;
    if (m.Wbar) snf_bar = smith_normal_form(*m.Wbar);
    if (json) {
        Json j = {{"W", to_json(m.W)}, {"detW", to_json(m.detW)}, {"snf_W", to_json(snf)}};
        j["Wbar"] = m.Wbar ? to_json(*m.Wbar) : Json(nullptr);
        j["detWbar"] = m.detWbar ? to_json(*m.detWbar) : Json(nullptr);
        j["snf_Wbar"] = snf_bar ? to_json(*snf_bar) : Json(nullptr);
        j["What"] = m.What ? to_json(*m.What) : Json(nullptr);
        j["detWhat"] = m.detWhat ? to_json(*m.detWhat) : Json(nullptr);
        print_json(j);
        return ok;
    }
    print_matrix("W", m.W);
    std::cout << "det W = " << m.detW.get_str() << "\nSNF(W) = " << join(snf.invariant_factors) << '\n';
    if (m.Wbar) {
        print_matrix("Wbar", *m.Wbar);
        std::cout << "det Wbar = " << m.detWbar->get_str() << "\nSNF(Wbar) = " << join(snf_bar->invariant_factors)
                  << '\n';
    }
    if (m.What) {
        print_matrix("What", *m.What);
        std::cout << "det What = " << m.detWhat->get_str() << '\n';
    }
    return ok;
}

int cmd_annihilate(const Graph& g, bool json)
{
    const auto r = check_annihilation(g);
    if (json) {
        print_json(to_json(r));
    } else {
        std::cout << "phi mod 2        " << r.phi_mod2.to_string() << '\n'
                  << "varphi           " << r.varphi.to_string() << '\n'
                  << "k                " << r.k << '\n'
                  << "phi1             " << r.phi1.to_string() << '\n'
                  << "varphi(A) = 0    " << yes_no(r.varphi_at_A_is_zero) << '\n'
                  << "minpoly          " << r.minpoly.to_string() << '\n'
                  << "minpoly | varphi " << yes_no(r.minpoly_divides_varphi) << '\n'
                  << "odd-k check      " << opt(r.theorem9_holds) << '\n'
                  << "k = 1 check      " << opt(r.remark2_holds) << '\n'
                  << "rank2 A          " << opt(r.rank_A) << '\n';
    }
    return r.all_hold() ? ok : invariant;
}

int cmd_cospectral(const Graph& g, const Graph& h, bool json)
{
    const bool same = verify_generalized_cospectral(g, h);
    if (json)
        print_json({{"generalized_cospectral", same}});
    else
        std::cout << (same ? "generalized cospectral" : "not generalized cospectral") << '\n';
    return ok;
}

int cmd_level_pair(const Graph& g, const Graph& h, unsigned budget_bits, bool json)
{
    FactorBudget budget;
    budget.max_bits = budget_bits;
    const auto r = level_divisibility_check(g, h, budget);
    if (json) {
        print_json(to_json(r));
    } else {
        std::cout << "level            " << r.level.get_str() << '\n'
                  << "d_n(W(G))        " << r.dn.get_str() << '\n'
                  << "level | d_n      " << yes_no(r.level_divides_dn) << '\n'
                  << "member           " << yes_no(r.sigma_member) << '\n'
                  << "level | 4        " << opt(r.level_divides_4) << '\n'
                  << "level = 1        " << opt(r.level_is_one) << '\n'
                  << "isomorphic       " << opt(r.isomorphic) << '\n'
                  << "orthogonal       " << yes_no(r.orthogonal) << '\n'
                  << "regular          " << yes_no(r.regular) << '\n'
                  << "conjugates A, B  " << yes_no(r.conjugates) << '\n';
    }
    return r.all_hold() ? ok : invariant;
}

int cmd_level_matrix(const std::string& path, bool json)
{
    const auto q = parse_rational_matrix(read_source(path));
    const auto l = level(q);
    const bool orth = is_orthogonal(q), reg = is_regular(q);
    if (json)
        print_json({{"level", to_json(l.level)}, {"orthogonal", orth}, {"regular", reg}});
    else
        std::cout << "level " << l.level.get_str() << "\northogonal " << yes_no(orth) << "\nregular " << yes_no(reg)
                  << '\n';
    return ok;
}

int cmd_mates(std::size_t n, bool cospectral_only, unsigned workers, bool json)
{
    oracle::MateSearchOptions o;
    o.bucketing = cospectral_only ? oracle::Bucketing::cospectral_only : oracle::Bucketing::generalized;
    o.workers = workers;
    const auto r = oracle::exhaustive_mate_search(n, o);
    if (json) {
        print_json(to_json(r));
    } else {
        std::cout << "n=" << n << " labeled=" << r.labeled_graphs << " buckets=" << r.buckets
                  << " classes=" << r.classes.size() << " pairs=" << r.pairs.size() << '\n';
        for (const auto& [a, b] : r.pairs)
            std::cout << write_graph6(a) << ' ' << write_graph6(b) << '\n';
    }
    return ok;
}

int cmd_gen(std::size_t n, std::uint64_t seed, bool connected, bool any_degrees, const std::string& format)
{
    const Graph g = any_degrees ? random_graph(n, seed) : random_even_graph(n, seed, connected);
    const auto out = write_graph(g, format == "edges" ? GraphFormat::edge_list : GraphFormat::graph6);
    std::cout << out;
    if (out.empty() || out.back() != '\n') std::cout << '\n';
    return ok;
}

int cmd_oracle(const std::string& suite, std::size_t samples, std::uint64_t seed, unsigned workers, bool json)
{
    oracle::HarnessOptions o;
    o.samples = samples;
    o.seed = seed;
    o.workers = workers;
    const auto r = oracle::property_harness(oracle::suite_from_string(suite), o);
    if (json) {
        print_json(to_json(r));
    } else {
        std::cout << oracle::to_string(r.suite) << ": " << r.passed << "/" << r.applicable << " passed, " << r.failed
                  << " failed, " << r.skipped << " skipped (n in [" << r.min_n << ", " << r.max_n << "], seed "
                  << r.seed << ")\n";
        for (const auto& c : r.counterexamples)
            std::cout << "counterexample " << c << '\n';
    }
    return r.ok() ? ok : invariant;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Spectral characterization certificates for graphs"};
    app.require_subcommand(1);

    bool json = false;
    std::string format = "auto";
    const std::vector<std::string> formats{"auto", "graph6", "edges"};

    std::string g_arg, h_arg, matrix_path, theorem = "auto", suite;
    unsigned budget = 256, workers = 1;
    std::size_t n = 0, samples = 500;
    std::uint64_t seed = 7;
    bool of_complement = false, cospectral_only = false, connected = false, any_degrees = false;

    auto add_common = [&](CLI::App* sub) {
        sub->add_flag("--json", json, "JSON output");
        sub->add_option("--format", format, "input format")->check(CLI::IsMember(formats));
    };

    auto* certify = app.add_subcommand("certify", "certify a graph as determined by its generalized spectrum");
    certify->add_option("graph", g_arg, "graph file or inline graph6")->required();
    certify->add_option("--theorem", theorem, "auto, main or wang")
        ->check(CLI::IsMember({"auto", "main", "wang"}));
    certify->add_option("--budget", budget, "factorization bit budget")->check(CLI::PositiveNumber);
    add_common(certify);

    auto* charpoly = app.add_subcommand("charpoly", "characteristic polynomial");
    charpoly->add_option("graph", g_arg)->required();
    charpoly->add_flag("--complement", of_complement, "use the complement");
    add_common(charpoly);

    auto* walkmatrix = app.add_subcommand("walkmatrix", "walk matrices, determinants and Smith forms");
    walkmatrix->add_option("graph", g_arg)->required();
    add_common(walkmatrix);

    auto* annihilate = app.add_subcommand("annihilate", "annihilating polynomials over GF(2)");
    annihilate->add_option("graph", g_arg)->required();
    add_common(annihilate);

    auto* cospectral = app.add_subcommand("cospectral", "test generalized cospectrality");
    cospectral->add_option("G", g_arg)->required();
    cospectral->add_option("H", h_arg)->required();
    add_common(cospectral);

    auto* levelcmd = app.add_subcommand("level", "level of the orthogonal matrix relating G and H");
    levelcmd->add_option("G", g_arg);
    levelcmd->add_option("H", h_arg);
    levelcmd->add_option("--matrix", matrix_path, "rational matrix file (num/den tokens)");
    levelcmd->add_option("--budget", budget)->check(CLI::PositiveNumber);
    add_common(levelcmd);

    auto* mates = app.add_subcommand("mates", "exhaustive generalized-cospectral mate search, n <= 7");
    mates->add_option("n", n)->required();
    mates->add_flag("--cospectral-only", cospectral_only, "bucket by the spectrum of G alone");
    mates->add_option("--workers", workers)->check(CLI::PositiveNumber);
    mates->add_flag("--json", json);

    auto* gen = app.add_subcommand("gen", "seeded random even-degree graph");
    gen->add_option("n", n)->required()->check(CLI::PositiveNumber);
    gen->add_option("--seed", seed);
    gen->add_flag("--connected", connected, "retry until connected");
    gen->add_flag("--any-degrees", any_degrees, "plain G(n, 1/2) sample");
    gen->add_option("--format", format)->check(CLI::IsMember({"graph6", "edges"}));

    auto* oraclecmd = app.add_subcommand("oracle", "property suites over seeded random graphs");
    oraclecmd->add_option("--suite", suite)
        ->required()
        ->check(CLI::IsMember({"thm4", "thm9", "remark2", "eq2", "valuation", "snf-shape"}));
    oraclecmd->add_option("--samples", samples)->check(CLI::PositiveNumber);
    oraclecmd->add_option("--seed", seed);
    oraclecmd->add_option("--workers", workers)->check(CLI::PositiveNumber);
    oraclecmd->add_flag("--json", json);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? ok : format_error;
    }

    try {
        if (*certify) return cmd_certify(load_graph(g_arg, format), theorem, budget, json);
        if (*charpoly) return cmd_charpoly(load_graph(g_arg, format), of_complement, json);
        if (*walkmatrix) return cmd_walkmatrix(load_graph(g_arg, format), json);
        if (*annihilate) return cmd_annihilate(load_graph(g_arg, format), json);
        if (*cospectral) return cmd_cospectral(load_graph(g_arg, format), load_graph(h_arg, format), json);
        if (*levelcmd) {
            if (!matrix_path.empty()) return cmd_level_matrix(matrix_path, json);
            if (g_arg.empty() || h_arg.empty()) {
                std::cerr << "level: give G and H, or --matrix FILE\n";
                return format_error;
            }
            return cmd_level_pair(load_graph(g_arg, format), load_graph(h_arg, format), budget, json);
        }
        if (*mates) return cmd_mates(n, cospectral_only, workers, json);
        if (*gen) return cmd_gen(n, seed, connected, any_degrees, format);
        if (*oraclecmd) return cmd_oracle(suite, samples, seed, workers, json);
    } catch (const FormatError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return format_error;
    } catch (const HypothesisError& e) {
        std::cerr << "hypothesis not met: " << e.what() << '\n';
        return hypothesis;
    } catch (const PreconditionError& e) {
        std::cerr << "hypothesis not met: " << e.what() << '\n';
        return hypothesis;
    } catch (const InvariantError& e) {
        std::cerr << "internal invariant violated: " << e.what() << '\n';
        return invariant;
    }
    return ok;
}
