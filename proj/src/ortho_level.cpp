#include "dgs/ortho_level.hpp"

#include "dgs/error.hpp"
#include "dgs/walk.hpp"

#include <sstream>

namespace dgs {

RationalMatrix regular_orthogonal_from_walks(const Graph& g, const Graph& h)
{
    if (g.order() != h.order()) throw PreconditionError("regular_orthogonal_from_walks: orders differ");
    const BigIntMatrix wg = walk_matrix(g);
    const BigIntMatrix wh = walk_matrix(h);
    const RationalMatrix q = to_rational(wg) * invert_rational(wh);
    if (!(q * to_rational(wh) == to_rational(wg))) throw InvariantError("regular_orthogonal_from_walks: Q W(H) != W(G)");
    if (is_orthogonal(q) && !(q.transpose() * to_rational(wg) == to_rational(wh)))
        throw InvariantError("regular_orthogonal_from_walks: Q^T W(G) != W(H)");
    return q;
}

bool is_orthogonal(const RationalMatrix& q)
{
    if (!q.square()) return false;
    return q.transpose() * q == RationalMatrix::identity(q.rows());
}

bool is_regular(const RationalMatrix& q)
{
    for (std::size_t i = 0; i < q.rows(); ++i) {
        Rational s = 0;
        for (std::size_t j = 0; j < q.cols(); ++j)
            s += q(i, j);
        if (s != 1) return false;
    }
    return q.rows() > 0;
}

bool is_permutation(const RationalMatrix& q)
{
    if (!q.square()) return false;
    const std::size_t n = q.rows();
    std::vector<int> col_hits(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        int row_hits = 0;
        for (std::size_t j = 0; j < n; ++j) {
            if (q(i, j) == 0) continue;
            if (q(i, j) != 1) return false;
            ++row_hits;
            ++col_hits[j];
        }
        if (row_hits != 1) return false;
    }
    for (auto c : col_hits)
        if (c != 1) return false;
    return true;
}

LevelResult level(const RationalMatrix& q)
{
    LevelResult r{1, BigIntMatrix(q.rows(), q.cols())};
    for (std::size_t i = 0; i < q.rows(); ++i)
        for (std::size_t j = 0; j < q.cols(); ++j)
            r.level = lcm(r.level, q(i, j).get_den());
    for (std::size_t i = 0; i < q.rows(); ++i)
        for (std::size_t j = 0; j < q.cols(); ++j) {
            const Rational scaled = q(i, j) * Rational(r.level);
            if (scaled.get_den() != 1) throw InvariantError("level: scaled matrix is not integral");
            r.scaled_is_integral_witness(i, j) = scaled.get_num();
        }
    return r;
}

bool check_conjugation(const RationalMatrix& q, const Graph& g, const Graph& h)
{
    if (!q.square() || q.rows() != g.order() || g.order() != h.order()) return false;
    return q.transpose() * to_rational(adjacency_matrix(g)) * q == to_rational(adjacency_matrix(h));
}

RationalMatrix parse_rational_matrix(std::string_view text)
{
    std::vector<std::vector<Rational>> rows;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        std::string tok;
        std::vector<Rational> row;
        while (ls >> tok) {
            Rational v;
            if (v.set_str(tok, 10) != 0 || tok.find_first_not_of("+-0123456789/") != std::string::npos)
                throw FormatError(FormatError::Kind::bad_token,
                                  "rational matrix: bad token '" + tok + "' on line " + std::to_string(lineno));
            if (v.get_den() == 0)
                throw FormatError(FormatError::Kind::bad_token, "rational matrix: zero denominator on line " +
                                                                    std::to_string(lineno));
            v.canonicalize();
            row.push_back(v);
        }
        if (!row.empty()) rows.push_back(std::move(row));
    }
    if (rows.empty()) throw FormatError(FormatError::Kind::malformed_header, "rational matrix: no rows");
    RationalMatrix q(rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != q.cols())
            throw FormatError(FormatError::Kind::bad_token, "rational matrix: row " + std::to_string(i + 1) +
                                                                " has a different length");
        for (std::size_t j = 0; j < q.cols(); ++j)
            q(i, j) = rows[i][j];
    }
    return q;
}

std::string write_rational_matrix(const RationalMatrix& q)
{
    std::ostringstream os;
    for (std::size_t i = 0; i < q.rows(); ++i) {
        for (std::size_t j = 0; j < q.cols(); ++j) {
            if (j) os << ' ';
            os << q(i, j).get_num().get_str() << '/' << q(i, j).get_den().get_str();
        }
        os << '\n';
    }
    return os.str();
}

} // namespace dgs
