#pragma once

// Small independent helpers shared by the tests. Nothing here calls into the
// library's algorithms; they exist so results can be checked by a second route.

#include "dgs/exact_linalg.hpp"
#include "dgs/graph.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace testing {

using IntMat = std::vector<std::vector<std::int64_t>>;

inline IntMat adjacency(const dgs::Graph& g)
{
    const auto n = g.order();
    IntMat a(n, std::vector<std::int64_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            a[i][j] = g.adjacent(i, j);
    return a;
}

inline std::string read_file(const std::string& path)
{
    std::string s;
    if (FILE* f = std::fopen(path.c_str(), "rb")) {
        char buf[4096];
        std::size_t k;
        while ((k = std::fread(buf, 1, sizeof buf, f)) > 0)
            s.append(buf, k);
        std::fclose(f);
    }
    return s;
}

inline std::string fixture(const std::string& name) { return read_file(std::string(DGS_FIXTURES) + "/" + name); }

/// Cofactor expansion along the first row; fine for n ≤ 6.
inline dgs::BigInt cofactor_det(const dgs::BigIntMatrix& m)
{
    const auto n = m.rows();
    if (n == 0) return 1;
    if (n == 1) return m(0, 0);
    dgs::BigInt sum = 0;
    for (std::size_t c = 0; c < n; ++c) {
        dgs::BigIntMatrix minor(n - 1, n - 1);
        for (std::size_t i = 1; i < n; ++i)
            for (std::size_t j = 0, jj = 0; j < n; ++j)
                if (j != c) minor(i - 1, jj++) = m(i, j);
        const dgs::BigInt term = m(0, c) * cofactor_det(minor);
        if (c % 2) sum -= term; else sum += term;
    }
    return sum;
}

inline dgs::BigIntMatrix random_int_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, int lo, int hi)
{
    std::uniform_int_distribution<int> d(lo, hi);
    dgs::BigIntMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
            m(i, j) = d(rng);
    return m;
}

} // namespace testing
