#include "dgs/f2.hpp"
#include "dgs/f2_kernels.hpp"

#include <doctest.h>

#include <random>

using namespace dgs;
using namespace dgs::f2;

namespace {

std::vector<std::uint64_t> random_words(std::mt19937_64& rng, std::size_t n)
{
    std::vector<std::uint64_t> v(n);
    for (auto& w : v)
        w = rng();
    return v;
}

} // namespace

TEST_CASE("scalar backend is always available and listed first")
{
    const auto b = available_backends();
    REQUIRE(!b.empty());
    CHECK(b.front() == Backend::scalar);
    CHECK(kernels_for(Backend::scalar) == &scalar_kernels());
}

TEST_CASE("every backend matches the scalar kernels")
{
    const auto& ref = scalar_kernels();
    std::mt19937_64 rng(99);
    for (auto backend : available_backends()) {
        const KernelTable* k = kernels_for(backend);
        REQUIRE(k != nullptr);
        CAPTURE(k->name);
        // odd lengths and offsets exercise unaligned heads and tails
        for (std::size_t words = 0; words <= 37; ++words)
            for (std::size_t offset = 0; offset < 3; ++offset) {
                auto a = random_words(rng, words + offset), b = random_words(rng, words + offset);
                auto a2 = a;
                ref.xor_into(a.data() + offset, b.data() + offset, words);
                k->xor_into(a2.data() + offset, b.data() + offset, words);
                CHECK(a == a2);
                CHECK(ref.dot_parity(a.data() + offset, b.data() + offset, words) ==
                      k->dot_parity(a.data() + offset, b.data() + offset, words));
                CHECK(ref.is_zero(a.data() + offset, words) == k->is_zero(a.data() + offset, words));
                std::vector<std::uint64_t> z(words + offset, 0);
                CHECK(k->is_zero(z.data() + offset, words));
                if (words) {
                    z[offset + words - 1] = std::uint64_t{1} << 63;
                    CHECK(!k->is_zero(z.data() + offset, words));
                }
            }
        for (std::size_t inner = 1; inner <= 200; inner += 13) {
            const std::size_t out_words = 1 + rng() % 9, stride = out_words + rng() % 3;
            const auto row = random_words(rng, (inner + 63) / 64);
            const auto b = random_words(rng, inner * stride);
            std::vector<std::uint64_t> o1(out_words, 0), o2(out_words, 0);
            ref.row_times_matrix(row.data(), inner, b.data(), stride, o1.data(), out_words);
            k->row_times_matrix(row.data(), inner, b.data(), stride, o2.data(), out_words);
            CHECK(o1 == o2);
        }
    }
}

TEST_CASE("matrix results do not depend on the backend")
{
    std::mt19937_64 rng(5);
    F2Matrix a(150, 150);
    for (std::size_t i = 0; i < 150; ++i)
        for (std::size_t j = 0; j < 150; ++j)
            a.set(i, j, rng() & 1);

    REQUIRE(select_backend(Backend::scalar));
    const auto p_ref = a * a;
    const auto r_ref = f2_rank(a);
    const auto c_ref = f2_char_poly(a);
    const auto m_ref = f2_min_poly(a);
    for (auto backend : available_backends()) {
        REQUIRE(select_backend(backend));
        CAPTURE(active_kernels().name);
        CHECK(a * a == p_ref);
        CHECK(f2_rank(a) == r_ref);
        CHECK(f2_char_poly(a) == c_ref);
        CHECK(f2_min_poly(a) == m_ref);
    }
    select_backend(available_backends().back());
}
