#include "dgs/f2_kernels.hpp"

#include <bit>
#include <cstring>

namespace dgs::f2 {

namespace {

void xor_into_scalar(std::uint64_t* dst, const std::uint64_t* src, std::size_t words)
{
    for (std::size_t i = 0; i < words; ++i)
        dst[i] ^= src[i];
}

bool is_zero_scalar(const std::uint64_t* src, std::size_t words)
{
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < words; ++i)
        acc |= src[i];
    return acc == 0;
}

bool dot_parity_scalar(const std::uint64_t* a, const std::uint64_t* b, std::size_t words)
{
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < words; ++i)
        acc ^= a[i] & b[i];
    return std::popcount(acc) & 1;
}

void row_times_matrix_scalar(const std::uint64_t* row, std::size_t inner, const std::uint64_t* b,
                             std::size_t b_stride, std::uint64_t* out, std::size_t out_words)
{
    std::memset(out, 0, out_words * sizeof(std::uint64_t));
    const std::size_t row_words = (inner + 63) / 64;
    for (std::size_t w = 0; w < row_words; ++w) {
        std::uint64_t bits = row[w];
        while (bits) {
            const std::size_t k = w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
            bits &= bits - 1;
            if (k >= inner) break;
            xor_into_scalar(out, b + k * b_stride, out_words);
        }
    }
}

constexpr KernelTable scalar_table{"scalar", xor_into_scalar, is_zero_scalar, dot_parity_scalar,
                                   row_times_matrix_scalar};

} // namespace

const KernelTable& scalar_kernels() noexcept
{
    return scalar_table;
}

} // namespace dgs::f2
