#include "dgs/f2_kernels.hpp"

#if defined(__aarch64__)
#define DGS_HAVE_NEON_KERNELS 1
#include <arm_neon.h>
#include <bit>
#include <cstring>
#endif

namespace dgs::f2 {

#ifdef DGS_HAVE_NEON_KERNELS

namespace {

void xor_into_neon(std::uint64_t* dst, const std::uint64_t* src, std::size_t words)
{
    std::size_t i = 0;
    for (; i + 2 <= words; i += 2)
        vst1q_u64(dst + i, veorq_u64(vld1q_u64(dst + i), vld1q_u64(src + i)));
    for (; i < words; ++i)
        dst[i] ^= src[i];
}

bool is_zero_neon(const std::uint64_t* src, std::size_t words)
{
    std::size_t i = 0;
    uint64x2_t acc = vdupq_n_u64(0);
    for (; i + 2 <= words; i += 2)
        acc = vorrq_u64(acc, vld1q_u64(src + i));
    std::uint64_t tail = vgetq_lane_u64(acc, 0) | vgetq_lane_u64(acc, 1);
    for (; i < words; ++i)
        tail |= src[i];
    return tail == 0;
}

bool dot_parity_neon(const std::uint64_t* a, const std::uint64_t* b, std::size_t words)
{
    std::size_t i = 0;
    uint64x2_t acc = vdupq_n_u64(0);
    for (; i + 2 <= words; i += 2)
        acc = veorq_u64(acc, vandq_u64(vld1q_u64(a + i), vld1q_u64(b + i)));
    std::uint64_t folded = vgetq_lane_u64(acc, 0) ^ vgetq_lane_u64(acc, 1);
    for (; i < words; ++i)
        folded ^= a[i] & b[i];
    return std::popcount(folded) & 1;
}

void row_times_matrix_neon(const std::uint64_t* row, std::size_t inner, const std::uint64_t* b,
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
            xor_into_neon(out, b + k * b_stride, out_words);
        }
    }
}

constexpr KernelTable neon_table{"neon", xor_into_neon, is_zero_neon, dot_parity_neon, row_times_matrix_neon};

} // namespace

const KernelTable* neon_kernels() noexcept
{
    return &neon_table;
}

#else

const KernelTable* neon_kernels() noexcept
{
    return nullptr;
}

#endif

} // namespace dgs::f2
