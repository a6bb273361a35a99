#include "dgs/f2_kernels.hpp"

#if defined(__x86_64__) && (defined(__GNUC__) || defined(__clang__))
#define DGS_HAVE_AVX2_KERNELS 1
#include <immintrin.h>
#include <bit>
#include <cstring>
#endif

namespace dgs::f2 {

#ifdef DGS_HAVE_AVX2_KERNELS

namespace {

#define DGS_AVX2 __attribute__((target("avx2")))

DGS_AVX2 void xor_into_avx2(std::uint64_t* dst, const std::uint64_t* src, std::size_t words)
{
    std::size_t i = 0;
    for (; i + 8 <= words; i += 8) {
        auto* d = reinterpret_cast<__m256i*>(dst + i);
        const auto* s = reinterpret_cast<const __m256i*>(src + i);
        const __m256i x0 = _mm256_xor_si256(_mm256_loadu_si256(d), _mm256_loadu_si256(s));
        const __m256i x1 = _mm256_xor_si256(_mm256_loadu_si256(d + 1), _mm256_loadu_si256(s + 1));
        _mm256_storeu_si256(d, x0);
        _mm256_storeu_si256(d + 1, x1);
    }
    for (; i + 4 <= words; i += 4) {
        auto* d = reinterpret_cast<__m256i*>(dst + i);
        const auto* s = reinterpret_cast<const __m256i*>(src + i);
        _mm256_storeu_si256(d, _mm256_xor_si256(_mm256_loadu_si256(d), _mm256_loadu_si256(s)));
    }
    for (; i < words; ++i)
        dst[i] ^= src[i];
}

DGS_AVX2 bool is_zero_avx2(const std::uint64_t* src, std::size_t words)
{
    std::size_t i = 0;
    __m256i acc = _mm256_setzero_si256();
    for (; i + 4 <= words; i += 4)
        acc = _mm256_or_si256(acc, _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i)));
    std::uint64_t tail = 0;
    for (; i < words; ++i)
        tail |= src[i];
    return _mm256_testz_si256(acc, acc) && tail == 0;
}

DGS_AVX2 bool dot_parity_avx2(const std::uint64_t* a, const std::uint64_t* b, std::size_t words)
{
    // parity(sum popcount(a_i & b_i)) == parity(popcount(xor_i (a_i & b_i)))
    std::size_t i = 0;
    __m256i acc = _mm256_setzero_si256();
    for (; i + 4 <= words; i += 4) {
        const __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        const __m256i y = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
        acc = _mm256_xor_si256(acc, _mm256_and_si256(x, y));
    }
    alignas(32) std::uint64_t lanes[4];
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
    std::uint64_t folded = lanes[0] ^ lanes[1] ^ lanes[2] ^ lanes[3];
    for (; i < words; ++i)
        folded ^= a[i] & b[i];
    return std::popcount(folded) & 1;
}

DGS_AVX2 void row_times_matrix_avx2(const std::uint64_t* row, std::size_t inner, const std::uint64_t* b,
                                    std::size_t b_stride, std::uint64_t* out, std::size_t out_words)
{
    std::memset(out, 0, out_words * sizeof(std::uint64_t));
    const std::size_t row_words = (inner + 63) / 64;
    if (out_words == 4) {
        // One 256-bit accumulator covers rows up to 256 bits wide.
        __m256i acc = _mm256_setzero_si256();
        for (std::size_t w = 0; w < row_words; ++w) {
            std::uint64_t bits = row[w];
            while (bits) {
                const std::size_t k = w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
                bits &= bits - 1;
                if (k >= inner) break;
                acc = _mm256_xor_si256(acc, _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + k * b_stride)));
            }
        }
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(out), acc);
        return;
    }
    for (std::size_t w = 0; w < row_words; ++w) {
        std::uint64_t bits = row[w];
        while (bits) {
            const std::size_t k = w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
            bits &= bits - 1;
            if (k >= inner) break;
            xor_into_avx2(out, b + k * b_stride, out_words);
        }
    }
}

#undef DGS_AVX2

constexpr KernelTable avx2_table{"avx2", xor_into_avx2, is_zero_avx2, dot_parity_avx2, row_times_matrix_avx2};

} // namespace

const KernelTable* avx2_kernels() noexcept
{
    static const bool supported = __builtin_cpu_supports("avx2");
    return supported ? &avx2_table : nullptr;
}

#else

const KernelTable* avx2_kernels() noexcept
{
    return nullptr;
}

#endif

} // namespace dgs::f2
