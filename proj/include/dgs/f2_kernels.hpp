#pragma once

// Word-parallel GF(2) kernels over bit-packed rows.
//
// Every backend implements the same table. The scalar table is the reference;
// vector backends must agree with it bit-for-bit (tests/test_f2_kernels.cpp).
// Buffers need no particular alignment. Padding bits past a row's logical
// width are zero on input and stay zero on output.

#include <cstddef>
#include <cstdint>
#include <vector>

namespace dgs::f2 {

struct KernelTable {
    const char* name;
    /// dst ^= src
    void (*xor_into)(std::uint64_t* dst, const std::uint64_t* src, std::size_t words);
    bool (*is_zero)(const std::uint64_t* src, std::size_t words);
    /// Parity of popcount(a & b), i.e. the GF(2) inner product.
    bool (*dot_parity)(const std::uint64_t* a, const std::uint64_t* b, std::size_t words);
    /// out = sum of rows k of `b` (each `b_stride` words apart) over the set
    /// bits k < inner of `row`. `out` holds `out_words` words.
    void (*row_times_matrix)(const std::uint64_t* row, std::size_t inner, const std::uint64_t* b,
                             std::size_t b_stride, std::uint64_t* out, std::size_t out_words);
};

enum class Backend { scalar, avx2, neon };

const KernelTable& scalar_kernels() noexcept;
/// nullptr when not compiled for this target or unsupported by the CPU.
const KernelTable* avx2_kernels() noexcept;
const KernelTable* neon_kernels() noexcept;

/// Backends usable on this machine, scalar first.
std::vector<Backend> available_backends();
const KernelTable* kernels_for(Backend b) noexcept;

/// The table used by all F2Matrix operations. Chosen once from the CPU
/// features, overridable with DGS_F2_BACKEND=scalar|avx2|neon.
const KernelTable& active_kernels() noexcept;
/// Returns false if the backend is unavailable. Not thread-safe with
/// concurrent F2 work; meant for start-up and tests.
bool select_backend(Backend b) noexcept;

} // namespace dgs::f2
