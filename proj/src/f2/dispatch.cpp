#include "dgs/f2_kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <string_view>

namespace dgs::f2 {

namespace {

const KernelTable* detect() noexcept
{
    if (const char* env = std::getenv("DGS_F2_BACKEND")) {
        const std::string_view want(env);
        if (want == "scalar") return &scalar_kernels();
        if (want == "avx2" && avx2_kernels()) return avx2_kernels();
        if (want == "neon" && neon_kernels()) return neon_kernels();
    }
    if (auto* k = avx2_kernels()) return k;
    if (auto* k = neon_kernels()) return k;
    return &scalar_kernels();
}

std::atomic<const KernelTable*>& active_slot() noexcept
{
    static std::atomic<const KernelTable*> slot{detect()};
    return slot;
}

} // namespace

const KernelTable* kernels_for(Backend b) noexcept
{
    switch (b) {
    case Backend::scalar: return &scalar_kernels();
    case Backend::avx2: return avx2_kernels();
    case Backend::neon: return neon_kernels();
    }
    return nullptr;
}

std::vector<Backend> available_backends()
{
    std::vector<Backend> out{Backend::scalar};
    if (avx2_kernels()) out.push_back(Backend::avx2);
    if (neon_kernels()) out.push_back(Backend::neon);
    return out;
}

const KernelTable& active_kernels() noexcept
{
    return *active_slot().load(std::memory_order_acquire);
}

bool select_backend(Backend b) noexcept
{
    const KernelTable* k = kernels_for(b);
    if (!k) return false;
    active_slot().store(k, std::memory_order_release);
    return true;
}

} // namespace dgs::f2
