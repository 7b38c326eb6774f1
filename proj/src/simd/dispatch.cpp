#include "spectral_chroma/simd/kernels.hpp"

#include <cstdlib>
#include <string_view>

namespace spectral_chroma::simd {

#if defined(SPECTRAL_CHROMA_HAVE_AVX2)
namespace avx2 {
extern const KernelTable table;
}
#endif
#if defined(SPECTRAL_CHROMA_HAVE_NEON)
namespace neon {
extern const KernelTable table;
}
#endif

std::string_view isa_name(Isa isa) noexcept {
    switch (isa) {
        case Isa::scalar: return "scalar";
        case Isa::avx2: return "avx2";
        case Isa::neon: return "neon";
    }
    return "unknown";
}

const KernelTable* kernels_for(Isa isa) noexcept {
    switch (isa) {
        case Isa::scalar: return &scalar_kernels();
        case Isa::avx2:
#if defined(SPECTRAL_CHROMA_HAVE_AVX2)
            if (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma")) return &avx2::table;
#endif
            return nullptr;
        case Isa::neon:
#if defined(SPECTRAL_CHROMA_HAVE_NEON)
            return &neon::table;  // mandatory on AArch64
#else
            return nullptr;
#endif
    }
    return nullptr;
}

namespace {

const KernelTable& select() noexcept {
    if (const char* forced = std::getenv("SPECTRAL_CHROMA_SIMD")) {
        const std::string_view name{forced};
        for (Isa isa : {Isa::scalar, Isa::avx2, Isa::neon})
            if (name == isa_name(isa))
                if (const KernelTable* t = kernels_for(isa)) return *t;
    }
    for (Isa isa : {Isa::avx2, Isa::neon})
        if (const KernelTable* t = kernels_for(isa)) return *t;
    return scalar_kernels();
}

}  // namespace

const KernelTable& active() noexcept {
    static const KernelTable& table = select();
    return table;
}

}  // namespace spectral_chroma::simd
