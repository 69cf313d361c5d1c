#include "covdepth/kernels.hpp"

namespace covdepth::kernels {

#ifdef COVDEPTH_HAVE_AVX2_TU
const KernelTable* avx2_table_impl();
#endif

const KernelTable* avx2_table() {
#ifdef COVDEPTH_HAVE_AVX2_TU
    if (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma")) {
        return avx2_table_impl();
    }
#endif
    return nullptr;
}

const KernelTable& active_table() {
    static const KernelTable& chosen = []() -> const KernelTable& {
        if (const KernelTable* t = avx2_table()) return *t;
        return scalar_table();
    }();
    return chosen;
}

}  // namespace covdepth::kernels
