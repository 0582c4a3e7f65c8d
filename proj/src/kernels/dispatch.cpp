#include <cstdlib>
#include <cstring>

#include "subframe/kernels/simd_ops.hpp"

namespace subframe::kernels {
namespace {

bool cpu_has_avx2_fma() {
#if (defined(__x86_64__) || defined(_M_X64)) && defined(__GNUC__)
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

const Ops& select() {
    const char* force = std::getenv("SUBFRAME_SIMD");
    if (force != nullptr) {
        if (std::strcmp(force, "scalar") == 0) return scalar_ops();
        if (std::strcmp(force, "avx2") == 0 && avx2_ops() != nullptr && cpu_has_avx2_fma())
            return *avx2_ops();
        // unknown value falls through to auto-detect
    }
    if (cpu_has_avx2_fma() && avx2_ops() != nullptr) return *avx2_ops();
    return scalar_ops();
}

}  // namespace

const Ops& active_ops() {
    static const Ops& ops = select();
    return ops;
}

std::string_view active_backend_name() { return active_ops().name; }

}  // namespace subframe::kernels
