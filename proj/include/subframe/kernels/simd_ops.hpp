#pragma once

#include <cstddef>
#include <string_view>

// Dense double-precision inner loops shared by the spectral transforms,
// kernel evaluations and frame analysis. Scalar reference implementations
// live in kernels_scalar.cpp; AVX2+FMA variants in kernels_avx2.cpp. The
// active backend is picked once at startup from CPUID and can be overridden
// with SUBFRAME_SIMD=scalar|avx2 for A/B testing.

namespace subframe::kernels {

struct Ops {
    // sum_i x[i]*y[i]
    double (*dot)(const double* x, const double* y, std::size_t n);
    // sum_i w[i]*x[i]*y[i]
    double (*dot3)(const double* w, const double* x, const double* y, std::size_t n);
    // y[i] += a*x[i]
    void (*axpy)(double a, const double* x, double* y, std::size_t n);
    // sum_i x[i]^2
    double (*sum_sq)(const double* x, std::size_t n);
    // sum_i w[i]*x[i]^2
    double (*weighted_sum_sq)(const double* w, const double* x, std::size_t n);
    const char* name;
};

// Reference backend (always available).
const Ops& scalar_ops();

// AVX2+FMA backend; null if unsupported by the CPU.
const Ops* avx2_ops();

// Backend selected at startup (honors SUBFRAME_SIMD).
const Ops& active_ops();

inline double dot(const double* x, const double* y, std::size_t n) {
    return active_ops().dot(x, y, n);
}
inline double dot3(const double* w, const double* x, const double* y, std::size_t n) {
    return active_ops().dot3(w, x, y, n);
}
inline void axpy(double a, const double* x, double* y, std::size_t n) {
    active_ops().axpy(a, x, y, n);
}
inline double sum_sq(const double* x, std::size_t n) {
    return active_ops().sum_sq(x, n);
}
inline double weighted_sum_sq(const double* w, const double* x, std::size_t n) {
    return active_ops().weighted_sum_sq(w, x, n);
}

std::string_view active_backend_name();

}  // namespace subframe::kernels
