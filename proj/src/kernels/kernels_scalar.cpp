#include "subframe/kernels/simd_ops.hpp"

namespace subframe::kernels {
namespace {

double dot_scalar(const double* x, const double* y, std::size_t n) {
    double acc0 = 0.0, acc1 = 0.0, acc2 = 0.0, acc3 = 0.0;
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        acc0 += x[i] * y[i];
        acc1 += x[i + 1] * y[i + 1];
        acc2 += x[i + 2] * y[i + 2];
        acc3 += x[i + 3] * y[i + 3];
    }
    double tail = 0.0;
    for (; i < n; ++i) tail += x[i] * y[i];
    return (acc0 + acc1) + (acc2 + acc3) + tail;
}

double dot3_scalar(const double* w, const double* x, const double* y, std::size_t n) {
    double acc0 = 0.0, acc1 = 0.0;
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        acc0 += w[i] * x[i] * y[i];
        acc1 += w[i + 1] * x[i + 1] * y[i + 1];
    }
    if (i < n) acc0 += w[i] * x[i] * y[i];
    return acc0 + acc1;
}

void axpy_scalar(double a, const double* x, double* y, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) y[i] += a * x[i];
}

double sum_sq_scalar(const double* x, std::size_t n) {
    double acc0 = 0.0, acc1 = 0.0;
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        acc0 += x[i] * x[i];
        acc1 += x[i + 1] * x[i + 1];
    }
    if (i < n) acc0 += x[i] * x[i];
    return acc0 + acc1;
}

double weighted_sum_sq_scalar(const double* w, const double* x, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += w[i] * x[i] * x[i];
    return acc;
}

}  // namespace

const Ops& scalar_ops() {
    static const Ops ops{dot_scalar, dot3_scalar, axpy_scalar,
                         sum_sq_scalar, weighted_sum_sq_scalar, "scalar"};
    return ops;
}

}  // namespace subframe::kernels
