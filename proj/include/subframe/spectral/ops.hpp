#pragma once

#include <functional>
#include <vector>

#include "subframe/spectral/band.hpp"
#include "subframe/spectral/basis.hpp"
#include "subframe/spectral/transforms.hpp"

namespace subframe::spectral {

// S^2 = SO(3)/SO(2) backend constants (D2, D3).
inline constexpr int kGroupDim = 3;   // d = dim SO(3)
inline constexpr int kStepQ = 2;      // bracket step of {Y1, Y2}

using ScalarWindow = std::function<double(double)>;

// c'_{l,m} = F(t^2 * eigen(kind,l,m)) * c_{l,m}
BandFunction apply_filter(const ScalarWindow& F, double t, OperatorKind kind,
                          const BandFunction& f);

// K_t^F(x,y) = sum F(t^2 lambda) u(x) u(y) over the whole basis
double kernel_eval(const ScalarWindow& F, double t, OperatorKind kind,
                   const SpectralBasis& basis, const Point& x, const Point& y);

struct ProductCheck {
    std::vector<double> product_coeffs;  // expansion of fg up to degree 2L
    int product_l_max = 0;
    double residual_outside = 0.0;       // norm of fg outside E_{4 d omega}(L)
    double max_elliptic_eigen = 0.0;     // over coefficients above threshold
    double max_sub_eigen = 0.0;
    double c0_empirical = 0.0;           // max_sub_eigen / omega^Q
};

// Exact spectral expansion of the pointwise product fg on a doubled grid,
// with the residual of its projection outside E_{4 d omega}(elliptic).
ProductCheck product_band_check(const BandFunction& f, const BandFunction& g, unsigned jobs = 0);

struct EmbeddingReport {
    double omega = 0.0;
    double c_fit = 0.0;  // smallest c with band(sub,omega) in band(elliptic, c*omega^Q)
    double C_fit = 0.0;  // smallest C with band(elliptic,omega) in band(sub, C*omega)
    bool sub_in_elliptic = false;
    bool elliptic_in_sub = false;
};

EmbeddingReport embedding_check(double omega);

struct WeylFit {
    std::vector<double> omegas;
    std::vector<std::int64_t> counts_elliptic;
    std::vector<std::int64_t> counts_sub;
    double slope_elliptic = 0.0;
    double slope_sub = 0.0;
};

// Brute-force eigenvalue counts and least-squares log-log slopes.
WeylFit weyl_slopes(const std::vector<double>& omegas);

// Finite-difference application of Y1^2 + Y2^2 along the exact rotation
// flows; returns the worst relative deviation from -(l(l+1)-m^2) u over the
// given points, for all l <= l_cap.
double sublaplacian_fd_check(const SpectralBasis& basis, int l_cap,
                             std::span<const Point> points, double h, unsigned jobs = 0);

}  // namespace subframe::spectral
