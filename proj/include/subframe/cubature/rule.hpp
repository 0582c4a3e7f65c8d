#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "subframe/lattice/lattice.hpp"
#include "subframe/spectral/basis.hpp"
#include "subframe/spectral/index.hpp"

namespace subframe::cubature {

// Moment matrix A[m][k] = u_m(x_k) over the given index set and point list,
// and the exact integrals e (1 on the constant under normalized measure).
struct MomentSystem {
    Eigen::MatrixXd A;
    Eigen::VectorXd e;
};
MomentSystem moment_system(const spectral::SpectralBasis& basis,
                           const std::vector<spectral::SpectralIndex>& band,
                           const std::vector<geometry::Vec3>& points, unsigned jobs = 0);

struct CubatureRule {
    lattice::Lattice lattice;
    lattice::CoverPartition partition;
    std::vector<spectral::SpectralIndex> exact_band;
    Eigen::VectorXd weights;
    double residual_inf = 0.0;
    double ratio_lo = 0.0, ratio_hi = 0.0;  // alpha_k / |U_k| extremes
    std::vector<double> residual_history;
    int refinements = 0;
};

struct SolveOptions {
    double tau = 1e-9;      // moment residual acceptance (tau_cub)
    int max_refine = 3;     // D14: halve r and retry
    double damping = 1e-12; // D15
    unsigned jobs = 0;
};

// Positive-weight rule exact on the given band: greedy lattice at radius r,
// Eq. (U) partition, warm start alpha = |U_k|, damped active-set NNLS;
// on failure the lattice radius halves (D14).
CubatureRule solve_weights(const geometry::MetricMesh& mesh, const lattice::VertexMetric& metric,
                           const spectral::SpectralBasis& basis,
                           const std::vector<spectral::SpectralIndex>& band, double r_start,
                           const SolveOptions& opts = {});

struct PlancherelPolya {
    double min_ratio = 0.0;
    double max_ratio = 0.0;
};

// S(f)/||f||^2 extremes for random unit-norm band functions, with
// S(f) = sum_k |U_k| |f(x_k)|^2.
PlancherelPolya plancherel_polya_ratio(const spectral::SpectralBasis& basis,
                                       const std::vector<spectral::SpectralIndex>& band,
                                       const geometry::MetricMesh& mesh,
                                       const lattice::Lattice& lat,
                                       const lattice::CoverPartition& part, int n_samples,
                                       std::uint64_t seed, unsigned jobs = 0);

}  // namespace subframe::cubature
