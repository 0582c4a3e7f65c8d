#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "subframe/cubature/rule.hpp"
#include "subframe/frame/window.hpp"
#include "subframe/spectral/band.hpp"
#include "subframe/spectral/ops.hpp"

namespace subframe::frame {

// How wide the cubature exactness band of a level is (D16 and its j >= 2
// relaxation; see the build options).
enum class Exactness {
    products,  // elliptic degrees <= 2 * l_max(band): |F_j f|^2 integrates exactly
    band,      // the level band itself plus the constant; Parseval only approximate
};

struct FrameLevelOptions {
    double tau = 1e-9;
    Exactness exactness = Exactness::products;
    double r_start = 0.0;  // 0: D14 default for the level
    unsigned jobs = 0;
};

// One Littlewood-Paley level: cubature rule on a metric lattice plus the
// spectral data of the atoms Theta_{j,k} = sqrt(alpha_k) K^{F_j}(x_k, .).
struct FrameLevel {
    int j = 0;
    spectral::OperatorKind kind = spectral::OperatorKind::sub;
    double band_lo = 0.0, band_hi = 0.0;
    std::vector<spectral::SpectralIndex> band;  // indices with eigen in [lo, hi]
    std::vector<double> fj;                     // F_j(eigen) per band index
    cubature::CubatureRule rule;
    Eigen::MatrixXd atom_basis;                 // band x K: u_m(x_k)
    std::vector<double> ball_volumes;           // |B^mu(x_k, 2^{-j})|
    Exactness exactness = Exactness::products;

    std::size_t atom_count() const { return rule.lattice.points.size(); }
    // spectral coefficients of one atom over the level band
    std::vector<double> atom_coeffs(std::size_t k) const;
    double atom_norm_sq(std::size_t k) const;
    // atom value at an arbitrary point
    double atom_value(const spectral::SpectralBasis& basis, std::size_t k,
                      const geometry::Vec3& y) const;
};

FrameLevel build_frame_level(const geometry::MetricMesh& mesh,
                             const lattice::VertexMetric& metric,
                             const spectral::SpectralBasis& basis, int j,
                             spectral::OperatorKind kind, const FrameLevelOptions& opts = {});

struct FrameCoefficients {
    spectral::BandSpec analyzed_band;
    std::vector<std::vector<double>> s;  // [level][atom]
    double sum_sq() const;
};

// Frame bundle over levels 0..J. D20: the sub-Riemannian pipeline pairs the
// cc metric with sub-elliptic eigenvalues; the --riemann flag swaps both.
class FrameBundle {
public:
    static constexpr int kLevelCapDefault = 2;  // D18
    static constexpr int kLevelCapMax = 3;

    FrameBundle(int J, spectral::OperatorKind kind, lattice::MetricKind metric_kind)
        : J_(J), kind_(kind), metric_kind_(metric_kind) {}

    int J() const { return J_; }
    spectral::OperatorKind kind() const { return kind_; }
    lattice::MetricKind metric_kind() const { return metric_kind_; }
    double omega_max() const { return std::ldexp(1.0, 2 * J_); }  // E_{2^{2J}} certified

    std::vector<FrameLevel> levels;

    FrameCoefficients analyze(const spectral::BandFunction& f) const;
    spectral::BandFunction synthesize(const FrameCoefficients& coeffs) const;

private:
    int J_;
    spectral::OperatorKind kind_;
    lattice::MetricKind metric_kind_;
};

// Builds levels 0..J with per-level D14 lattice radii.
FrameBundle build_frame_bundle(const geometry::MetricMesh& mesh,
                               const lattice::VertexMetric& metric,
                               const spectral::SpectralBasis& basis, int J,
                               spectral::OperatorKind kind, const FrameLevelOptions& opts = {});

struct ParsevalReport {
    double max_filter_deviation = 0.0;  // |sum_j ||F_j f||^2 - ||f||^2| / ||f||^2
    double max_frame_deviation = 0.0;   // |sum |<f,Theta>|^2 - ||f||^2| / ||f||^2
    double max_reconstruction = 0.0;    // ||sigma(tau f) - f|| / ||f||
    int n_samples = 0;
};
ParsevalReport parseval_report(const FrameBundle& bundle, const spectral::SpectralBasis& basis,
                               int n_samples, std::uint64_t seed);

struct LocalizationReport {
    int j = 0;
    double N = 0.0;
    double c_emp = 0.0;       // max |Theta(y)| |B|^{1/2} (1 + 2^j mu)^N over samples
    std::size_t n_samples = 0;
};
LocalizationReport localization_report(const FrameBundle& bundle,
                                       const spectral::SpectralBasis& basis,
                                       const geometry::MetricMesh& mesh,
                                       const lattice::VertexMetric& metric, int j, double N,
                                       int n_atoms, int n_targets, std::uint64_t seed);

}  // namespace subframe::frame
