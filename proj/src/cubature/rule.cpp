#include "subframe/cubature/rule.hpp"

#include <cmath>
#include <random>

#include "subframe/core/error.hpp"
#include "subframe/core/parallel.hpp"
#include "subframe/cubature/nnls.hpp"
#include "subframe/kernels/simd_ops.hpp"

namespace subframe::cubature {

using spectral::flat_index;
using spectral::SpectralIndex;

MomentSystem moment_system(const spectral::SpectralBasis& basis,
                           const std::vector<SpectralIndex>& band,
                           const std::vector<geometry::Vec3>& points, unsigned jobs) {
    const std::size_t M = band.size();
    const std::size_t K = points.size();
    int need = 0;
    for (const auto& idx : band) need = std::max(need, idx.l);
    if (need > basis.l_max()) throw_capacity("moment_system: band exceeds basis degree");

    MomentSystem sys;
    sys.A.resize(static_cast<Eigen::Index>(M), static_cast<Eigen::Index>(K));
    sys.e = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(M));
    for (std::size_t m = 0; m < M; ++m)
        if (band[m].l == 0 && band[m].m == 0) sys.e[static_cast<Eigen::Index>(m)] = 1.0;

    parallel_for(K, jobs ? jobs : default_jobs(), [&](std::size_t k0, std::size_t k1) {
        std::vector<double> row(basis.size());
        for (std::size_t k = k0; k < k1; ++k) {
            const geometry::Vec3& p = points[k];
            basis.eval_row({p.x, p.y, p.z}, row);
            for (std::size_t m = 0; m < M; ++m)
                sys.A(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(k)) =
                    row[flat_index(band[m].l, band[m].m)];
        }
    });
    return sys;
}

CubatureRule solve_weights(const geometry::MetricMesh& mesh, const lattice::VertexMetric& metric,
                           const spectral::SpectralBasis& basis,
                           const std::vector<SpectralIndex>& band, double r_start,
                           const SolveOptions& opts) {
    double r = r_start;
    std::vector<double> history;
    for (int attempt = 0; attempt <= opts.max_refine; ++attempt, r *= 0.5) {
        if (r < 4.0 * mesh.mean_edge_arc()) break;  // resolution floor
        lattice::Lattice lat = lattice::build_lattice(mesh, metric, r, std::nullopt, opts.jobs);
        lattice::CoverPartition part = lattice::partition_cover(mesh, metric, lat, opts.jobs);
        if (!part.unowned.empty()) continue;  // cover defect; refine

        std::vector<geometry::Vec3> pts;
        pts.reserve(lat.points.size());
        for (std::uint32_t v : lat.points) pts.push_back(mesh.vertices()[v]);
        MomentSystem sys = moment_system(basis, band, pts, opts.jobs);

        Eigen::VectorXd alpha0(static_cast<Eigen::Index>(part.measures.size()));
        for (std::size_t k = 0; k < part.measures.size(); ++k)
            alpha0[static_cast<Eigen::Index>(k)] = part.measures[k];

        NnlsResult sol = nnls_warm_start(sys.A, sys.e, alpha0, opts.damping, opts.tau);
        history.insert(history.end(), sol.residual_history.begin(), sol.residual_history.end());
        const double min_w = sol.alpha.minCoeff();
        if (sol.converged && min_w > 0.0) {
            CubatureRule rule;
            rule.lattice = std::move(lat);
            rule.partition = std::move(part);
            rule.exact_band = band;
            rule.weights = std::move(sol.alpha);
            rule.residual_inf = sol.residual_inf;
            rule.residual_history = std::move(history);
            rule.refinements = attempt;
            rule.ratio_lo = 1e300;
            rule.ratio_hi = 0.0;
            for (Eigen::Index k = 0; k < rule.weights.size(); ++k) {
                const double u = rule.partition.measures[static_cast<std::size_t>(k)];
                if (u <= 0.0) continue;
                const double ratio = rule.weights[k] / u;
                rule.ratio_lo = std::min(rule.ratio_lo, ratio);
                rule.ratio_hi = std::max(rule.ratio_hi, ratio);
            }
            return rule;
        }
    }
    std::string msg = "solve_weights: no positive rule at tolerance; residual history:";
    for (double h : history) msg += " " + std::to_string(h);
    throw_infeasible(msg);
}

PlancherelPolya plancherel_polya_ratio(const spectral::SpectralBasis& basis,
                                       const std::vector<SpectralIndex>& band,
                                       const geometry::MetricMesh& mesh,
                                       const lattice::Lattice& lat,
                                       const lattice::CoverPartition& part, int n_samples,
                                       std::uint64_t seed, unsigned jobs) {
    if (n_samples < 100) throw_config("plancherel_polya_ratio: need n_samples >= 100");
    std::vector<geometry::Vec3> pts;
    for (std::uint32_t v : lat.points) pts.push_back(mesh.vertices()[v]);
    MomentSystem sys = moment_system(basis, band, pts, jobs);  // rows: band values at points

    const Eigen::Index M = sys.A.rows();
    const Eigen::Index K = sys.A.cols();
    Eigen::VectorXd u(K);
    for (Eigen::Index k = 0; k < K; ++k) u[k] = part.measures[static_cast<std::size_t>(k)];

    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    PlancherelPolya pp;
    pp.min_ratio = 1e300;
    for (int s = 0; s < n_samples; ++s) {
        Eigen::VectorXd c(M);
        for (Eigen::Index i = 0; i < M; ++i) c[i] = gauss(rng);
        c.normalize();  // ||f|| = 1 by orthonormality
        const Eigen::VectorXd f_at = sys.A.transpose() * c;
        const double S = kernels::dot3(u.data(), f_at.data(), f_at.data(),
                                       static_cast<std::size_t>(K));
        pp.min_ratio = std::min(pp.min_ratio, S);
        pp.max_ratio = std::max(pp.max_ratio, S);
    }
    return pp;
}

}  // namespace subframe::cubature
