#include "subframe/frame/level.hpp"

#include <cmath>
#include <random>

#include "subframe/core/error.hpp"
#include "subframe/kernels/simd_ops.hpp"

namespace subframe::frame {

using spectral::BandFunction;
using spectral::flat_index;
using spectral::OperatorKind;
using spectral::SpectralIndex;

std::vector<double> FrameLevel::atom_coeffs(std::size_t k) const {
    const double sa = std::sqrt(rule.weights[static_cast<Eigen::Index>(k)]);
    std::vector<double> out(band.size());
    for (std::size_t m = 0; m < band.size(); ++m)
        out[m] = sa * fj[m] * atom_basis(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(k));
    return out;
}

double FrameLevel::atom_norm_sq(std::size_t k) const {
    const auto c = atom_coeffs(k);
    return kernels::sum_sq(c.data(), c.size());
}

double FrameLevel::atom_value(const spectral::SpectralBasis& basis, std::size_t k,
                              const geometry::Vec3& y) const {
    std::vector<double> row(basis.size());
    basis.eval_row({y.x, y.y, y.z}, row);
    const auto c = atom_coeffs(k);
    double acc = 0.0;
    for (std::size_t m = 0; m < band.size(); ++m)
        acc += c[m] * row[flat_index(band[m].l, band[m].m)];
    return acc;
}

FrameLevel build_frame_level(const geometry::MetricMesh& mesh,
                             const lattice::VertexMetric& metric,
                             const spectral::SpectralBasis& basis, int j, OperatorKind kind,
                             const FrameLevelOptions& opts) {
    FrameLevel lvl;
    lvl.j = j;
    lvl.kind = kind;
    lvl.band_lo = Window::band_lo(j);
    lvl.band_hi = Window::band_hi(j);
    lvl.exactness = opts.exactness;

    const int l_need = spectral::l_max_needed(kind, lvl.band_hi);
    if (l_need > basis.l_max())
        throw_capacity("build_frame_level: level band needs l_max >= " + std::to_string(l_need));

    for (int l = 0; l <= l_need; ++l)
        for (int m = -l; m <= l; ++m) {
            const double lam = spectral::eigenvalue(kind, l, m);
            if (lam >= lvl.band_lo && lam <= lvl.band_hi) lvl.band.push_back({l, m});
        }
    lvl.fj.resize(lvl.band.size());
    for (std::size_t m = 0; m < lvl.band.size(); ++m)
        lvl.fj[m] = Window::Fj(j, spectral::eigenvalue(kind, lvl.band[m].l, lvl.band[m].m));

    // cubature exactness band (D16 / relaxed)
    std::vector<SpectralIndex> exact;
    if (opts.exactness == Exactness::products) {
        const int deg = 2 * l_need;
        if (deg > basis.l_max())
            throw_capacity("build_frame_level: product exactness needs l_max >= " +
                           std::to_string(deg));
        for (int l = 0; l <= deg; ++l)
            for (int m = -l; m <= l; ++m) exact.push_back({l, m});
    } else {
        exact.push_back({0, 0});
        for (const auto& idx : lvl.band)
            if (!(idx.l == 0 && idx.m == 0)) exact.push_back(idx);
    }

    // D14 starting radius
    double r = opts.r_start;
    if (r <= 0.0) {
        r = (kind == OperatorKind::sub) ? std::ldexp(1.0, -spectral::kStepQ * j - 1)
                                        : 1.0 / std::sqrt(lvl.band_hi);
    }

    cubature::SolveOptions copts;
    copts.tau = opts.tau;
    copts.jobs = opts.jobs;
    lvl.rule = cubature::solve_weights(mesh, metric, basis, exact, r, copts);

    std::vector<geometry::Vec3> pts;
    for (std::uint32_t v : lvl.rule.lattice.points) pts.push_back(mesh.vertices()[v]);
    lvl.atom_basis = cubature::moment_system(basis, lvl.band, pts, opts.jobs).A;

    // |B(x_k, 2^{-j})| per atom center
    const double radius = std::ldexp(1.0, -j);
    lvl.ball_volumes.resize(pts.size());
    if (metric.kind() == lattice::MetricKind::riemann) {
        for (std::size_t k = 0; k < pts.size(); ++k)
            lvl.ball_volumes[k] = 0.5 * (1.0 - std::cos(radius));
    } else {
        const geometry::PenalizedMetric pm(metric.eps());
        const geometry::BallVolumeTable table(pm, radius);
        for (std::size_t k = 0; k < pts.size(); ++k)
            lvl.ball_volumes[k] = table(std::acos(std::clamp(pts[k].z, -1.0, 1.0)));
    }
    return lvl;
}

double FrameCoefficients::sum_sq() const {
    double acc = 0.0;
    for (const auto& level : s) acc += kernels::sum_sq(level.data(), level.size());
    return acc;
}

FrameCoefficients FrameBundle::analyze(const BandFunction& f) const {
    if (f.band.kind != kind_)
        throw_config("frame analyze: function band kind does not match the bundle");
    // capacity: every nonzero coefficient must sit within the built levels
    for (int l = 0; l <= f.l_max; ++l)
        for (int m = -l; m <= l; ++m)
            if (f.at(l, m) != 0.0 && spectral::eigenvalue(kind_, l, m) > omega_max())
                throw_capacity("frame analyze: function exceeds built levels (eigen > 2^{2J})");

    FrameCoefficients out;
    out.analyzed_band = f.band;
    for (const FrameLevel& lvl : levels) {
        const Eigen::Index M = static_cast<Eigen::Index>(lvl.band.size());
        const Eigen::Index K = static_cast<Eigen::Index>(lvl.atom_count());
        Eigen::VectorXd wc(M);
        for (Eigen::Index m = 0; m < M; ++m) {
            const SpectralIndex idx = lvl.band[static_cast<std::size_t>(m)];
            const double c =
                (idx.l <= f.l_max) ? f.at(idx.l, idx.m) : 0.0;
            wc[m] = lvl.fj[static_cast<std::size_t>(m)] * c;
        }
        Eigen::VectorXd vals = lvl.atom_basis.transpose() * wc;  // (F_j f)(x_k)
        std::vector<double> s(static_cast<std::size_t>(K));
        for (Eigen::Index k = 0; k < K; ++k)
            s[static_cast<std::size_t>(k)] = std::sqrt(lvl.rule.weights[k]) * vals[k];
        out.s.push_back(std::move(s));
    }
    return out;
}

BandFunction FrameBundle::synthesize(const FrameCoefficients& coeffs) const {
    if (coeffs.s.size() != levels.size())
        throw_config("frame synthesize: coefficient levels do not match built levels");
    BandFunction out = BandFunction::zero({kind_, omega_max()});
    for (std::size_t li = 0; li < levels.size(); ++li) {
        const FrameLevel& lvl = levels[li];
        const Eigen::Index K = static_cast<Eigen::Index>(lvl.atom_count());
        if (coeffs.s[li].size() != static_cast<std::size_t>(K))
            throw_config("frame synthesize: atom count mismatch at level " + std::to_string(lvl.j));
        Eigen::VectorXd ws(K);
        for (Eigen::Index k = 0; k < K; ++k)
            ws[k] = std::sqrt(lvl.rule.weights[k]) * coeffs.s[li][static_cast<std::size_t>(k)];
        const Eigen::VectorXd g = lvl.atom_basis * ws;
        for (std::size_t m = 0; m < lvl.band.size(); ++m) {
            const SpectralIndex idx = lvl.band[m];
            if (idx.l <= out.l_max)
                out.at(idx.l, idx.m) += lvl.fj[m] * g[static_cast<Eigen::Index>(m)];
        }
    }
    return out;
}

FrameBundle build_frame_bundle(const geometry::MetricMesh& mesh,
                               const lattice::VertexMetric& metric,
                               const spectral::SpectralBasis& basis, int J, OperatorKind kind,
                               const FrameLevelOptions& opts) {
    if (J < 0 || J > FrameBundle::kLevelCapMax)
        throw_config("build_frame_bundle: J must lie in [0, " +
                     std::to_string(FrameBundle::kLevelCapMax) + "]");
    FrameBundle bundle(J, kind,
                       metric.kind() == lattice::MetricKind::cc ? lattice::MetricKind::cc
                                                                : lattice::MetricKind::riemann);
    for (int j = 0; j <= J; ++j) {
        FrameLevelOptions lo = opts;
        // D16 product exactness through level 1; level >= 2 would need degree
        // 2^{2j+3} moment systems, beyond desk scale, so those levels relax to
        // band exactness unless explicitly overridden.
        if (j >= 2 && opts.exactness == Exactness::products) lo.exactness = Exactness::band;
        bundle.levels.push_back(build_frame_level(mesh, metric, basis, j, kind, lo));
    }
    return bundle;
}

ParsevalReport parseval_report(const FrameBundle& bundle, const spectral::SpectralBasis& basis,
                               int n_samples, std::uint64_t seed) {
    (void)basis;
    ParsevalReport rep;
    rep.n_samples = n_samples;
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    const double omega = bundle.omega_max();
    const auto band = spectral::band_indices(bundle.kind(), omega,
                                             spectral::l_max_needed(bundle.kind(), omega));
    for (int s = 0; s < n_samples; ++s) {
        BandFunction f = BandFunction::zero({bundle.kind(), omega});
        for (const auto& idx : band) f.at(idx.l, idx.m) = gauss(rng);
        const double nsq = f.norm_sq();

        // filter identity: sum_j ||F_j(L) f||^2 = ||f||^2 (pure telescoping)
        double filter_sum = 0.0;
        for (int l = 0; l <= f.l_max; ++l)
            for (int m = -l; m <= l; ++m) {
                const double c = f.at(l, m);
                if (c == 0.0) continue;
                const double lam = spectral::eigenvalue(bundle.kind(), l, m);
                double fsum = 0.0;
                for (int j = 0; j <= bundle.J(); ++j) fsum += Window::Fj_sq(j, lam);
                filter_sum += fsum * c * c;
            }
        rep.max_filter_deviation =
            std::max(rep.max_filter_deviation, std::abs(filter_sum - nsq) / nsq);

        const FrameCoefficients tau = bundle.analyze(f);
        rep.max_frame_deviation =
            std::max(rep.max_frame_deviation, std::abs(tau.sum_sq() - nsq) / nsq);

        const BandFunction back = bundle.synthesize(tau);
        double diff_sq = 0.0;
        for (int l = 0; l <= f.l_max; ++l)
            for (int m = -l; m <= l; ++m) {
                const double d = back.at(l, m) - f.at(l, m);
                diff_sq += d * d;
            }
        rep.max_reconstruction = std::max(rep.max_reconstruction, std::sqrt(diff_sq / nsq));
    }
    return rep;
}

LocalizationReport localization_report(const FrameBundle& bundle,
                                       const spectral::SpectralBasis& basis,
                                       const geometry::MetricMesh& mesh,
                                       const lattice::VertexMetric& metric, int j, double N,
                                       int n_atoms, int n_targets, std::uint64_t seed) {
    const FrameLevel* lvl = nullptr;
    for (const auto& L : bundle.levels)
        if (L.j == j) lvl = &L;
    if (lvl == nullptr) throw_config("localization_report: level not built");

    LocalizationReport rep;
    rep.j = j;
    rep.N = N;
    std::mt19937_64 rng(seed);
    const std::size_t K = lvl->atom_count();
    const double scale = std::ldexp(1.0, j);  // 2^j

    std::uniform_int_distribution<std::size_t> pick_vertex(0, mesh.vertex_count() - 1);
    for (int a = 0; a < n_atoms; ++a) {
        const std::size_t k = (K * static_cast<std::size_t>(a)) / n_atoms;
        const geometry::Vec3 xk = mesh.vertices()[lvl->rule.lattice.points[k]];
        const double volume_half = std::sqrt(lvl->ball_volumes[k]);
        for (int t = 0; t < n_targets; ++t) {
            // half the targets near the center, half anywhere
            geometry::Vec3 y;
            if (t % 2 == 0) {
                const std::uint32_t v = static_cast<std::uint32_t>(pick_vertex(rng));
                y = mesh.vertices()[v];
            } else {
                // random point within a few ball radii along a random direction
                std::normal_distribution<double> gauss(0.0, 1.0);
                geometry::Vec3 dir{gauss(rng), gauss(rng), gauss(rng)};
                dir = (dir - xk * dir.dot(xk)).normalized();
                std::uniform_real_distribution<double> rad(0.0, 4.0 / scale);
                const double ang = rad(rng);
                y = (xk * std::cos(ang) + dir * std::sin(ang)).normalized();
            }
            const double mu = metric.kind() == lattice::MetricKind::riemann
                                  ? geometry::riemann_distance(xk, y)
                                  : geometry::PenalizedMetric(metric.eps()).distance(xk, y);
            const double theta = std::abs(lvl->atom_value(basis, k, y));
            const double val = theta * volume_half * std::pow(1.0 + scale * mu, N);
            rep.c_emp = std::max(rep.c_emp, val);
            ++rep.n_samples;
        }
    }
    return rep;
}

}  // namespace subframe::frame
