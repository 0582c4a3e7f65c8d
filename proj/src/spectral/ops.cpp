#include "subframe/spectral/ops.hpp"

#include <cmath>
#include <mutex>

#include "subframe/core/parallel.hpp"
#include "subframe/kernels/simd_ops.hpp"

namespace subframe::spectral {

BandFunction apply_filter(const ScalarWindow& F, double t, OperatorKind kind,
                          const BandFunction& f) {
    if (t <= 0.0) throw_config("apply_filter: t must be positive");
    BandFunction out = f;
    for (int l = 0; l <= f.l_max; ++l)
        for (int m = -l; m <= l; ++m) {
            const std::size_t i = flat_index(l, m);
            out.coeffs[i] = F(t * t * eigenvalue(kind, l, m)) * f.coeffs[i];
        }
    return out;
}

double kernel_eval(const ScalarWindow& F, double t, OperatorKind kind,
                   const SpectralBasis& basis, const Point& x, const Point& y) {
    const std::size_t n = basis.size();
    std::vector<double> w(n), ux(n), uy(n);
    for (int l = 0; l <= basis.l_max(); ++l)
        for (int m = -l; m <= l; ++m)
            w[flat_index(l, m)] = F(t * t * eigenvalue(kind, l, m));
    basis.eval_row(x, ux);
    basis.eval_row(y, uy);
    return kernels::dot3(w.data(), ux.data(), uy.data(), n);
}

ProductCheck product_band_check(const BandFunction& f, const BandFunction& g, unsigned jobs) {
    const double omega = std::max(f.band.omega, g.band.omega);
    const OperatorKind kind = f.band.kind;
    if (g.band.kind != kind) throw_config("product_band_check: mixed operator kinds");
    const int L = std::max(f.l_max, g.l_max);

    // Exact product expansion: synthesize on a grid that integrates
    // (fg) * u exactly for degrees up to 2L, then analyze.
    SpectralBasis big(2 * L, Measure::normalized);
    QuadratureGrid grid = QuadratureGrid::for_products(L, Measure::normalized);
    GridTransform plan(grid, big, jobs);

    auto pad = [&](const BandFunction& h) {
        std::vector<double> c(big.size(), 0.0);
        for (int l = 0; l <= h.l_max; ++l)
            for (int m = -l; m <= l; ++m) c[flat_index(l, m)] = h.at(l, m);
        return c;
    };
    const std::vector<double> vf = plan.synthesize_grid(pad(f));
    const std::vector<double> vg = plan.synthesize_grid(pad(g));
    std::vector<double> prod(vf.size());
    for (std::size_t i = 0; i < prod.size(); ++i) prod[i] = vf[i] * vg[i];

    ProductCheck out;
    out.product_l_max = 2 * L;
    out.product_coeffs = plan.analyze(prod);

    const double bound = 4.0 * kGroupDim * omega;  // Lemma-5.1 elliptic bound, d = 3
    const double total = kernels::sum_sq(out.product_coeffs.data(), out.product_coeffs.size());
    const double present_tol = 1e-12 * std::sqrt(std::max(total, 1e-300));
    double res_sq = 0.0;
    for (int l = 0; l <= out.product_l_max; ++l)
        for (int m = -l; m <= l; ++m) {
            const double c = out.product_coeffs[flat_index(l, m)];
            if (eigen_elliptic(l, m) > bound) res_sq += c * c;
            if (std::abs(c) > present_tol) {
                out.max_elliptic_eigen = std::max(out.max_elliptic_eigen, eigen_elliptic(l, m));
                out.max_sub_eigen = std::max(out.max_sub_eigen, eigen_sub(l, m));
            }
        }
    out.residual_outside = std::sqrt(res_sq);
    const double wq = std::pow(omega, kStepQ);
    out.c0_empirical = wq > 0 ? out.max_sub_eigen / wq : 0.0;
    return out;
}

EmbeddingReport embedding_check(double omega) {
    if (omega < 1.0) throw_config("embedding_check: omega must be >= 1");
    EmbeddingReport rep;
    rep.omega = omega;

    const int ls = l_max_needed(OperatorKind::sub, omega);
    double max_ell = 0.0;
    for (int l = 0; l <= ls; ++l)
        for (int m = -l; m <= l; ++m)
            if (eigen_sub(l, m) <= omega) max_ell = std::max(max_ell, eigen_elliptic(l, m));
    rep.c_fit = max_ell / std::pow(omega, kStepQ);
    rep.sub_in_elliptic = true;  // holds at c_fit by construction of the maximum

    const int le = l_max_needed(OperatorKind::elliptic, omega);
    double max_sub = 0.0;
    for (int l = 0; l <= le; ++l)
        for (int m = -l; m <= l; ++m)
            if (eigen_elliptic(l, m) <= omega) max_sub = std::max(max_sub, eigen_sub(l, m));
    rep.C_fit = max_sub / omega;
    rep.elliptic_in_sub = true;
    return rep;
}

WeylFit weyl_slopes(const std::vector<double>& omegas) {
    WeylFit fit;
    fit.omegas = omegas;
    for (double w : omegas) {
        fit.counts_elliptic.push_back(weyl_count(OperatorKind::elliptic, w));
        fit.counts_sub.push_back(weyl_count(OperatorKind::sub, w));
    }
    auto slope = [&](const std::vector<std::int64_t>& counts) {
        const std::size_t n = omegas.size();
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        for (std::size_t i = 0; i < n; ++i) {
            const double x = std::log(omegas[i]);
            const double y = std::log(static_cast<double>(counts[i]));
            sx += x;
            sy += y;
            sxx += x * x;
            sxy += x * y;
        }
        return (n * sxy - sx * sy) / (n * sxx - sx * sx);
    };
    fit.slope_elliptic = slope(fit.counts_elliptic);
    fit.slope_sub = slope(fit.counts_sub);
    return fit;
}

namespace {
inline Point rot_x(const Point& p, double c, double s) {
    return {p.x, c * p.y - s * p.z, s * p.y + c * p.z};
}
inline Point rot_y(const Point& p, double c, double s) {
    return {c * p.x - s * p.z, p.y, s * p.x + c * p.z};
}
}  // namespace

double sublaplacian_fd_check(const SpectralBasis& basis, int l_cap,
                             std::span<const Point> points, double h, unsigned jobs) {
    // Y1 generates the rotation about e1 (flow exp(tA1): y' = -z, z' = y),
    // Y2 the rotation about e2 with A2 x = (-z, 0, x). Central second
    // differences along the exact flows give (Y1^2 + Y2^2) u.
    const double ch = std::cos(h), sh = std::sin(h);
    const std::size_t nv = points.size();
    const std::size_t nidx = static_cast<std::size_t>(l_cap + 1) * (l_cap + 1);
    SpectralBasis cap_basis(l_cap, basis.measure());
    const std::size_t nrow = cap_basis.size();

    std::vector<double> num_err(nidx, 0.0), den(nidx, 0.0);
    std::mutex mu;
    parallel_for(nv, jobs ? jobs : default_jobs(), [&](std::size_t p0, std::size_t p1) {
        std::vector<double> r0(nrow), r1(nrow), r2(nrow), r3(nrow), r4(nrow);
        std::vector<double> local_err(nidx, 0.0), local_den(nidx, 0.0);
        for (std::size_t p = p0; p < p1; ++p) {
            const Point& x = points[p];
            cap_basis.eval_row(x, r0);
            cap_basis.eval_row(rot_x(x, ch, sh), r1);
            cap_basis.eval_row(rot_x(x, ch, -sh), r2);
            cap_basis.eval_row(rot_y(x, ch, sh), r3);
            cap_basis.eval_row(rot_y(x, ch, -sh), r4);
            for (std::size_t i = 0; i < nidx; ++i) {
                const double fd = (r1[i] + r2[i] + r3[i] + r4[i] - 4.0 * r0[i]) / (h * h);
                const SpectralIndex idx = index_from_flat(i);
                const double lam = eigen_sub(idx.l, idx.m);
                local_err[i] = std::max(local_err[i], std::abs(fd + lam * r0[i]));
                local_den[i] = std::max(local_den[i], std::abs(r0[i]));
            }
        }
        std::lock_guard<std::mutex> lock(mu);
        for (std::size_t i = 0; i < nidx; ++i) {
            num_err[i] = std::max(num_err[i], local_err[i]);
            den[i] = std::max(den[i], local_den[i]);
        }
    });

    double worst = 0.0;
    for (std::size_t i = 0; i < nidx; ++i) {
        const SpectralIndex idx = index_from_flat(i);
        const double lam = std::max(1.0, eigen_sub(idx.l, idx.m));
        worst = std::max(worst, num_err[i] / (lam * std::max(den[i], 1e-300)));
    }
    return worst;
}

}  // namespace subframe::spectral
