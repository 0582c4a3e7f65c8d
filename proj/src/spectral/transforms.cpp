#include "subframe/spectral/transforms.hpp"

#include <cmath>

#include "subframe/core/parallel.hpp"
#include "subframe/kernels/simd_ops.hpp"

namespace subframe::spectral {

GridTransform::GridTransform(const QuadratureGrid& grid, const SpectralBasis& basis, unsigned jobs)
    : grid_(grid), basis_(basis), jobs_(jobs ? jobs : default_jobs()) {
    const int L = basis.l_max();
    const int nt = grid.n_theta(), np = grid.n_phi();
    if (grid.measure() != basis.measure())
        throw_config("GridTransform: grid and basis must declare the same measure");

    cos_tab_.resize(static_cast<std::size_t>(L + 1) * np);
    sin_tab_.resize(static_cast<std::size_t>(L + 1) * np);
    for (int m = 0; m <= L; ++m)
        for (int j = 0; j < np; ++j) {
            const double mp = m * grid.phi(j);
            cos_tab_[static_cast<std::size_t>(m) * np + j] = std::cos(mp);
            sin_tab_[static_cast<std::size_t>(m) * np + j] = std::sin(mp);
        }

    leg_off_.resize(L + 2);
    std::size_t off = 0;
    for (int m = 0; m <= L; ++m) {
        leg_off_[m] = off;
        off += static_cast<std::size_t>(L - m + 1);
    }
    leg_off_[L + 1] = off;
    leg_tab_.resize(off * nt);
    parallel_for(static_cast<std::size_t>(nt), jobs_, [&](std::size_t i0, std::size_t i1) {
        std::vector<double> col(static_cast<std::size_t>(L) + 1);
        for (std::size_t i = i0; i < i1; ++i) {
            for (int m = 0; m <= L; ++m) {
                const std::size_t len = static_cast<std::size_t>(L - m + 1);
                basis_.legendre_column(m, grid_.cos_theta()[i], grid_.sin_theta()[i],
                                       std::span<double>(col.data(), len));
                for (std::size_t k = 0; k < len; ++k)
                    leg_tab_[(leg_off_[m] + k) * nt + i] = col[k];
            }
        }
    });
}

std::vector<double> GridTransform::analyze(std::span<const double> values) const {
    const int L = basis_.l_max();
    const int nt = grid_.n_theta(), np = grid_.n_phi();
    if (values.size() != grid_.size()) throw_config("analyze: value count does not match grid");

    // Fourier stage: A_c[m][i] = w_phi * sum_j v(i,j) cos(m phi_j), same for sin.
    std::vector<double> ac(static_cast<std::size_t>(L + 1) * nt);
    std::vector<double> as(static_cast<std::size_t>(L + 1) * nt);
    const double wphi = grid_.phi_weight();
    parallel_for(static_cast<std::size_t>(nt), jobs_, [&](std::size_t i0, std::size_t i1) {
        for (std::size_t i = i0; i < i1; ++i) {
            const double* row = values.data() + i * np;
            for (int m = 0; m <= L; ++m) {
                ac[static_cast<std::size_t>(m) * nt + i] =
                    wphi * kernels::dot(row, cos_tab_.data() + static_cast<std::size_t>(m) * np,
                                        static_cast<std::size_t>(np));
                as[static_cast<std::size_t>(m) * nt + i] =
                    wphi * kernels::dot(row, sin_tab_.data() + static_cast<std::size_t>(m) * np,
                                        static_cast<std::size_t>(np));
            }
        }
    });

    // Legendre stage: weight the Fourier coefficients by w_theta, contract.
    for (int m = 0; m <= L; ++m)
        for (int i = 0; i < nt; ++i) {
            ac[static_cast<std::size_t>(m) * nt + i] *= grid_.theta_weight()[i];
            as[static_cast<std::size_t>(m) * nt + i] *= grid_.theta_weight()[i];
        }

    std::vector<double> coeffs(basis_.size(), 0.0);
    const double sqrt2 = std::sqrt(2.0);
    parallel_for(static_cast<std::size_t>(L + 1), jobs_, [&](std::size_t m0, std::size_t m1) {
        for (std::size_t mm = m0; mm < m1; ++mm) {
            const int m = static_cast<int>(mm);
            for (int l = m; l <= L; ++l) {
                const double* leg = leg_tab_.data() + (leg_off_[m] + (l - m)) * nt;
                if (m == 0) {
                    coeffs[flat_index(l, 0)] =
                        kernels::dot(leg, ac.data(), static_cast<std::size_t>(nt));
                } else {
                    coeffs[flat_index(l, m)] =
                        sqrt2 * kernels::dot(leg, ac.data() + mm * nt, static_cast<std::size_t>(nt));
                    coeffs[flat_index(l, -m)] =
                        sqrt2 * kernels::dot(leg, as.data() + mm * nt, static_cast<std::size_t>(nt));
                }
            }
        }
    });
    return coeffs;
}

std::vector<double> GridTransform::synthesize_grid(std::span<const double> coeffs) const {
    const int L = basis_.l_max();
    const int nt = grid_.n_theta(), np = grid_.n_phi();
    if (coeffs.size() != basis_.size()) throw_config("synthesize_grid: coefficient size mismatch");

    // S_c[m][i] = sum_l c_{l,m} Q_l^m(x_i), S_s for the sine branch.
    std::vector<double> sc(static_cast<std::size_t>(L + 1) * nt, 0.0);
    std::vector<double> ss(static_cast<std::size_t>(L + 1) * nt, 0.0);
    const double sqrt2 = std::sqrt(2.0);
    for (int m = 0; m <= L; ++m)
        for (int l = m; l <= L; ++l) {
            const double* leg = leg_tab_.data() + (leg_off_[m] + (l - m)) * nt;
            const double cpos = coeffs[flat_index(l, m)];
            if (cpos != 0.0)
                kernels::axpy(m == 0 ? cpos : sqrt2 * cpos, leg,
                              sc.data() + static_cast<std::size_t>(m) * nt,
                              static_cast<std::size_t>(nt));
            if (m > 0) {
                const double cneg = coeffs[flat_index(l, -m)];
                if (cneg != 0.0)
                    kernels::axpy(sqrt2 * cneg, leg, ss.data() + static_cast<std::size_t>(m) * nt,
                                  static_cast<std::size_t>(nt));
            }
        }

    std::vector<double> values(grid_.size(), 0.0);
    parallel_for(static_cast<std::size_t>(nt), jobs_, [&](std::size_t i0, std::size_t i1) {
        for (std::size_t i = i0; i < i1; ++i) {
            double* row = values.data() + i * np;
            for (int m = 0; m <= L; ++m) {
                const double a = sc[static_cast<std::size_t>(m) * nt + i];
                const double b = ss[static_cast<std::size_t>(m) * nt + i];
                if (a != 0.0)
                    kernels::axpy(a, cos_tab_.data() + static_cast<std::size_t>(m) * np, row,
                                  static_cast<std::size_t>(np));
                if (b != 0.0)
                    kernels::axpy(b, sin_tab_.data() + static_cast<std::size_t>(m) * np, row,
                                  static_cast<std::size_t>(np));
            }
        }
    });
    return values;
}

std::vector<double> synthesize(const SpectralBasis& basis, const BandFunction& f,
                               std::span<const Point> points, unsigned jobs) {
    if (f.l_max > basis.l_max())
        throw_capacity("synthesize: band function exceeds basis degree");
    std::vector<double> out(points.size(), 0.0);
    const std::size_t nrow = basis.size();
    // coefficients padded to the basis size so one dot per point suffices
    std::vector<double> padded(nrow, 0.0);
    for (int l = 0; l <= f.l_max; ++l)
        for (int m = -l; m <= l; ++m) padded[flat_index(l, m)] = f.at(l, m);
    parallel_for(points.size(), jobs ? jobs : default_jobs(),
                 [&](std::size_t p0, std::size_t p1) {
                     std::vector<double> row(nrow);
                     for (std::size_t p = p0; p < p1; ++p) {
                         basis.eval_row(points[p], row);
                         out[p] = kernels::dot(padded.data(), row.data(), nrow);
                     }
                 });
    return out;
}

BandFunction analyze_function(const GridTransform& plan, std::span<const double> values,
                              BandSpec spec) {
    const int need = l_max_needed(spec.kind, spec.omega);
    if (need > plan.basis().l_max())
        throw_capacity("analyze_function: band exceeds basis degree");
    if (!plan.grid().exact_for_band(plan.basis().l_max()))
        throw_capacity("analyze_function: grid too coarse for the declared band");
    BandFunction f;
    f.band = spec;
    f.l_max = plan.basis().l_max();
    f.coeffs = plan.analyze(values);
    return f;
}

}  // namespace subframe::spectral
