#include "subframe/spectral/grid.hpp"

#include <cmath>

namespace subframe::spectral {

namespace {
constexpr double kPi = 3.14159265358979323846;

// Gauss-Legendre nodes/weights on [-1,1] by Newton on P_n.
void gauss_legendre(int n, std::vector<double>& x, std::vector<double>& w) {
    x.resize(n);
    w.resize(n);
    for (int i = 0; i < n; ++i) {
        double xi = std::cos(kPi * (i + 0.75) / (n + 0.5));
        double p0, p1, dp;
        for (int iter = 0; iter < 100; ++iter) {
            p0 = 1.0;
            p1 = xi;
            for (int l = 2; l <= n; ++l) {
                const double p2 = ((2.0 * l - 1.0) * xi * p1 - (l - 1.0) * p0) / l;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (xi * p1 - p0) / (xi * xi - 1.0);
            const double dx = p1 / dp;
            xi -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        x[n - 1 - i] = xi;
        w[n - 1 - i] = 2.0 / ((1.0 - xi * xi) * dp * dp);
    }
}

}  // namespace

QuadratureGrid::QuadratureGrid(int n_theta, int n_phi, Measure measure)
    : n_theta_(n_theta), n_phi_(n_phi), measure_(measure) {
    if (n_theta < 1 || n_phi < 1) throw_config("QuadratureGrid: node counts must be positive");
    std::vector<double> glw;
    gauss_legendre(n_theta, x_, glw);
    s_.resize(n_theta);
    wt_.resize(n_theta);
    const double theta_norm = (measure == Measure::normalized) ? 0.5 : 2.0 * kPi * 0.5 * 2.0;
    // normalized: (1/2) dx * (1/n_phi) sums to 1; surface: 2*pi/n_phi * dx sums to 4*pi
    for (int i = 0; i < n_theta; ++i) {
        s_[i] = std::sqrt(std::max(0.0, 1.0 - x_[i] * x_[i]));
        wt_[i] = glw[i] * ((measure == Measure::normalized) ? 0.5 : 1.0);
    }
    (void)theta_norm;
    wphi_ = (measure == Measure::normalized) ? 1.0 / n_phi : 2.0 * kPi / n_phi;
}

QuadratureGrid QuadratureGrid::for_band(int l_max, Measure measure) {
    return QuadratureGrid(l_max + 1, 2 * l_max + 2, measure);
}

QuadratureGrid QuadratureGrid::for_products(int l_max, Measure measure) {
    return QuadratureGrid(2 * l_max + 2, 4 * l_max + 4, measure);
}

double QuadratureGrid::phi(int j) const { return 2.0 * kPi * j / n_phi_; }

Point QuadratureGrid::point(int i, int j) const {
    const double ph = phi(j);
    return {s_[i] * std::cos(ph), s_[i] * std::sin(ph), x_[i]};
}

double QuadratureGrid::weight_sum() const {
    double acc = 0.0;
    for (double w : wt_) acc += w;
    return acc * wphi_ * n_phi_;
}

}  // namespace subframe::spectral
