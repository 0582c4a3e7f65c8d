#pragma once

#include <memory>
#include <span>
#include <vector>

#include "subframe/spectral/band.hpp"
#include "subframe/spectral/basis.hpp"
#include "subframe/spectral/grid.hpp"

namespace subframe::spectral {

// Direct O(L^3) forward/inverse transform between grid samples and spectral
// coefficients. Precomputes trig tables and Legendre columns at the grid
// colatitudes; reusable across many transforms on the same (grid, basis).
class GridTransform {
public:
    GridTransform(const QuadratureGrid& grid, const SpectralBasis& basis, unsigned jobs = 0);

    const QuadratureGrid& grid() const { return grid_; }
    const SpectralBasis& basis() const { return basis_; }

    // values: row-major [n_theta][n_phi] -> coefficients of length (L+1)^2
    std::vector<double> analyze(std::span<const double> values) const;
    // coefficients -> values on the grid
    std::vector<double> synthesize_grid(std::span<const double> coeffs) const;

private:
    QuadratureGrid grid_;
    const SpectralBasis& basis_;
    unsigned jobs_;
    // cos(m phi_j), sin(m phi_j): (L+1) x n_phi
    std::vector<double> cos_tab_, sin_tab_;
    // Legendre columns per m: Q_l^m(x_i), layout [m][l-m][i]
    std::vector<double> leg_tab_;
    std::vector<std::size_t> leg_off_;  // offset of column m (in units of n_theta rows)
};

// Pointwise synthesis at arbitrary points (parallel map).
std::vector<double> synthesize(const SpectralBasis& basis, const BandFunction& f,
                               std::span<const Point> points, unsigned jobs = 0);

// Round-trip helper: analyze(synthesize_grid(f)) with grid capacity checks.
BandFunction analyze_function(const GridTransform& plan, std::span<const double> values,
                              BandSpec spec);

}  // namespace subframe::spectral
