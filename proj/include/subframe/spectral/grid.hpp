#pragma once

#include <vector>

#include "subframe/spectral/basis.hpp"

namespace subframe::spectral {

// Gauss-Legendre colatitudes x uniform longitudes. Integrates spherical
// polynomials exactly up to theta-degree 2*n_theta-1 and phi-frequency
// n_phi-1; weights sum to the declared total measure.
class QuadratureGrid {
public:
    QuadratureGrid(int n_theta, int n_phi, Measure measure = Measure::normalized);

    // D6 sizing: exact analysis of a band with degrees <= l_max.
    static QuadratureGrid for_band(int l_max, Measure measure = Measure::normalized);
    // Doubled rule for pointwise products of two band-l_max functions.
    static QuadratureGrid for_products(int l_max, Measure measure = Measure::normalized);

    int n_theta() const { return n_theta_; }
    int n_phi() const { return n_phi_; }
    Measure measure() const { return measure_; }
    std::size_t size() const { return static_cast<std::size_t>(n_theta_) * n_phi_; }

    const std::vector<double>& cos_theta() const { return x_; }
    const std::vector<double>& sin_theta() const { return s_; }
    const std::vector<double>& theta_weight() const { return wt_; }  // includes measure norm
    double phi(int j) const;
    double phi_weight() const { return wphi_; }

    // node(i,j) as a cartesian point
    Point point(int i, int j) const;

    double weight_sum() const;
    // true if a degree-l_max function can be analyzed exactly (D6)
    bool exact_for_band(int l_max) const {
        return n_theta_ >= l_max + 1 && n_phi_ >= 2 * l_max + 2;
    }

private:
    int n_theta_, n_phi_;
    Measure measure_;
    std::vector<double> x_, s_, wt_;
    double wphi_;
};

}  // namespace subframe::spectral
