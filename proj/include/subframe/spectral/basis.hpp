#pragma once

#include <array>
#include <span>
#include <vector>

#include "subframe/spectral/index.hpp"

namespace subframe::spectral {

enum class Measure {
    normalized,  // probability measure, total mass 1 (the default, D5)
    surface,     // raw surface measure, total mass 4*pi
};

struct Point {
    double x = 0, y = 0, z = 1;
};

// Real orthonormal spherical-harmonic system up to degree l_max, with tables
// for the standard normalized associated-Legendre three-term recurrence.
// u_{l,0} = Q_l^0(cos t), u_{l,+-m} = Q_l^m(cos t) * sqrt(2) {cos,sin}(m phi),
// orthonormal under the declared measure.
class SpectralBasis {
public:
    static constexpr int kHardCap = 512;  // D1

    SpectralBasis(int l_max, Measure measure = Measure::normalized);

    int l_max() const { return l_max_; }
    Measure measure() const { return measure_; }
    std::size_t size() const { return static_cast<std::size_t>(l_max_ + 1) * (l_max_ + 1); }
    // total mass of the orthonormality measure
    double total_measure() const;

    // All (l+1)^2 basis values at one point; out.size() must be size().
    void eval_row(const Point& p, std::span<double> out) const;
    void eval_row(double cos_theta, double sin_theta, double phi, std::span<double> out) const;

    // Single basis function (used by the finite-difference eigen checks).
    double eval_one(int l, int m, const Point& p) const;

    // Normalized associated Legendre column Q_l^m(x) for l = m..l_max.
    // out.size() must be l_max-m+1.
    void legendre_column(int m, double cos_theta, double sin_theta, std::span<double> out) const;

private:
    int l_max_;
    Measure measure_;
    double scale_;                 // 1 for normalized, 1/sqrt(4pi) for surface
    std::vector<double> rec_a_;    // a(l,m), packed by m-major columns
    std::vector<double> rec_b_;    // b(l,m)
    std::vector<double> sectoral_; // sqrt((2m+1)/(2m))
    std::size_t col_offset(int m) const;
};

}  // namespace subframe::spectral
