#pragma once

#include <vector>

#include "subframe/spectral/index.hpp"

namespace subframe::spectral {

struct BandSpec {
    OperatorKind kind = OperatorKind::sub;
    double omega = 0.0;
};

// A function on S^2 carried as coefficients over the flat (l,m) ordering up
// to some degree cap. Coefficients outside the declared band stay zero.
struct BandFunction {
    BandSpec band;
    int l_max = 0;
    std::vector<double> coeffs;  // size (l_max+1)^2

    static BandFunction zero(BandSpec spec) {
        BandFunction f;
        f.band = spec;
        f.l_max = l_max_needed(spec.kind, spec.omega);
        f.coeffs.assign(static_cast<std::size_t>(f.l_max + 1) * (f.l_max + 1), 0.0);
        return f;
    }

    double& at(int l, int m) { return coeffs[flat_index(l, m)]; }
    double at(int l, int m) const { return coeffs[flat_index(l, m)]; }

    double norm_sq() const;
    double norm() const;

    // zero every coefficient with eigen(kind,l,m) > band.omega
    void project_to_band();
    // largest |coefficient| outside the declared band
    double out_of_band_abs() const;
};

}  // namespace subframe::spectral
