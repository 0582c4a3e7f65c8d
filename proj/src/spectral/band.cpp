#include "subframe/spectral/band.hpp"

#include <cmath>

#include "subframe/kernels/simd_ops.hpp"

namespace subframe::spectral {

double BandFunction::norm_sq() const { return kernels::sum_sq(coeffs.data(), coeffs.size()); }

double BandFunction::norm() const { return std::sqrt(norm_sq()); }

void BandFunction::project_to_band() {
    for (int l = 0; l <= l_max; ++l)
        for (int m = -l; m <= l; ++m)
            if (eigenvalue(band.kind, l, m) > band.omega) coeffs[flat_index(l, m)] = 0.0;
}

double BandFunction::out_of_band_abs() const {
    double worst = 0.0;
    for (int l = 0; l <= l_max; ++l)
        for (int m = -l; m <= l; ++m)
            if (eigenvalue(band.kind, l, m) > band.omega)
                worst = std::max(worst, std::abs(coeffs[flat_index(l, m)]));
    return worst;
}

}  // namespace subframe::spectral
