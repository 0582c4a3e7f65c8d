#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "subframe/core/error.hpp"

namespace subframe::spectral {

// Real convention: m >= 1 cosine branch, m <= -1 sine branch, m = 0 zonal.
struct SpectralIndex {
    int l = 0;
    int m = 0;
    friend bool operator==(const SpectralIndex&, const SpectralIndex&) = default;
};

enum class OperatorKind { elliptic, sub };

// (l,m) <-> flat position, a bijection onto 0..(l_max+1)^2-1.
inline std::size_t flat_index(int l, int m) {
    return static_cast<std::size_t>(l) * l + l + m;
}
inline SpectralIndex index_from_flat(std::size_t f) {
    int l = static_cast<int>(std::sqrt(static_cast<double>(f)));
    while (static_cast<std::size_t>(l + 1) * (l + 1) <= f) ++l;
    while (static_cast<std::size_t>(l) * l > f) --l;
    return {l, static_cast<int>(f - static_cast<std::size_t>(l) * l - l)};
}

inline double eigen_elliptic(int l, int /*m*/) { return static_cast<double>(l) * (l + 1); }
inline double eigen_sub(int l, int m) {
    return static_cast<double>(l) * (l + 1) - static_cast<double>(m) * m;
}
inline double eigenvalue(OperatorKind kind, int l, int m) {
    return kind == OperatorKind::elliptic ? eigen_elliptic(l, m) : eigen_sub(l, m);
}

// Smallest degree cap that contains the whole band E_omega.
// Sub case: the sectoral pair (l, +-l) has eigenvalue l, so degrees up to
// floor(omega) appear. Elliptic case: l(l+1) <= omega.
inline int l_max_needed(OperatorKind kind, double omega) {
    if (omega < 0) return -1;
    if (kind == OperatorKind::sub) return static_cast<int>(std::floor(omega));
    int l = static_cast<int>(std::floor((-1.0 + std::sqrt(1.0 + 4.0 * omega)) / 2.0));
    while (static_cast<double>(l + 1) * (l + 2) <= omega) ++l;
    while (l > 0 && static_cast<double>(l) * (l + 1) > omega) --l;
    return l;
}

// Exact enumeration of {(l,m) : eigen(l,m) <= omega}. Throws a capacity error
// instead of silently truncating when the basis cannot hold the band.
inline std::vector<SpectralIndex> band_indices(OperatorKind kind, double omega, int basis_l_max) {
    if (omega < 0) throw_config("band_indices: omega must be >= 0");
    const int need = l_max_needed(kind, omega);
    if (need > basis_l_max)
        throw_capacity("band_indices: band requires l_max >= " + std::to_string(need) +
                       " but basis has l_max = " + std::to_string(basis_l_max));
    std::vector<SpectralIndex> out;
    for (int l = 0; l <= need; ++l)
        for (int m = -l; m <= l; ++m)
            if (eigenvalue(kind, l, m) <= omega) out.push_back({l, m});
    return out;
}

inline std::int64_t weyl_count(OperatorKind kind, double omega) {
    if (omega < 0) return 0;
    const int need = l_max_needed(kind, omega);
    std::int64_t n = 0;
    for (int l = 0; l <= need; ++l)
        for (int m = -l; m <= l; ++m)
            if (eigenvalue(kind, l, m) <= omega) ++n;
    return n;
}

}  // namespace subframe::spectral
