#pragma once

#include <optional>
#include <vector>

#include "subframe/frame/level.hpp"
#include "subframe/spectral/band.hpp"

namespace subframe::besov {

struct BesovParams {
    double alpha = 1.0;          // smoothness > 0
    double p = 2.0;              // in [1, inf)
    double q = 2.0;              // in (0, inf]; infinity() selects sup over j
    spectral::OperatorKind kind = spectral::OperatorKind::sub;
};

enum class SubWeight {
    paper,       // ((l+1)^2 - m^2)^alpha, the display of the sub-elliptic norm (D22)
    eigenvalue,  // (l(l+1) - m^2)^alpha
};

// Spectral Sobolev norm: elliptic (sum (l+1)^{2a} c^2)^{1/2}, sub-elliptic
// (sum ((l+1)^2 - m^2)^a c^2)^{1/2} by default.
double spectral_norm(const spectral::BandFunction& f, double alpha, spectral::OperatorKind kind,
                     SubWeight weight = SubWeight::paper);

// Frame-coefficient sequence norm: the weighted l^q(l^p) norm with the
// ball-volume factors (|B|^{1/p-1/2})^p inside the inner sum.
double besov_sequence_norm(const frame::FrameCoefficients& coeffs, const BesovParams& params,
                           const std::vector<std::vector<double>>& ball_volumes);

struct EquivalenceReport {
    double alpha = 0.0;
    double ratio_min = 0.0;
    double ratio_max = 0.0;
    int n_samples = 0;
};

// Ratio extremes of sequence norm / spectral norm over a family of band
// functions (zonal power laws, random in-band draws, single atoms) at p=q=2.
EquivalenceReport equivalence_report(const frame::FrameBundle& bundle, double alpha,
                                     std::uint64_t seed);

struct SharpnessWitness {
    double gamma = 0.0;
    double sub_partial = 0.0;        // at l_cut
    double sub_tail = 0.0;           // partial(10 l_cut) - partial(l_cut)
    double elliptic_partial = 0.0;   // at l_cut
    double elliptic_partial_10x = 0.0;
    double growth_ratio = 0.0;       // elliptic partial at 10 l_cut over at l_cut
};

// Sectoral witness c_{l,l} = (2l+1)^gamma: finite sub-elliptic norm, infinite
// elliptic norm. gamma defaults to the midpoint of (-1/2-delta, -1/2-alpha/2).
SharpnessWitness sharpness_witness(double alpha, double delta, std::optional<double> gamma,
                                   long l_cut);

}  // namespace subframe::besov
