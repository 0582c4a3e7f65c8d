#include "subframe/besov/besov.hpp"

#include <cmath>
#include <limits>
#include <random>

#include "subframe/core/error.hpp"

namespace subframe::besov {

using spectral::BandFunction;
using spectral::OperatorKind;

double spectral_norm(const BandFunction& f, double alpha, OperatorKind kind, SubWeight weight) {
    double acc = 0.0;
    for (int l = 0; l <= f.l_max; ++l)
        for (int m = -l; m <= l; ++m) {
            const double c = f.at(l, m);
            if (c == 0.0) continue;
            double w;
            if (kind == OperatorKind::elliptic) {
                w = std::pow(static_cast<double>(l + 1) * (l + 1), alpha);
            } else {
                const double base = (weight == SubWeight::paper)
                                        ? static_cast<double>(l + 1) * (l + 1) -
                                              static_cast<double>(m) * m
                                        : spectral::eigen_sub(l, m);
                w = std::pow(base, alpha);
            }
            acc += w * c * c;
        }
    return std::sqrt(acc);
}

double besov_sequence_norm(const frame::FrameCoefficients& coeffs, const BesovParams& params,
                           const std::vector<std::vector<double>>& ball_volumes) {
    if (params.p < 1.0) throw_config("besov_sequence_norm: p must be >= 1");
    if (params.alpha < 0.0) throw_config("besov_sequence_norm: alpha must be >= 0");
    if (coeffs.s.size() != ball_volumes.size())
        throw_config("besov_sequence_norm: ball volumes missing for some level");

    const bool q_inf = !(params.q < std::numeric_limits<double>::infinity());
    const double vol_exp = (1.0 / params.p - 0.5) * params.p;

    double outer = 0.0, outer_sup = 0.0;
    for (std::size_t j = 0; j < coeffs.s.size(); ++j) {
        const auto& level = coeffs.s[j];
        const auto& vols = ball_volumes[j];
        if (level.size() != vols.size())
            throw_config("besov_sequence_norm: ball volume count mismatch at level " +
                         std::to_string(j));
        double inner = 0.0;
        for (std::size_t k = 0; k < level.size(); ++k) {
            if (vols[k] <= 0.0) throw_config("besov_sequence_norm: nonpositive ball volume");
            inner += std::pow(vols[k], vol_exp) * std::pow(std::abs(level[k]), params.p);
        }
        const double inner_lp = std::pow(inner, 1.0 / params.p);
        const double weight = std::pow(2.0, static_cast<double>(j) * params.alpha);
        if (q_inf) {
            outer_sup = std::max(outer_sup, weight * inner_lp);
        } else {
            outer += std::pow(weight * inner_lp, params.q);
        }
    }
    return q_inf ? outer_sup : std::pow(outer, 1.0 / params.q);
}

EquivalenceReport equivalence_report(const frame::FrameBundle& bundle, double alpha,
                                     std::uint64_t seed) {
    EquivalenceReport rep;
    rep.alpha = alpha;
    rep.ratio_min = 1e300;

    std::vector<std::vector<double>> vols;
    for (const auto& lvl : bundle.levels) vols.push_back(lvl.ball_volumes);
    BesovParams params;
    params.alpha = alpha;
    params.kind = bundle.kind();

    auto push = [&](const BandFunction& f) {
        const double spec = spectral_norm(f, alpha, bundle.kind());
        if (spec <= 0.0) return;
        const double seq = besov_sequence_norm(bundle.analyze(f), params, vols);
        const double ratio = seq / spec;
        rep.ratio_min = std::min(rep.ratio_min, ratio);
        rep.ratio_max = std::max(rep.ratio_max, ratio);
        ++rep.n_samples;
    };

    const double omega = bundle.omega_max();
    const int l_need = spectral::l_max_needed(bundle.kind(), omega);
    // zonal power laws
    for (double beta : {0.75, 1.5}) {
        BandFunction f = BandFunction::zero({bundle.kind(), omega});
        for (int l = 0; l <= f.l_max; ++l)
            if (spectral::eigenvalue(bundle.kind(), l, 0) <= omega)
                f.at(l, 0) = std::pow(l + 1.0, -beta);
        push(f);
    }
    // random in-band draws
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    const auto band = spectral::band_indices(bundle.kind(), omega, l_need);
    for (int s = 0; s < 12; ++s) {
        BandFunction f = BandFunction::zero({bundle.kind(), omega});
        for (const auto& idx : band) f.at(idx.l, idx.m) = gauss(rng);
        push(f);
    }
    // single atoms from each level
    for (const auto& lvl : bundle.levels) {
        for (std::size_t k : {std::size_t{0}, lvl.atom_count() / 2}) {
            BandFunction f = BandFunction::zero({bundle.kind(), omega});
            const auto c = lvl.atom_coeffs(k);
            for (std::size_t m = 0; m < lvl.band.size(); ++m)
                if (lvl.band[m].l <= f.l_max) f.at(lvl.band[m].l, lvl.band[m].m) = c[m];
            push(f);
        }
    }
    return rep;
}

SharpnessWitness sharpness_witness(double alpha, double delta, std::optional<double> gamma_opt,
                                   long l_cut) {
    if (!(alpha > 0.0) || !(delta > alpha / 2))
        throw_config("sharpness_witness: need delta > alpha/2 > 0 (empty gamma interval)");
    const double lo = -0.5 - delta, hi = -0.5 - alpha / 2;
    SharpnessWitness w;
    w.gamma = gamma_opt.value_or(0.5 * (lo + hi));  // D21 midpoint default
    if (!(w.gamma > lo && w.gamma < hi))
        throw_config("sharpness_witness: gamma outside (-1/2-delta, -1/2-alpha/2)");

    auto partial = [&](double exponent, long L) {
        double acc = 0.0;
        for (long l = 0; l <= L; ++l) acc += std::pow(2.0 * l + 1.0, exponent);
        return acc;
    };
    const double sub_exp = alpha + 2.0 * w.gamma;        // < -1: converges
    const double ell_exp = 2.0 * (delta + w.gamma);      // > -1: diverges
    w.sub_partial = partial(sub_exp, l_cut);
    w.sub_tail = partial(sub_exp, 10 * l_cut) - w.sub_partial;
    w.elliptic_partial = partial(ell_exp, l_cut);
    w.elliptic_partial_10x = partial(ell_exp, 10 * l_cut);
    w.growth_ratio = w.elliptic_partial_10x / w.elliptic_partial;
    return w;
}

}  // namespace subframe::besov
