#pragma once

#include <cmath>

#include "subframe/core/error.hpp"

namespace subframe::frame {

// Littlewood-Paley window family. g is the C-infinity cutoff of D17:
// g = 1 on [0,1], g = 0 on [4,inf), smooth monotone transition on (1,4).
// G(s) = g(s) - g(4s) has support in [1/4, 4]; F_0 = sqrt(g),
// F_j(s) = sqrt(G(4^{-j} s)) so that sum_{j=0..J} F_j(s)^2 = g(4^{-J} s),
// which equals 1 for s <= 4^J.
struct Window {
    enum class Kind { g, G, Fj };
    Kind kind = Kind::g;
    int j = 0;

    static double h(double t) { return t > 0.0 ? std::exp(-1.0 / t) : 0.0; }

    static double g_profile(double s) {
        if (s <= 1.0) return 1.0;
        if (s >= 4.0) return 0.0;
        const double up = h((4.0 - s) / 3.0);
        const double dn = h((s - 1.0) / 3.0);
        return up / (up + dn);
    }

    static double G_profile(double s) { return g_profile(s) - g_profile(4.0 * s); }

    // F_j^2 evaluated without the square root (exact telescoping sums)
    static double Fj_sq(int j, double s) {
        if (j == 0) return g_profile(s);
        return G_profile(std::ldexp(s, -2 * j));
    }

    static double Fj(int j, double s) { return std::sqrt(std::max(0.0, Fj_sq(j, s))); }

    double eval(double s) const {
        if (s < 0.0) throw_config("Window: argument must be >= 0");
        switch (kind) {
            case Kind::g: return g_profile(s);
            case Kind::G: return G_profile(s);
            case Kind::Fj: return Fj(j, s);
        }
        return 0.0;
    }

    // level-j spectral support [2^{2j-2}, 2^{2j+2}] (level 0: [0, 4])
    static double band_lo(int j) { return j == 0 ? 0.0 : std::ldexp(1.0, 2 * j - 2); }
    static double band_hi(int j) { return std::ldexp(1.0, 2 * j + 2); }
};

}  // namespace subframe::frame
