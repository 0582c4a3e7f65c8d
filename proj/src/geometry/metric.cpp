#include "subframe/geometry/metric.hpp"

#include <algorithm>
#include <cmath>

#include "subframe/core/error.hpp"

namespace subframe::geometry {

namespace {
constexpr double kPi = 3.14159265358979323846;

// 16-point Gauss-Legendre on [0,1]
constexpr int kGL = 16;
constexpr double kGLx[kGL] = {
    0.0052995325041750337, 0.0277124884633837046, 0.0671843988060841224, 0.1222977958224984867,
    0.1910618777986781147, 0.2709916111713863151, 0.3591982246103705422, 0.4524937450811812866,
    0.5475062549188187134, 0.6408017753896294578, 0.7290083888286136849, 0.8089381222013218853,
    0.8777022041775015133, 0.9328156011939158776, 0.9722875115366162954, 0.9947004674958249663};
constexpr double kGLw[kGL] = {
    0.0135762297058770482, 0.0311267619693239468, 0.0475792558412463928, 0.0623144856277669384,
    0.0747979944082883680, 0.0845782596975012679, 0.0913017075224617918, 0.0947253052275342510,
    0.0947253052275342510, 0.0913017075224617918, 0.0845782596975012679, 0.0747979944082883680,
    0.0623144856277669384, 0.0475792558412463928, 0.0311267619693239468, 0.0135762297058770482};

}  // namespace

PenalizedMetric::PenalizedMetric(double eps) : eps_(eps) {
    if (eps <= 0.0) throw_config("PenalizedMetric: eps must be positive");
}

double PenalizedMetric::zonal_profile(double theta) const {
    const double x = std::cos(theta);
    const double s2 = std::max(0.0, 1.0 - x * x);
    return s2 * std::max(1.0, 1.0 / (x * x + eps_ * eps_));
}

// One monotone leg theta in [a,b] with Clairaut constant p (G >= p^2 inside,
// sqrt singularities possible at the ends). Splits at the midpoint and
// substitutes theta = end -+ u^2 on each half.
PenalizedMetric::LegResult PenalizedMetric::leg(double a, double b, double p) const {
    LegResult r{0.0, 0.0};
    if (b - a < 1e-15) return r;
    const double m = 0.5 * (a + b);
    const double p2 = p * p;
    const double e2 = eps_ * eps_;
    for (int half = 0; half < 2; ++half) {
        const double anchor = (half == 0) ? a : b;
        const double sgn = (half == 0) ? 1.0 : -1.0;
        const double um = std::sqrt((half == 0) ? (m - a) : (b - m));
        for (int i = 0; i < kGL; ++i) {
            const double u = um * kGLx[i];
            const double w = um * kGLw[i];
            const double t = anchor + sgn * u * u;
            const double x = std::cos(t);
            const double s2 = std::max(1e-300, 1.0 - x * x);
            const double G = s2 * std::max(1.0, 1.0 / (x * x + e2));
            double q = 1.0 - p2 / G;
            if (q < 1e-14) q = 1e-14;
            const double ds = 2.0 * u / std::sqrt(q);
            r.length += w * ds;
            r.dphi += w * ds * p / G;
        }
    }
    return r;
}

// Monotone branch: find p with dphi(p) = target (dphi increases with p),
// then correct the length to first order via dL = p dPhi.
double PenalizedMetric::solve_monotone(double t1, double t2, double dphi, bool& found) const {
    found = false;
    if (t2 - t1 < 1e-15) return 0.0;
    const double pmax =
        std::sqrt(std::min(zonal_profile(t1), zonal_profile(t2))) * (1.0 - 1e-12);
    if (pmax <= 0.0) return 0.0;
    if (leg(t1, t2, pmax).dphi < dphi) return 0.0;  // branch cannot reach this dphi
    double lo = 0.0, hi = pmax;
    LegResult last{0.0, 0.0};
    double p_last = 0.0;
    for (int it = 0; it < 22; ++it) {
        const double mid = 0.5 * (lo + hi);
        last = leg(t1, t2, mid);
        p_last = mid;
        if (last.dphi < dphi)
            lo = mid;
        else
            hi = mid;
    }
    found = true;
    return last.length + p_last * (dphi - last.dphi);
}

// Single-turn branch on the north side: turn at tt < t1 <= t2 with
// p = sqrt(G(tt)); dphi runs from the shallow limit (tt -> t1) up to pi
// (tt -> 0, over the pole).
double PenalizedMetric::solve_turning(double t1, double t2, double dphi, bool& found) const {
    found = false;
    double tt_hi = t1;  // shallow limit
    if (t2 > kPi / 2) tt_hi = std::min(tt_hi, kPi - t2);  // keep G >= p^2 along the path
    if (tt_hi <= 1e-12) return 0.0;

    double p_last = 0.0;
    auto eval = [&](double tt) {
        const double p = std::sqrt(zonal_profile(tt));
        p_last = p;
        const LegResult l1 = leg(tt, t1, p);
        const LegResult l2 = leg(tt, t2, p);
        return LegResult{l1.length + l2.length, l1.dphi + l2.dphi};
    };

    double lo = tt_hi * 1e-9, hi = tt_hi * (1.0 - 1e-12);
    double f_lo = eval(lo).dphi;
    const double f_hi = eval(hi).dphi;
    if (!((f_lo - dphi) * (f_hi - dphi) <= 0.0)) return 0.0;
    LegResult last{0.0, 0.0};
    for (int it = 0; it < 22; ++it) {
        const double mid = 0.5 * (lo + hi);
        last = eval(mid);
        if ((last.dphi - dphi) * (f_lo - dphi) > 0.0) {
            lo = mid;
            f_lo = last.dphi;
        } else {
            hi = mid;
        }
    }
    found = true;
    return last.length + p_last * (dphi - last.dphi);
}

double PenalizedMetric::distance_colat(double theta1, double theta2, double dphi) const {
    double t1 = std::clamp(std::min(theta1, theta2), 0.0, kPi);
    double t2 = std::clamp(std::max(theta1, theta2), 0.0, kPi);
    dphi = std::abs(dphi);
    dphi = std::fmod(dphi, 2.0 * kPi);
    if (dphi > kPi) dphi = 2.0 * kPi - dphi;
    if (t2 - t1 < 1e-15 && dphi < 1e-15) return 0.0;

    // upper-bound candidates: through either pole, and meridian + equator arc
    double best = std::min(t1 + t2, 2.0 * kPi - t1 - t2);
    const double eq = std::abs(t1 - kPi / 2) + std::abs(t2 - kPi / 2) +
                      dphi * std::sqrt(zonal_profile(kPi / 2));
    best = std::min(best, eq);

    if (dphi < 1e-15) return std::min(best, t2 - t1);

    bool found = false;
    const double mono = solve_monotone(t1, t2, dphi, found);
    if (found) best = std::min(best, mono);
    const double north = solve_turning(t1, t2, dphi, found);
    if (found) best = std::min(best, north);
    const double south = solve_turning(kPi - t2, kPi - t1, dphi, found);
    if (found) best = std::min(best, south);
    return best;
}

double PenalizedMetric::distance(const Vec3& a, const Vec3& b) const {
    const double t1 = std::acos(std::clamp(a.z, -1.0, 1.0));
    const double t2 = std::acos(std::clamp(b.z, -1.0, 1.0));
    const double dphi = std::atan2(a.y, a.x) - std::atan2(b.y, b.x);
    const double d = distance_colat(t1, t2, dphi);
    // the penalty never undercuts the round metric
    return std::max(d, riemann_distance(a, b));
}

double PenalizedMetric::ball_area(double theta0, double r, int n_theta) const {
    // mu >= |delta theta|, so the ball is confined to [theta0 - r, theta0 + r]
    const double lo = std::max(0.0, theta0 - r);
    const double hi = std::min(kPi, theta0 + r);
    const double dt = (hi - lo) / n_theta;
    double area = 0.0;
    for (int i = 0; i < n_theta; ++i) {
        const double t = lo + (i + 0.5) * dt;
        if (distance_colat(theta0, t, 0.0) >= r) continue;
        double plo = 0.0, phi = kPi;
        for (int it = 0; it < 36; ++it) {
            const double mid = 0.5 * (plo + phi);
            if (distance_colat(theta0, t, mid) < r)
                plo = mid;
            else
                phi = mid;
        }
        area += 2.0 * plo * std::sin(t) * dt;
    }
    return area / (4.0 * kPi);
}

double edge_cost(const Vec3& u, const Vec3& v, double eps) {
    if (eps <= 0.0) throw_config("edge_cost: eps must be positive");
    const Vec3 diff = v - u;
    const double chord = diff.norm();
    if (chord == 0.0) return 0.0;
    const Vec3 p = (u + v).normalized();
    const Vec3 w = diff - p * diff.dot(p);

    const HorizontalFrame f = HorizontalFrame::at(p);
    const double n3 = f.y3.norm();
    // minimize a^2 + b^2 + (c/eps)^2 subject to a Y1 + b Y2 + c y3hat = w:
    // weighted min-norm solution via the scaled generators B = [Y1 Y2 eps*y3hat]
    Vec3 cols[3] = {f.y1, f.y2, {0, 0, 0}};
    int ncols = 2;
    if (n3 > 1e-14) {
        cols[2] = f.y3 * (eps / n3);
        ncols = 3;
    }
    // z = B^T (B B^T + damp I)^{-1} w; B B^T is 3x3 PSD of rank 2 (tangent plane)
    double BBt[3][3] = {{0, 0, 0}, {0, 0, 0}, {0, 0, 0}};
    for (int k = 0; k < ncols; ++k) {
        const Vec3& ck = cols[k];
        const double cx[3] = {ck.x, ck.y, ck.z};
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) BBt[i][j] += cx[i] * cx[j];
    }
    const double damp = 1e-13 * (BBt[0][0] + BBt[1][1] + BBt[2][2] + 1.0);
    double A[3][4];
    const double rhs[3] = {w.x, w.y, w.z};
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) A[i][j] = BBt[i][j] + (i == j ? damp : 0.0);
        A[i][3] = rhs[i];
    }
    for (int col = 0; col < 3; ++col) {  // Gauss-Jordan with partial pivoting
        int piv = col;
        for (int rr = col + 1; rr < 3; ++rr)
            if (std::abs(A[rr][col]) > std::abs(A[piv][col])) piv = rr;
        for (int j = 0; j < 4; ++j) std::swap(A[col][j], A[piv][j]);
        for (int rr = 0; rr < 3; ++rr) {
            if (rr == col) continue;
            const double fct = A[rr][col] / A[col][col];
            for (int j = col; j < 4; ++j) A[rr][j] -= fct * A[col][j];
        }
    }
    const Vec3 lambda{A[0][3] / A[0][0], A[1][3] / A[1][1], A[2][3] / A[2][2]};
    double z[3] = {0, 0, 0};
    for (int k = 0; k < ncols; ++k) z[k] = cols[k].dot(lambda);
    const double a = z[0], b = z[1];
    const double c = (ncols == 3) ? eps * z[2] : 0.0;
    const double penalized = std::sqrt(a * a + b * b) + std::abs(c) / eps;
    return std::max(chord, penalized);
}

BallVolumeTable::BallVolumeTable(const PenalizedMetric& metric, double radius, int n_colat)
    : radius_(radius) {
    theta_.resize(n_colat);
    vol_.resize(n_colat);
    // symmetric about the equator: tabulate [0, pi/2] and mirror on lookup
    for (int i = 0; i < n_colat; ++i) {
        theta_[i] = (kPi / 2) * i / (n_colat - 1);
        vol_[i] = metric.ball_area(theta_[i], radius);
    }
}

double BallVolumeTable::operator()(double theta) const {
    double t = theta;
    if (t > kPi / 2) t = kPi - t;
    t = std::clamp(t, 0.0, kPi / 2);
    const double step = (kPi / 2) / (theta_.size() - 1);
    const std::size_t i = std::min(theta_.size() - 2, static_cast<std::size_t>(t / step));
    const double frac = (t - theta_[i]) / step;
    return vol_[i] * (1.0 - frac) + vol_[i + 1] * frac;
}

}  // namespace subframe::geometry
