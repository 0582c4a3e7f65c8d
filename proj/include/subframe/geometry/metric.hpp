#pragma once

#include <vector>

#include "subframe/geometry/vec3.hpp"

namespace subframe::geometry {

// Horizontal fields Y1 = X_{2,3}, Y2 = X_{1,3} and the bracket Y3 = X_{1,2}
// at a point of S^2.
struct HorizontalFrame {
    Vec3 y1, y2, y3;
    static HorizontalFrame at(const Vec3& p) {
        return {{0, -p.z, p.y}, {-p.z, 0, p.x}, {-p.y, p.x, 0}};
    }
};

// Default penalization schedule (D8); the final entry is the working epsilon.
inline std::vector<double> default_eps_schedule() { return {0.2, 0.1, 0.05}; }
// Extended schedule for ball-volume diagnostics, where the working epsilon
// must sit below the radius range under study.
inline std::vector<double> geometry_eps_schedule() { return {0.2, 0.1, 0.05, 0.02, 0.01, 0.005}; }

// Penalized approximation of the Carnot-Caratheodory metric. Moving along
// the horizontal (meridian) direction costs arclength; moving along the
// bracket (zonal) direction costs arclength / sqrt(cos^2 theta + eps^2),
// floored so no direction is ever cheaper than Riemannian. The metric is a
// surface-of-revolution metric
//     ds^2 = dtheta^2 + G(theta) dphi^2,
//     G(theta) = sin^2(theta) * max(1, 1/(cos^2 theta + eps^2)),
// so geodesic distances reduce to one-dimensional Clairaut quadratures.
class PenalizedMetric {
public:
    explicit PenalizedMetric(double eps);

    double eps() const { return eps_; }
    double zonal_profile(double theta) const;  // G(theta)

    // exact geodesic distance in the penalized metric
    double distance(const Vec3& a, const Vec3& b) const;
    double distance_colat(double theta1, double theta2, double dphi) const;

    // normalized volume of the metric ball {mu(x,.) < r} around a point at
    // colatitude theta0, by 1-D quadrature of the zonal extent
    double ball_area(double theta0, double r, int n_theta = 96) const;

private:
    double eps_;
    struct LegResult {
        double length;
        double dphi;
    };
    LegResult leg(double a, double b, double p) const;
    double solve_monotone(double t1, double t2, double dphi, bool& found) const;
    double solve_turning(double t1, double t2, double dphi, bool& found) const;
};

// Spec edge cost: least-squares decomposition of the tangent-projected
// displacement at the edge midpoint into a Y1 + b Y2 + c y3_hat with the
// bracket coefficient priced at 1/eps, floored at the chord length.
double edge_cost(const Vec3& u, const Vec3& v, double eps);

// Interpolated |B^mu(., r)| lookup over colatitude, one radius per table.
class BallVolumeTable {
public:
    BallVolumeTable(const PenalizedMetric& metric, double radius, int n_colat = 129);
    double radius() const { return radius_; }
    double operator()(double theta) const;

private:
    double radius_;
    std::vector<double> theta_, vol_;
};

}  // namespace subframe::geometry
