#pragma once

#include <cstdint>
#include <vector>

#include "subframe/geometry/icosphere.hpp"
#include "subframe/geometry/metric.hpp"

namespace subframe::geometry {

// Per-vertex distances from one (snapped) source under the penalized metric.
// Probe vertices keep the whole epsilon schedule for convergence assessment;
// the field itself is the final-epsilon one.
struct DistanceField {
    std::uint32_t source = 0;
    std::vector<double> eps_schedule;
    std::vector<double> values;               // final epsilon, per vertex
    std::vector<std::uint32_t> probe_vertices;
    std::vector<std::vector<double>> probe_values;  // [eps index][probe index]
};

DistanceField cc_distance_field(const MetricMesh& mesh, const Vec3& source,
                                const std::vector<double>& eps_schedule, unsigned jobs = 0);

// sum of cell areas with field value < r; warns (via return flag) when r is
// below the mesh resolution
struct BallVolume {
    double volume = 0.0;
    bool resolution_warning = false;
};
BallVolume ball_volume(const MetricMesh& mesh, const DistanceField& field, double r);

struct ComparabilityFit {
    double c = 0.0;  // largest c with c*rho <= mu
    double C = 0.0;  // smallest C with mu <= C*rho^{1/Q}, Q = 2
    std::size_t n_pairs = 0;
};
ComparabilityFit comparability_fit(const MetricMesh& mesh, const PenalizedMetric& metric,
                                   const std::vector<std::pair<std::uint32_t, std::uint32_t>>& pairs);

}  // namespace subframe::geometry
