#include "subframe/geometry/field.hpp"

#include <cmath>

#include "subframe/core/error.hpp"
#include "subframe/core/parallel.hpp"

namespace subframe::geometry {

DistanceField cc_distance_field(const MetricMesh& mesh, const Vec3& source,
                                const std::vector<double>& eps_schedule, unsigned jobs) {
    if (eps_schedule.empty()) throw_config("cc_distance_field: empty epsilon schedule");
    DistanceField field;
    field.source = mesh.nearest_vertex(source);  // D9 snap
    field.eps_schedule = eps_schedule;

    const auto& verts = mesh.vertices();
    const Vec3 src = verts[field.source];
    const std::size_t nv = verts.size();

    // probe a fixed stratified subset with every epsilon in the schedule
    const std::size_t n_probe = std::min<std::size_t>(64, nv);
    for (std::size_t i = 0; i < n_probe; ++i)
        field.probe_vertices.push_back(static_cast<std::uint32_t>(i * nv / n_probe));
    for (double eps : eps_schedule) {
        const PenalizedMetric metric(eps);
        std::vector<double> pv(n_probe);
        for (std::size_t i = 0; i < n_probe; ++i)
            pv[i] = metric.distance(src, verts[field.probe_vertices[i]]);
        field.probe_values.push_back(std::move(pv));
    }

    const PenalizedMetric metric(eps_schedule.back());
    field.values.assign(nv, 0.0);
    parallel_for(nv, jobs ? jobs : default_jobs(), [&](std::size_t v0, std::size_t v1) {
        for (std::size_t v = v0; v < v1; ++v) field.values[v] = metric.distance(src, verts[v]);
    });
    return field;
}

BallVolume ball_volume(const MetricMesh& mesh, const DistanceField& field, double r) {
    if (r <= 0.0) throw_config("ball_volume: r must be positive");
    BallVolume out;
    out.resolution_warning = r < 2.0 * mesh.mean_edge_arc();
    const auto& areas = mesh.cell_areas();
    for (std::size_t v = 0; v < areas.size(); ++v)
        if (field.values[v] < r) out.volume += areas[v];
    return out;
}

ComparabilityFit comparability_fit(const MetricMesh& mesh, const PenalizedMetric& metric,
                                   const std::vector<std::pair<std::uint32_t, std::uint32_t>>& pairs) {
    if (pairs.size() < 100) throw_config("comparability_fit: need at least 100 sample pairs");
    ComparabilityFit fit;
    fit.n_pairs = pairs.size();
    fit.c = 1e300;
    for (const auto& [a, b] : pairs) {
        const double rho = riemann_distance(mesh.vertices()[a], mesh.vertices()[b]);
        if (rho < 1e-9) continue;
        const double mu = metric.distance(mesh.vertices()[a], mesh.vertices()[b]);
        fit.c = std::min(fit.c, mu / rho);
        fit.C = std::max(fit.C, mu / std::sqrt(rho));
    }
    return fit;
}

}  // namespace subframe::geometry
