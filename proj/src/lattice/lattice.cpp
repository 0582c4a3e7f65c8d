#include "subframe/lattice/lattice.hpp"

#include <cmath>
#include <queue>

#include "subframe/core/error.hpp"
#include "subframe/core/parallel.hpp"

namespace subframe::lattice {

using geometry::MetricMesh;
using geometry::Vec3;

VertexMetric::VertexMetric(const MetricMesh& mesh, MetricKind kind, double eps)
    : mesh_(mesh), kind_(kind), eps_(eps) {
    if (kind == MetricKind::cc) penalized_.emplace(eps);
}

double VertexMetric::operator()(std::uint32_t a, std::uint32_t b) const {
    const auto& v = mesh_.vertices();
    if (kind_ == MetricKind::riemann) return geometry::riemann_distance(v[a], v[b]);
    return penalized_->distance(v[a], v[b]);
}

double VertexMetric::to_point(std::uint32_t a, const Vec3& p) const {
    if (kind_ == MetricKind::riemann) return geometry::riemann_distance(mesh_.vertices()[a], p);
    return penalized_->distance(mesh_.vertices()[a], p);
}

namespace {

// Vertices of the mesh within Riemannian distance <= cap of center, by BFS
// over mesh edges (connected for icospheres).
std::vector<std::uint32_t> rho_ball_vertices(const MetricMesh& mesh, std::uint32_t center,
                                             double cap) {
    std::vector<std::uint32_t> out;
    std::vector<char> seen(mesh.vertex_count(), 0);
    std::queue<std::uint32_t> q;
    q.push(center);
    seen[center] = 1;
    const Vec3 c = mesh.vertices()[center];
    while (!q.empty()) {
        const std::uint32_t v = q.front();
        q.pop();
        out.push_back(v);
        for (std::uint32_t nb : mesh.neighbors(v)) {
            if (seen[nb]) continue;
            if (geometry::riemann_distance(c, mesh.vertices()[nb]) > cap) continue;
            seen[nb] = 1;
            q.push(nb);
        }
    }
    return out;
}

}  // namespace

Lattice build_lattice(const MetricMesh& mesh, const VertexMetric& metric, double r,
                      std::optional<std::uint32_t> seed, unsigned jobs) {
    if (r <= 0.0) throw_config("build_lattice: r must be positive");
    if (r < 4.0 * mesh.mean_edge_arc())
        throw_capacity("build_lattice: r = " + std::to_string(r) +
                       " is below mesh resolution (needs >= 4 mesh edges, have edge arc " +
                       std::to_string(mesh.mean_edge_arc()) + ")");
    const std::size_t nv = mesh.vertex_count();
    const unsigned nj = jobs ? jobs : default_jobs();

    Lattice lat;
    lat.r = r;
    lat.metric = metric.kind();
    lat.eps = metric.eps();
    lat.seed_vertex = seed.value_or(mesh.north_pole_vertex());  // D12

    lat.dmin.assign(nv, 0.0);
    lat.points.push_back(lat.seed_vertex);
    parallel_for(nv, nj, [&](std::size_t a, std::size_t b) {
        for (std::size_t v = a; v < b; ++v)
            lat.dmin[v] = metric(lat.seed_vertex, static_cast<std::uint32_t>(v));
    });

    // lazy max-heap of (dmin, vertex); stale entries skipped on pop (D11:
    // ties broken toward the lower vertex id)
    using Entry = std::pair<double, std::uint32_t>;
    auto cmp = [](const Entry& a, const Entry& b) {
        if (a.first != b.first) return a.first < b.first;
        return a.second > b.second;
    };
    std::priority_queue<Entry, std::vector<Entry>, decltype(cmp)> heap(cmp);
    for (std::uint32_t v = 0; v < nv; ++v) heap.push({lat.dmin[v], v});

    const double slack = 2.0 * mesh.mean_edge_arc();
    while (!heap.empty()) {
        const auto [d, v] = heap.top();
        if (d != lat.dmin[v]) {
            heap.pop();
            continue;  // stale
        }
        if (d <= r / 2) break;  // maximality reached
        heap.pop();
        lat.points.push_back(v);
        // mu >= rho: only vertices with rho < dmin can improve; expand a BFS
        // ball while the Riemannian bound leaves room (small slack for the
        // non-monotone frontier)
        const double cap = std::min(3.14159265358979323846, d + slack);
        const auto cand = rho_ball_vertices(mesh, v, cap);
        std::vector<double> dist(cand.size());
        parallel_for(cand.size(), nj, [&](std::size_t a, std::size_t b) {
            for (std::size_t i = a; i < b; ++i) {
                const std::uint32_t u = cand[i];
                dist[i] = (geometry::riemann_distance(mesh.vertices()[v], mesh.vertices()[u]) <
                           lat.dmin[u])
                              ? metric(v, u)
                              : lat.dmin[u];
            }
        });
        for (std::size_t i = 0; i < cand.size(); ++i) {
            const std::uint32_t u = cand[i];
            if (dist[i] < lat.dmin[u]) {
                lat.dmin[u] = dist[i];
                heap.push({dist[i], u});
            }
        }
    }
    return lat;
}

LatticeReport verify_lattice(const MetricMesh& mesh, const VertexMetric& metric,
                             const Lattice& lat, unsigned jobs) {
    const unsigned nj = jobs ? jobs : default_jobs();
    LatticeReport rep;

    // covering radius from the maintained distance-to-set field
    rep.covering_radius = 0.0;
    for (double d : lat.dmin) rep.covering_radius = std::max(rep.covering_radius, d);

    // min separation: far pairs are bounded below by rho, so only pairs with
    // rho < 1.5 r need the true metric
    rep.min_separation = 1e300;
    const std::size_t K = lat.points.size();
    std::vector<double> local_min(K, 1e300);
    parallel_for(K, nj, [&](std::size_t a, std::size_t b) {
        for (std::size_t i = a; i < b; ++i)
            for (std::size_t j = 0; j < K; ++j) {
                if (i == j) continue;
                const double rho = geometry::riemann_distance(
                    mesh.vertices()[lat.points[i]], mesh.vertices()[lat.points[j]]);
                if (rho >= 1.5 * lat.r) continue;
                local_min[i] =
                    std::min(local_min[i], metric(lat.points[i], lat.points[j]));
            }
    });
    for (double d : local_min) rep.min_separation = std::min(rep.min_separation, d);

    // ball multiplicities at radii r and r/2
    std::vector<std::uint16_t> count_r(mesh.vertex_count(), 0), count_r2(mesh.vertex_count(), 0);
    for (std::size_t i = 0; i < K; ++i) {
        const auto cand = rho_ball_vertices(mesh, lat.points[i], lat.r);
        std::vector<double> dist(cand.size());
        parallel_for(cand.size(), nj, [&](std::size_t a, std::size_t b) {
            for (std::size_t k = a; k < b; ++k) dist[k] = metric(lat.points[i], cand[k]);
        });
        for (std::size_t k = 0; k < cand.size(); ++k) {
            if (dist[k] < lat.r) ++count_r[cand[k]];
            if (dist[k] < lat.r / 2) ++count_r2[cand[k]];
        }
    }
    for (std::size_t v = 0; v < mesh.vertex_count(); ++v) {
        rep.multiplicity = std::max<int>(rep.multiplicity, count_r[v]);
        rep.cover_multiplicity = std::max<int>(rep.cover_multiplicity, count_r2[v]);
    }
    return rep;
}

CoverPartition partition_cover(const MetricMesh& mesh, const VertexMetric& metric,
                               const Lattice& lat, unsigned jobs) {
    const std::size_t nv = mesh.vertex_count();
    const std::size_t K = lat.points.size();
    const unsigned nj = jobs ? jobs : default_jobs();
    constexpr std::uint32_t kNone = 0xffffffffu;

    // candidate owners per vertex: lattice points with mu < r/2; collect via
    // rho-ball sweeps from the lattice points
    std::vector<std::vector<std::pair<std::uint32_t, double>>> cands(nv);
    for (std::size_t k = 0; k < K; ++k) {
        const auto ball = rho_ball_vertices(mesh, lat.points[k], lat.r / 2);
        std::vector<double> dist(ball.size());
        parallel_for(ball.size(), nj, [&](std::size_t a, std::size_t b) {
            for (std::size_t i = a; i < b; ++i) dist[i] = metric(lat.points[k], ball[i]);
        });
        for (std::size_t i = 0; i < ball.size(); ++i)
            if (dist[i] < lat.r / 2)
                cands[ball[i]].push_back({static_cast<std::uint32_t>(k), dist[i]});
    }

    CoverPartition part;
    part.owner.assign(nv, kNone);
    part.measures.assign(K, 0.0);
    for (std::size_t v = 0; v < nv; ++v) {
        // Eq. (U): a vertex inside some r/4 ball belongs to that ball's point
        // (r/4 balls are disjoint); otherwise to the lowest-index point whose
        // r/2 ball reaches it.
        std::uint32_t owner = kNone;
        for (const auto& [k, d] : cands[v])
            if (d < lat.r / 4) {
                owner = k;
                break;
            }
        if (owner == kNone) {
            for (const auto& [k, d] : cands[v]) owner = std::min(owner, k);
        }
        part.owner[v] = owner;
        if (owner == kNone)
            part.unowned.push_back(static_cast<std::uint32_t>(v));
        else
            part.measures[owner] += mesh.cell_areas()[v];
    }
    return part;
}

}  // namespace subframe::lattice
