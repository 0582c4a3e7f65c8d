#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "subframe/geometry/field.hpp"

namespace subframe::lattice {

enum class MetricKind { cc, riemann };

// Pairwise distance functor over mesh vertices; mu >= rho lets searches prune
// by the cheap Riemannian distance.
class VertexMetric {
public:
    VertexMetric(const geometry::MetricMesh& mesh, MetricKind kind, double eps);
    double operator()(std::uint32_t a, std::uint32_t b) const;
    double to_point(std::uint32_t a, const geometry::Vec3& p) const;
    MetricKind kind() const { return kind_; }
    double eps() const { return eps_; }

private:
    const geometry::MetricMesh& mesh_;
    MetricKind kind_;
    double eps_;
    std::optional<geometry::PenalizedMetric> penalized_;
};

struct Lattice {
    double r = 0.0;
    MetricKind metric = MetricKind::cc;
    double eps = 0.0;                  // final epsilon used for cc
    std::uint32_t seed_vertex = 0;     // D12
    std::vector<std::uint32_t> points; // mesh vertex ids, insertion order
    std::vector<double> dmin;          // per-vertex distance to the point set
};

// Greedy maximal r/2-separated set (D11-D13): repeatedly add the vertex
// farthest from the current set until everything is within r/2.
Lattice build_lattice(const geometry::MetricMesh& mesh, const VertexMetric& metric, double r,
                      std::optional<std::uint32_t> seed = std::nullopt, unsigned jobs = 0);

struct LatticeReport {
    double min_separation = 0.0;
    double covering_radius = 0.0;
    int multiplicity = 0;       // height of the B(x_i, r) cover (Lemma 1.1 item 3)
    int cover_multiplicity = 0; // height of the B(x_i, r/2) cover
};

LatticeReport verify_lattice(const geometry::MetricMesh& mesh, const VertexMetric& metric,
                             const Lattice& lat, unsigned jobs = 0);

struct CoverPartition {
    std::vector<std::uint32_t> owner;    // per mesh vertex
    std::vector<double> measures;        // |U_k|
    std::vector<std::uint32_t> unowned;  // cover violations (empty on success)
};

// Sequential set-difference assignment of Eq. (U) realized per mesh vertex.
CoverPartition partition_cover(const geometry::MetricMesh& mesh, const VertexMetric& metric,
                               const Lattice& lat, unsigned jobs = 0);

}  // namespace subframe::lattice
