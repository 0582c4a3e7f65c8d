#pragma once

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "subframe/geometry/vec3.hpp"

namespace subframe::geometry {

// Icosphere with the base icosahedron oriented so +-e3 are vertices; after
// one subdivision the equator x3 = 0 carries exact vertices. Cell areas are
// barycentric thirds of incident spherical triangles, normalized to total
// measure 1.
class MetricMesh {
public:
    static constexpr int kLevelCap = 8;  // D7

    explicit MetricMesh(int level);

    int level() const { return level_; }
    std::size_t vertex_count() const { return vertices_.size(); }
    const std::vector<Vec3>& vertices() const { return vertices_; }
    const std::vector<std::pair<std::uint32_t, std::uint32_t>>& edges() const { return edges_; }
    const std::vector<std::array<std::uint32_t, 3>>& faces() const { return faces_; }
    const std::vector<double>& cell_areas() const { return areas_; }

    const std::vector<std::uint32_t>& neighbors(std::uint32_t v) const { return adj_[v]; }

    std::uint32_t nearest_vertex(const Vec3& p) const;
    std::uint32_t north_pole_vertex() const { return north_; }
    std::uint32_t south_pole_vertex() const { return south_; }
    // a vertex with x3 == 0 exactly (exists for level >= 1)
    std::uint32_t equator_vertex() const;

    double max_edge_chord() const { return max_edge_chord_; }
    double mean_edge_arc() const { return mean_edge_arc_; }

private:
    int level_;
    std::vector<Vec3> vertices_;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges_;
    std::vector<std::array<std::uint32_t, 3>> faces_;
    std::vector<double> areas_;
    std::vector<std::vector<std::uint32_t>> adj_;
    std::uint32_t north_ = 0, south_ = 0;
    double max_edge_chord_ = 0, mean_edge_arc_ = 0;
};

}  // namespace subframe::geometry
