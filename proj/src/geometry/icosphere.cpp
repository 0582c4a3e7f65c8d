#include "subframe/geometry/icosphere.hpp"

#include <cmath>
#include <unordered_map>

#include "subframe/core/error.hpp"

namespace subframe::geometry {

namespace {
constexpr double kPi = 3.14159265358979323846;

double spherical_triangle_area(const Vec3& u, const Vec3& v, const Vec3& w) {
    // Van Oosterom-Strackee
    const double num = std::abs(u.dot(v.cross(w)));
    const double den = 1.0 + u.dot(v) + v.dot(w) + w.dot(u);
    return 2.0 * std::atan2(num, den);
}
}  // namespace

MetricMesh::MetricMesh(int level) : level_(level) {
    if (level < 0) throw_config("MetricMesh: level must be >= 0");
    if (level > kLevelCap)
        throw_capacity("MetricMesh: level " + std::to_string(level) + " exceeds cap " +
                       std::to_string(kLevelCap));

    // pole-oriented icosahedron: N, ring at z = 1/sqrt(5), mirrored ring, S
    const double z1 = 1.0 / std::sqrt(5.0);
    const double c1 = 2.0 / std::sqrt(5.0);
    vertices_.push_back({0, 0, 1});
    for (int k = 0; k < 5; ++k) {
        const double a = 2.0 * kPi * k / 5.0;
        vertices_.push_back({c1 * std::cos(a), c1 * std::sin(a), z1});
    }
    for (int k = 0; k < 5; ++k) {
        const double a = 2.0 * kPi * (k + 0.5) / 5.0;
        vertices_.push_back({c1 * std::cos(a), c1 * std::sin(a), -z1});
    }
    vertices_.push_back({0, 0, -1});
    for (std::uint32_t k = 0; k < 5; ++k) {
        const std::uint32_t k2 = (k + 1) % 5;
        faces_.push_back({0, 1 + k, 1 + k2});
        faces_.push_back({1 + k, 6 + k, 1 + k2});
        faces_.push_back({1 + k2, 6 + k, 6 + k2});
        faces_.push_back({11, 6 + k2, 6 + k});
    }

    for (int lv = 0; lv < level; ++lv) {
        std::unordered_map<std::uint64_t, std::uint32_t> midpoint;
        midpoint.reserve(faces_.size() * 2);
        auto mid = [&](std::uint32_t a, std::uint32_t b) {
            const std::uint64_t key =
                (static_cast<std::uint64_t>(std::min(a, b)) << 32) | std::max(a, b);
            auto it = midpoint.find(key);
            if (it != midpoint.end()) return it->second;
            const Vec3 m = (vertices_[a] + vertices_[b]).normalized();
            vertices_.push_back(m);
            const auto id = static_cast<std::uint32_t>(vertices_.size() - 1);
            midpoint.emplace(key, id);
            return id;
        };
        std::vector<std::array<std::uint32_t, 3>> next;
        next.reserve(faces_.size() * 4);
        for (const auto& f : faces_) {
            const std::uint32_t ab = mid(f[0], f[1]);
            const std::uint32_t bc = mid(f[1], f[2]);
            const std::uint32_t ca = mid(f[2], f[0]);
            next.push_back({f[0], ab, ca});
            next.push_back({ab, f[1], bc});
            next.push_back({ca, bc, f[2]});
            next.push_back({ab, bc, ca});
        }
        faces_ = std::move(next);
    }

    // edges + adjacency
    std::unordered_map<std::uint64_t, bool> seen;
    seen.reserve(faces_.size() * 2);
    adj_.resize(vertices_.size());
    auto add_edge = [&](std::uint32_t a, std::uint32_t b) {
        const std::uint64_t key =
            (static_cast<std::uint64_t>(std::min(a, b)) << 32) | std::max(a, b);
        if (seen.emplace(key, true).second) {
            edges_.emplace_back(std::min(a, b), std::max(a, b));
            adj_[a].push_back(b);
            adj_[b].push_back(a);
        }
    };
    for (const auto& f : faces_) {
        add_edge(f[0], f[1]);
        add_edge(f[1], f[2]);
        add_edge(f[2], f[0]);
    }

    areas_.assign(vertices_.size(), 0.0);
    for (const auto& f : faces_) {
        const double a = spherical_triangle_area(vertices_[f[0]], vertices_[f[1]], vertices_[f[2]]);
        for (int i = 0; i < 3; ++i) areas_[f[i]] += a / 3.0;
    }
    for (double& a : areas_) a /= 4.0 * kPi;  // normalized measure

    double arc_sum = 0.0;
    for (const auto& [a, b] : edges_) {
        const double chord = (vertices_[a] - vertices_[b]).norm();
        max_edge_chord_ = std::max(max_edge_chord_, chord);
        arc_sum += riemann_distance(vertices_[a], vertices_[b]);
    }
    mean_edge_arc_ = arc_sum / static_cast<double>(edges_.size());

    for (std::uint32_t v = 0; v < vertices_.size(); ++v) {
        if (vertices_[v].z > vertices_[north_].z) north_ = v;
        if (vertices_[v].z < vertices_[south_].z) south_ = v;
    }
}

std::uint32_t MetricMesh::nearest_vertex(const Vec3& p) const {
    std::uint32_t best = 0;
    double best_dot = -2.0;
    for (std::uint32_t v = 0; v < vertices_.size(); ++v) {
        const double d = vertices_[v].dot(p);
        if (d > best_dot) {
            best_dot = d;
            best = v;
        }
    }
    return best;
}

std::uint32_t MetricMesh::equator_vertex() const {
    std::uint32_t best = 0;
    double best_score = 1e300;
    for (std::uint32_t v = 0; v < vertices_.size(); ++v) {
        // prefer exact x3 == 0, tie-break toward phi = 0
        const double score = std::abs(vertices_[v].z) * 10.0 - vertices_[v].x;
        if (score < best_score) {
            best_score = score;
            best = v;
        }
    }
    return best;
}

}  // namespace subframe::geometry
