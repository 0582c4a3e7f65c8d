#pragma once

#include <json.hpp>
#include <string>

#include "subframe/besov/besov.hpp"
#include "subframe/cubature/rule.hpp"
#include "subframe/frame/level.hpp"
#include "subframe/geometry/field.hpp"
#include "subframe/spectral/band.hpp"

namespace subframe::io {

using json = nlohmann::ordered_json;

// {l_max, kind, omega, coeffs: [{l, m, c}]}
json to_json(const spectral::BandFunction& f);
spectral::BandFunction band_function_from_json(const json& j);

// {level, vertices, edges, areas}
json to_json(const geometry::MetricMesh& mesh);

// {source, epsilon: [...], d: [...], probes: {...}}
json to_json(const geometry::DistanceField& field);

// {r, metric, eps, seed, points, min_separation, covering_radius, multiplicity}
json lattice_to_json(const lattice::Lattice& lat, const lattice::LatticeReport* report);

// {owners, measures}
json to_json(const lattice::CoverPartition& part);

// {level, r, omega, weights, residual, ratio_bounds}
json rule_to_json(const cubature::CubatureRule& rule, int level_j, double omega);

// {J, kind, metric, levels: [{j, band, lattice, weights, atoms, ball_volumes}]}
json to_json(const frame::FrameBundle& bundle);

// coefficient files: "j,k,s" CSV
std::string frame_coefficients_to_csv(const frame::FrameCoefficients& coeffs);
frame::FrameCoefficients frame_coefficients_from_csv(const std::string& text);

void write_text_file(const std::string& path, const std::string& text);
std::string read_text_file(const std::string& path);
void write_json_file(const std::string& path, const json& j);
json read_json_file(const std::string& path);

}  // namespace subframe::io
