#include "subframe/io/json_io.hpp"

#include <fstream>
#include <sstream>

#include "subframe/core/error.hpp"

namespace subframe::io {

namespace {
const char* kind_name(spectral::OperatorKind k) {
    return k == spectral::OperatorKind::elliptic ? "elliptic" : "sub";
}
spectral::OperatorKind kind_from_name(const std::string& s) {
    if (s == "elliptic") return spectral::OperatorKind::elliptic;
    if (s == "sub") return spectral::OperatorKind::sub;
    throw_io("unknown operator kind: " + s);
}
}  // namespace

json to_json(const spectral::BandFunction& f) {
    json j;
    j["l_max"] = f.l_max;
    j["kind"] = kind_name(f.band.kind);
    j["omega"] = f.band.omega;
    json coeffs = json::array();
    for (int l = 0; l <= f.l_max; ++l)
        for (int m = -l; m <= l; ++m) {
            const double c = f.at(l, m);
            if (c != 0.0) coeffs.push_back({{"l", l}, {"m", m}, {"c", c}});
        }
    j["coeffs"] = std::move(coeffs);
    return j;
}

spectral::BandFunction band_function_from_json(const json& j) {
    spectral::BandFunction f;
    f.band.kind = kind_from_name(j.at("kind").get<std::string>());
    f.band.omega = j.at("omega").get<double>();
    f.l_max = j.at("l_max").get<int>();
    f.coeffs.assign(static_cast<std::size_t>(f.l_max + 1) * (f.l_max + 1), 0.0);
    for (const auto& entry : j.at("coeffs")) {
        const int l = entry.at("l").get<int>();
        const int m = entry.at("m").get<int>();
        if (l < 0 || l > f.l_max || std::abs(m) > l) throw_io("coefficient index out of range");
        f.at(l, m) = entry.at("c").get<double>();
    }
    return f;
}

json to_json(const geometry::MetricMesh& mesh) {
    json j;
    j["level"] = mesh.level();
    json verts = json::array();
    for (const auto& v : mesh.vertices()) verts.push_back({v.x, v.y, v.z});
    j["vertices"] = std::move(verts);
    json edges = json::array();
    for (const auto& [a, b] : mesh.edges()) edges.push_back({a, b});
    j["edges"] = std::move(edges);
    j["areas"] = mesh.cell_areas();
    return j;
}

json to_json(const geometry::DistanceField& field) {
    json j;
    j["source"] = field.source;
    j["epsilon"] = field.eps_schedule;
    j["d"] = field.values;
    json probes;
    probes["vertices"] = field.probe_vertices;
    probes["values_per_epsilon"] = field.probe_values;
    j["probes"] = std::move(probes);
    return j;
}

json lattice_to_json(const lattice::Lattice& lat, const lattice::LatticeReport* report) {
    json j;
    j["r"] = lat.r;
    j["metric"] = lat.metric == lattice::MetricKind::cc ? "cc" : "riemann";
    j["eps"] = lat.eps;
    j["seed_vertex"] = lat.seed_vertex;
    j["points"] = lat.points;
    if (report != nullptr) {
        j["min_separation"] = report->min_separation;
        j["covering_radius"] = report->covering_radius;
        j["multiplicity"] = report->multiplicity;
        j["cover_multiplicity"] = report->cover_multiplicity;
    }
    return j;
}

json to_json(const lattice::CoverPartition& part) {
    json j;
    j["owners"] = part.owner;
    j["measures"] = part.measures;
    j["unowned"] = part.unowned;
    return j;
}

json rule_to_json(const cubature::CubatureRule& rule, int level_j, double omega) {
    json j;
    j["level"] = level_j;
    j["r"] = rule.lattice.r;
    j["omega"] = omega;
    std::vector<double> w(rule.weights.data(), rule.weights.data() + rule.weights.size());
    j["weights"] = std::move(w);
    j["residual"] = rule.residual_inf;
    j["ratio_bounds"] = {rule.ratio_lo, rule.ratio_hi};
    j["refinements"] = rule.refinements;
    return j;
}

json to_json(const frame::FrameBundle& bundle) {
    json j;
    j["J"] = bundle.J();
    j["kind"] = kind_name(bundle.kind());
    j["metric"] = bundle.metric_kind() == lattice::MetricKind::cc ? "cc" : "riemann";
    json levels = json::array();
    for (const auto& lvl : bundle.levels) {
        json L;
        L["j"] = lvl.j;
        L["band"] = {lvl.band_lo, lvl.band_hi};
        L["lattice_ref"] = lvl.rule.lattice.points;
        std::vector<double> w(lvl.rule.weights.data(),
                              lvl.rule.weights.data() + lvl.rule.weights.size());
        L["weights"] = std::move(w);
        json band_idx = json::array();
        for (const auto& idx : lvl.band) band_idx.push_back({idx.l, idx.m});
        L["band_indices"] = std::move(band_idx);
        json atoms = json::array();
        for (std::size_t k = 0; k < lvl.atom_count(); ++k) atoms.push_back(lvl.atom_coeffs(k));
        L["atoms"] = std::move(atoms);
        L["ball_volumes"] = lvl.ball_volumes;
        L["residual"] = lvl.rule.residual_inf;
        levels.push_back(std::move(L));
    }
    j["levels"] = std::move(levels);
    return j;
}

std::string frame_coefficients_to_csv(const frame::FrameCoefficients& coeffs) {
    std::ostringstream out;
    out.precision(17);
    out << "j,k,s\n";
    for (std::size_t j = 0; j < coeffs.s.size(); ++j)
        for (std::size_t k = 0; k < coeffs.s[j].size(); ++k)
            out << j << "," << k << "," << coeffs.s[j][k] << "\n";
    return out.str();
}

frame::FrameCoefficients frame_coefficients_from_csv(const std::string& text) {
    frame::FrameCoefficients coeffs;
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line)) throw_io("empty coefficient file");
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream row(line);
        std::string jf, kf, sf;
        if (!std::getline(row, jf, ',') || !std::getline(row, kf, ',') || !std::getline(row, sf))
            throw_io("malformed coefficient row: " + line);
        const std::size_t j = std::stoul(jf);
        const std::size_t k = std::stoul(kf);
        if (coeffs.s.size() <= j) coeffs.s.resize(j + 1);
        if (coeffs.s[j].size() <= k) coeffs.s[j].resize(k + 1, 0.0);
        coeffs.s[j][k] = std::stod(sf);
    }
    return coeffs;
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw_io("cannot open for writing: " + path);
    out << text;
    if (!out) throw_io("write failed: " + path);
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw_io("cannot open: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_json_file(const std::string& path, const json& j) {
    write_text_file(path, j.dump(2) + "\n");
}

json read_json_file(const std::string& path) {
    const std::string text = read_text_file(path);
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw_io("invalid JSON in " + path);
    return j;
}

}  // namespace subframe::io
