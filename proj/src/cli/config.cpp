#include "subframe/cli/config.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "subframe/core/error.hpp"
#include "subframe/frame/level.hpp"

namespace subframe::cli {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::vector<double> parse_schedule(const std::string& s) {
    std::vector<double> out;
    std::istringstream in(s);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        tok = trim(tok);
        if (!tok.empty()) out.push_back(std::stod(tok));
    }
    return out;
}

void assign(PipelineConfig& cfg, const std::string& key, const std::string& value) {
    if (key == "mesh_level") cfg.mesh_level = std::stoi(value);
    else if (key == "J") cfg.J = std::stoi(value);
    else if (key == "metric") cfg.metric = value;
    else if (key == "tau_cub") cfg.tau_cub = std::stod(value);
    else if (key == "recon_tol") cfg.recon_tol = std::stod(value);
    else if (key == "seed") cfg.seed = std::stoull(value);
    else if (key == "jobs") cfg.jobs = static_cast<unsigned>(std::stoul(value));
    else if (key == "out_dir") cfg.out_dir = value;
    else if (key == "format") cfg.format = value;
    else if (key == "eps_schedule") cfg.eps_schedule = parse_schedule(value);
    else throw_config("unknown config key: " + key);
}

}  // namespace

void PipelineConfig::validate() const {
    if (mesh_level < 0 || mesh_level > 8)
        throw_config("mesh_level must lie in [0, 8]");
    if (J < 0 || J > frame::FrameBundle::kLevelCapMax)
        throw_config("J must lie in [0, " + std::to_string(frame::FrameBundle::kLevelCapMax) +
                     "]");
    if (metric != "cc" && metric != "riemann") throw_config("metric must be cc or riemann");
    if (!(tau_cub > 0.0) || !(recon_tol > 0.0)) throw_config("tolerances must be positive");
    if (format != "json" && format != "csv") throw_config("format must be json or csv");
    if (eps_schedule.empty()) throw_config("eps_schedule must not be empty");
    for (double e : eps_schedule)
        if (!(e > 0.0)) throw_config("eps_schedule entries must be positive");
}

std::map<std::string, std::string> PipelineConfig::canonical() const {
    std::map<std::string, std::string> kv;
    auto num = [](double v) {
        std::ostringstream ss;
        ss.precision(17);
        ss << v;
        return ss.str();
    };
    kv["mesh_level"] = std::to_string(mesh_level);
    kv["J"] = std::to_string(J);
    kv["metric"] = metric;
    kv["tau_cub"] = num(tau_cub);
    kv["recon_tol"] = num(recon_tol);
    kv["seed"] = std::to_string(seed);
    kv["format"] = format;
    std::string sched;
    for (std::size_t i = 0; i < eps_schedule.size(); ++i)
        sched += (i ? "," : "") + num(eps_schedule[i]);
    kv["eps_schedule"] = sched;
    // jobs and out_dir affect execution, not results: excluded from the hash
    return kv;
}

std::string PipelineConfig::hash() const {
    std::uint64_t h = 1469598103934665603ull;  // FNV-1a
    auto mix = [&](const std::string& s) {
        for (unsigned char c : s) {
            h ^= c;
            h *= 1099511628211ull;
        }
    };
    for (const auto& [k, v] : canonical()) {
        mix(k);
        mix("=");
        mix(v);
        mix("\n");
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

PipelineConfig load_config(const std::string& path_or_empty) {
    PipelineConfig cfg;
    if (!path_or_empty.empty()) {
        std::ifstream in(path_or_empty);
        if (!in) throw_io("cannot open config: " + path_or_empty);
        std::string line;
        int lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            const auto hash_pos = line.find('#');
            if (hash_pos != std::string::npos) line = line.substr(0, hash_pos);
            line = trim(line);
            if (line.empty()) continue;
            const auto eq = line.find('=');
            if (eq == std::string::npos)
                throw_config(path_or_empty + ":" + std::to_string(lineno) + ": expected key=value");
            assign(cfg, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
        }
    }
    apply_env_overrides(cfg);
    return cfg;
}

void apply_env_overrides(PipelineConfig& cfg) {
    static const char* keys[] = {"mesh_level", "J",    "metric", "tau_cub",      "recon_tol",
                                 "seed",       "jobs", "out_dir", "format",      "eps_schedule"};
    for (const char* key : keys) {
        std::string env = "SUBFRAME_";
        for (const char* p = key; *p; ++p) env += static_cast<char>(std::toupper(*p));
        if (const char* v = std::getenv(env.c_str())) assign(cfg, key, v);
    }
}

}  // namespace subframe::cli
