#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace subframe::cli {

// Pipeline configuration: a flat key=value document, overridable by
// SUBFRAME_* environment variables and command-line flags, hashed for
// artifact caching.
struct PipelineConfig {
    int mesh_level = 6;
    int J = 1;
    std::string metric = "cc";  // cc | riemann
    double tau_cub = 1e-9;
    double recon_tol = 1e-6;
    std::uint64_t seed = 12345;
    unsigned jobs = 0;  // 0 = hardware
    std::string out_dir = "out";
    std::string format = "json";  // json | csv
    std::vector<double> eps_schedule = {0.2, 0.1, 0.05};

    void validate() const;
    std::map<std::string, std::string> canonical() const;
    std::string hash() const;  // FNV-1a over the canonical key=value lines
};

PipelineConfig load_config(const std::string& path_or_empty);
void apply_env_overrides(PipelineConfig& cfg);

}  // namespace subframe::cli
