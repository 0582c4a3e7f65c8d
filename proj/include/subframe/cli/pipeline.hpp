#pragma once

#include <string>
#include <vector>

#include "subframe/cli/config.hpp"
#include "subframe/frame/level.hpp"
#include "subframe/io/json_io.hpp"

namespace subframe::cli {

struct StageRecord {
    std::string name;
    std::string artifact;
    bool cached = false;
    double seconds = 0.0;
};

struct RunManifest {
    std::string config_hash;
    std::vector<StageRecord> stages;
    std::string status = "ok";
};

io::json to_json(const RunManifest& m);

// mesh -> lattices/cubature per level -> frame levels -> reports, with
// artifact reuse keyed by the config hash; partial artifacts are kept on
// failure.
RunManifest run_pipeline(const PipelineConfig& cfg);

// Rebuild the frame bundle deterministically from a config (used by report
// subcommands when a bundle artifact is absent or being regenerated).
frame::FrameBundle build_bundle_for(const PipelineConfig& cfg, const geometry::MetricMesh& mesh);

struct ReportPaths {
    std::vector<std::string> files;
};

// kind: weyl | parseval | geometry | localization | besov
ReportPaths write_report(const PipelineConfig& cfg, const std::string& kind);

}  // namespace subframe::cli
