// Scenario configuration: one JSON file describing the waveguide, the
// emitter chain, and per-command options.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wgqed/inversion.hpp"
#include "wgqed/types.hpp"

namespace wgqed {

struct GridSpec {
    double lo = 0.0;
    double hi = 0.0;
    std::size_t points = 20001;
};

struct FeatureOptions {
    double min_prominence = 1e-6;
};

struct CountOptions {
    std::string regime = "auto";  ///< auto | lossless | lossy
    double min_prominence = 1e-2;
};

struct InversionOptions {
    std::string mode = "lossless-dip";  ///< lossless-dip | lossy-fit | per-emitter
    int branch = 0;
    bool disambiguate = false;          ///< use the gradient spectrum to fix the branch
    bool polish = true;
    SearchRange search{};
};

struct SensingOptions {
    std::string branch = "superradiant";
    std::optional<double> baseline_d;   ///< defaults to the pair separation
    double lambda_physical_um = 1.55;
    double strain_pm_per_microstrain = 1.25;
    double temperature_pm_per_kelvin = 12.5;
    std::optional<double> alpha;
    std::vector<double> shifts;              ///< measured-shift mode
    std::vector<double> separation_changes;  ///< forward mode
};

struct ScenarioConfig {
    WaveguideParams waveguide{};
    std::vector<Emitter> emitters;
    std::optional<double> gradient;
    std::optional<GridSpec> grid;
    FeatureOptions features{};
    CountOptions count{};
    InversionOptions inversion{};
    SensingOptions sensing{};
    std::uint64_t config_hash = 0;

    EmitterArray make_array() const;

    /// Configured grid, or the model-derived default window.
    GridSpec effective_grid(const EmitterArray& array) const;
};

/// Parse and validate a config file. Throws ValidationError naming the
/// offending field (or the parser's line/column for malformed JSON).
ScenarioConfig parse_config_file(const std::string& path);
ScenarioConfig parse_config_text(const std::string& text);

/// Canonical JSON for a parsed scenario; parse(serialize(cfg)) is
/// semantically identical to cfg.
std::string serialize(const ScenarioConfig& cfg);

/// FNV-1a 64-bit hash, used to tag emitted data files with their config.
std::uint64_t fnv1a64(const std::string& bytes);

}  // namespace wgqed
