#include "wgqed/config.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "wgqed/model.hpp"

namespace wgqed {

using nlohmann::json;

namespace {

[[noreturn]] void bad_field(const std::string& path, const std::string& why) {
    throw ValidationError("config field '" + path + "': " + why);
}

double require_finite(const json& v, const std::string& path) {
    if (!v.is_number()) bad_field(path, "expected a number");
    const double x = v.get<double>();
    if (!std::isfinite(x)) bad_field(path, "must be finite");
    return x;
}

double get_num(const json& obj, const std::string& key, const std::string& path,
               double fallback) {
    if (!obj.contains(key)) return fallback;
    return require_finite(obj.at(key), path + "." + key);
}

void reject_unknown(const json& obj, const std::string& path,
                    std::initializer_list<const char*> known) {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        bool ok = false;
        for (const char* k : known)
            if (it.key() == k) ok = true;
        if (!ok) bad_field(path + "." + it.key(), "unknown field");
    }
}

}  // namespace

std::uint64_t fnv1a64(const std::string& bytes) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

EmitterArray ScenarioConfig::make_array() const {
    if (emitters.empty())
        throw ValidationError("config field 'emitters': list must not be empty");
    return EmitterArray(emitters, waveguide.rate_unit);
}

GridSpec ScenarioConfig::effective_grid(const EmitterArray& array) const {
    if (grid) return *grid;
    GridSpec g;
    const double half = default_scan_halfwidth(array, waveguide);
    g.lo = -half;
    g.hi = half;
    return g;
}

ScenarioConfig parse_config_text(const std::string& text) {
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ValidationError(std::string("config parse error: ") + e.what());
    }
    if (!root.is_object()) throw ValidationError("config root must be an object");
    reject_unknown(root, "config",
                   {"waveguide", "emitters", "gradient", "grid", "features",
                    "count", "inversion", "sensing"});

    ScenarioConfig cfg;
    cfg.config_hash = fnv1a64(text);

    if (!root.contains("waveguide"))
        throw ValidationError("config field 'waveguide': required block missing");
    {
        const json& w = root.at("waveguide");
        reject_unknown(w, "waveguide", {"wavelength", "group_velocity", "rate_unit"});
        cfg.waveguide.wavelength = get_num(w, "wavelength", "waveguide", 1.0);
        cfg.waveguide.group_velocity = get_num(w, "group_velocity", "waveguide", 1.0e9);
        if (!w.contains("rate_unit") || !w.at("rate_unit").is_string())
            bad_field("waveguide.rate_unit", "required (\"gamma0\" or \"Gamma0\")");
        cfg.waveguide.rate_unit = w.at("rate_unit").get<std::string>();
        if (cfg.waveguide.rate_unit != "gamma0" && cfg.waveguide.rate_unit != "Gamma0")
            bad_field("waveguide.rate_unit", "must be \"gamma0\" or \"Gamma0\"");
        cfg.waveguide.validate();
    }

    if (!root.contains("emitters") || !root.at("emitters").is_array())
        throw ValidationError("config field 'emitters': required list missing");
    std::size_t idx = 0;
    for (const json& e : root.at("emitters")) {
        const std::string path = "emitters[" + std::to_string(idx) + "]";
        if (!e.is_object()) bad_field(path, "expected an object");
        reject_unknown(e, path, {"z", "gamma_wg", "gamma_free", "detuning"});
        Emitter em;
        if (!e.contains("z")) bad_field(path + ".z", "required");
        em.z = require_finite(e.at("z"), path + ".z");
        if (!e.contains("gamma_wg")) bad_field(path + ".gamma_wg", "required");
        em.gamma_wg = require_finite(e.at("gamma_wg"), path + ".gamma_wg");
        em.gamma_free = get_num(e, "gamma_free", path, 0.0);
        em.detuning = get_num(e, "detuning", path, 0.0);
        cfg.emitters.push_back(em);
        ++idx;
    }

    if (root.contains("gradient"))
        cfg.gradient = require_finite(root.at("gradient"), "gradient");

    if (root.contains("grid")) {
        const json& g = root.at("grid");
        reject_unknown(g, "grid", {"min", "max", "points"});
        GridSpec gs;
        if (!g.contains("min") || !g.contains("max"))
            bad_field("grid", "needs both min and max");
        gs.lo = require_finite(g.at("min"), "grid.min");
        gs.hi = require_finite(g.at("max"), "grid.max");
        if (g.contains("points")) {
            if (!g.at("points").is_number_integer())
                bad_field("grid.points", "expected an integer");
            const long long p = g.at("points").get<long long>();
            if (p < 2) bad_field("grid.points", "must be >= 2");
            gs.points = static_cast<std::size_t>(p);
        }
        if (!(gs.hi > gs.lo)) bad_field("grid", "max must exceed min");
        cfg.grid = gs;
    }

    if (root.contains("features")) {
        const json& f = root.at("features");
        reject_unknown(f, "features", {"min_prominence"});
        cfg.features.min_prominence =
            get_num(f, "min_prominence", "features", cfg.features.min_prominence);
    }

    if (root.contains("count")) {
        const json& c = root.at("count");
        reject_unknown(c, "count", {"regime", "min_prominence"});
        if (c.contains("regime")) {
            if (!c.at("regime").is_string()) bad_field("count.regime", "expected a string");
            cfg.count.regime = c.at("regime").get<std::string>();
            if (cfg.count.regime != "auto" && cfg.count.regime != "lossless" &&
                cfg.count.regime != "lossy")
                bad_field("count.regime", "must be auto, lossless, or lossy");
        }
        cfg.count.min_prominence =
            get_num(c, "min_prominence", "count", cfg.count.min_prominence);
    }

    if (root.contains("inversion")) {
        const json& v = root.at("inversion");
        reject_unknown(v, "inversion",
                       {"mode", "branch", "disambiguate", "polish", "search"});
        if (v.contains("mode")) {
            if (!v.at("mode").is_string()) bad_field("inversion.mode", "expected a string");
            cfg.inversion.mode = v.at("mode").get<std::string>();
            if (cfg.inversion.mode != "lossless-dip" && cfg.inversion.mode != "lossy-fit" &&
                cfg.inversion.mode != "per-emitter")
                bad_field("inversion.mode",
                          "must be lossless-dip, lossy-fit, or per-emitter");
        }
        if (v.contains("branch")) {
            if (!v.at("branch").is_number_integer() || v.at("branch").get<int>() < 0)
                bad_field("inversion.branch", "expected a non-negative integer");
            cfg.inversion.branch = v.at("branch").get<int>();
        }
        if (v.contains("disambiguate")) {
            if (!v.at("disambiguate").is_boolean())
                bad_field("inversion.disambiguate", "expected a boolean");
            cfg.inversion.disambiguate = v.at("disambiguate").get<bool>();
        }
        if (v.contains("polish")) {
            if (!v.at("polish").is_boolean())
                bad_field("inversion.polish", "expected a boolean");
            cfg.inversion.polish = v.at("polish").get<bool>();
        }
        if (v.contains("search")) {
            const json& s = v.at("search");
            reject_unknown(s, "inversion.search", {"min", "max", "points"});
            cfg.inversion.search.lo =
                get_num(s, "min", "inversion.search", cfg.inversion.search.lo);
            cfg.inversion.search.hi =
                get_num(s, "max", "inversion.search", cfg.inversion.search.hi);
            if (s.contains("points")) {
                if (!s.at("points").is_number_integer() || s.at("points").get<long long>() < 3)
                    bad_field("inversion.search.points", "expected an integer >= 3");
                cfg.inversion.search.points =
                    static_cast<std::size_t>(s.at("points").get<long long>());
            }
            if (!(cfg.inversion.search.hi > cfg.inversion.search.lo))
                bad_field("inversion.search", "max must exceed min");
        }
    }

    if (root.contains("sensing")) {
        const json& s = root.at("sensing");
        reject_unknown(s, "sensing",
                       {"branch", "baseline_d", "lambda_physical_um",
                        "strain_pm_per_microstrain", "temperature_pm_per_kelvin",
                        "alpha", "shifts", "separation_changes"});
        if (s.contains("branch")) {
            if (!s.at("branch").is_string()) bad_field("sensing.branch", "expected a string");
            cfg.sensing.branch = s.at("branch").get<std::string>();
            if (cfg.sensing.branch != "superradiant" && cfg.sensing.branch != "subradiant")
                bad_field("sensing.branch", "must be superradiant or subradiant");
        }
        if (s.contains("baseline_d"))
            cfg.sensing.baseline_d = require_finite(s.at("baseline_d"), "sensing.baseline_d");
        cfg.sensing.lambda_physical_um =
            get_num(s, "lambda_physical_um", "sensing", cfg.sensing.lambda_physical_um);
        cfg.sensing.strain_pm_per_microstrain =
            get_num(s, "strain_pm_per_microstrain", "sensing",
                    cfg.sensing.strain_pm_per_microstrain);
        cfg.sensing.temperature_pm_per_kelvin =
            get_num(s, "temperature_pm_per_kelvin", "sensing",
                    cfg.sensing.temperature_pm_per_kelvin);
        if (s.contains("alpha"))
            cfg.sensing.alpha = require_finite(s.at("alpha"), "sensing.alpha");
        for (const char* key : {"shifts", "separation_changes"}) {
            if (!s.contains(key)) continue;
            if (!s.at(key).is_array())
                bad_field(std::string("sensing.") + key, "expected a list of numbers");
            std::size_t i = 0;
            auto& dst = std::string(key) == "shifts" ? cfg.sensing.shifts
                                                     : cfg.sensing.separation_changes;
            for (const json& v : s.at(key)) {
                dst.push_back(require_finite(
                    v, "sensing." + std::string(key) + "[" + std::to_string(i) + "]"));
                ++i;
            }
        }
        if (cfg.sensing.lambda_physical_um <= 0.0)
            bad_field("sensing.lambda_physical_um", "must be > 0");
        if (cfg.sensing.strain_pm_per_microstrain <= 0.0)
            bad_field("sensing.strain_pm_per_microstrain", "must be > 0");
        if (cfg.sensing.temperature_pm_per_kelvin <= 0.0)
            bad_field("sensing.temperature_pm_per_kelvin", "must be > 0");
    }

    return cfg;
}

ScenarioConfig parse_config_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationError("cannot open config file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config_text(buf.str());
}

std::string serialize(const ScenarioConfig& cfg) {
    json root;
    root["waveguide"] = {{"wavelength", cfg.waveguide.wavelength},
                         {"group_velocity", cfg.waveguide.group_velocity},
                         {"rate_unit", cfg.waveguide.rate_unit}};
    root["emitters"] = json::array();
    for (const auto& e : cfg.emitters)
        root["emitters"].push_back({{"z", e.z},
                                    {"gamma_wg", e.gamma_wg},
                                    {"gamma_free", e.gamma_free},
                                    {"detuning", e.detuning}});
    if (cfg.gradient) root["gradient"] = *cfg.gradient;
    if (cfg.grid)
        root["grid"] = {{"min", cfg.grid->lo},
                        {"max", cfg.grid->hi},
                        {"points", cfg.grid->points}};
    root["features"] = {{"min_prominence", cfg.features.min_prominence}};
    root["count"] = {{"regime", cfg.count.regime},
                     {"min_prominence", cfg.count.min_prominence}};
    root["inversion"] = {{"mode", cfg.inversion.mode},
                         {"branch", cfg.inversion.branch},
                         {"disambiguate", cfg.inversion.disambiguate},
                         {"polish", cfg.inversion.polish},
                         {"search",
                          {{"min", cfg.inversion.search.lo},
                           {"max", cfg.inversion.search.hi},
                           {"points", cfg.inversion.search.points}}}};
    json sensing = {{"branch", cfg.sensing.branch},
                    {"lambda_physical_um", cfg.sensing.lambda_physical_um},
                    {"strain_pm_per_microstrain", cfg.sensing.strain_pm_per_microstrain},
                    {"temperature_pm_per_kelvin", cfg.sensing.temperature_pm_per_kelvin}};
    if (cfg.sensing.baseline_d) sensing["baseline_d"] = *cfg.sensing.baseline_d;
    if (cfg.sensing.alpha) sensing["alpha"] = *cfg.sensing.alpha;
    if (!cfg.sensing.shifts.empty()) sensing["shifts"] = cfg.sensing.shifts;
    if (!cfg.sensing.separation_changes.empty())
        sensing["separation_changes"] = cfg.sensing.separation_changes;
    root["sensing"] = sensing;
    return root.dump(2) + "\n";
}

}  // namespace wgqed
