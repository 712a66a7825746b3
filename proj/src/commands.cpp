#include "wgqed/commands.hpp"

#include <cmath>
#include <limits>

#include "wgqed/features.hpp"
#include "wgqed/inversion.hpp"
#include "wgqed/model.hpp"
#include "wgqed/sensing.hpp"

namespace wgqed {

Command parse_command(const std::string& name) {
    if (name == "spectrum") return Command::spectrum;
    if (name == "features") return Command::features;
    if (name == "count") return Command::count;
    if (name == "invert") return Command::invert;
    if (name == "sense") return Command::sense;
    throw ValidationError("unknown command: " + name);
}

std::string command_name(Command cmd) {
    switch (cmd) {
        case Command::spectrum: return "spectrum";
        case Command::features: return "features";
        case Command::count: return "count";
        case Command::invert: return "invert";
        case Command::sense: return "sense";
    }
    return "?";
}

namespace {

std::string method_name(InversionMethod m) {
    switch (m) {
        case InversionMethod::lossless_dip: return "lossless-dip";
        case InversionMethod::lossy_fit: return "lossy-fit";
        case InversionMethod::per_emitter: return "per-emitter";
    }
    return "?";
}

Spectrum scenario_spectrum(const ScenarioConfig& cfg, const EmitterArray& array,
                           const RunOptions& options) {
    GridSpec g = cfg.effective_grid(array);
    if (options.grid_points) g.points = *options.grid_points;
    return compute_spectrum(array, uniform_grid(g.lo, g.hi, g.points),
                            cfg.waveguide);
}

EmitterArray with_gradient(const ScenarioConfig& cfg, const EmitterArray& array) {
    if (cfg.gradient && *cfg.gradient != 0.0)
        return apply_gradient_field(array, *cfg.gradient);
    return array;
}

RunOutput run_spectrum(const ScenarioConfig& cfg, const RunOptions& options) {
    const EmitterArray array = with_gradient(cfg, cfg.make_array());
    const Spectrum s = scenario_spectrum(cfg, array, options);
    RunOutput out;
    out.table.columns = {"delta_omega", "re_r", "im_r", "R", "T"};
    for (std::size_t i = 0; i < s.size(); ++i) {
        auto& row = out.table.add_row();
        row.push_back(format_number(s.grid[i]));
        row.push_back(format_number(s.r[i].real()));
        row.push_back(format_number(s.r[i].imag()));
        row.push_back(format_number(s.reflectivity[i]));
        row.push_back(format_number(s.transmissivity[i]));
    }
    return out;
}

RunOutput run_features(const ScenarioConfig& cfg, const RunOptions& options) {
    const EmitterArray array = with_gradient(cfg, cfg.make_array());
    const Spectrum s = scenario_spectrum(cfg, array, options);
    const auto model = reflectivity_fn(array, cfg.waveguide);
    FeatureSet features = find_extrema(s, model, cfg.features.min_prominence);
    // A half-height crossing outside the scanned window is reported as nan
    // rather than failing the whole table; rescan wider to measure it.
    const double window = s.grid.back() - s.grid.front();
    for (auto& p : features.peaks) {
        try {
            p.fwhm = measure_fwhm(model, p, std::max(s.spacing(), 1e-9), window);
        } catch (const BracketError&) {
            p.fwhm = std::numeric_limits<double>::quiet_NaN();
        }
    }

    RunOutput out;
    out.table.columns = {"kind", "center", "level", "fwhm"};
    std::size_t pi = 0, di = 0;
    while (pi < features.peaks.size() || di < features.dips.size()) {
        const bool take_peak =
            di >= features.dips.size() ||
            (pi < features.peaks.size() &&
             features.peaks[pi].center < features.dips[di].center);
        auto& row = out.table.add_row();
        if (take_peak) {
            const auto& p = features.peaks[pi++];
            row = {"peak", format_number(p.center), format_number(p.height),
                   format_number(p.fwhm)};
        } else {
            const auto& d = features.dips[di++];
            row = {"dip", format_number(d.center), format_number(d.depth), "nan"};
        }
    }
    return out;
}

RunOutput run_count(const ScenarioConfig& cfg, const RunOptions& options) {
    const EmitterArray array = with_gradient(cfg, cfg.make_array());
    const Spectrum s = scenario_spectrum(cfg, array, options);
    const auto model = reflectivity_fn(array, cfg.waveguide);
    const FeatureSet features = find_extrema(s, model, cfg.features.min_prominence);

    Regime regime;
    if (cfg.count.regime == "lossless")
        regime = Regime::lossless;
    else if (cfg.count.regime == "lossy")
        regime = Regime::lossy;
    else
        regime = array.lossless() ? Regime::lossless : Regime::lossy;

    const CountResult res =
        count_emitters(features, regime, s, cfg.count.min_prominence);

    int dips = 0, peaks = 0;
    for (const auto& d : features.dips)
        if (d.prominence >= cfg.count.min_prominence) ++dips;
    for (const auto& p : features.peaks)
        if (p.prominence >= cfg.count.min_prominence) ++peaks;

    RunOutput out;
    out.table.columns = {"regime", "emitters", "dips", "peaks"};
    auto& row = out.table.add_row();
    row = {regime == Regime::lossless ? "lossless" : "lossy",
           std::to_string(res.emitters), std::to_string(dips),
           std::to_string(peaks)};
    if (res.regime_warning)
        out.diagnostics.push_back(
            "warning: lossless regime requested but the spectrum shows loss "
            "(R + T < 1); dip counting may be unreliable");
    return out;
}

void push_inversion_rows(ResultTable& table, const InversionResult& res) {
    const std::size_t n = std::max(res.gamma_wg.size(), std::size_t{1});
    for (std::size_t i = 0; i < n; ++i) {
        auto& row = table.add_row();
        row.push_back(format_number(res.d));
        row.push_back(res.branch >= 0 ? std::to_string(res.branch) : "unresolved");
        row.push_back(format_number(i < res.gamma_wg.size() ? res.gamma_wg[i] : 0.0));
        row.push_back(format_number(i < res.gamma_free.size() ? res.gamma_free[i] : 0.0));
        row.push_back(format_number(res.residual));
        row.push_back(method_name(res.method));
    }
}

RunOutput run_invert(const ScenarioConfig& cfg, const RunOptions& options) {
    const EmitterArray array = cfg.make_array();
    RunOutput out;
    out.table.columns = {"d", "n", "gamma_wg", "gamma_free", "deltaS", "method"};

    if (cfg.inversion.mode == "lossless-dip") {
        const Spectrum s = scenario_spectrum(cfg, array, options);
        const auto model = reflectivity_fn(array, cfg.waveguide);
        const FeatureSet features =
            find_extrema(s, model, cfg.features.min_prominence);
        if (features.dips.empty())
            throw NumericalError("invert: no reflection dip found in the scan window");
        const DipDescriptor* dip = &features.dips.front();
        for (const auto& d : features.dips)
            if (d.prominence > dip->prominence) dip = &d;

        const double gamma = array[0].gamma_wg;
        InversionResult res;
        res.method = InversionMethod::lossless_dip;
        res.gamma_wg = {gamma};
        res.gamma_free = {0.0};
        res.branch = cfg.inversion.branch;
        res.d = invert_dip_lossless(dip->center, gamma, cfg.inversion.branch,
                                    cfg.waveguide, cfg.inversion.polish);

        if (cfg.inversion.disambiguate) {
            if (!cfg.gradient || *cfg.gradient == 0.0)
                throw ValidationError(
                    "config field 'gradient': required for branch disambiguation");
            const double d_frac = invert_dip_lossless(
                dip->center, gamma, 0, cfg.waveguide, cfg.inversion.polish);
            const EmitterArray shifted = apply_gradient_field(array, *cfg.gradient);
            const Spectrum gs = scenario_spectrum(cfg, shifted, options);
            const auto gmodel = reflectivity_fn(shifted, cfg.waveguide);
            const BranchResult b =
                disambiguate_branch(gs, gmodel, *cfg.gradient, d_frac, cfg.waveguide);
            res.branch = b.branch;
            res.d = b.d;
            res.residual = b.residual;
        }
        push_inversion_rows(out.table, res);
        return out;
    }

    if (cfg.inversion.mode == "lossy-fit") {
        const Spectrum s = scenario_spectrum(cfg, array, options);
        const auto model = reflectivity_fn(array, cfg.waveguide);
        InversionResult res = invert_lossy_from_spectrum(s, model, cfg.waveguide,
                                                         cfg.inversion.search);
        res.branch = 0;  // the near-field terms pin the sub-half-wavelength branch
        if (res.multi_minimum_warning) {
            std::string msg = "warning: competing variance minima at";
            for (const auto& [d, v] : res.alternates)
                msg += " d=" + format_number(d) + " (deltaS=" + format_number(v) + ")";
            out.diagnostics.push_back(msg);
        }
        push_inversion_rows(out.table, res);
        return out;
    }

    // per-emitter
    if (!cfg.gradient || *cfg.gradient == 0.0)
        throw ValidationError(
            "config field 'gradient': required for per-emitter extraction");
    const EmitterArray shifted = apply_gradient_field(array, *cfg.gradient);
    const Spectrum s = scenario_spectrum(cfg, shifted, options);
    const auto model = reflectivity_fn(shifted, cfg.waveguide);
    const InversionResult res = extract_per_emitter(s, model, *cfg.gradient);
    push_inversion_rows(out.table, res);
    return out;
}

RunOutput run_sense(const ScenarioConfig& cfg, const RunOptions&) {
    const EmitterArray array = cfg.make_array();

    SensingConfig sc;
    sc.waveguide = cfg.waveguide;
    sc.gamma_wg = array[0].gamma_wg;
    sc.gamma_free = array[0].gamma_free;
    sc.branch = cfg.sensing.branch == "subradiant" ? Branch::subradiant
                                                   : Branch::superradiant;
    sc.lambda_physical_pm = cfg.sensing.lambda_physical_um * 1e6;
    sc.strain_pm_per_microstrain = cfg.sensing.strain_pm_per_microstrain;
    sc.temperature_pm_per_kelvin = cfg.sensing.temperature_pm_per_kelvin;
    sc.resolution_alpha = cfg.sensing.alpha;
    if (cfg.sensing.baseline_d) {
        sc.baseline_d = *cfg.sensing.baseline_d;
    } else {
        if (array.size() != 2)
            throw ValidationError(
                "config field 'sensing.baseline_d': required unless exactly two "
                "emitters define the separation");
        sc.baseline_d = array.separation(0);
    }
    if (!(sc.baseline_d > 0.0))
        throw ValidationError("config field 'sensing.baseline_d': must be > 0");
    if (cfg.sensing.shifts.empty() && cfg.sensing.separation_changes.empty())
        throw ValidationError(
            "config field 'sensing': needs 'shifts' or 'separation_changes'");

    const DetectionLimit limit = min_detectable(sc);

    RunOutput out;
    out.table.columns = {"delta_omega", "delta_d", "microstrain", "kelvin",
                         "resolvable"};
    bool any_below_floor = false;
    auto push = [&](const SensingReading& r) {
        auto& row = out.table.add_row();
        row = {format_number(r.shift), format_number(r.dd),
               format_number(r.microstrain), format_number(r.kelvin),
               r.resolvable ? "yes" : "no"};
        any_below_floor = any_below_floor || r.below_thermal_vibration_floor;
    };

    for (double shift : cfg.sensing.shifts)
        push(read_shift(shift, sc, limit));

    if (!cfg.sensing.separation_changes.empty()) {
        const double base = branch_peak_exact(sc.baseline_d, sc);
        for (double dd : cfg.sensing.separation_changes) {
            SensingReading r;
            r.dd = dd;
            r.shift = branch_peak_exact(sc.baseline_d + dd, sc) - base;
            const auto [strain, kelvin] = dd_to_strain_temperature(dd, sc);
            r.microstrain = strain;
            r.kelvin = kelvin;
            r.resolvable = std::abs(r.shift) >= limit.shift_min;
            r.below_thermal_vibration_floor = std::abs(kelvin) < 0.1;
            push(r);
        }
    }

    if (any_below_floor)
        out.diagnostics.push_back(
            "note: some readings are below the ~0.1 K room-temperature lattice "
            "vibration floor; meaningful only in a low-temperature regime");
    return out;
}

}  // namespace

RunOutput run_command(Command cmd, const ScenarioConfig& config,
                      const RunOptions& options) {
    switch (cmd) {
        case Command::spectrum: return run_spectrum(config, options);
        case Command::features: return run_features(config, options);
        case Command::count: return run_count(config, options);
        case Command::invert: return run_invert(config, options);
        case Command::sense: return run_sense(config, options);
    }
    throw ValidationError("unknown command");
}

}  // namespace wgqed
