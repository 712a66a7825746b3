#include "wgqed/inversion.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace wgqed {

CollectivePeaks classify_collective_peaks(const FeatureSet& features,
                                          const ReflectivityFn& model) {
    if (features.peaks.size() < 2)
        throw SeparabilityError(
            "collective peaks unresolved: fewer than two reflection peaks");
    auto peaks = features.peaks;
    std::sort(peaks.begin(), peaks.end(),
              [](const auto& a, const auto& b) { return a.prominence > b.prominence; });
    PeakDescriptor a = peaks[0];
    PeakDescriptor b = peaks[1];
    const double step = std::max(features.grid_spacing, 1e-9);
    if (a.fwhm <= 0.0) a.fwhm = measure_fwhm(model, a, step);
    if (b.fwhm <= 0.0) b.fwhm = measure_fwhm(model, b, step);

    CollectivePeaks out;
    out.superradiant = (a.fwhm >= b.fwhm) ? a : b;
    out.subradiant = (a.fwhm >= b.fwhm) ? b : a;
    out.splitting = std::abs(a.center - b.center);
    out.separability = out.splitting / std::max(a.fwhm, b.fwhm);
    if (!(out.separability > 1.0))
        throw SeparabilityError(
            "collective peaks unresolved: splitting " + std::to_string(out.splitting) +
            " does not exceed the wider linewidth " +
            std::to_string(std::max(a.fwhm, b.fwhm)));
    return out;
}

FitTargets fit_targets_from(const CollectivePeaks& peaks) {
    FitTargets t;
    t.re_target = (peaks.superradiant.fwhm - peaks.subradiant.fwhm) / 4.0;
    t.im_target =
        (std::abs(peaks.superradiant.center) + std::abs(peaks.subradiant.center)) / 2.0;
    t.r_max = peaks.superradiant.height;
    t.fwhm_sum = peaks.superradiant.fwhm + peaks.subradiant.fwhm;
    return t;
}

double invert_dip_lossless(double dip_detuning, double gamma_wg, int branch,
                           const WaveguideParams& wg, bool polish) {
    if (!(gamma_wg > 0.0))
        throw ValidationError("invert_dip_lossless: gamma_wg must be > 0");
    if (branch < 0)
        throw ValidationError("invert_dip_lossless: branch must be >= 0");
    const double lam = wg.wavelength;
    const double frac =
        lam / (2.0 * std::numbers::pi) * std::atan(-2.0 * dip_detuning / gamma_wg);
    double d = branch * lam / 2.0 + frac;
    if (!(d > 0.0))
        throw ValidationError("invert_dip_lossless: recovered separation not positive");

    if (polish) {
        // Exact transparency condition with the full wavenumber:
        //   dip + (G/2) tan((k_a + dip/v_g) d) = 0, solved on this branch.
        const double k = wg.wavenumber() + dip_detuning / wg.group_velocity;
        auto g = [&](double dd) {
            return dip_detuning + 0.5 * gamma_wg * std::tan(k * dd -
                                                            branch * std::numbers::pi);
        };
        double lo = d - 0.05 * lam;
        double hi = d + 0.05 * lam;
        lo = std::max(lo, branch * lam / 2.0 - 0.249 * lam);
        hi = std::min(hi, branch * lam / 2.0 + 0.249 * lam);
        double glo = g(lo), ghi = g(hi);
        if (glo * ghi < 0.0) {
            for (int it = 0; it < 200; ++it) {
                const double m = 0.5 * (lo + hi);
                const double gm = g(m);
                if (glo * gm <= 0.0) {
                    hi = m;
                    ghi = gm;
                } else {
                    lo = m;
                    glo = gm;
                }
            }
            d = 0.5 * (lo + hi);
        }
    }
    if (!(d > 0.0))
        throw ValidationError("invert_dip_lossless: recovered separation not positive");
    return d;
}

BranchResult disambiguate_branch(double measured_splitting, double gradient,
                                 double d_fractional, const WaveguideParams& wg,
                                 int max_branch, double feature_tol) {
    if (!(gradient != 0.0))
        throw ValidationError("disambiguate_branch: gradient must be nonzero");
    const double lam = wg.wavelength;
    BranchResult best, second;
    best.residual = second.residual = std::numeric_limits<double>::infinity();
    for (int n = 0; n <= max_branch; ++n) {
        const double d = d_fractional + n * lam / 2.0;
        const double res = std::abs(measured_splitting - std::abs(gradient) * d);
        if (res < best.residual) {
            second = best;
            best = {n, d, res};
        } else if (res < second.residual) {
            second = {n, d, res};
        }
    }
    if (second.residual - best.residual <= feature_tol)
        throw UnresolvedBranchError(
            "branch ambiguous: candidates n=" + std::to_string(best.branch) + " and n=" +
            std::to_string(second.branch) + " both match the measured splitting");
    return best;
}

BranchResult disambiguate_branch(const Spectrum& gradient_spectrum,
                                 const ReflectivityFn& model, double gradient,
                                 double d_fractional, const WaveguideParams& wg) {
    const FeatureSet features = find_extrema(gradient_spectrum, model);
    if (features.peaks.size() < 2)
        throw SeparabilityError(
            "gradient spectrum shows fewer than two peaks; increase the gradient");
    auto peaks = features.peaks;
    std::sort(peaks.begin(), peaks.end(),
              [](const auto& a, const auto& b) { return a.prominence > b.prominence; });
    const double splitting = std::abs(peaks[0].center - peaks[1].center);
    return disambiguate_branch(splitting, gradient, d_fractional, wg);
}

std::pair<double, double> extract_rates(const FitTargets& targets) {
    if (!(targets.r_max > 0.0) || targets.r_max > 1.0)
        throw NumericalError("extract_rates: superradiant reflectivity outside (0, 1]");
    if (!(targets.fwhm_sum > 0.0))
        throw ValidationError("extract_rates: fwhm_sum must be > 0");
    const double root = std::sqrt(targets.r_max);
    const double total = targets.fwhm_sum / 2.0;
    return {root * total, (1.0 - root) * total};
}

InversionResult invert_separation_lossy(const FitTargets& targets,
                                        double gamma_wg, double gamma_free,
                                        const WaveguideParams& wg,
                                        const SearchRange& range) {
    if (!(range.hi > range.lo) || range.points < 3)
        throw ValidationError("invert_separation_lossy: bad search range");

    auto variance = [&](double d) {
        const Complex c = pair_coupling_phase(d, gamma_wg, gamma_free, wg);
        const double dre = c.real() - targets.re_target;
        const double dim = c.imag() - targets.im_target;
        return dre * dre + dim * dim;
    };

    const double step = (range.hi - range.lo) / double(range.points - 1);
    std::vector<double> vals(range.points);
    for (std::size_t i = 0; i < range.points; ++i)
        vals[i] = variance(range.lo + step * double(i));

    // Local minima of the coarse scan, polished; ties toward smaller d.
    std::vector<std::pair<double, double>> minima;  // (d, dS)
    auto polish = [&](std::size_t i) {
        const double a = range.lo + step * double(i - 1);
        const double b = range.lo + step * double(i + 1);
        const double d = golden_section(variance, a, b, step * 1e-9, false);
        minima.emplace_back(d, variance(d));
    };
    for (std::size_t i = 1; i + 1 < range.points; ++i)
        if (vals[i] < vals[i - 1] && vals[i] <= vals[i + 1]) polish(i);
    if (minima.empty()) {
        // Minimum sits on a range edge.
        const double d = (vals.front() <= vals.back()) ? range.lo : range.hi;
        minima.emplace_back(d, variance(d));
    }
    std::sort(minima.begin(), minima.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second < b.second;
        return a.first < b.first;
    });

    InversionResult out;
    out.method = InversionMethod::lossy_fit;
    out.d = minima[0].first;
    out.residual = minima[0].second;
    out.gamma_wg = {gamma_wg};
    out.gamma_free = {gamma_free};
    for (std::size_t i = 1; i < minima.size(); ++i) {
        if (minima[i].second <= 1.1 * minima[0].second) {
            out.multi_minimum_warning = true;
            out.alternates.push_back(minima[i]);
        }
    }
    return out;
}

InversionResult invert_lossy_from_spectrum(const Spectrum& spectrum,
                                           const ReflectivityFn& model,
                                           const WaveguideParams& wg,
                                           const SearchRange& range) {
    const FeatureSet features = find_extrema(spectrum, model);
    const CollectivePeaks peaks = classify_collective_peaks(features, model);
    const FitTargets targets = fit_targets_from(peaks);
    const auto [gw, gf] = extract_rates(targets);
    return invert_separation_lossy(targets, gw, gf, wg, range);
}

InversionResult extract_per_emitter(const Spectrum& spectrum,
                                    const ReflectivityFn& model,
                                    double gradient) {
    if (!(gradient != 0.0))
        throw ValidationError("extract_per_emitter: gradient must be nonzero");
    FeatureSet features = find_extrema(spectrum, model);
    if (features.peaks.size() < 2)
        throw SeparabilityError(
            "per-emitter extraction needs two resolved peaks; increase the gradient");
    auto peaks = features.peaks;
    std::sort(peaks.begin(), peaks.end(),
              [](const auto& a, const auto& b) { return a.prominence > b.prominence; });
    peaks.resize(2);
    // Ascending center order maps to emitter order along the gradient.
    std::sort(peaks.begin(), peaks.end(),
              [](const auto& a, const auto& b) { return a.center < b.center; });
    if (gradient < 0.0) std::swap(peaks[0], peaks[1]);

    const double step = std::max(spectrum.spacing(), 1e-9);
    for (auto& p : peaks) p.fwhm = measure_fwhm(model, p, step);

    const double splitting = std::abs(peaks[1].center - peaks[0].center);
    const double widest = std::max(peaks[0].fwhm, peaks[1].fwhm);
    if (!(splitting > widest))
        throw SeparabilityError("per-emitter extraction: peak splitting " +
                                std::to_string(splitting) +
                                " does not exceed the widest linewidth " +
                                std::to_string(widest));

    InversionResult out;
    out.method = InversionMethod::per_emitter;
    out.d = splitting / std::abs(gradient);
    for (const auto& p : peaks) {
        const double root = std::sqrt(p.height);
        out.gamma_wg.push_back(root * p.fwhm);
        out.gamma_free.push_back((1.0 - root) * p.fwhm);
    }
    return out;
}

}  // namespace wgqed
