#include "wgqed/features.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace wgqed {

namespace {

// Prominence of a grid maximum at i: height above the higher of the two
// valley floors reached before strictly higher ground (or the window edge).
double peak_prominence(const std::vector<double>& r, std::size_t i) {
    double left = r[i];
    for (std::size_t j = i; j-- > 0;) {
        left = std::min(left, r[j]);
        if (r[j] > r[i]) break;
    }
    double right = r[i];
    for (std::size_t j = i + 1; j < r.size(); ++j) {
        right = std::min(right, r[j]);
        if (r[j] > r[i]) break;
    }
    return r[i] - std::max(left, right);
}

double dip_prominence(const std::vector<double>& r, std::size_t i) {
    double left = r[i];
    for (std::size_t j = i; j-- > 0;) {
        left = std::max(left, r[j]);
        if (r[j] < r[i]) break;
    }
    double right = r[i];
    for (std::size_t j = i + 1; j < r.size(); ++j) {
        right = std::max(right, r[j]);
        if (r[j] < r[i]) break;
    }
    return std::min(left, right) - r[i];
}

}  // namespace

double golden_section(const ReflectivityFn& f, double lo, double hi, double tol,
                      bool maximize) {
    const double sign = maximize ? 1.0 : -1.0;
    const double ratio = (std::sqrt(5.0) - 1.0) / 2.0;
    // the interval cannot shrink below representable spacing
    tol = std::max(tol, 8.0 * std::numeric_limits<double>::epsilon() *
                            std::max({1.0, std::abs(lo), std::abs(hi)}));
    double a = lo, b = hi;
    double c = b - ratio * (b - a);
    double d = a + ratio * (b - a);
    double fc = sign * f(c);
    double fd = sign * f(d);
    while (b - a > tol) {
        if (fc > fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - ratio * (b - a);
            fc = sign * f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + ratio * (b - a);
            fd = sign * f(d);
        }
    }
    return 0.5 * (a + b);
}

FeatureSet find_extrema(const Spectrum& spectrum, const ReflectivityFn& model,
                        double min_prominence) {
    const std::size_t n = spectrum.size();
    if (n < 3) throw ValidationError("find_extrema: grid too short");
    const auto& x = spectrum.grid;
    const auto& r = spectrum.reflectivity;

    FeatureSet out;
    out.grid_lo = x.front();
    out.grid_hi = x.back();
    out.grid_spacing = spectrum.spacing();
    const double polish_tol = 1e-6 * out.grid_spacing;

    auto refine = [&](std::size_t i, bool maximize) {
        const double c = golden_section(model, x[i - 1], x[i + 1], polish_tol, maximize);
        // Polish must stay interior to the bracketing triple; landing on an
        // edge means the tabulated extremum is not one of the model.
        if (c <= x[i - 1] + polish_tol || c >= x[i + 1] - polish_tol)
            throw RefinementError("extremum refinement left its bracket near detuning " +
                                  std::to_string(x[i]));
        return c;
    };

    std::size_t i = 1;
    while (i + 1 < n) {
        // Plateau: [i, j] of equal values; classify against its flanks at the
        // lower index.
        std::size_t j = i;
        while (j + 1 < n && r[j + 1] == r[i]) ++j;
        const bool interior = (j + 1 < n);
        if (interior && r[i] > r[i - 1] && r[i] > r[j + 1]) {
            const double prom = peak_prominence(r, i);
            if (prom >= min_prominence) {
                PeakDescriptor p;
                p.center = refine(i, true);
                p.height = model(p.center);
                p.prominence = prom;
                out.peaks.push_back(p);
            }
        } else if (interior && r[i] < r[i - 1] && r[i] < r[j + 1]) {
            const double prom = dip_prominence(r, i);
            if (prom >= min_prominence) {
                DipDescriptor d;
                d.center = refine(i, false);
                d.depth = model(d.center);
                d.prominence = prom;
                out.dips.push_back(d);
            }
        }
        i = j + 1;
    }

    std::sort(out.peaks.begin(), out.peaks.end(),
              [](const auto& a, const auto& b) { return a.center < b.center; });
    std::sort(out.dips.begin(), out.dips.end(),
              [](const auto& a, const auto& b) { return a.center < b.center; });
    return out;
}

namespace {

double half_crossing(const ReflectivityFn& f, double center, double half,
                     double direction, double initial_step, double max_march) {
    double step = initial_step;
    double prev = center;
    double x = center + direction * step;
    while (f(x) > half) {
        prev = x;
        step *= 1.5;
        x = center + direction * (std::abs(x - center) + step);
        if (std::abs(x - center) > max_march)
            throw BracketError("half-height crossing not bracketed within scan range");
    }
    double inside = prev;   // f(inside) > half
    double outside = x;     // f(outside) <= half
    for (int it = 0; it < 200; ++it) {
        const double m = 0.5 * (inside + outside);
        if (f(m) > half)
            inside = m;
        else
            outside = m;
        if (std::abs(outside - inside) <=
            1e-12 * std::max({1.0, std::abs(inside), std::abs(outside)}))
            break;
    }
    return 0.5 * (inside + outside);
}

}  // namespace

double measure_fwhm(const ReflectivityFn& model, const PeakDescriptor& peak,
                    double initial_step, double max_march) {
    if (!(peak.height > 0.0))
        throw ValidationError("measure_fwhm: peak height must be > 0");
    const double half = 0.5 * peak.height;
    const double right =
        half_crossing(model, peak.center, half, +1.0, initial_step, max_march);
    const double left =
        half_crossing(model, peak.center, half, -1.0, initial_step, max_march);
    return right - left;
}

void measure_all_fwhm(const ReflectivityFn& model, FeatureSet& features,
                      double initial_step) {
    for (auto& p : features.peaks) p.fwhm = measure_fwhm(model, p, initial_step);
}

CountResult count_emitters(const FeatureSet& features, Regime regime,
                           const Spectrum& spectrum, double count_prominence) {
    CountResult out;
    if (regime == Regime::lossless) {
        int dips = 0;
        for (const auto& d : features.dips)
            if (d.prominence >= count_prominence) ++dips;
        out.emitters = dips + 1;
        for (std::size_t i = 0; i < spectrum.size(); ++i) {
            if (spectrum.reflectivity[i] + spectrum.transmissivity[i] < 1.0 - 1e-6) {
                out.regime_warning = true;
                break;
            }
        }
    } else {
        int peaks = 0;
        for (const auto& p : features.peaks)
            if (p.prominence >= count_prominence) ++peaks;
        out.emitters = peaks;
    }
    return out;
}

PeakDescriptor refine_peak_near(const ReflectivityFn& model, double guess,
                                double half_window, int stages,
                                std::size_t points_per_stage) {
    double lo = guess - half_window;
    double hi = guess + half_window;
    std::size_t best = 0;
    std::vector<double> xs(points_per_stage), ys(points_per_stage);
    for (int s = 0; s < stages; ++s) {
        const double step = (hi - lo) / double(points_per_stage - 1);
        best = 0;
        for (std::size_t i = 0; i < points_per_stage; ++i) {
            xs[i] = lo + step * double(i);
            ys[i] = model(xs[i]);
            if (ys[i] > ys[best]) best = i;
        }
        const double c = xs[best];
        lo = c - 2.0 * step;
        hi = c + 2.0 * step;
        if (hi - lo <= 64.0 * std::numeric_limits<double>::epsilon() *
                           std::max(1.0, std::abs(c)))
            break;  // window already at representable resolution
    }
    PeakDescriptor p;
    p.center = golden_section(model, lo, hi, (hi - lo) * 1e-6, true);
    p.height = model(p.center);
    p.prominence = p.height;
    return p;
}

}  // namespace wgqed
