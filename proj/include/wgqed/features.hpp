// Detection and sub-grid refinement of reflection peaks and dips.

#pragma once

#include <optional>
#include <vector>

#include "wgqed/model.hpp"
#include "wgqed/types.hpp"

namespace wgqed {

struct PeakDescriptor {
    double center = 0.0;      ///< refined detuning of the local maximum
    double height = 0.0;      ///< reflectivity at the center
    double fwhm = 0.0;        ///< full width at half the peak height (0 until measured)
    double prominence = 0.0;  ///< grid-level prominence used for filtering
};

struct DipDescriptor {
    double center = 0.0;
    double depth = 0.0;       ///< reflectivity at the center
    double prominence = 0.0;
};

struct FeatureSet {
    std::vector<PeakDescriptor> peaks;  ///< sorted by center
    std::vector<DipDescriptor> dips;    ///< sorted by center
    double grid_lo = 0.0;
    double grid_hi = 0.0;
    double grid_spacing = 0.0;
};

/// Locate strict local extrema of the tabulated reflectivity, then refine
/// each center by golden-section search of the continuous model inside the
/// bracketing triple, to 1e-6 of the grid spacing. Features with grid
/// prominence below min_prominence are discarded. Plateau candidates
/// (equal neighbours) resolve to the lower index.
FeatureSet find_extrema(const Spectrum& spectrum, const ReflectivityFn& model,
                        double min_prominence = 1e-6);

/// Width between the two half-height crossings of a refined peak, each
/// located by outward march plus bisection on the continuous model.
/// The half level is height/2 measured from zero reflectivity.
/// Throws BracketError if a crossing cannot be bracketed within
/// max_march of the center.
double measure_fwhm(const ReflectivityFn& model, const PeakDescriptor& peak,
                    double initial_step, double max_march = 1e6);

/// Fill fwhm on every peak of a feature set.
void measure_all_fwhm(const ReflectivityFn& model, FeatureSet& features,
                      double initial_step);

enum class Regime { lossless, lossy };

struct CountResult {
    int emitters = 0;
    bool regime_warning = false;  ///< lossless claimed but spectrum shows loss
};

/// Count emitters from spectral features: dips + 1 in the lossless regime,
/// visible peaks in the lossy regime. Only features with prominence at least
/// count_prominence participate (low satellite humps in the exact lineshape
/// are not collective resonances). Sets regime_warning when regime is
/// lossless but R + T < 1 - 1e-6 somewhere on the grid.
CountResult count_emitters(const FeatureSet& features, Regime regime,
                           const Spectrum& spectrum,
                           double count_prominence = 1e-2);

/// Golden-section extremum polish on [lo, hi]; maximizes when maximize is
/// true. Interval is reduced below tol; returns the midpoint.
double golden_section(const ReflectivityFn& f, double lo, double hi, double tol,
                      bool maximize);

/// Refine a local maximum near `guess` by staged zoom scans of the
/// continuous model followed by golden-section polish. Used where a peak's
/// rough position is already known (e.g. a predicted collective resonance).
PeakDescriptor refine_peak_near(const ReflectivityFn& model, double guess,
                                double half_window, int stages = 3,
                                std::size_t points_per_stage = 2001);

}  // namespace wgqed
