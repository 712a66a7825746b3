// Core domain types for waveguide-QED spectroscopy.
//
// Conventions used throughout the library:
//   - lengths (positions, separations) are expressed in units of the
//     resonant wavelength lambda,
//   - rates (decay rates, detunings, linewidths) are expressed in one
//     common reference unit (gamma0 or Gamma0, declared per array),
//   - detunings are angular-frequency offsets delta_omega = delta_k * v_g
//     from the probe reference.

#pragma once

#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace wgqed {

using Complex = std::complex<double>;

// ---------------------------------------------------------------------------
// Errors
// ---------------------------------------------------------------------------

/// Invalid input: bad configuration, malformed array, out-of-domain argument.
struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Numerical failure inside an otherwise valid computation.
struct NumericalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Scattering matrix numerically non-invertible (degenerate parameter set).
struct SingularMatrixError : NumericalError {
    SingularMatrixError(const std::string& msg, double detuning_at)
        : NumericalError(msg), detuning(detuning_at) {}
    double detuning;  ///< detuning at which the solve failed
};

/// Extremum polish left its bracketing interval.
struct RefinementError : NumericalError {
    using NumericalError::NumericalError;
};

/// A root or half-height crossing could not be bracketed in the scan window.
struct BracketError : NumericalError {
    using NumericalError::NumericalError;
};

/// Spectral peaks too overlapped for a per-peak measurement.
struct SeparabilityError : NumericalError {
    using NumericalError::NumericalError;
};

/// Two periodic branch candidates fit the measured splitting equally well.
struct UnresolvedBranchError : NumericalError {
    using NumericalError::NumericalError;
};

// ---------------------------------------------------------------------------
// Propagation medium
// ---------------------------------------------------------------------------

/// 1D waveguide parameters. The wavelength is the unit of all positions;
/// the group velocity enters only through delta_k = delta_omega / v_g and
/// is expressed in wavelength * rate-unit. Its default is large enough that
/// delta_k corrections are negligible at optical-scale rate/frequency ratios.
struct WaveguideParams {
    double wavelength = 1.0;
    double group_velocity = 1.0e9;
    std::string rate_unit = "gamma0";

    double wavenumber() const { return 2.0 * std::numbers::pi / wavelength; }

    /// Full propagation wavenumber k = k_a + delta_omega / v_g.
    double wavenumber_at(double delta_omega) const {
        return wavenumber() + delta_omega / group_velocity;
    }

    void validate() const {
        if (!(wavelength > 0.0))
            throw ValidationError("waveguide.wavelength must be > 0");
        if (!(group_velocity > 0.0))
            throw ValidationError("waveguide.group_velocity must be > 0");
    }
};

// ---------------------------------------------------------------------------
// Emitters
// ---------------------------------------------------------------------------

struct Emitter {
    double z = 0.0;           ///< position along the waveguide (wavelength units)
    double gamma_wg = 1.0;    ///< decay rate into guided modes
    double gamma_free = 0.0;  ///< decay rate into non-guided modes
    double detuning = 0.0;    ///< transition offset from probe reference (includes gradient shift)
};

/// Ordered chain of emitters. Positions are kept strictly ascending.
class EmitterArray {
  public:
    EmitterArray() = default;

    explicit EmitterArray(std::vector<Emitter> emitters,
                          std::string rate_unit = "gamma0")
        : emitters_(std::move(emitters)), rate_unit_(std::move(rate_unit)) {
        sort_and_validate();
    }

    const std::vector<Emitter>& emitters() const { return emitters_; }
    const Emitter& operator[](std::size_t i) const { return emitters_[i]; }
    std::size_t size() const { return emitters_.size(); }
    const std::string& rate_unit() const { return rate_unit_; }

    /// Separation between consecutive emitters i and i+1.
    double separation(std::size_t i) const {
        return emitters_[i + 1].z - emitters_[i].z;
    }

    bool lossless() const {
        for (const auto& e : emitters_)
            if (e.gamma_free > 0.0) return false;
        return true;
    }

    double max_total_rate() const {
        double m = 0.0;
        for (const auto& e : emitters_)
            m = std::max(m, e.gamma_wg + e.gamma_free);
        return m;
    }

  private:
    void sort_and_validate();

    std::vector<Emitter> emitters_;
    std::string rate_unit_ = "gamma0";
};

// ---------------------------------------------------------------------------
// Spectrum
// ---------------------------------------------------------------------------

/// Tabulated reflection/transmission amplitudes over a detuning grid.
struct Spectrum {
    std::vector<double> grid;        ///< strictly increasing detunings
    std::vector<Complex> r;          ///< reflection amplitude per grid point
    std::vector<Complex> t;          ///< transmission amplitude per grid point
    std::vector<double> reflectivity;    ///< |r|^2
    std::vector<double> transmissivity;  ///< |t|^2

    std::size_t size() const { return grid.size(); }
    double spacing() const {
        return grid.size() > 1 ? (grid.back() - grid.front()) / double(grid.size() - 1)
                               : 0.0;
    }
};

/// Uniform grid of `points` detunings covering [lo, hi].
std::vector<double> uniform_grid(double lo, double hi, std::size_t points);

}  // namespace wgqed
