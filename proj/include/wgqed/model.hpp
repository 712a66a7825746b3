// Exact single-photon forward model for a chain of two-level emitters
// coupled to a 1D waveguide: dipole-dipole coupling, scattering matrix,
// and reflection/transmission spectra.

#pragma once

#include <functional>

#include "wgqed/linalg.hpp"
#include "wgqed/types.hpp"

namespace wgqed {

/// Complex dipole-dipole coupling between two emitters a distance d apart,
/// before the propagation phase e^{ikd}:
///
///   V = sqrt(G1*G2)/2 + (3*sqrt(g1*g2)/4) * (-i/x + 1/x^2 + i/x^3),
///
/// with x = k_a*d. The guided-mode term is distance-independent here (its
/// phase is applied by the caller); the non-guided term carries the
/// near-field 1/x^3..1/x algebra evaluated at the resonant wavenumber.
/// Throws ValidationError when k_a*d <= 0 (coincident or unordered emitters).
Complex dipole_coupling(double ka_d, double gamma_wg1, double gamma_wg2,
                        double gamma_free1, double gamma_free2);

/// Full coupling including the resonant propagation phase,
/// V * e^{i k_a d}, for a symmetric pair with rates (gamma_wg, gamma_free).
/// Its real part shifts the collective decay rates, its imaginary part the
/// collective resonance frequencies.
Complex pair_coupling_phase(double d, double gamma_wg, double gamma_free,
                            const WaveguideParams& wg);

/// Scattering matrix M(delta_omega):
///   M_jj = (1 + g_j/G_j) + 2i*(detuning_j - delta_omega)/G_j
///   M_jl = 2 V_jl e^{ik|z_j - z_l|} / sqrt(G_j G_l),  k = k_a + delta_k.
linalg::ComplexMatrix m_matrix(const EmitterArray& emitters, double delta_omega,
                               const WaveguideParams& wg);

struct Amplitudes {
    Complex r;
    Complex t;
};

/// Reflection and transmission amplitudes at one detuning, from the dense
/// solve of M:
///   r = -sum_{j,l} e^{ik(z_j + z_l)} [M^-1]_{jl}
///   t =  1 - sum_{j,l} e^{ik(z_j - z_l)} [M^-1]_{jl}
/// Throws SingularMatrixError (with the offending detuning) when the
/// condition estimate exceeds 1e12.
Amplitudes scattering_amplitudes(const EmitterArray& emitters, double delta_omega,
                                 const WaveguideParams& wg);

/// Closed-form two-emitter amplitudes, kept as an independent algebraic
/// route for verification against the matrix form.
Amplitudes two_emitter_amplitudes_closed_form(const EmitterArray& emitters,
                                              double delta_omega,
                                              const WaveguideParams& wg);

/// Evaluate amplitudes over a strictly increasing detuning grid.
/// Grid points are independent; evaluation order is fixed (sequential)
/// so output is bit-reproducible.
Spectrum compute_spectrum(const EmitterArray& emitters,
                          const std::vector<double>& grid,
                          const WaveguideParams& wg);

/// Shift each emitter's transition by a linear gradient field:
/// detuning_j += gradient * z_j. Positions and rates are unchanged.
EmitterArray apply_gradient_field(const EmitterArray& emitters, double gradient);

/// R(delta_omega) as a continuous callable (used by feature refinement).
using ReflectivityFn = std::function<double(double)>;
ReflectivityFn reflectivity_fn(const EmitterArray& emitters, const WaveguideParams& wg);

/// Default symmetric scan half-width: wide enough to contain all collective
/// resonances, max(4*max_j(G_j+g_j), 3*max_j sum_l |Im coupling_jl|).
double default_scan_halfwidth(const EmitterArray& emitters, const WaveguideParams& wg);

}  // namespace wgqed
