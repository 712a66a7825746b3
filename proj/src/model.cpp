#include "wgqed/model.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace wgqed {

namespace {
constexpr double kConditionLimit = 1e12;
constexpr Complex kI{0.0, 1.0};
}  // namespace

void EmitterArray::sort_and_validate() {
    std::sort(emitters_.begin(), emitters_.end(),
              [](const Emitter& a, const Emitter& b) { return a.z < b.z; });
    for (std::size_t i = 0; i < emitters_.size(); ++i) {
        const auto& e = emitters_[i];
        if (!(e.gamma_wg > 0.0))
            throw ValidationError("emitter " + std::to_string(i) +
                                  ": gamma_wg must be > 0");
        if (e.gamma_free < 0.0)
            throw ValidationError("emitter " + std::to_string(i) +
                                  ": gamma_free must be >= 0");
        if (!std::isfinite(e.z) || !std::isfinite(e.detuning))
            throw ValidationError("emitter " + std::to_string(i) +
                                  ": non-finite field");
        if (i > 0 && !(emitters_[i].z > emitters_[i - 1].z))
            throw ValidationError("emitter positions must be distinct (z[" +
                                  std::to_string(i - 1) + "] == z[" +
                                  std::to_string(i) + "])");
    }
}

std::vector<double> uniform_grid(double lo, double hi, std::size_t points) {
    if (points < 2 || !(hi > lo))
        throw ValidationError("grid must have points >= 2 and max > min");
    std::vector<double> g(points);
    const double step = (hi - lo) / double(points - 1);
    for (std::size_t i = 0; i < points; ++i) g[i] = lo + step * double(i);
    g.back() = hi;
    return g;
}

Complex dipole_coupling(double ka_d, double gamma_wg1, double gamma_wg2,
                        double gamma_free1, double gamma_free2) {
    if (!(ka_d > 0.0))
        throw ValidationError("dipole_coupling: k_a*d must be > 0");
    Complex v = std::sqrt(gamma_wg1 * gamma_wg2) / 2.0;
    const double gg = gamma_free1 * gamma_free2;
    if (gg > 0.0) {
        const double x = ka_d;
        v += (3.0 * std::sqrt(gg) / 4.0) *
             Complex(1.0 / (x * x), -1.0 / x + 1.0 / (x * x * x));
    }
    return v;
}

Complex pair_coupling_phase(double d, double gamma_wg, double gamma_free,
                            const WaveguideParams& wg) {
    const double x = wg.wavenumber() * d;
    return dipole_coupling(x, gamma_wg, gamma_wg, gamma_free, gamma_free) *
           std::exp(kI * x);
}

linalg::ComplexMatrix m_matrix(const EmitterArray& emitters, double delta_omega,
                               const WaveguideParams& wg) {
    const std::size_t n = emitters.size();
    if (n == 0) throw ValidationError("m_matrix: empty emitter array");
    const double ka = wg.wavenumber();
    const double k = wg.wavenumber_at(delta_omega);
    linalg::ComplexMatrix m(n);
    for (std::size_t j = 0; j < n; ++j) {
        const Emitter& ej = emitters[j];
        m(j, j) = (1.0 + ej.gamma_free / ej.gamma_wg) +
                  2.0 * kI * (ej.detuning - delta_omega) / ej.gamma_wg;
        for (std::size_t l = j + 1; l < n; ++l) {
            const Emitter& el = emitters[l];
            const double d = el.z - ej.z;
            const Complex v =
                dipole_coupling(ka * d, ej.gamma_wg, el.gamma_wg,
                                ej.gamma_free, el.gamma_free);
            const Complex mjl = 2.0 * v * std::exp(kI * k * d) /
                                std::sqrt(ej.gamma_wg * el.gamma_wg);
            m(j, l) = mjl;
            m(l, j) = mjl;
        }
    }
    return m;
}

Amplitudes scattering_amplitudes(const EmitterArray& emitters, double delta_omega,
                                 const WaveguideParams& wg) {
    if (!std::isfinite(delta_omega))
        throw ValidationError("scattering_amplitudes: non-finite detuning");
    const auto m = m_matrix(emitters, delta_omega, wg);
    linalg::ComplexMatrix w;
    try {
        w = linalg::invert(m);
    } catch (const NumericalError&) {
        throw SingularMatrixError(
            "scattering matrix singular at detuning " + std::to_string(delta_omega),
            delta_omega);
    }
    if (linalg::condition_estimate(m, w) > kConditionLimit)
        throw SingularMatrixError(
            "scattering matrix ill-conditioned at detuning " +
                std::to_string(delta_omega),
            delta_omega);

    const double k = wg.wavenumber_at(delta_omega);
    const std::size_t n = emitters.size();
    std::vector<Complex> phase(n);
    for (std::size_t j = 0; j < n; ++j)
        phase[j] = std::exp(kI * k * emitters[j].z);

    Complex r = 0.0;
    Complex sum_t = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t l = 0; l < n; ++l) {
            r += phase[j] * phase[l] * w(j, l);
            sum_t += phase[j] * std::conj(phase[l]) * w(j, l);
        }
    }
    return {-r, 1.0 - sum_t};
}

Amplitudes two_emitter_amplitudes_closed_form(const EmitterArray& emitters,
                                              double delta_omega,
                                              const WaveguideParams& wg) {
    if (emitters.size() != 2)
        throw ValidationError("closed form requires exactly two emitters");
    const Emitter& e1 = emitters[0];
    const Emitter& e2 = emitters[1];
    const double d = e2.z - e1.z;
    const double ka = wg.wavenumber();
    const double k = wg.wavenumber_at(delta_omega);

    const Complex m11 = (1.0 + e1.gamma_free / e1.gamma_wg) +
                        2.0 * kI * (e1.detuning - delta_omega) / e1.gamma_wg;
    const Complex m22 = (1.0 + e2.gamma_free / e2.gamma_wg) +
                        2.0 * kI * (e2.detuning - delta_omega) / e2.gamma_wg;
    const Complex v = dipole_coupling(ka * d, e1.gamma_wg, e2.gamma_wg,
                                      e1.gamma_free, e2.gamma_free);
    const Complex m12 =
        2.0 * v * std::exp(kI * k * d) / std::sqrt(e1.gamma_wg * e2.gamma_wg);

    const Complex det = m11 * m22 - m12 * m12;
    const Complex eikd = std::exp(kI * k * d);
    const Complex r = std::exp(2.0 * kI * k * e1.z) *
                      (2.0 * m12 * eikd - m11 * eikd * eikd - m22) / det;
    const Complex t = 1.0 - (m11 + m22 - 2.0 * m12 * std::cos(k * d)) / det;
    return {r, t};
}

Spectrum compute_spectrum(const EmitterArray& emitters,
                          const std::vector<double>& grid,
                          const WaveguideParams& wg) {
    if (grid.empty()) throw ValidationError("compute_spectrum: empty grid");
    for (std::size_t i = 1; i < grid.size(); ++i)
        if (!(grid[i] > grid[i - 1]))
            throw ValidationError("compute_spectrum: grid must be strictly increasing");

    Spectrum s;
    s.grid = grid;
    s.r.resize(grid.size());
    s.t.resize(grid.size());
    s.reflectivity.resize(grid.size());
    s.transmissivity.resize(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        Amplitudes a;
        try {
            a = scattering_amplitudes(emitters, grid[i], wg);
        } catch (const SingularMatrixError& e) {
            throw SingularMatrixError(
                std::string(e.what()) + " (grid index " + std::to_string(i) + ")",
                e.detuning);
        }
        s.r[i] = a.r;
        s.t[i] = a.t;
        s.reflectivity[i] = std::norm(a.r);
        s.transmissivity[i] = std::norm(a.t);
    }
    return s;
}

EmitterArray apply_gradient_field(const EmitterArray& emitters, double gradient) {
    std::vector<Emitter> shifted = emitters.emitters();
    for (auto& e : shifted) e.detuning += gradient * e.z;
    return EmitterArray(std::move(shifted), emitters.rate_unit());
}

ReflectivityFn reflectivity_fn(const EmitterArray& emitters,
                               const WaveguideParams& wg) {
    return [emitters, wg](double delta_omega) {
        return std::norm(scattering_amplitudes(emitters, delta_omega, wg).r);
    };
}

double default_scan_halfwidth(const EmitterArray& emitters,
                              const WaveguideParams& wg) {
    const double ka = wg.wavenumber();
    double rate_bound = 0.0;
    double shift_bound = 0.0;
    for (std::size_t j = 0; j < emitters.size(); ++j) {
        const Emitter& ej = emitters[j];
        rate_bound = std::max(rate_bound, ej.gamma_wg + ej.gamma_free);
        double row = 0.0;
        for (std::size_t l = 0; l < emitters.size(); ++l) {
            if (l == j) continue;
            const Emitter& el = emitters[l];
            const double d = std::abs(el.z - ej.z);
            const Complex v = dipole_coupling(ka * d, ej.gamma_wg, el.gamma_wg,
                                              ej.gamma_free, el.gamma_free) *
                              std::exp(kI * ka * d);
            row += std::abs(v.imag());
        }
        shift_bound = std::max(shift_bound, row);
    }
    return std::max(4.0 * rate_bound, 3.0 * shift_bound);
}

}  // namespace wgqed
