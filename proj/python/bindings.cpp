// Python bindings for the wgqed core.

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "wgqed/features.hpp"
#include "wgqed/inversion.hpp"
#include "wgqed/model.hpp"
#include "wgqed/sensing.hpp"

namespace py = pybind11;
using namespace wgqed;

PYBIND11_MODULE(_core, m) {
    m.doc() = "Waveguide-QED spectroscopy: forward spectra, feature "
              "extraction, separation/rate inversion, and sensing.";

    py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
    py::register_exception<NumericalError>(m, "NumericalError", PyExc_RuntimeError);

    py::class_<WaveguideParams>(m, "WaveguideParams")
        .def(py::init<>())
        .def(py::init([](double wavelength, double group_velocity,
                         const std::string& rate_unit) {
                 WaveguideParams w{wavelength, group_velocity, rate_unit};
                 w.validate();
                 return w;
             }),
             py::arg("wavelength") = 1.0, py::arg("group_velocity") = 1.0e9,
             py::arg("rate_unit") = "gamma0")
        .def_readwrite("wavelength", &WaveguideParams::wavelength)
        .def_readwrite("group_velocity", &WaveguideParams::group_velocity)
        .def_readwrite("rate_unit", &WaveguideParams::rate_unit)
        .def("wavenumber", &WaveguideParams::wavenumber);

    py::class_<Emitter>(m, "Emitter")
        .def(py::init<double, double, double, double>(), py::arg("z"),
             py::arg("gamma_wg"), py::arg("gamma_free") = 0.0,
             py::arg("detuning") = 0.0)
        .def_readwrite("z", &Emitter::z)
        .def_readwrite("gamma_wg", &Emitter::gamma_wg)
        .def_readwrite("gamma_free", &Emitter::gamma_free)
        .def_readwrite("detuning", &Emitter::detuning);

    py::class_<EmitterArray>(m, "EmitterArray")
        .def(py::init<std::vector<Emitter>, std::string>(), py::arg("emitters"),
             py::arg("rate_unit") = "gamma0")
        .def("__len__", &EmitterArray::size)
        .def("emitters", &EmitterArray::emitters)
        .def("separation", &EmitterArray::separation, py::arg("i"))
        .def("lossless", &EmitterArray::lossless);

    py::class_<Spectrum>(m, "Spectrum")
        .def_readonly("grid", &Spectrum::grid)
        .def_readonly("r", &Spectrum::r)
        .def_readonly("t", &Spectrum::t)
        .def_readonly("reflectivity", &Spectrum::reflectivity)
        .def_readonly("transmissivity", &Spectrum::transmissivity)
        .def("__len__", &Spectrum::size);

    m.def("dipole_coupling", &dipole_coupling, py::arg("ka_d"),
          py::arg("gamma_wg1"), py::arg("gamma_wg2"), py::arg("gamma_free1"),
          py::arg("gamma_free2"),
          "Complex dipole-dipole coupling before the propagation phase.");
    m.def("pair_coupling_phase", &pair_coupling_phase, py::arg("d"),
          py::arg("gamma_wg"), py::arg("gamma_free"), py::arg("waveguide"));
    m.def(
        "scattering_amplitudes",
        [](const EmitterArray& a, double dw, const WaveguideParams& wg) {
            const Amplitudes amp = scattering_amplitudes(a, dw, wg);
            return py::make_tuple(amp.r, amp.t);
        },
        py::arg("emitters"), py::arg("delta_omega"), py::arg("waveguide"),
        "Reflection and transmission amplitudes (r, t) at one detuning.");
    m.def("compute_spectrum", &compute_spectrum, py::arg("emitters"),
          py::arg("grid"), py::arg("waveguide"));
    m.def("apply_gradient_field", &apply_gradient_field, py::arg("emitters"),
          py::arg("gradient"));
    m.def("uniform_grid", &uniform_grid, py::arg("lo"), py::arg("hi"),
          py::arg("points"));
    m.def("default_scan_halfwidth", &default_scan_halfwidth, py::arg("emitters"),
          py::arg("waveguide"));

    py::class_<PeakDescriptor>(m, "PeakDescriptor")
        .def_readonly("center", &PeakDescriptor::center)
        .def_readonly("height", &PeakDescriptor::height)
        .def_readonly("fwhm", &PeakDescriptor::fwhm)
        .def_readonly("prominence", &PeakDescriptor::prominence);
    py::class_<DipDescriptor>(m, "DipDescriptor")
        .def_readonly("center", &DipDescriptor::center)
        .def_readonly("depth", &DipDescriptor::depth)
        .def_readonly("prominence", &DipDescriptor::prominence);
    py::class_<FeatureSet>(m, "FeatureSet")
        .def_readonly("peaks", &FeatureSet::peaks)
        .def_readonly("dips", &FeatureSet::dips);

    py::enum_<Regime>(m, "Regime")
        .value("lossless", Regime::lossless)
        .value("lossy", Regime::lossy);
    py::class_<CountResult>(m, "CountResult")
        .def_readonly("emitters", &CountResult::emitters)
        .def_readonly("regime_warning", &CountResult::regime_warning);

    m.def(
        "find_extrema",
        [](const Spectrum& s, const EmitterArray& a, const WaveguideParams& wg,
           double min_prominence) {
            return find_extrema(s, reflectivity_fn(a, wg), min_prominence);
        },
        py::arg("spectrum"), py::arg("emitters"), py::arg("waveguide"),
        py::arg("min_prominence") = 1e-6);
    m.def(
        "measure_fwhm",
        [](const EmitterArray& a, const WaveguideParams& wg,
           const PeakDescriptor& p, double initial_step) {
            return measure_fwhm(reflectivity_fn(a, wg), p, initial_step);
        },
        py::arg("emitters"), py::arg("waveguide"), py::arg("peak"),
        py::arg("initial_step"));
    m.def("count_emitters", &count_emitters, py::arg("features"),
          py::arg("regime"), py::arg("spectrum"),
          py::arg("count_prominence") = 1e-2);

    py::enum_<InversionMethod>(m, "InversionMethod")
        .value("lossless_dip", InversionMethod::lossless_dip)
        .value("lossy_fit", InversionMethod::lossy_fit)
        .value("per_emitter", InversionMethod::per_emitter);
    py::class_<InversionResult>(m, "InversionResult")
        .def_readonly("d", &InversionResult::d)
        .def_readonly("branch", &InversionResult::branch)
        .def_readonly("gamma_wg", &InversionResult::gamma_wg)
        .def_readonly("gamma_free", &InversionResult::gamma_free)
        .def_readonly("residual", &InversionResult::residual)
        .def_readonly("method", &InversionResult::method)
        .def_readonly("multi_minimum_warning",
                      &InversionResult::multi_minimum_warning);
    py::class_<FitTargets>(m, "FitTargets")
        .def(py::init([](double re, double im, double r_max, double fwhm_sum) {
                 return FitTargets{re, im, r_max, fwhm_sum};
             }),
             py::arg("re_target"), py::arg("im_target"), py::arg("r_max"),
             py::arg("fwhm_sum"))
        .def_readwrite("re_target", &FitTargets::re_target)
        .def_readwrite("im_target", &FitTargets::im_target)
        .def_readwrite("r_max", &FitTargets::r_max)
        .def_readwrite("fwhm_sum", &FitTargets::fwhm_sum);
    py::class_<SearchRange>(m, "SearchRange")
        .def(py::init([](double lo, double hi, std::size_t points) {
                 return SearchRange{lo, hi, points};
             }),
             py::arg("lo") = 0.001, py::arg("hi") = 0.5,
             py::arg("points") = 10000);

    m.def("invert_dip_lossless", &invert_dip_lossless, py::arg("dip_detuning"),
          py::arg("gamma_wg"), py::arg("branch"), py::arg("waveguide"),
          py::arg("polish") = true);
    m.def(
        "disambiguate_branch",
        [](double splitting, double gradient, double d_fractional,
           const WaveguideParams& wg) {
            const BranchResult b =
                disambiguate_branch(splitting, gradient, d_fractional, wg);
            return py::make_tuple(b.branch, b.d, b.residual);
        },
        py::arg("measured_splitting"), py::arg("gradient"),
        py::arg("d_fractional"), py::arg("waveguide"),
        "Returns (branch, d, residual).");
    m.def(
        "extract_rates",
        [](const FitTargets& t) {
            const auto [gw, gf] = extract_rates(t);
            return py::make_tuple(gw, gf);
        },
        py::arg("targets"), "Returns (gamma_wg, gamma_free).");
    m.def("invert_separation_lossy", &invert_separation_lossy, py::arg("targets"),
          py::arg("gamma_wg"), py::arg("gamma_free"), py::arg("waveguide"),
          py::arg("range") = SearchRange{});
    m.def(
        "invert_lossy_from_spectrum",
        [](const Spectrum& s, const EmitterArray& a, const WaveguideParams& wg,
           const SearchRange& range) {
            return invert_lossy_from_spectrum(s, reflectivity_fn(a, wg), wg, range);
        },
        py::arg("spectrum"), py::arg("emitters"), py::arg("waveguide"),
        py::arg("range") = SearchRange{});
    m.def(
        "extract_per_emitter",
        [](const Spectrum& s, const EmitterArray& a, const WaveguideParams& wg,
           double gradient) {
            return extract_per_emitter(s, reflectivity_fn(a, wg), gradient);
        },
        py::arg("spectrum"), py::arg("emitters"), py::arg("waveguide"),
        py::arg("gradient"));

    py::enum_<Branch>(m, "Branch")
        .value("superradiant", Branch::superradiant)
        .value("subradiant", Branch::subradiant);
    py::class_<SensingConfig>(m, "SensingConfig")
        .def(py::init<>())
        .def_readwrite("baseline_d", &SensingConfig::baseline_d)
        .def_readwrite("gamma_wg", &SensingConfig::gamma_wg)
        .def_readwrite("gamma_free", &SensingConfig::gamma_free)
        .def_readwrite("branch", &SensingConfig::branch)
        .def_readwrite("waveguide", &SensingConfig::waveguide)
        .def_readwrite("lambda_physical_pm", &SensingConfig::lambda_physical_pm)
        .def_readwrite("strain_pm_per_microstrain",
                       &SensingConfig::strain_pm_per_microstrain)
        .def_readwrite("temperature_pm_per_kelvin",
                       &SensingConfig::temperature_pm_per_kelvin)
        .def_readwrite("resolution_alpha", &SensingConfig::resolution_alpha);
    py::class_<SensingReading>(m, "SensingReading")
        .def_readonly("shift", &SensingReading::shift)
        .def_readonly("dd", &SensingReading::dd)
        .def_readonly("microstrain", &SensingReading::microstrain)
        .def_readonly("kelvin", &SensingReading::kelvin)
        .def_readonly("resolvable", &SensingReading::resolvable)
        .def_readonly("below_thermal_vibration_floor",
                      &SensingReading::below_thermal_vibration_floor);
    py::class_<DetectionLimit>(m, "DetectionLimit")
        .def_readonly("dd_min", &DetectionLimit::dd_min)
        .def_readonly("shift_min", &DetectionLimit::shift_min);

    m.def("branch_peak_position", &branch_peak_position, py::arg("d"),
          py::arg("config"));
    m.def("branch_peak_exact", &branch_peak_exact, py::arg("d"), py::arg("config"));
    m.def("peak_shift_to_dd", &peak_shift_to_dd, py::arg("shift"), py::arg("config"));
    m.def(
        "dd_to_strain_temperature",
        [](double dd, const SensingConfig& c) {
            const auto [strain, kelvin] = dd_to_strain_temperature(dd, c);
            return py::make_tuple(strain, kelvin);
        },
        py::arg("dd"), py::arg("config"), "Returns (microstrain, kelvin).");
    m.def("min_detectable", &min_detectable, py::arg("config"));
    m.def("read_shift",
          py::overload_cast<double, const SensingConfig&>(&read_shift),
          py::arg("shift"), py::arg("config"));
    m.def("fbg_sensitivity_ratio", &fbg_sensitivity_ratio, py::arg("config"),
          py::arg("omega_a"));
    m.def("near_field_shift", &near_field_shift, py::arg("d"), py::arg("config"));
}
