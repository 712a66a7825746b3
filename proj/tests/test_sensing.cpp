// Sensing: shift-to-separation inversion, unit conversion, detection limits.

#include <doctest.h>

#include <cmath>

#include "wgqed/sensing.hpp"

using namespace wgqed;

namespace {

SensingConfig base_config(Branch branch = Branch::superradiant) {
    SensingConfig c;
    c.baseline_d = 0.01;
    c.gamma_wg = 10.0;
    c.gamma_free = 1.0;
    c.branch = branch;
    return c;
}

}  // namespace

TEST_CASE("zero shift maps to zero separation change") {
    CHECK(peak_shift_to_dd(0.0, base_config()) == 0.0);
}

TEST_CASE("superradiant shift of the worked magnitude") {
    const auto c = base_config();
    // exact spectrum peaks at d and d - 1e-4
    const double shift = branch_peak_exact(0.01 - 1e-4, c) - branch_peak_exact(0.01, c);
    CHECK(shift == doctest::Approx(92.0).epsilon(3.0 / 92.0));

    // inverting that shift recovers the separation decrease
    const double dd = peak_shift_to_dd(shift, c);
    CHECK(dd < 0.0);
    CHECK(std::abs(dd + 1e-4) / 1e-4 < 2e-3);
}

TEST_CASE("subradiant branch senses a much smaller change") {
    const auto c = base_config(Branch::subradiant);
    const double shift = branch_peak_exact(0.01 - 1e-7, c) - branch_peak_exact(0.01, c);
    CHECK(std::abs(shift) == doctest::Approx(0.09).epsilon(0.01 / 0.09));
    const double dd = peak_shift_to_dd(shift, c);
    CHECK(std::abs(dd + 1e-7) / 1e-7 < 2e-2);
}

TEST_CASE("the shift inversion reproduces the requested shift") {
    const auto c = base_config();
    for (double shift : {5.0, 92.0, -40.0}) {
        const double dd = peak_shift_to_dd(shift, c);
        const double back =
            branch_peak_position(0.01 + dd, c) - branch_peak_position(0.01, c);
        CHECK(std::abs(back - shift) / std::abs(shift) < 1e-6);
    }
}

TEST_CASE("shift beyond the half-baseline bracket raises") {
    CHECK_THROWS_AS((void)peak_shift_to_dd(1e9, base_config()), BracketError);
}

TEST_CASE("unit conversion to strain and temperature") {
    auto c = base_config();  // lambda_physical 1.55 um
    SUBCASE("worked point: 1e-4 wavelengths is 155 pm") {
        const auto [strain, kelvin] = dd_to_strain_temperature(1e-4, c);
        CHECK(strain == doctest::Approx(124.0).epsilon(1e-12));
        CHECK(kelvin == doctest::Approx(12.4).epsilon(1e-12));
    }
    SUBCASE("subradiant-scale point: 2e-8 wavelengths is 0.031 pm") {
        const auto [strain, kelvin] = dd_to_strain_temperature(2e-8, c);
        CHECK(strain == doctest::Approx(0.0248).epsilon(1e-12));
        CHECK(kelvin * 1000.0 == doctest::Approx(2.48).epsilon(1e-12));
    }
    SUBCASE("zero maps to zero") {
        const auto [strain, kelvin] = dd_to_strain_temperature(0.0, c);
        CHECK(strain == 0.0);
        CHECK(kelvin == 0.0);
    }
    SUBCASE("strain conversion inverts exactly") {
        for (double dd : {1e-4, 3.7e-7, -2e-5}) {
            const auto [strain, kelvin] = dd_to_strain_temperature(dd, c);
            CHECK(std::abs(strain_to_dd(strain, c) - dd) / std::abs(dd) < 1e-12);
        }
    }
}

TEST_CASE("detection limits reproduce the calibrated thresholds") {
    SUBCASE("superradiant branch") {
        const auto limit = min_detectable(base_config());
        CHECK(std::abs(limit.dd_min - 2e-5) / 2e-5 < 0.10);
    }
    SUBCASE("subradiant branch") {
        const auto limit = min_detectable(base_config(Branch::subradiant));
        CHECK(limit.shift_min == doctest::Approx(0.02).epsilon(0.05));
        CHECK(std::abs(limit.dd_min - 2e-8) / 2e-8 < 0.15);
    }
    SUBCASE("threshold vanishes with the resolution parameter") {
        auto c = base_config();
        c.resolution_alpha = 1e-6;
        const auto tiny = min_detectable(c);
        c.resolution_alpha = 0.82;
        const auto normal = min_detectable(c);
        CHECK(tiny.shift_min < 1e-4 * normal.shift_min);
        CHECK(tiny.dd_min < 1e-3 * normal.dd_min);
    }
}

TEST_CASE("readings carry resolvability and the vibration-floor note") {
    const auto c = base_config();
    const auto limit = min_detectable(c);
    const auto strong = read_shift(92.0, c, limit);
    CHECK(strong.resolvable);
    CHECK(strong.kelvin < 0.0);  // upward shift means the separation shrank
    const auto weak = read_shift(0.5, c, limit);
    CHECK_FALSE(weak.resolvable);
    CHECK(weak.below_thermal_vibration_floor);
}

TEST_CASE("inversion is locally linear in the shift") {
    const auto c = base_config();
    const double e = 1e-3;
    const double one = peak_shift_to_dd(e, c);
    const double two = peak_shift_to_dd(2.0 * e, c);
    CHECK(two / one == doctest::Approx(2.0).epsilon(0.01));
}

TEST_CASE("smaller baselines sense smaller separation changes") {
    double prev = 0.0;
    for (double d0 : {0.005, 0.01, 0.02, 0.035, 0.05}) {
        auto c = base_config();
        c.baseline_d = d0;
        const double dd = std::abs(peak_shift_to_dd(1.0, c));
        CHECK(dd > prev);
        prev = dd;
    }
}

TEST_CASE("exact inversion against the near-field asymptote") {
    // the asymptote drops the 1/x and 1/x^2 terms; agreement inside 15%
    for (double d0 : {0.01, 0.005}) {
        auto c = base_config();
        c.baseline_d = d0;
        const double shift = 10.0;
        const double exact = peak_shift_to_dd(shift, c);
        const double approx = asymptotic_dd_slope3(shift, c);
        CHECK(std::abs(exact - approx) / std::abs(exact) < 0.15);
        // the factor-2 variant is a documented alternative, not a match
        CHECK(asymptotic_dd_slope2(shift, c) ==
              doctest::Approx(-1.5 * asymptotic_dd_slope3(shift, c)));
    }
}

TEST_CASE("sensitivity gain over a waveguide-expansion sensor") {
    SUBCASE("worked figure: about ten at d = 3e-3") {
        auto c = base_config();
        c.baseline_d = 3e-3;
        c.gamma_free = 1.0;        // rates in units of gamma
        const double omega_a = 1e7;  // gamma = 1e-7 * omega_a
        CHECK(fbg_sensitivity_ratio(c, omega_a) ==
              doctest::Approx(11.2).epsilon(0.02));
    }
    SUBCASE("vanishing near-field shift gives zero") {
        auto c = base_config();
        c.gamma_free = 0.0;
        CHECK(fbg_sensitivity_ratio(c, 1e7) == 0.0);
    }
    SUBCASE("two evaluation paths agree to a percent at small separations") {
        for (double d0 : {3e-3, 0.01}) {
            auto c = base_config();
            c.baseline_d = d0;
            const double omega_a = 1e7;
            const double formula = fbg_sensitivity_ratio(c, omega_a);
            // common separation change through the exact branch position
            const double dd = 1e-7;
            const double shift_exact =
                branch_peak_position(d0 - dd, c) - branch_peak_position(d0, c);
            const double shift_fbg = omega_a * dd;  // magnitude of -w_a dd/lambda
            const double two_path = shift_exact / shift_fbg;
            CHECK(std::abs(two_path - formula) / formula < 0.01);
        }
    }
}
