#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "xyfse/errors.hpp"
#include "xyfse/phase.hpp"

using namespace xyfse;

TEST_CASE("phase classification uses exact special lines") {
    CHECK(PhasePoint{0.0, 0.0}.phase() == Phase::gapless_fermion);
    CHECK(PhasePoint{0.0, 0.5}.phase() == Phase::gapless_fermion);
    CHECK(PhasePoint{0.0, -0.999}.phase() == Phase::gapless_fermion);
    CHECK(PhasePoint{0.5, 1.0}.phase() == Phase::gapless_boson);
    CHECK(PhasePoint{1.36, 1.0}.phase() == Phase::gapless_boson);
    CHECK(PhasePoint{-0.7, -1.0}.phase() == Phase::gapless_boson);
    CHECK(PhasePoint{0.0, 1.0}.phase() == Phase::non_conformal_gapless);
    CHECK(PhasePoint{0.0, -1.0}.phase() == Phase::non_conformal_gapless);
    CHECK(PhasePoint{1.0, 0.0}.phase() == Phase::kitaev_point);
    CHECK(PhasePoint{-1.0, 0.0}.phase() == Phase::kitaev_point);
    CHECK(PhasePoint{0.4, 1.5}.phase() == Phase::gapped);
    CHECK(PhasePoint{1.0, 2.0}.phase() == Phase::gapped);
    CHECK(PhasePoint{0.3, 0.0}.phase() == Phase::gapped);
    CHECK(PhasePoint{0.0, 1.5}.phase() == Phase::gapped);
    // A hair off the line is not the line.
    CHECK(PhasePoint{1e-14, 0.5}.phase() == Phase::gapped);
    CHECK(PhasePoint{0.5, 1.0 + 1e-14}.phase() == Phase::gapped);
}

TEST_CASE("criticality flags only the two conformal lines") {
    CHECK(PhasePoint{0.0, 0.5}.critical());
    CHECK(PhasePoint{1.36, 1.0}.critical());
    CHECK_FALSE(PhasePoint{0.0, 1.0}.critical());  // gapless but not conformal
    CHECK_FALSE(PhasePoint{1.0, 0.0}.critical());
    CHECK_FALSE(PhasePoint{0.4, 1.5}.critical());
}

TEST_CASE("fermi momentum and central charge on the critical lines") {
    CHECK(PhasePoint{0.0, 0.0}.fermi_momentum() == doctest::Approx(M_PI / 2).epsilon(1e-15));
    CHECK(PhasePoint{0.0, 0.5}.fermi_momentum() == doctest::Approx(std::acos(0.5)).epsilon(1e-15));
    CHECK(PhasePoint{0.0, -0.5}.fermi_momentum() ==
          doctest::Approx(std::acos(0.5)).epsilon(1e-15));
    CHECK(PhasePoint{1.36, 1.0}.fermi_momentum() == doctest::Approx(M_PI).epsilon(1e-15));

    CHECK(PhasePoint{0.0, 0.5}.c_plus_cbar() == 2.0);
    CHECK(PhasePoint{1.36, 1.0}.c_plus_cbar() == 1.0);

    CHECK_THROWS_AS((PhasePoint{0.4, 1.5}).fermi_momentum(), InvalidKf);
    CHECK_THROWS_AS((PhasePoint{1.0, 0.0}).fermi_momentum(), InvalidKf);
    CHECK_THROWS_AS((void)(PhasePoint{0.0, 1.0}).c_plus_cbar(), Error);
}

TEST_CASE("dispersion closed form") {
    // Free-fermion line: eps_k = |cos k - h| vanishes exactly at k_F.
    PhasePoint xx{0.0, 0.5};
    CHECK(dispersion(xx, std::acos(0.5)) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(dispersion(xx, 0.0) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(dispersion(xx, M_PI) == doctest::Approx(1.5).epsilon(1e-15));
    // Kitaev point: flat band eps_k = 1.
    PhasePoint kit{1.0, 0.0};
    for (double k : {0.0, 0.3, 1.1, 2.5, M_PI}) {
        CHECK(dispersion(kit, k) == doctest::Approx(1.0).epsilon(1e-14));
    }
    // Generic point against the definition.
    PhasePoint p{0.7, 1.3};
    double k = 0.9;
    double want = std::sqrt(std::pow(std::cos(k) - 1.3, 2) +
                            std::pow(0.7 * std::sin(k), 2));
    CHECK(dispersion(p, k) == doctest::Approx(want).epsilon(1e-15));
}

TEST_CASE("decay length formula") {
    auto xi = decay_length(PhasePoint{0.4, 1.5});
    REQUIRE(xi.has_value());
    CHECK(*xi == doctest::Approx(0.4 / (std::sqrt(2.0) * 0.5)).epsilon(1e-15));

    xi = decay_length(PhasePoint{1.0, 2.0});
    REQUIRE(xi.has_value());
    CHECK(*xi == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-15));

    // The Kitaev point evaluates (contact correlator takes precedence, but
    // the formula itself is defined there).
    xi = decay_length(PhasePoint{1.0, 0.0});
    REQUIRE(xi.has_value());
    CHECK(*xi == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-15));

    CHECK_FALSE(decay_length(PhasePoint{0.0, 0.5}).has_value());
    CHECK_FALSE(decay_length(PhasePoint{1.36, 1.0}).has_value());
    CHECK_FALSE(decay_length(PhasePoint{0.0, 1.0}).has_value());
}
