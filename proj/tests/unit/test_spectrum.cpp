#include "doctest.h"

#include "qcount/error.hpp"
#include "qcount/spectrum.hpp"
#include "support/generators.hpp"

#include <cmath>
#include <numbers>

using namespace qcount;

namespace {

ModelParams periodic(double gamma, double g, int n)
{
    ModelParams p;
    p.gamma = gamma;
    p.g = g;
    p.N = n;
    p.grid = MomentumGrid::periodic;
    return p;
}

}  // namespace

TEST_SUITE("spectrum") {

TEST_CASE("zero detuning forces a quarter mixing angle")
{
    const ModeSet set = build_modes(periodic(1.0, 0.0, 4));
    const Mode& m = set.modes.at(0);
    CHECK(m.k == 1);
    CHECK(m.phi == doctest::Approx(std::numbers::pi / 2).epsilon(1e-15));
    CHECK(m.theta == doctest::Approx(std::numbers::pi / 2).epsilon(1e-14));
    CHECK(std::abs(m.u - std::sqrt(0.5)) < 1e-14);
    CHECK(std::abs(m.v - std::sqrt(0.5)) < 1e-14);
    CHECK(std::abs(m.energy - 1.0) < 1e-14);
}

TEST_CASE("zone edge sits on the negative branch")
{
    for (double g : {0.0, 0.3, 1.0, 2.5, 10.0}) {
        const ModeSet set = build_modes(periodic(1.0, g, 10));
        const Mode& m = set.modes.back();
        CHECK(m.k == 5);
        CHECK(std::abs(m.theta - std::numbers::pi) < 1e-14);
        CHECK(std::abs(m.u) < 1e-14);
        CHECK(std::abs(m.v - 1.0) < 1e-14);
        CHECK(std::abs(m.energy - (1.0 + g)) < 1e-14);
    }
}

TEST_CASE("large field drives v_k^2 to one")
{
    ModelParams p;
    p.gamma = 0.01;
    p.g = 10.0;
    p.N = 100;
    for (MomentumGrid grid : {MomentumGrid::antiperiodic, MomentumGrid::periodic}) {
        p.grid = grid;
        for (const Mode& m : build_modes(p)) {
            CHECK(m.v2() > 0.999);
            CHECK(std::abs(m.energy - p.g) <= 1.0 + 1e-12);
        }
    }
}

TEST_CASE("antiperiodic grid pairs every momentum inside (0, pi)")
{
    ModelParams p;
    p.N = 12;
    const ModeSet set = build_modes(p);
    REQUIRE(set.size() == 6);
    for (const Mode& m : set) {
        CHECK(m.phi > 0.0);
        CHECK(m.phi < std::numbers::pi);
    }
    CHECK(set.modes.front().phi == doctest::Approx(std::numbers::pi / 12));
    CHECK(set.modes.back().phi == doctest::Approx(11 * std::numbers::pi / 12));

    const ModeSet full = build_modes(p, Zone::full);
    CHECK(full.size() == 12);
}

TEST_CASE("parameter validation")
{
    ModelParams p;
    p.N = 7;
    CHECK_THROWS_AS(build_modes(p), InvalidArgument);
    p.N = 0;
    CHECK_THROWS_AS(build_modes(p), InvalidArgument);
    p.N = 10;
    p.kappa = 1.5;
    CHECK_THROWS_AS(build_modes(p), InvalidArgument);
    p.kappa = -0.1;
    CHECK_THROWS_AS(build_modes(p), InvalidArgument);
    p.kappa = 0.5;
    p.J = 0.0;
    CHECK_THROWS_AS(build_modes(p), InvalidArgument);
    p.J = 1.0;
    CHECK_NOTHROW(build_modes(p));

    p.gamma = 0.0;
    CHECK_NOTHROW(build_modes(p));
    CHECK_FALSE(p.spin_mapping_valid());
}

TEST_CASE("property: normalization, dispersion and branch")
{
    testing::Generator gen(0x5eed01);
    for (int trial = 0; trial < 200; ++trial) {
        const ModelParams p = gen.params();
        const Zone zone = gen.coin() ? Zone::half : Zone::full;
        const ModeSet set = build_modes(p, zone);
        CHECK(set.size() == static_cast<std::size_t>(zone == Zone::half ? p.N / 2 : p.N));
        int previous_k = 0;
        for (const Mode& m : set) {
            CHECK(m.k == previous_k + 1);
            previous_k = m.k;
            CHECK(std::abs(m.u2() + m.v2() - 1.0) <= 1e-14);

            // Raw trig, independent of the stored angle.
            const double c = std::cos(m.phi) - p.g;
            const double s = p.gamma * std::sin(m.phi);
            CHECK(std::abs(m.energy - std::sqrt(c * c + s * s)) <= 1e-14 * std::max(1.0, m.energy));
            CHECK(m.energy >= 0.0);

            CHECK(m.theta >= 0.0);
            CHECK(m.theta < 2 * std::numbers::pi);
            if (c < 0.0) {
                CHECK(std::cos(m.theta) < 0.0);
            } else if (c > 0.0) {
                CHECK(std::cos(m.theta) > 0.0);
            }
            if (m.phi > 1e-9 && m.phi < std::numbers::pi - 1e-9)
                CHECK(m.v > 0.0);
            // cos θ = (cos Φ − g)/E whenever the mode is gapped.
            if (m.energy > 1e-6)
                CHECK(std::abs(std::cos(m.theta) - c / m.energy) < 1e-12);
        }
    }
}

TEST_CASE("property: large-field limit of v_k^2")
{
    testing::Generator gen(0x5eed02);
    for (int trial = 0; trial < 100; ++trial) {
        ModelParams p;
        p.gamma = gen.uniform(0.01, 1.0);
        p.g = gen.uniform(10.0, 100.0) * p.gamma;
        if (p.g < 1.5)
            p.g += 1.5;
        p.N = gen.even(4, 200);
        const double bound = 1.0 - 10.0 * (p.gamma / p.g) * (p.gamma / p.g);
        for (const Mode& m : build_modes(p))
            CHECK(m.v2() > bound);
    }
}

TEST_CASE("Ising point: the mixing angle equals the momentum")
{
    ModelParams p;
    p.N = 40;
    for (const Mode& m : build_modes(p, Zone::full)) {
        CHECK(std::abs(m.theta - m.phi) < 1e-13);
        CHECK(std::abs(m.energy - 1.0) < 1e-14);
    }
}

}
