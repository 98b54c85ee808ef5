#include "doctest.h"

#include "qcount/error.hpp"
#include "qcount/oracle/oracle.hpp"
#include "support/generators.hpp"

#include <cmath>
#include <limits>

using namespace qcount;
using namespace qcount::oracle;

namespace {

ModelParams chain(double gamma, double g, int n)
{
    ModelParams p;
    p.gamma = gamma;
    p.g = g;
    p.N = n;
    return p;
}

double max_abs(const Matrix4& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace

TEST_SUITE("oracle") {

TEST_CASE("canonical anticommutation relations")
{
    testing::Generator gen(0x0a01);
    const Matrix4 id = Matrix4::Identity();
    for (int i = 0; i < 50; ++i) {
        const TwoModeOperators ops = TwoModeOperators::build(gen.mode());
        const Matrix4* cs[] = {&ops.c_k, &ops.c_mk};
        for (int a = 0; a < 2; ++a) {
            for (int b = 0; b < 2; ++b) {
                const Matrix4& x = *cs[a];
                const Matrix4& y = *cs[b];
                const Matrix4 mixed = x * y.adjoint() + y.adjoint() * x;
                CHECK(max_abs(mixed - (a == b ? id : Matrix4::Zero().eval())) < 1e-14);
                CHECK(max_abs(x * y + y * x) < 1e-14);
            }
        }
        CHECK(max_abs(ops.d_k * ops.d_k.adjoint() + ops.d_k.adjoint() * ops.d_k - id) < 1e-14);
        CHECK(max_abs(ops.d_mk * ops.d_mk.adjoint() + ops.d_mk.adjoint() * ops.d_mk - id) < 1e-14);
        CHECK(max_abs(ops.d_k * ops.d_mk + ops.d_mk * ops.d_k) < 1e-14);
        CHECK(max_abs(ops.d_k * ops.d_mk.adjoint() + ops.d_mk.adjoint() * ops.d_k) < 1e-14);
    }
}

TEST_CASE("thermal states are density matrices")
{
    testing::Generator gen(0x0a02);
    for (int i = 0; i < 200; ++i) {
        const Matrix4 rho = thermal_state(gen.mode(), gen.thermo());
        CHECK(max_abs(rho - rho.adjoint()) < 1e-14);
        const Eigen::SelfAdjointEigenSolver<Matrix4> solver(rho);
        const auto& w = solver.eigenvalues();
        CHECK(w.minCoeff() >= -1e-12);
        CHECK(w.maxCoeff() <= 1.0 + 1e-12);
        CHECK(std::abs(w.sum() - 1.0) < 1e-12);
    }
}

TEST_CASE("vacuum and maximally mixed coefficients")
{
    testing::Generator gen(0x0a03);
    for (int i = 0; i < 100; ++i) {
        const Mode m = gen.mode();
        if (m.energy < 1e-6)
            continue;
        const PairCoefficients vac = oracle_pair_coefficients(m, Thermo{0.0});
        CHECK(std::abs(vac.a() - 2.0 * m.v2()) < 1e-12);
        CHECK(std::abs(vac.b() - m.v2()) < 1e-12);

        const PairCoefficients mixed =
            oracle_pair_coefficients(m, Thermo{std::numeric_limits<double>::infinity()});
        CHECK(std::abs(mixed.a() - 1.0) < 1e-12);
        CHECK(std::abs(mixed.b() - 0.25) < 1e-12);
    }
}

TEST_CASE("4x4 oracle matches the closed form on 1000 random points")
{
    testing::Generator gen(0x0a04);
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const Mode m = gen.mode();
        const Thermo t = gen.thermo();
        const PairCoefficients exact = oracle_pair_coefficients(m, t);
        const PairCoefficients closed = pair_coefficients(m, occupation_k(m, t));
        worst = std::max({worst, std::abs(exact.a() - closed.a()), std::abs(exact.b() - closed.b())});
    }
    CHECK(worst < 1e-12);
}

TEST_CASE("exact expansion: single pair")
{
    // One pair in the vacuum with v^2 = 1/2 (Φ = π/2 at the Ising point).
    ModelParams p = chain(1.0, 0.0, 2);
    p.grid = MomentumGrid::antiperiodic;  // Φ = π/2 for N = 2
    const CountingDistribution d = oracle_distribution(p, Thermo{0.0}, 1.0);
    REQUIRE(d.size() == 3);
    CHECK(d[0] == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(std::abs(d[1]) < 1e-12);
    CHECK(d[2] == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("exact expansion: variance N/4 at the Ising point")
{
    for (MomentumGrid grid : {MomentumGrid::antiperiodic, MomentumGrid::periodic}) {
        ModelParams p = chain(1.0, 0.0, 8);
        p.grid = grid;
        const Cumulants c = cumulants(oracle_distribution(p, Thermo{0.0}, 1.0));
        CHECK(c.variance == doctest::Approx(2.0).epsilon(1e-12));
    }
}

TEST_CASE("exact expansion matches the recursion")
{
    const ModelParams thermal = chain(1.0, 1.0, 8);
    const CountingDistribution exact = oracle_distribution(thermal, Thermo{0.3}, 1.0);
    const CountingDistribution fast = thermal_distribution(thermal, Thermo{0.3});
    REQUIRE(exact.size() == fast.size());
    for (std::size_t m = 0; m < exact.size(); ++m)
        CHECK(std::abs(exact[m] - fast[m]) < 1e-12);

    testing::Generator gen(0x0a05);
    for (int i = 0; i < 40; ++i) {
        const ModelParams p = gen.params(2, 16);
        const Thermo t = gen.thermo();
        const CountingDistribution e = oracle_distribution(p, t, p.kappa);
        const CountingDistribution f = thermal_distribution(p, t);
        for (std::size_t m = 0; m < e.size(); ++m)
            CHECK(std::abs(e[m] - f[m]) < 1e-12);
    }

    CHECK_THROWS_AS(oracle_distribution(chain(1.0, 0.0, 18), Thermo{0.0}, 1.0), InvalidArgument);
}

TEST_CASE("exact expansion: strong field fills every pair")
{
    const CountingDistribution d = oracle_distribution(chain(1.0, 100.0, 8), Thermo{0.0}, 1.0);
    CHECK(d[8] > 0.9999);
}

TEST_CASE("detector efficiency")
{
    CHECK(detector_kappa(0.0, 5.0) == 0.0);
    CHECK(detector_kappa(3.0, 0.0) == 0.0);
    CHECK(detector_kappa(1.0, 1e3) == 1.0);
    CHECK(detector_kappa(1.0, std::log(2.0)) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK_THROWS_AS(detector_kappa(-1.0, 1.0), InvalidArgument);
}

TEST_CASE("single-mode absorption reproduces 1 - exp(-eps t)")
{
    for (double eps : {0.3, 1.0, 4.0}) {
        for (double t : {0.0, 0.1, 1.0, 3.0}) {
            const auto occupied = oracle_detector_single_mode(eps, t, 1);
            CHECK(std::abs(occupied[1] - detector_kappa(eps, t)) < 1e-12);
            CHECK(std::abs(occupied[0] + occupied[1] - 1.0) < 1e-12);
            const auto empty = oracle_detector_single_mode(eps, t, 0);
            CHECK(empty[0] == doctest::Approx(1.0));
            CHECK(std::abs(empty[1]) < 1e-15);
        }
    }
    CHECK_THROWS_AS(oracle_detector_single_mode(1.0, 1.0, 2), InvalidArgument);
}

TEST_CASE("two-mode Lindblad quench")
{
    ModelParams p = chain(1.0, 0.7, 20);
    const ModeSet modes = build_modes(p);
    QuenchSpec spec;
    spec.gamma0 = 1.0;
    spec.bath_t_over_j = 0.5;

    for (const Mode& m : {modes.modes[0], modes.modes[4], modes.modes[9]}) {
        const QuenchOracleResult start = oracle_quench_two_mode(m, spec, 0.0);
        CHECK(std::abs(start.a - 2.0 * m.v2()) < 1e-12);
        CHECK(std::abs(start.b - m.v2()) < 1e-12);

        for (double t : {0.3, 1.0, 5.0}) {
            const QuenchOracleResult mid = oracle_quench_two_mode(m, spec, t);
            CHECK(std::abs(mid.nbar - occupation_at(m, spec, t).nbar) < 1e-8);
            const PairCoefficients closed = pair_coefficients_t(m, spec, t);
            CHECK(std::abs(mid.a - closed.a()) < 1e-8);
            CHECK(std::abs(mid.b - closed.b()) < 1e-2);
            CHECK(mid.trace_error < 1e-10);
        }

        const QuenchOracleResult late = oracle_quench_two_mode(m, spec, 40.0);
        const PairCoefficients eq = pair_coefficients(m, occupation_k(m, spec.bath()));
        CHECK(std::abs(late.a - eq.a()) < 1e-8);
        CHECK(std::abs(late.b - eq.b()) < 1e-8);
        CHECK(late.trace_error < 1e-10);
    }

    spec.initial.assign(10, 0.3);
    CHECK_THROWS_AS(oracle_quench_two_mode(modes.modes[0], spec, 1.0), InvalidArgument);
}

}
