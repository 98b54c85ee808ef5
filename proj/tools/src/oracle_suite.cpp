#include "qcount/cli/oracle_suite.hpp"

#include "qcount/counting.hpp"
#include "qcount/equilibrium.hpp"
#include "qcount/oracle/oracle.hpp"
#include "qcount/thermalization.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <random>

namespace qcount::cli {

namespace {

// mt19937_64 output is fixed by the standard; the library distributions are
// not, so uniforms are built by hand.
class Uniform {
public:
    explicit Uniform(std::uint64_t seed) : engine_(seed) {}
    double operator()(double lo, double hi)
    {
        const double u = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
        return lo + (hi - lo) * u;
    }
    double log(double lo, double hi) { return std::exp((*this)(std::log(lo), std::log(hi))); }

private:
    std::mt19937_64 engine_;
};

struct Point {
    double gamma, g, t, kappa;
};

constexpr std::array<Point, 5> rational_points{{
    {1.0, 0.0, 0.0, 1.0},
    {1.0, 1.0, 0.3, 1.0},
    {0.5, 0.7, 1.0, 0.6},
    {0.01, 2.0, 0.05, 0.9},
    {2.0, 0.3, 100.0, 0.25},
}};

ModelParams chain(int n, double gamma, double g, double kappa = 1.0)
{
    ModelParams p;
    p.N = n;
    p.gamma = gamma;
    p.g = g;
    p.kappa = kappa;
    return p;
}

OracleCheck pairs_check()
{
    Uniform rng(0x5eed0001);
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const ModelParams p = chain(1000, rng.log(1e-2, 2.0), rng(0.0, 3.0));
        const auto k = 1 + static_cast<int>(rng(0.0, 500.0 - 1e-9));
        const Mode m = make_mode(k, momentum(k, p.N, p.grid), p.gamma, p.g);
        const Thermo th{rng(0.0, 1.0) < 0.1 ? 0.0 : rng.log(1e-3, 1e2)};
        const PairCoefficients exact = oracle::oracle_pair_coefficients(m, th);
        const PairCoefficients closed = pair_coefficients(m, occupation_k(m, th));
        worst = std::max({worst, std::abs(exact.a() - closed.a()),
                          std::abs(exact.b() - closed.b())});
    }
    return {"pairs", worst, 1e-12};
}

OracleCheck rational_check(int n)
{
    double worst = 0.0;
    for (const Point& pt : rational_points) {
        const ModelParams p = chain(n, pt.gamma, pt.g, pt.kappa);
        const CountingDistribution exact = oracle::oracle_distribution(p, Thermo{pt.t}, pt.kappa);
        const CountingDistribution fast = thermal_distribution(p, Thermo{pt.t});
        for (std::size_t m = 0; m < exact.size(); ++m)
            worst = std::max(worst, std::abs(exact[m] - fast[m]));
    }
    return {"rational", worst, 1e-12};
}

OracleCheck variance_check(int n)
{
    const CountingDistribution exact = oracle::oracle_distribution(chain(n, 1.0, 0.0), Thermo{0.0}, 1.0);
    return {"variance", std::abs(cumulants(exact).variance - n / 4.0), 1e-12};
}

OracleCheck detector_check()
{
    double worst = 0.0;
    for (double eps : {0.5, 1.0, 3.0})
        for (double t : {0.1, 1.0, 5.0}) {
            const auto occupied = oracle::oracle_detector_single_mode(eps, t, 1);
            const auto empty = oracle::oracle_detector_single_mode(eps, t, 0);
            worst = std::max({worst, std::abs(occupied[1] - oracle::detector_kappa(eps, t)),
                              std::abs(empty[1])});
        }
    return {"detector", worst, 1e-12};
}

// Quench parameters of the thermalization figure: γ = 1, k_BT/J = 0.1, γ₀ = 1.
struct LindbladErrors {
    double occupation = 0.0;
    double stationary = 0.0;
    double factorization_b = 0.0;
};

LindbladErrors lindblad_errors(int n)
{
    QuenchSpec spec;
    spec.gamma0 = 1.0;
    spec.bath_t_over_j = 0.1;
    LindbladErrors e;
    for (double g : {0.0, 1.0, 2.0}) {
        for (const Mode& m : build_modes(chain(n, 1.0, g))) {
            for (double t : {0.5, 1.0, 3.0, 10.0}) {
                const auto r = oracle::oracle_quench_two_mode(m, spec, t);
                e.occupation = std::max(e.occupation, std::abs(r.nbar - occupation_at(m, spec, t).nbar));
                e.factorization_b = std::max(
                    e.factorization_b, std::abs(r.b - pair_coefficients_t(m, spec, t).b()));
            }
            const auto late = oracle::oracle_quench_two_mode(m, spec, 40.0);
            const PairCoefficients eq = pair_coefficients(m, occupation_k(m, spec.bath()));
            e.stationary = std::max({e.stationary, std::abs(late.a - eq.a()), std::abs(late.b - eq.b())});
        }
    }
    return e;
}

bool selected(const std::string& check, const char* name)
{
    return check == "all" || check == name;
}

}  // namespace

const std::vector<std::string>& oracle_check_names()
{
    static const std::vector<std::string> names{"pairs", "rational", "variance", "detector",
                                                "lindblad"};
    return names;
}

std::vector<OracleCheck> oracle_checks(const RunConfig& c)
{
    std::vector<OracleCheck> out;
    if (selected(c.check, "pairs"))
        out.push_back(pairs_check());
    if (selected(c.check, "rational"))
        out.push_back(rational_check(c.oracle_n));
    if (selected(c.check, "variance"))
        out.push_back(variance_check(c.oracle_n));
    if (selected(c.check, "detector"))
        out.push_back(detector_check());
    if (selected(c.check, "lindblad")) {
        const LindbladErrors e = lindblad_errors(c.oracle_n);
        out.push_back({"lindblad_occupation", e.occupation, 1e-8});
        out.push_back({"lindblad_stationary", e.stationary, 1e-8});
        out.push_back({"factorization_gap_b", e.factorization_b, 1e-2});
    }
    return out;
}

void run_oracle_suite(const RunConfig& c, Report& r)
{
    Table& t = r.add_table("checks", {"check", "max_error", "tolerance", "result"});
    for (const OracleCheck& check : oracle_checks(c)) {
        t.add_row({check.name, check.max_error, check.tolerance,
                   std::string(check.passed() ? "pass" : "fail")});
        r.failed = r.failed || !check.passed();
    }
}

}  // namespace qcount::cli
