#include "qcount/counting.hpp"

#include "qcount/error.hpp"
#include "qcount/parallel.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace qcount {

namespace {

constexpr double probability_slack = 1e-12;
constexpr double clamp_floor = -1e-15;

double checked_probability(double p, const char* name)
{
    if (!(p >= -probability_slack && p <= 1.0 + probability_slack))
        throw NumericalInconsistency(std::string("two-mode probability ") + name +
                                     " = " + std::to_string(p) + " outside [0, 1]");
    return std::clamp(p, 0.0, 1.0);
}

// Central moments of a distribution on {0, 1, 2, ...} given its mean.
struct CentralMoments {
    double m2 = 0.0, m3 = 0.0, m4 = 0.0;
};

template <class Probs>
CentralMoments central_moments(const Probs& probs, double mean)
{
    CentralMoments c;
    for (std::size_t m = 0; m < probs.size(); ++m) {
        const double d = static_cast<double>(m) - mean;
        const double d2 = d * d;
        c.m2 += probs[m] * d2;
        c.m3 += probs[m] * d2 * d;
        c.m4 += probs[m] * d2 * d2;
    }
    return c;
}

}  // namespace

TwoModeProbs two_mode_probs(const PairCoefficients& pc, double kappa)
{
    if (!(kappa >= 0.0 && kappa <= 1.0))
        throw InvalidArgument("kappa must lie in [0, 1], got " + std::to_string(kappa));

    // Each present particle is registered with probability kappa; expanding
    // the thinned joint occupation gives the same p_i as 1 − κa + κ²b etc.
    const double miss = 1.0 - kappa;
    const double p2 = kappa * kappa * pc.both;
    const double p1 = kappa * pc.one + 2.0 * kappa * miss * pc.both;
    const double p0 = pc.none + miss * pc.one + miss * miss * pc.both;

    TwoModeProbs tm{checked_probability(p0, "p0"), checked_probability(p1, "p1"),
                    checked_probability(p2, "p2")};
    const double sum = tm.p0 + tm.p1 + tm.p2;
    if (std::abs(sum - 1.0) > probability_slack)
        throw NumericalInconsistency("two-mode probabilities sum to " + std::to_string(sum));
    tm.p0 /= sum;
    tm.p1 /= sum;
    tm.p2 /= sum;
    return tm;
}

CountingDistribution::CountingDistribution(int n_sites) : probs_{1.0}, n_sites_(n_sites) {}

CountingDistribution::CountingDistribution(std::vector<double> probs, int n_sites)
    : probs_(std::move(probs)), n_sites_(n_sites)
{
    if (probs_.empty())
        throw InvalidArgument("a counting distribution needs at least one entry");
}

void CountingDistribution::extend(const TwoModeProbs& tm)
{
    const std::size_t old_size = probs_.size();
    probs_.resize(old_size + 2, 0.0);
    // Walk downwards so every source entry is read before it is overwritten.
    for (std::size_t m = old_size + 2; m-- > 0;) {
        double acc = 0.0;
        if (m < old_size)
            acc += tm.p0 * probs_[m];
        if (m >= 1 && m - 1 < old_size)
            acc += tm.p1 * probs_[m - 1];
        if (m >= 2)
            acc += tm.p2 * probs_[m - 2];
        probs_[m] = acc;
    }
}

double CountingDistribution::total() const noexcept
{
    return std::accumulate(probs_.begin(), probs_.end(), 0.0);
}

void CountingDistribution::finalize()
{
    for (double& p : probs_) {
        if (p < clamp_floor)
            throw NumericalInconsistency("negative probability " + std::to_string(p) +
                                         " in counting distribution");
        if (p < 0.0)
            p = 0.0;
    }
    const double sum = total();
    if (!(sum > 0.0))
        throw NumericalInconsistency("counting distribution has zero total mass");
    for (double& p : probs_)
        p /= sum;
}

CountingDistribution extend(const CountingDistribution& dist, const TwoModeProbs& tm)
{
    CountingDistribution out = dist;
    out.extend(tm);
    return out;
}

CountingDistribution distribution(std::span<const PairCoefficients> pairs, double kappa,
                                  int n_sites)
{
    if (static_cast<long>(pairs.size()) * 2 > n_sites)
        throw InvalidArgument("more mode pairs than sites");
    CountingDistribution dist(n_sites);
    for (const PairCoefficients& pc : pairs)
        dist.extend(two_mode_probs(pc, kappa));
    dist.finalize();
    return dist;
}

CountingDistribution distribution(const ModeSet& modes, std::span<const Occupation> occ,
                                  double kappa)
{
    if (modes.zone != Zone::half)
        throw InvalidArgument("counting requires the half-zone mode set");
    const auto pcs = pair_coefficients(modes, occ);
    return distribution(pcs, kappa, modes.params.N);
}

CountingDistribution thermal_distribution(const ModelParams& params, const Thermo& thermo)
{
    const ModeSet modes = build_modes(params, Zone::half);
    const auto occ = occupations(modes, thermo);
    return distribution(modes, occ, params.kappa);
}

Cumulants cumulants(const CountingDistribution& dist)
{
    const auto& p = dist.probs();
    double mean = 0.0;
    for (std::size_t m = 0; m < p.size(); ++m)
        mean += static_cast<double>(m) * p[m];
    const CentralMoments c = central_moments(p, mean);
    return {mean, c.m2, c.m3, c.m4 - 3.0 * c.m2 * c.m2};
}

Cumulants analytic_cumulants(std::span<const TwoModeProbs> pairs)
{
    Cumulants total;
    for (const TwoModeProbs& tm : pairs) {
        const std::array<double, 3> p{tm.p0, tm.p1, tm.p2};
        const double mean = tm.p1 + 2.0 * tm.p2;
        const CentralMoments c = central_moments(p, mean);
        total.mean += mean;
        total.variance += c.m2;
        total.third += c.m3;
        total.fourth += c.m4 - 3.0 * c.m2 * c.m2;
    }
    return total;
}

double odd_mass(const CountingDistribution& dist)
{
    double sum = 0.0;
    const auto& p = dist.probs();
    for (std::size_t m = 1; m < p.size(); m += 2)
        sum += p[m];
    return sum;
}

double p_at(const CountingDistribution& dist, int m)
{
    if (m < 0 || static_cast<std::size_t>(m) >= dist.size())
        throw std::out_of_range("count " + std::to_string(m) + " outside the support [0, " +
                                std::to_string(dist.size() - 1) + "]");
    return dist[static_cast<std::size_t>(m)];
}

std::vector<ScanPoint> g_scan(std::span<const double> g_grid, double delta_g,
                              const DistributionAtField& at_field, unsigned workers)
{
    if (!(delta_g > 0.0))
        throw InvalidArgument("delta_g must be positive");
    if (g_grid.empty())
        throw InvalidArgument("g grid is empty");
    for (std::size_t i = 1; i < g_grid.size(); ++i)
        if (!(g_grid[i] > g_grid[i - 1]))
            throw InvalidArgument("g grid must be strictly increasing");

    const std::size_t n = g_grid.size();
    std::vector<ScanPoint> table(n);
    parallel_for(n, workers, [&](std::size_t i) {
        const double g = g_grid[i];
        const Cumulants here = cumulants(at_field(g));

        ScanPoint& row = table[i];
        row.g = g;
        row.mean = here.mean;
        row.variance = here.variance;

        if (i == 0) {
            const Cumulants ahead = cumulants(at_field(g + delta_g));
            row.dmean_dg = (ahead.mean - here.mean) / delta_g;
            row.dvariance_dg = (ahead.variance - here.variance) / delta_g;
        } else if (i + 1 == n) {
            const Cumulants behind = cumulants(at_field(g - delta_g));
            row.dmean_dg = (here.mean - behind.mean) / delta_g;
            row.dvariance_dg = (here.variance - behind.variance) / delta_g;
        } else {
            const Cumulants ahead = cumulants(at_field(g + delta_g));
            const Cumulants behind = cumulants(at_field(g - delta_g));
            row.dmean_dg = (ahead.mean - behind.mean) / (2.0 * delta_g);
            row.dvariance_dg = (ahead.variance - behind.variance) / (2.0 * delta_g);
        }
    });
    return table;
}

std::vector<ScanPoint> g_scan(const ModelParams& base, std::span<const double> g_grid,
                              const Thermo& thermo, double delta_g, unsigned workers)
{
    base.validate();
    thermo.validate();
    return g_scan(
        g_grid, delta_g,
        [&](double g) {
            ModelParams p = base;
            p.g = g;
            return thermal_distribution(p, thermo);
        },
        workers);
}

}  // namespace qcount
