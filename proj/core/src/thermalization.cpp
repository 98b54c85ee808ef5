#include "qcount/thermalization.hpp"

#include "qcount/error.hpp"
#include "qcount/parallel.hpp"

#include <cmath>
#include <string>

namespace qcount {

void QuenchSpec::validate() const
{
    if (!(gamma0 > 0.0) || !std::isfinite(gamma0))
        throw InvalidArgument("gamma0 must be positive, got " + std::to_string(gamma0));
    bath().validate();
    for (std::size_t i = 0; i < times.size(); ++i) {
        if (!(times[i] >= 0.0))
            throw InvalidArgument("quench times must be >= 0");
        if (i > 0 && times[i] < times[i - 1])
            throw InvalidArgument("quench times must be nondecreasing");
    }
    for (double n : initial)
        if (!(n >= 0.0 && n <= 1.0))
            throw InvalidArgument("initial occupations must lie in [0, 1]");
}

bool QuenchSpec::vacuum_start() const noexcept
{
    for (double n : initial)
        if (n != 0.0)
            return false;
    return true;
}

Occupation occupation_at(const Mode& mode, const QuenchSpec& spec, double t)
{
    if (!(t >= 0.0))
        throw InvalidArgument("time must be >= 0, got " + std::to_string(t));
    double start = 0.0;
    if (!spec.initial.empty()) {
        const auto idx = static_cast<std::size_t>(mode.k - 1);
        if (idx >= spec.initial.size())
            throw InvalidArgument("no initial occupation for mode k = " + std::to_string(mode.k));
        start = spec.initial[idx];
    }
    const double target = occupation_k(mode, spec.bath()).nbar;
    if (t == 0.0)
        return {start};
    // Written as target + offset·decay so it is monotone in t under rounding.
    return {target + (start - target) * std::exp(-spec.gamma0 * t)};
}

PairCoefficients pair_coefficients_t(const Mode& mode, const QuenchSpec& spec, double t)
{
    if (!spec.vacuum_start())
        throw InvalidArgument("closed-form quench coefficients require a vacuum start");
    return pair_coefficients(mode, occupation_at(mode, spec, t));
}

CountingDistribution quench_distribution(const ModelParams& params, const QuenchSpec& spec,
                                         double t)
{
    spec.validate();
    const ModeSet modes = build_modes(params, Zone::half);
    std::vector<PairCoefficients> pcs;
    pcs.reserve(modes.size());
    for (const Mode& m : modes)
        pcs.push_back(pair_coefficients_t(m, spec, t));
    return distribution(pcs, params.kappa, params.N);
}

std::vector<QuenchSample> quench_scan(const ModelParams& params, const QuenchSpec& spec,
                                      bool keep_distributions, unsigned workers)
{
    spec.validate();
    params.validate();
    std::vector<QuenchSample> samples(spec.times.size());
    parallel_for(samples.size(), workers, [&](std::size_t i) {
        const double t = spec.times[i];
        CountingDistribution dist = quench_distribution(params, spec, t);
        const Cumulants c = cumulants(dist);
        samples[i].t = t;
        samples[i].mean = c.mean;
        samples[i].variance = c.variance;
        if (keep_distributions)
            samples[i].dist = std::move(dist);
    });
    return samples;
}

std::vector<ScanPoint> quench_g_scan(const ModelParams& base, std::span<const double> g_grid,
                                     const QuenchSpec& spec, double t, double delta_g,
                                     unsigned workers)
{
    base.validate();
    spec.validate();
    return g_scan(
        g_grid, delta_g,
        [&](double g) {
            ModelParams p = base;
            p.g = g;
            return quench_distribution(p, spec, t);
        },
        workers);
}

}  // namespace qcount
