#include "qcount/spectrum.hpp"

#include "qcount/error.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace qcount {

void ModelParams::validate() const
{
    if (!(J > 0.0) || !std::isfinite(J))
        throw InvalidArgument("J must be positive and finite, got " + std::to_string(J));
    if (N < 2 || N % 2 != 0)
        throw InvalidArgument("N must be an even integer >= 2, got " + std::to_string(N));
    if (!(kappa >= 0.0 && kappa <= 1.0))
        throw InvalidArgument("kappa must lie in [0, 1], got " + std::to_string(kappa));
    if (!(g >= 0.0) || !std::isfinite(g))
        throw InvalidArgument("g must be finite and >= 0, got " + std::to_string(g));
    if (!std::isfinite(gamma))
        throw InvalidArgument("gamma must be finite");
}

double momentum(int k, int n_sites, MomentumGrid grid)
{
    const double offset = grid == MomentumGrid::antiperiodic ? 0.5 : 0.0;
    return 2.0 * std::numbers::pi * (k - offset) / n_sites;
}

double dispersion(double gamma, double g, double phi)
{
    return std::hypot(std::cos(phi) - g, gamma * std::sin(phi));
}

double mixing_angle(double gamma, double g, double phi)
{
    double theta = std::atan2(gamma * std::sin(phi), std::cos(phi) - g);
    if (theta < 0.0)
        theta += 2.0 * std::numbers::pi;
    // A tiny negative angle rounds up to exactly 2π; fold it back to 0.
    return theta < 2.0 * std::numbers::pi ? theta : 0.0;
}

Mode make_mode(int k, double phi, double gamma, double g)
{
    Mode m;
    m.k = k;
    m.phi = phi;
    m.theta = mixing_angle(gamma, g, phi);
    m.u = std::cos(0.5 * m.theta);
    m.v = std::sin(0.5 * m.theta);
    m.energy = dispersion(gamma, g, phi);
    return m;
}

ModeSet build_modes(const ModelParams& params, Zone zone)
{
    params.validate();
    const int count = zone == Zone::half ? params.N / 2 : params.N;

    ModeSet set;
    set.params = params;
    set.zone = zone;
    set.modes.reserve(count);
    for (int k = 1; k <= count; ++k)
        set.modes.push_back(make_mode(k, momentum(k, params.N, params.grid), params.gamma, params.g));
    return set;
}

}  // namespace qcount
