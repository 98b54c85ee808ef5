#include "qcount/equilibrium.hpp"

#include "qcount/error.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace qcount {

void Thermo::validate() const
{
    if (!(t_over_j >= 0.0))
        throw InvalidArgument("temperature must be >= 0, got " + std::to_string(t_over_j));
}

double Thermo::beta_e(const Mode& mode) const noexcept
{
    if (mode.energy == 0.0)
        return 0.0;
    if (t_over_j == 0.0)
        return std::numeric_limits<double>::infinity();
    return mode.energy / t_over_j;
}

PairCoefficients PairCoefficients::from_moments(double a, double b) noexcept
{
    return {1.0 - a + b, a - 2.0 * b, b};
}

double partition_k(const Mode& mode, const Thermo& thermo)
{
    thermo.validate();
    const double boltzmann = std::exp(-thermo.beta_e(mode));
    return (1.0 + boltzmann) * (1.0 + boltzmann);
}

Occupation occupation_k(const Mode& mode, const Thermo& thermo)
{
    thermo.validate();
    // Fermi function; exp(inf) = inf gives exactly 0 for a gapped mode at T = 0.
    return {1.0 / (1.0 + std::exp(thermo.beta_e(mode)))};
}

PairCoefficients pair_coefficients(const Mode& mode, const Occupation& occ)
{
    const double n = occ.nbar;
    if (!(n >= 0.0 && n <= 1.0))
        throw InvalidArgument("occupation must lie in [0, 1], got " + std::to_string(n));

    const double u2 = mode.u2();
    const double v2 = mode.v2();
    const double empty = 1.0 - n;
    return {
        u2 * empty * empty + v2 * n * n,
        2.0 * n * empty,
        u2 * n * n + v2 * empty * empty,
    };
}

std::vector<Occupation> occupations(const ModeSet& modes, const Thermo& thermo)
{
    std::vector<Occupation> out;
    out.reserve(modes.size());
    for (const Mode& m : modes)
        out.push_back(occupation_k(m, thermo));
    return out;
}

std::vector<PairCoefficients> pair_coefficients(const ModeSet& modes,
                                                std::span<const Occupation> occ)
{
    if (occ.size() != modes.size())
        throw InvalidArgument("occupation profile length does not match the mode set");
    std::vector<PairCoefficients> out;
    out.reserve(modes.size());
    for (std::size_t i = 0; i < modes.size(); ++i)
        out.push_back(pair_coefficients(modes.modes[i], occ[i]));
    return out;
}

double excitation_density(const ModeSet& modes, const Thermo& thermo)
{
    double total = 0.0;
    for (const Mode& m : modes)
        total += occupation_k(m, thermo).n_d();
    return total / modes.params.N;
}

}  // namespace qcount
