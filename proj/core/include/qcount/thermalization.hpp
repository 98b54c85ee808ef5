#pragma once

#include "qcount/counting.hpp"
#include "qcount/equilibrium.hpp"
#include "qcount/spectrum.hpp"

#include <optional>
#include <span>
#include <vector>

namespace qcount {

/// A temperature quench: the chain is coupled at t = 0 to a bath at
/// bath_t_over_j with rate gamma0 (units of J). Times are J·t.
struct QuenchSpec {
    double gamma0 = 1.0;
    double bath_t_over_j = 0.0;
    std::vector<double> times;
    /// Per-mode single-mode occupation at t = 0, indexed by k − 1. Empty means
    /// the Bogoliubov vacuum (ground state).
    std::vector<double> initial;

    void validate() const;
    bool vacuum_start() const noexcept;
    Thermo bath() const noexcept { return Thermo{bath_t_over_j}; }
};

/// Relaxed occupation: <n_k^d(t)> = e^{−γ₀t}<n_k^d(0)> + N_k^d (1 − e^{−γ₀t}),
/// returned per mode (half the pair occupation).
Occupation occupation_at(const Mode& mode, const QuenchSpec& spec, double t);

/// Time-dependent pair coefficients for a vacuum start, with the pair
/// correlation factorized into single-mode occupations. Throws
/// InvalidArgument for a non-vacuum initial profile.
PairCoefficients pair_coefficients_t(const Mode& mode, const QuenchSpec& spec, double t);

CountingDistribution quench_distribution(const ModelParams& params, const QuenchSpec& spec,
                                         double t);

struct QuenchSample {
    double t = 0.0;
    double mean = 0.0;
    double variance = 0.0;
    std::optional<CountingDistribution> dist;
};

/// One sample per spec.times entry, in order.
std::vector<QuenchSample> quench_scan(const ModelParams& params, const QuenchSpec& spec,
                                      bool keep_distributions = false, unsigned workers = 0);

/// g-derivative table of mean and variance at a fixed coupling time t.
std::vector<ScanPoint> quench_g_scan(const ModelParams& base, std::span<const double> g_grid,
                                     const QuenchSpec& spec, double t, double delta_g = 1e-3,
                                     unsigned workers = 0);

}  // namespace qcount
