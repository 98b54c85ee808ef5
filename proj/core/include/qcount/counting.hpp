#pragma once

#include "qcount/equilibrium.hpp"
#include "qcount/spectrum.hpp"

#include <functional>
#include <span>
#include <vector>

namespace qcount {

/// Probabilities of registering 0, 1 or 2 particles from one (k, −k) pair.
struct TwoModeProbs {
    double p0 = 1.0;
    double p1 = 0.0;
    double p2 = 0.0;
};

/// Applies detector efficiency kappa to the pair coefficients. Each particle
/// is registered independently with probability kappa, so
///   p0 = 1 − κa + κ²b,  p1 = κa − 2κ²b,  p2 = κ²b.
/// Throws NumericalInconsistency if a probability falls outside
/// [−1e−12, 1 + 1e−12]; small excursions are clamped and the triple is
/// renormalized.
TwoModeProbs two_mode_probs(const PairCoefficients& pc, double kappa);

/// Probability vector p(m) of registering m particles.
class CountingDistribution {
public:
    /// δ(m = 0) over zero pairs.
    explicit CountingDistribution(int n_sites = 0);
    CountingDistribution(std::vector<double> probs, int n_sites);

    const std::vector<double>& probs() const noexcept { return probs_; }
    int n_sites() const noexcept { return n_sites_; }
    std::size_t size() const noexcept { return probs_.size(); }
    int pairs() const noexcept { return static_cast<int>(probs_.size() / 2); }
    double operator[](std::size_t m) const noexcept { return probs_[m]; }

    /// Convolves one more pair in place: p'(m) = Σ_i P_i p(m − i).
    void extend(const TwoModeProbs& tm);

    double total() const noexcept;

    /// Clamps entries in [−1e−15, 0) to zero and renormalizes. Throws
    /// NumericalInconsistency on larger negative entries.
    void finalize();

private:
    std::vector<double> probs_;
    int n_sites_ = 0;
};

CountingDistribution extend(const CountingDistribution& dist, const TwoModeProbs& tm);

/// Folds extend over the given pair coefficients starting from δ(m = 0).
CountingDistribution distribution(std::span<const PairCoefficients> pairs, double kappa,
                                  int n_sites);

CountingDistribution distribution(const ModeSet& modes, std::span<const Occupation> occ,
                                  double kappa);

/// Thermal distribution at the given temperature; kappa from params.
CountingDistribution thermal_distribution(const ModelParams& params, const Thermo& thermo);

struct Cumulants {
    double mean = 0.0;
    double variance = 0.0;
    double third = 0.0;
    double fourth = 0.0;
};

/// Cumulants of a normalized distribution, from central moments.
Cumulants cumulants(const CountingDistribution& dist);

/// Cumulants from the pair-additive closed forms (independent pairs).
Cumulants analytic_cumulants(std::span<const TwoModeProbs> pairs);

/// Σ_{m odd} p(m).
double odd_mass(const CountingDistribution& dist);

/// probs[m]; throws std::out_of_range outside [0, size).
double p_at(const CountingDistribution& dist, int m);

struct ScanPoint {
    double g = 0.0;
    double mean = 0.0;
    double variance = 0.0;
    double dmean_dg = 0.0;
    double dvariance_dg = 0.0;
};

/// Produces the counting distribution at transverse field g.
using DistributionAtField = std::function<CountingDistribution(double g)>;

/// Finite-difference scan over a strictly increasing g grid. Interior points
/// use a central difference with step delta_g, the first point a forward and
/// the last point a backward difference. Grid points are independent and are
/// evaluated on `workers` threads (0 = hardware concurrency); the result is in
/// grid order regardless of completion order.
std::vector<ScanPoint> g_scan(std::span<const double> g_grid, double delta_g,
                              const DistributionAtField& at_field, unsigned workers = 0);

/// Thermal g-scan: base params with g replaced by each grid value.
std::vector<ScanPoint> g_scan(const ModelParams& base, std::span<const double> g_grid,
                              const Thermo& thermo, double delta_g = 1e-3,
                              unsigned workers = 0);

}  // namespace qcount
