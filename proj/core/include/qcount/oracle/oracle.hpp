#pragma once

#include "qcount/counting.hpp"
#include "qcount/oracle/two_mode.hpp"
#include "qcount/thermalization.hpp"

#include <array>

namespace qcount::oracle {

inline constexpr int max_exact_sites = 16;

/// Counting distribution from the exact rational expansion of the
/// generating function Q(λ) = Π_k (1 − λκa_k + λ²κ²b_k), with
/// p(m) = (−1)^m/m! Q^{(m)}(1) evaluated exactly. The (a_k, b_k) come from
/// oracle_pair_coefficients. Throws InvalidArgument for N > 16.
CountingDistribution oracle_distribution(const ModelParams& params, const Thermo& thermo,
                                         double kappa);

/// κ = 1 − e^{−ετ}.
double detector_kappa(double epsilon, double tau);

/// Integrates the single-mode absorption master equation resolved by the
/// number of counts registered. Returns {p(0 counts), p(1 count)} at time t
/// for an initial occupation n0 ∈ {0, 1}.
std::array<double, 2> oracle_detector_single_mode(double epsilon, double t, int n0);

struct QuenchOracleResult {
    double a = 0.0;
    double b = 0.0;
    double nbar = 0.0;         ///< <d_k† d_k>
    double trace_error = 0.0;  ///< |Tr ρ − 1|
    double step = 0.0;         ///< accepted RK4 step (units of 1/J)
};

/// Integrates the two-mode Lindblad equation for the pair (k, −k) coupled to
/// a fermionic bath at spec.bath_t_over_j, starting from the d-vacuum, with
/// fixed-step RK4. The step is halved until halving changes (a, b) by less
/// than 1e−10; throws NumericalInconsistency if that does not happen.
QuenchOracleResult oracle_quench_two_mode(const Mode& mode, const QuenchSpec& spec, double t);

}  // namespace qcount::oracle
