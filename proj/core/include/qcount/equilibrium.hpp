#pragma once

#include "qcount/spectrum.hpp"

#include <span>
#include <vector>

namespace qcount {

/// Canonical temperature in units of J. Zero is the ground state and
/// +infinity is the maximally mixed state (β = 0).
struct Thermo {
    double t_over_j = 0.0;

    void validate() const;
    bool ground_state() const noexcept { return t_over_j == 0.0; }

    /// βE_k. Infinite for a gapped mode at T = 0; zero at infinite T or E_k = 0.
    double beta_e(const Mode& mode) const noexcept;
};

/// Thermal occupation of one Bogoliubov mode.
struct Occupation {
    double nbar = 0.0;  ///< <d_k† d_k>

    /// Pair occupation N_k^d = <d_k† d_k + d_{-k}† d_{-k}>.
    double n_d() const noexcept { return 2.0 * nbar; }
};

/// Counting coefficients of one (k, −k) pair, independent of the detector.
///
/// Stored as the joint occupation probabilities of the two bare fermion modes
/// c_k, c_{−k}: nothing occupied, exactly one, both. The generating-function
/// coefficients follow as a = <n_k + n_{−k}> = one + 2·both and
/// b = <n_k n_{−k}> = both. Keeping the three probabilities rather than (a, b)
/// avoids the cancellation in 1 − a + b and a − 2b.
struct PairCoefficients {
    double none = 1.0;
    double one = 0.0;
    double both = 0.0;

    double a() const noexcept { return one + 2.0 * both; }
    double b() const noexcept { return both; }

    /// Builds coefficients from the moments (a, b). No consistency check is
    /// made here; two_mode_probs rejects sets that yield negative probabilities.
    static PairCoefficients from_moments(double a, double b) noexcept;
};

/// Z_k = (1 + e^{−βE_k})².
double partition_k(const Mode& mode, const Thermo& thermo);

Occupation occupation_k(const Mode& mode, const Thermo& thermo);

/// Pair coefficients for a product state of the d-modes with occupation
/// occ.nbar each. Accepts nbar in [0, 1] so that non-equilibrium callers can
/// reuse it; throws InvalidArgument otherwise.
PairCoefficients pair_coefficients(const Mode& mode, const Occupation& occ);

std::vector<Occupation> occupations(const ModeSet& modes, const Thermo& thermo);

std::vector<PairCoefficients> pair_coefficients(const ModeSet& modes,
                                                std::span<const Occupation> occ);

/// N_d / N with N_d = Σ_k N_k^d over the half zone.
double excitation_density(const ModeSet& modes, const Thermo& thermo);

}  // namespace qcount
