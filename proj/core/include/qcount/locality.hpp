#pragma once

#include "qcount/equilibrium.hpp"
#include "qcount/spectrum.hpp"

#include <complex>
#include <optional>
#include <vector>

namespace qcount {

/// Real-space kernels of the quasiparticle bath coupling at one distance
/// d = l − m:
///   f_u(d)  = (1/N) Σ_k u_k² e^{iΦ_k d}
///   f_v(d)  = (1/N) Σ_k v_k² e^{iΦ_k d}
///   f_uv(d) = (i/N) Σ_k u_k v_k e^{iΦ_k d}
/// with k over the full zone.
struct KernelRow {
    int distance = 0;
    std::complex<double> f_u;
    std::complex<double> f_v;
    std::complex<double> f_uv;

    /// (1/N) Σ_k u_k v_k sin(Φ_k d): the imaginary part of f_uv / i, which is
    /// the only nonzero component since u_k v_k is odd in k.
    double pair_amplitude = 0.0;
};

struct KernelTable {
    ModelParams params;
    std::vector<KernelRow> rows;  ///< distances 0…max_distance

    /// max_k N_k^d − min_k N_k^d at the supplied temperature (0 if none).
    double occupation_spread = 0.0;

    /// The local rewriting of the bath coupling assumes N_k^d independent of k.
    bool local_form_valid() const noexcept { return occupation_spread <= 1e-3; }
};

/// Kernel table for distances 0…max_distance (clamped to N − 1). When a bath
/// temperature is given, occupation_spread reports how far N_k^d is from
/// constant across the zone.
KernelTable kernels(const ModelParams& params, int max_distance,
                    std::optional<Thermo> bath = std::nullopt);

/// Recovers per-mode weights from a full table (distances 0…N−1) by the
/// inverse transform, e.g. u_k² from f_u. Returned in full-zone k order.
std::vector<std::complex<double>> inverse_kernel(const ModelParams& params,
                                                 const std::vector<std::complex<double>>& f);

/// Coefficients of the bath master equation rewritten on lattice sites.
/// The emission block (d_k ρ d_k†) carries emission_rate and the absorption
/// block (d_k† ρ d_k) absorption_rate; within each block the (l, m) term
/// weights are f_u(l − m), f_v(l − m) and f_uv(l − m).
struct LocalBathCoefficients {
    double emission_rate = 0.0;    ///< γ₀ (N_d/N + 1)
    double absorption_rate = 0.0;  ///< γ₀ N_d/N
    KernelTable table;             ///< all distances 0…N−1

    std::complex<double> f_u(int l, int m) const;
    std::complex<double> f_v(int l, int m) const;
    std::complex<double> f_uv(int l, int m) const;

    /// True if every kernel entry except f_v(0) is below tol in magnitude and
    /// |f_v(0) − 1| < tol: the bath then exchanges bare fermions site by site.
    bool free_fermion_limit(double tol) const;

private:
    const KernelRow& row(int l, int m) const;
};

LocalBathCoefficients local_bath_coefficients(const ModelParams& params, double gamma0,
                                              const Thermo& bath);

}  // namespace qcount
