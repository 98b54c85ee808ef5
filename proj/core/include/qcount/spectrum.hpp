#pragma once

#include <vector>

namespace qcount {

/// Momentum quantization of the fermion modes.
///
/// `antiperiodic` uses Φ_k = 2π(k − 1/2)/N. Every momentum in (0, π) then has
/// a distinct partner at −Φ_k and the half zone k = 1…N/2 consists of N/2
/// genuine (k, −k) pairs. This is the even-fermion-parity sector that holds
/// the paired ground state.
///
/// `periodic` uses Φ_k = 2πk/N. The half zone then includes the
/// self-conjugate momentum Φ = π, which is counted as a pair, and omits Φ = 0.
enum class MomentumGrid { antiperiodic, periodic };

/// Which momenta a ModeSet covers: k = 1…N/2 or k = 1…N.
enum class Zone { half, full };

struct ModelParams {
    double J = 1.0;      ///< tunneling energy, J > 0
    double gamma = 1.0;  ///< pairing strength / anisotropy
    double g = 0.0;      ///< transverse field (chemical potential), g >= 0
    int N = 1000;        ///< number of sites, even, >= 2
    double kappa = 1.0;  ///< detector efficiency in [0, 1]
    MomentumGrid grid = MomentumGrid::antiperiodic;

    /// Throws InvalidArgument when an invariant is violated.
    void validate() const;

    /// The Jordan-Wigner mapping onto the XY chain breaks down at gamma == 0.
    bool spin_mapping_valid() const noexcept { return gamma != 0.0; }
};

/// Bogoliubov data for one momentum. Energies are in units of J.
struct Mode {
    int k = 0;
    double phi = 0.0;    ///< momentum Φ_k
    double theta = 0.0;  ///< mixing angle in [0, 2π)
    double u = 1.0;      ///< cos(θ/2)
    double v = 0.0;      ///< sin(θ/2)
    double energy = 0.0; ///< E_k / J, never negative

    double u2() const noexcept { return u * u; }
    double v2() const noexcept { return v * v; }
};

struct ModeSet {
    ModelParams params;
    Zone zone = Zone::half;
    std::vector<Mode> modes;  ///< ordered by k

    std::size_t size() const noexcept { return modes.size(); }
    auto begin() const noexcept { return modes.begin(); }
    auto end() const noexcept { return modes.end(); }
};

double momentum(int k, int n_sites, MomentumGrid grid);

/// E_k / J = sqrt((cos Φ − g)² + γ² sin² Φ).
double dispersion(double gamma, double g, double phi);

/// θ = atan2(γ sin Φ, cos Φ − g) mapped to [0, 2π).
double mixing_angle(double gamma, double g, double phi);

Mode make_mode(int k, double phi, double gamma, double g);

ModeSet build_modes(const ModelParams& params, Zone zone = Zone::half);

}  // namespace qcount
