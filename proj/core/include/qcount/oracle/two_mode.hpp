#pragma once

#include "qcount/equilibrium.hpp"
#include "qcount/spectrum.hpp"

#include <Eigen/Dense>

namespace qcount::oracle {

using Matrix4 = Eigen::Matrix<std::complex<double>, 4, 4>;

/// Fermion operators of the (k, −k) pair on the occupation basis
/// {|00>, |01>, |10>, |11>} = |n_k n_{−k}>, with a Jordan-Wigner string on
/// the second mode. The Bogoliubov operators follow from
///   d_k = u c_k − i v c_{−k}†,   d_{−k} = u c_{−k} + i v c_k†
/// (v_{−k} = −v_k).
struct TwoModeOperators {
    Matrix4 c_k;
    Matrix4 c_mk;
    Matrix4 d_k;
    Matrix4 d_mk;

    static TwoModeOperators build(const Mode& mode);

    Matrix4 n_k() const { return c_k.adjoint() * c_k; }
    Matrix4 n_mk() const { return c_mk.adjoint() * c_mk; }
    /// E_k (d_k† d_k + d_{−k}† d_{−k}).
    Matrix4 hamiltonian(double energy) const;
};

/// e^{−βH_k}/Z_k by spectral decomposition of H_k. At T = 0 this is the
/// projector onto the (possibly degenerate) ground space.
Matrix4 thermal_state(const Mode& mode, const Thermo& thermo);

/// (a, b) = (Tr ρ (n_k + n_{−k}), Tr ρ n_k n_{−k}) evaluated on the full
/// 4×4 thermal state in the bare-fermion basis.
PairCoefficients oracle_pair_coefficients(const Mode& mode, const Thermo& thermo);

}  // namespace qcount::oracle
