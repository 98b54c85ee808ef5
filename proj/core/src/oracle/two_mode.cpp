#include "qcount/oracle/two_mode.hpp"

#include <algorithm>
#include <cmath>

namespace qcount::oracle {

namespace {

using cplx = std::complex<double>;

// Basis index i = 2·n_k + n_{−k}.
Matrix4 annihilate_first()
{
    Matrix4 c = Matrix4::Zero();
    c(0, 2) = 1.0;  // |10> -> |00>
    c(1, 3) = 1.0;  // |11> -> |01>
    return c;
}

Matrix4 annihilate_second()
{
    // Jordan-Wigner string: sign (−1)^{n_k}.
    Matrix4 c = Matrix4::Zero();
    c(0, 1) = 1.0;   // |01> -> |00>
    c(2, 3) = -1.0;  // |11> -> −|10>
    return c;
}

}  // namespace

TwoModeOperators TwoModeOperators::build(const Mode& mode)
{
    const cplx i{0.0, 1.0};
    TwoModeOperators ops;
    ops.c_k = annihilate_first();
    ops.c_mk = annihilate_second();
    ops.d_k = mode.u * ops.c_k - i * mode.v * ops.c_mk.adjoint();
    ops.d_mk = mode.u * ops.c_mk + i * mode.v * ops.c_k.adjoint();
    return ops;
}

Matrix4 TwoModeOperators::hamiltonian(double energy) const
{
    return energy * (d_k.adjoint() * d_k + d_mk.adjoint() * d_mk);
}

Matrix4 thermal_state(const Mode& mode, const Thermo& thermo)
{
    thermo.validate();
    const TwoModeOperators ops = TwoModeOperators::build(mode);
    const Eigen::SelfAdjointEigenSolver<Matrix4> solver(ops.hamiltonian(mode.energy));
    const auto& levels = solver.eigenvalues();
    const double ground = levels(0);
    const double degeneracy_tol = 1e-12 * std::max(1.0, std::abs(levels(3)));

    Eigen::Vector4d weights;
    for (int n = 0; n < 4; ++n) {
        const double gap = levels(n) - ground;
        if (thermo.ground_state())
            weights(n) = gap <= degeneracy_tol ? 1.0 : 0.0;
        else
            weights(n) = std::exp(-gap / thermo.t_over_j);
    }
    weights /= weights.sum();

    const Matrix4& vecs = solver.eigenvectors();
    return vecs * weights.cast<cplx>().asDiagonal() * vecs.adjoint();
}

PairCoefficients oracle_pair_coefficients(const Mode& mode, const Thermo& thermo)
{
    const TwoModeOperators ops = TwoModeOperators::build(mode);
    const Matrix4 rho = thermal_state(mode, thermo);
    const Matrix4 id = Matrix4::Identity();
    const Matrix4 nk = ops.n_k();
    const Matrix4 nmk = ops.n_mk();

    const auto expect = [&](const Matrix4& op) { return (rho * op).trace().real(); };
    return {
        expect((id - nk) * (id - nmk)),
        expect(nk * (id - nmk) + (id - nk) * nmk),
        expect(nk * nmk),
    };
}

}  // namespace qcount::oracle
