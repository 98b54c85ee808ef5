#include "qcount/error.hpp"
#include "qcount/oracle/oracle.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <string>

namespace qcount::oracle {

namespace {

using cplx = std::complex<double>;
using MatrixX = Eigen::MatrixXcd;
using VectorX = Eigen::VectorXcd;

MatrixX kron(const MatrixX& a, const MatrixX& b)
{
    MatrixX out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

// Column-major vectorization: vec(A ρ B) = (Bᵀ ⊗ A) vec(ρ).
class Liouvillian {
public:
    explicit Liouvillian(Eigen::Index dim)
        : dim_(dim), generator_(MatrixX::Zero(dim * dim, dim * dim))
    {
    }

    void add_hamiltonian(const MatrixX& h)
    {
        const MatrixX id = MatrixX::Identity(dim_, dim_);
        generator_ += cplx{0.0, -1.0} * (kron(id, h) - kron(h.transpose(), id));
    }

    void add_jump(const MatrixX& jump, double rate)
    {
        const MatrixX id = MatrixX::Identity(dim_, dim_);
        const MatrixX loss = jump.adjoint() * jump;
        generator_ += rate * (kron(jump.conjugate(), jump) - 0.5 * kron(id, loss) -
                              0.5 * kron(loss.transpose(), id));
    }

    const MatrixX& generator() const { return generator_; }

private:
    Eigen::Index dim_;
    MatrixX generator_;
};

VectorX rk4(const MatrixX& gen, VectorX state, double t, double h)
{
    if (t <= 0.0)
        return state;
    const long steps = std::max(1L, static_cast<long>(std::ceil(t / h)));
    const double dt = t / static_cast<double>(steps);
    for (long s = 0; s < steps; ++s) {
        const VectorX k1 = gen * state;
        const VectorX k2 = gen * (state + 0.5 * dt * k1);
        const VectorX k3 = gen * (state + 0.5 * dt * k2);
        const VectorX k4 = gen * (state + dt * k3);
        state += (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    }
    return state;
}

template <class Observe>
auto converged_rk4(const MatrixX& gen, const VectorX& start, double t, double h,
                   double tolerance, Observe&& observe)
{
    constexpr int max_halvings = 16;
    auto coarse = observe(rk4(gen, start, t, h));
    for (int i = 0; i < max_halvings; ++i) {
        h *= 0.5;
        auto fine = observe(rk4(gen, start, t, h));
        if (fine.distance(coarse) < tolerance) {
            fine.step = h;
            return fine;
        }
        coarse = fine;
    }
    throw NumericalInconsistency("RK4 integration did not converge to " +
                                 std::to_string(tolerance) + " at t = " + std::to_string(t));
}

VectorX vectorize(const MatrixX& rho)
{
    return Eigen::Map<const VectorX>(rho.data(), rho.size());
}

MatrixX unvectorize(const VectorX& v, Eigen::Index dim)
{
    return Eigen::Map<const MatrixX>(v.data(), dim, dim);
}

struct PairObservables {
    double a = 0.0, b = 0.0, nbar = 0.0, trace_error = 0.0, step = 0.0;
    double distance(const PairObservables& o) const
    {
        return std::max({std::abs(a - o.a), std::abs(b - o.b), std::abs(nbar - o.nbar)});
    }
};

struct CountObservables {
    double p0 = 0.0, p1 = 0.0, step = 0.0;
    double distance(const CountObservables& o) const
    {
        return std::max(std::abs(p0 - o.p0), std::abs(p1 - o.p1));
    }
};

}  // namespace

double detector_kappa(double epsilon, double tau)
{
    if (!(epsilon >= 0.0) || !(tau >= 0.0))
        throw InvalidArgument("detector rate and exposure time must be >= 0");
    return -std::expm1(-epsilon * tau);
}

std::array<double, 2> oracle_detector_single_mode(double epsilon, double t, int n0)
{
    if (!(epsilon >= 0.0) || !(t >= 0.0))
        throw InvalidArgument("detector rate and time must be >= 0");
    if (n0 != 0 && n0 != 1)
        throw InvalidArgument("a fermion mode holds 0 or 1 particles");

    // Two count-resolved density matrices ρ^(0), ρ^(1) of one fermion mode,
    // stacked block-diagonally in a 4×4 matrix. The jump a ρ^(0) a† moves
    // weight from block 0 to block 1; within a block the no-jump evolution is
    // −ε/2 {a†a, ρ}.
    MatrixX a = MatrixX::Zero(2, 2);
    a(0, 1) = 1.0;
    const MatrixX number = a.adjoint() * a;

    MatrixX no_jump = MatrixX::Zero(4, 4);
    no_jump.topLeftCorner(2, 2) = number;
    no_jump.bottomRightCorner(2, 2) = number;
    MatrixX transfer = MatrixX::Zero(4, 4);
    transfer.bottomLeftCorner(2, 2) = a;

    const MatrixX id = MatrixX::Identity(4, 4);
    // Only the block-diagonal entries are physical; the off-diagonal blocks
    // stay zero because they start at zero and nothing feeds them.
    const MatrixX gen = epsilon * (kron(transfer.conjugate(), transfer) -
                                   0.5 * kron(id, no_jump) - 0.5 * kron(no_jump.transpose(), id));

    MatrixX rho = MatrixX::Zero(4, 4);
    rho(n0, n0) = 1.0;

    const double h = epsilon > 0.0 ? std::min(0.05 / epsilon, std::max(t, 1e-12)) : 1.0;
    const auto result =
        converged_rk4(gen, vectorize(rho), t, h, 1e-13, [](const VectorX& v) {
            const MatrixX r = unvectorize(v, 4);
            return CountObservables{r.topLeftCorner(2, 2).trace().real(),
                                    r.bottomRightCorner(2, 2).trace().real()};
        });
    return {result.p0, result.p1};
}

QuenchOracleResult oracle_quench_two_mode(const Mode& mode, const QuenchSpec& spec, double t)
{
    spec.validate();
    if (!spec.vacuum_start())
        throw InvalidArgument("the two-mode quench oracle starts from the d-vacuum");
    if (!(t >= 0.0))
        throw InvalidArgument("time must be >= 0");

    const TwoModeOperators ops = TwoModeOperators::build(mode);
    const MatrixX dk = ops.d_k;
    const MatrixX dmk = ops.d_mk;
    const MatrixX nk = ops.n_k();
    const MatrixX nmk = ops.n_mk();

    // Bath occupation of one d-mode from the exact thermal state.
    const Matrix4 bath_state = thermal_state(mode, spec.bath());
    const double bath_n = (bath_state * ops.d_k.adjoint() * ops.d_k).trace().real();

    Liouvillian liouvillian(4);
    liouvillian.add_hamiltonian(ops.hamiltonian(mode.energy));
    for (const MatrixX& d : {dk, dmk}) {
        liouvillian.add_jump(d, spec.gamma0 * (1.0 - bath_n));
        liouvillian.add_jump(d.adjoint(), spec.gamma0 * bath_n);
    }

    const MatrixX vacuum = thermal_state(mode, Thermo{0.0});
    const double rate = std::max({spec.gamma0, mode.energy, 1.0});
    const double h = std::min(0.05 / rate, std::max(t, 1e-12));

    const auto observed = converged_rk4(
        liouvillian.generator(), vectorize(vacuum), t, h, 1e-10, [&](const VectorX& v) {
            const MatrixX rho = unvectorize(v, 4);
            PairObservables o;
            o.a = (rho * (nk + nmk)).trace().real();
            o.b = (rho * nk * nmk).trace().real();
            o.nbar = (rho * dk.adjoint() * dk).trace().real();
            o.trace_error = std::abs(rho.trace() - 1.0);
            return o;
        });

    return {observed.a, observed.b, observed.nbar, observed.trace_error, observed.step};
}

}  // namespace qcount::oracle
