#include "qcount/locality.hpp"

#include "qcount/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace qcount {

namespace {

using cplx = std::complex<double>;

KernelRow kernel_row(const ModeSet& modes, int d)
{
    const double inv_n = 1.0 / modes.params.N;
    KernelRow row;
    row.distance = d;
    cplx f_u{}, f_v{}, uv_sum{};
    double sine_sum = 0.0;
    for (const Mode& m : modes) {
        const double angle = m.phi * d;
        const cplx phase{std::cos(angle), std::sin(angle)};
        f_u += m.u2() * phase;
        f_v += m.v2() * phase;
        uv_sum += m.u * m.v * phase;
        sine_sum += m.u * m.v * phase.imag();
    }
    row.f_u = f_u * inv_n;
    row.f_v = f_v * inv_n;
    row.f_uv = cplx{0.0, 1.0} * uv_sum * inv_n;
    row.pair_amplitude = sine_sum * inv_n;
    return row;
}

}  // namespace

KernelTable kernels(const ModelParams& params, int max_distance, std::optional<Thermo> bath)
{
    if (max_distance < 0)
        throw InvalidArgument("max_distance must be >= 0");
    const ModeSet modes = build_modes(params, Zone::full);
    const int last = std::min(max_distance, params.N - 1);

    KernelTable table;
    table.params = params;
    table.rows.reserve(last + 1);
    for (int d = 0; d <= last; ++d)
        table.rows.push_back(kernel_row(modes, d));

    if (bath) {
        double lo = std::numeric_limits<double>::infinity();
        double hi = -lo;
        for (const Mode& m : modes) {
            const double nd = occupation_k(m, *bath).n_d();
            lo = std::min(lo, nd);
            hi = std::max(hi, nd);
        }
        table.occupation_spread = hi - lo;
    }
    return table;
}

std::vector<std::complex<double>> inverse_kernel(const ModelParams& params,
                                                 const std::vector<std::complex<double>>& f)
{
    if (f.size() != static_cast<std::size_t>(params.N))
        throw InvalidArgument("inverse transform needs all N distances");
    const ModeSet modes = build_modes(params, Zone::full);
    std::vector<cplx> out;
    out.reserve(modes.size());
    for (const Mode& m : modes) {
        cplx acc{};
        for (int d = 0; d < params.N; ++d) {
            const double angle = -m.phi * d;
            acc += f[d] * cplx{std::cos(angle), std::sin(angle)};
        }
        out.push_back(acc);
    }
    return out;
}

const KernelRow& LocalBathCoefficients::row(int l, int m) const
{
    const int n = table.params.N;
    const int d = ((l - m) % n + n) % n;
    return table.rows.at(static_cast<std::size_t>(d));
}

std::complex<double> LocalBathCoefficients::f_u(int l, int m) const { return row(l, m).f_u; }
std::complex<double> LocalBathCoefficients::f_v(int l, int m) const { return row(l, m).f_v; }
std::complex<double> LocalBathCoefficients::f_uv(int l, int m) const { return row(l, m).f_uv; }

bool LocalBathCoefficients::free_fermion_limit(double tol) const
{
    for (const KernelRow& r : table.rows) {
        if (std::abs(r.f_u) >= tol || std::abs(r.f_uv) >= tol)
            return false;
        const double expected = r.distance == 0 ? 1.0 : 0.0;
        if (std::abs(r.f_v - expected) >= tol)
            return false;
    }
    return true;
}

LocalBathCoefficients local_bath_coefficients(const ModelParams& params, double gamma0,
                                              const Thermo& bath)
{
    if (!(gamma0 > 0.0))
        throw InvalidArgument("gamma0 must be positive");
    LocalBathCoefficients out;
    out.table = kernels(params, params.N - 1, bath);
    const double density = excitation_density(build_modes(params, Zone::half), bath);
    out.emission_rate = gamma0 * (density + 1.0);
    out.absorption_rate = gamma0 * density;
    return out;
}

}  // namespace qcount
