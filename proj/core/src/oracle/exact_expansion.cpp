#include "qcount/error.hpp"
#include "qcount/oracle/oracle.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace qcount::oracle {

namespace {

using rational = boost::multiprecision::cpp_rational;

// Every finite double is a dyadic rational; the conversion is exact.
rational exact(double x) { return rational(x); }

rational binomial(int n, int k)
{
    rational r = 1;
    for (int i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}

}  // namespace

CountingDistribution oracle_distribution(const ModelParams& params, const Thermo& thermo,
                                         double kappa)
{
    params.validate();
    if (params.N > max_exact_sites)
        throw InvalidArgument("exact expansion supports N <= " +
                              std::to_string(max_exact_sites) + ", got " +
                              std::to_string(params.N));
    if (!(kappa >= 0.0 && kappa <= 1.0))
        throw InvalidArgument("kappa must lie in [0, 1]");

    const ModeSet modes = build_modes(params, Zone::half);
    const rational k = exact(kappa);

    // Q(λ) as coefficients of λ^j.
    std::vector<rational> q{rational(1)};
    for (const Mode& mode : modes) {
        const PairCoefficients pc = oracle_pair_coefficients(mode, thermo);
        const rational a = exact(pc.a());
        const rational b = exact(pc.b());
        const std::array<rational, 3> factor{rational(1), -k * a, k * k * b};

        std::vector<rational> next(q.size() + 2);
        for (std::size_t j = 0; j < q.size(); ++j)
            for (std::size_t f = 0; f < factor.size(); ++f)
                next[j + f] += q[j] * factor[f];
        q = std::move(next);
    }

    // p(m) = (−1)^m / m! · Q^{(m)}(1) = (−1)^m Σ_{j>=m} C(j, m) q_j.
    std::vector<double> probs(q.size());
    for (std::size_t m = 0; m < q.size(); ++m) {
        rational sum = 0;
        for (std::size_t j = m; j < q.size(); ++j)
            sum += binomial(static_cast<int>(j), static_cast<int>(m)) * q[j];
        if (m % 2 == 1)
            sum = -sum;
        probs[m] = sum.convert_to<double>();
    }
    return CountingDistribution(std::move(probs), params.N);
}

}  // namespace qcount::oracle
