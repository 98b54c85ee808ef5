#pragma once

// Hand-rolled generators for property tests. Seeds are fixed so failures
// reproduce.

#include "qcount/equilibrium.hpp"
#include "qcount/spectrum.hpp"

#include <cmath>
#include <random>

namespace qcount::testing {

class Generator {
public:
    explicit Generator(std::uint64_t seed) : rng_(seed) {}

    double uniform(double lo, double hi) { return std::uniform_real_distribution<>(lo, hi)(rng_); }

    double log_uniform(double lo, double hi)
    {
        return std::exp(uniform(std::log(lo), std::log(hi)));
    }

    int even(int lo, int hi)
    {
        return 2 * std::uniform_int_distribution<>(lo / 2, hi / 2)(rng_);
    }

    int integer(int lo, int hi) { return std::uniform_int_distribution<>(lo, hi)(rng_); }

    bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng_); }

    ModelParams params(int n_lo = 4, int n_hi = 64)
    {
        ModelParams p;
        p.gamma = uniform(0.01, 2.0);
        p.g = uniform(0.0, 3.0);
        p.N = even(n_lo, n_hi);
        p.kappa = uniform(0.0, 1.0);
        p.grid = coin() ? MomentumGrid::antiperiodic : MomentumGrid::periodic;
        return p;
    }

    Mode mode()
    {
        const ModelParams p = params();
        const int k = integer(1, p.N / 2);
        return make_mode(k, momentum(k, p.N, p.grid), p.gamma, p.g);
    }

    /// Zero with probability 0.1, otherwise log-uniform over [1e-3, 1e2].
    Thermo thermo()
    {
        if (coin(0.1))
            return Thermo{0.0};
        return Thermo{log_uniform(1e-3, 1e2)};
    }

private:
    std::mt19937_64 rng_;
};

}  // namespace qcount::testing
