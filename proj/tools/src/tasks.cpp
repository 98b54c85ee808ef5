#include "qcount/cli/app.hpp"
#include "qcount/cli/oracle_suite.hpp"

#include "qcount/counting.hpp"
#include "qcount/equilibrium.hpp"
#include "qcount/locality.hpp"
#include "qcount/parallel.hpp"
#include "qcount/thermalization.hpp"

#include <cmath>
#include <complex>
#include <string>

namespace qcount::cli {

namespace {

std::string label(const char* name, double x)
{
    return std::string(name) + "=" + format_number(x);
}

double nd_over_n(const ModelParams& params, double t_over_j)
{
    return excitation_density(build_modes(params, Zone::half), Thermo{t_over_j});
}

QuenchSpec quench_spec(const RunConfig& c)
{
    QuenchSpec spec;
    spec.gamma0 = c.gamma0;
    spec.bath_t_over_j = c.bath_t;
    spec.times = c.times;
    return spec;
}

void add_distribution(Report& r, const std::string& name, const CountingDistribution& d)
{
    Table& t = r.add_table(name, {"m", "p"});
    for (std::size_t m = 0; m < d.size(); ++m)
        t.add_row({static_cast<double>(m), d[m]});
}

// Fig. 1: distribution at one point plus mean and variance across g.
void zero_temperature(const RunConfig& c, Report& r)
{
    const double temp = c.temperatures.front();
    const CountingDistribution d = thermal_distribution(c.params, Thermo{temp});
    const Cumulants cu = cumulants(d);
    r.metadata.emplace_back("mean", cu.mean);
    r.metadata.emplace_back("variance", cu.variance);
    r.metadata.emplace_back("odd_mass", odd_mass(d));
    r.metadata.emplace_back("nd_over_n", nd_over_n(c.params, temp));
    add_distribution(r, "distribution", d);

    std::vector<Cumulants> sweep(c.g_grid.size());
    parallel_for(sweep.size(), c.workers, [&](std::size_t i) {
        ModelParams p = c.params;
        p.g = c.g_grid[i];
        sweep[i] = cumulants(thermal_distribution(p, Thermo{temp}));
    });
    const double n = c.params.N;
    Table& t = r.add_table("g_sweep", {"g", "mean_over_N", "variance_over_N"});
    for (std::size_t i = 0; i < sweep.size(); ++i)
        t.add_row({c.g_grid[i], sweep[i].mean / n, sweep[i].variance / n});
}

// Fig. 2: probability of the odd count just below half filling versus T.
void pair_breaking(const RunConfig& c, Report& r)
{
    const int probe = c.params.N / 2 - 1;
    r.metadata.emplace_back("m_probe", static_cast<double>(probe));
    for (const RunConfig::Panel& panel : c.panels) {
        ModelParams p = c.params;
        p.gamma = panel.gamma;
        std::vector<double> prob(panel.temperatures.size()), nd(prob.size());
        parallel_for(prob.size(), c.workers, [&](std::size_t i) {
            const double temp = panel.temperatures[i];
            prob[i] = p_at(thermal_distribution(p, Thermo{temp}), probe);
            nd[i] = nd_over_n(p, temp);
        });
        Table& t = r.add_table(label("p_odd.gamma", panel.gamma), {"T", "p_m", "nd_over_n"});
        for (std::size_t i = 0; i < prob.size(); ++i)
            t.add_row({panel.temperatures[i], prob[i], nd[i]});
        for (double temp : panel.insets)
            add_distribution(r, label("inset.gamma", panel.gamma) + "." + label("T", temp),
                             thermal_distribution(p, Thermo{temp}));
    }
}

void add_scan(Report& r, const std::string& name, const std::vector<ScanPoint>& scan, int n_sites)
{
    const double n = n_sites;
    Table& t = r.add_table(name, {"g", "mean_over_N", "variance_over_N", "dmean_dg_over_N",
                                  "dvariance_dg_over_N"});
    for (const ScanPoint& s : scan)
        t.add_row({s.g, s.mean / n, s.variance / n, s.dmean_dg / n, s.dvariance_dg / n});
}

// Fig. 3: g-derivatives at several temperatures.
void thermal_scan(const RunConfig& c, Report& r)
{
    for (double temp : c.temperatures) {
        ModelParams at_zero = c.params;
        at_zero.g = 0.0;
        r.metadata.emplace_back(label("nd_over_n_at_g0.T", temp), nd_over_n(at_zero, temp));
    }
    for (double temp : c.temperatures)
        add_scan(r, label("T", temp), g_scan(c.params, c.g_grid, Thermo{temp}, c.delta_g, c.workers),
                 c.params.N);
}

// Fig. 4: g-derivatives at several coupling times.
void quench_derivatives(const RunConfig& c, Report& r)
{
    const QuenchSpec spec = quench_spec(c);
    for (double t : c.times)
        add_scan(r, label("t", t), quench_g_scan(c.params, c.g_grid, spec, t, c.delta_g, c.workers),
                 c.params.N);
}

// Fig. 5: mean and variance against coupling time, one table per g.
void quench_trajectories(const RunConfig& c, Report& r)
{
    const QuenchSpec spec = quench_spec(c);
    const double n = c.params.N;
    for (double g : c.g_grid) {
        ModelParams p = c.params;
        p.g = g;
        Table& t = r.add_table(label("g", g), {"t", "mean_over_N", "variance_over_N"});
        for (const QuenchSample& s : quench_scan(p, spec, false, c.workers))
            t.add_row({s.t, s.mean / n, s.variance / n});
    }
}

// Figs. 6 and 7: real-space kernels, one table per g.
void kernel_tables(const RunConfig& c, Report& r)
{
    for (double g : c.g_grid) {
        ModelParams p = c.params;
        p.g = g;
        const KernelTable kt = kernels(p, c.max_distance, Thermo{c.bath_t});
        r.metadata.emplace_back(label("occupation_spread.g", g), kt.occupation_spread);
        Table& t = r.add_table(label("g", g),
                               {"d", "f_u_re", "f_u_im", "f_v_re", "f_v_im", "f_uv_re", "f_uv_im",
                                "abs_f_u", "abs_f_v", "abs_f_uv", "pair_amplitude"});
        for (const KernelRow& k : kt.rows)
            t.add_row({static_cast<double>(k.distance), k.f_u.real(), k.f_u.imag(),
                       k.f_v.real(), k.f_v.imag(), k.f_uv.real(), k.f_uv.imag(),
                       std::abs(k.f_u), std::abs(k.f_v), std::abs(k.f_uv), k.pair_amplitude});
    }
}

void distributions(const RunConfig& c, Report& r)
{
    std::vector<CountingDistribution> dists(c.temperatures.size());
    parallel_for(dists.size(), c.workers, [&](std::size_t i) {
        dists[i] = thermal_distribution(c.params, Thermo{c.temperatures[i]});
    });
    Table& summary = r.add_table("cumulants", {"T", "mean", "variance", "third", "fourth",
                                               "odd_mass", "nd_over_n"});
    for (std::size_t i = 0; i < dists.size(); ++i) {
        const Cumulants cu = cumulants(dists[i]);
        summary.add_row({c.temperatures[i], cu.mean, cu.variance, cu.third, cu.fourth,
                         odd_mass(dists[i]), nd_over_n(c.params, c.temperatures[i])});
    }
    for (std::size_t i = 0; i < dists.size(); ++i)
        add_distribution(r, label("T", c.temperatures[i]), dists[i]);
}

}  // namespace

Report execute(const RunConfig& c)
{
    Report r;
    r.task = c.task == "fig" ? "fig" + std::to_string(c.figure) : c.task;
    r.config = c.describe();

    if (c.task == "fig") {
        switch (c.figure) {
        case 1: zero_temperature(c, r); break;
        case 2: pair_breaking(c, r); break;
        case 3: thermal_scan(c, r); break;
        case 4: quench_derivatives(c, r); break;
        case 5: quench_trajectories(c, r); break;
        case 6:
        case 7: kernel_tables(c, r); break;
        default: throw ConfigError("figure must be 1…7, got " + std::to_string(c.figure));
        }
    } else if (c.task == "dist") {
        distributions(c, r);
    } else if (c.task == "gscan") {
        thermal_scan(c, r);
    } else if (c.task == "quench") {
        quench_trajectories(c, r);
    } else if (c.task == "kernels") {
        kernel_tables(c, r);
    } else if (c.task == "oracle") {
        run_oracle_suite(c, r);
    } else {
        throw ConfigError("unknown task " + c.task);
    }
    return r;
}

}  // namespace qcount::cli
