#include "qcount/cli/app.hpp"
#include "qcount/cli/oracle_suite.hpp"

#include "qcount/equilibrium.hpp"
#include "qcount/error.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

namespace qcount::cli {

namespace {

double parse_number(std::string_view s)
{
    while (!s.empty() && s.front() == ' ')
        s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ')
        s.remove_suffix(1);
    double x = 0.0;
    const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), x);
    if (s.empty() || ec != std::errc() || end != s.data() + s.size() || !std::isfinite(x))
        throw ConfigError("not a number: '" + std::string(s) + "'");
    return x;
}

std::string join(const std::vector<double>& xs)
{
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i)
        s += (i ? "," : "") + format_number(xs[i]);
    return s;
}

const char* grid_name(MomentumGrid g)
{
    return g == MomentumGrid::periodic ? "periodic" : "antiperiodic";
}

// Raw values as given on the command line or in the config file. Presence is
// read from the option counts, so defaults here never leak into the run.
struct Flags {
    double J = 0, gamma = 0, g = 0, kappa = 0, gamma0 = 0, bath_t = 0, delta_g = 0;
    int N = 0, max_distance = 0, figure = 0, oracle_n = 8;
    std::string T, g_grid, times, grid, out, format, check = "all";
    unsigned workers = 0;
};

std::vector<double> range(double start, double stop, double step)
{
    std::vector<double> xs;
    const auto count = static_cast<long>(std::floor((stop - start) / step + 1e-9)) + 1;
    // Snap to 12 significant digits so 0:1:0.1 yields 0.3, not 0.30000000000000004.
    for (long i = 0; i < count; ++i)
        xs.push_back(parse_number(fmt::format("{:.12g}", start + static_cast<double>(i) * step)));
    return xs;
}

void apply_task_defaults(RunConfig& c)
{
    c.temperatures = {0.0};
    c.g_grid = range(0.0, 2.0, 0.01);
    c.times = range(0.0, 10.0, 0.1);
    if (c.task == "quench" || c.task == "kernels")
        c.g_grid = {0.0};
    if (c.task != "fig")
        return;
    switch (c.figure) {
    case 2:
        c.panels = {{0.01, range(0.0, 0.02, 0.0005), {0.0, 0.01}},
                    {1.0, range(0.0, 0.3, 0.005), {0.0, 0.2}}};
        break;
    case 3:
        c.temperatures = {0.0, 0.05, 0.3, 1.0};
        break;
    case 4:
        c.bath_t = 0.1;
        c.times = {0.0, 1.0, 10.0};
        break;
    case 5:
        c.bath_t = 100.0;
        c.g_grid = {0.0, 1.0, 2.0};
        c.times = range(0.0, 40.0, 0.1);
        break;
    case 6:
        c.g_grid = {0.0, 1.0, 10.0};
        break;
    case 7:
        c.params.gamma = 0.01;
        c.g_grid = {0.0, 1.0, 10.0};
        break;
    default:
        break;
    }
}

bool given(const CLI::App& app, const char* name)
{
    return app.get_option(name)->count() > 0;
}

RunConfig resolve(const CLI::App& app, const CLI::App& sub, const Flags& f)
{
    RunConfig c;
    c.task = sub.get_name();
    c.figure = f.figure;
    if (c.task == "fig" && (c.figure < 1 || c.figure > 7))
        throw ConfigError("figure must be 1…7, got " + std::to_string(c.figure));
    apply_task_defaults(c);

    if (given(app, "--J")) c.params.J = f.J;
    if (given(app, "--gamma")) c.params.gamma = f.gamma;
    if (given(app, "--g")) c.params.g = f.g;
    if (given(app, "--N")) c.params.N = f.N;
    if (given(app, "--kappa")) c.params.kappa = f.kappa;
    if (given(app, "--gamma0")) c.gamma0 = f.gamma0;
    if (given(app, "--bath-T")) c.bath_t = f.bath_t;
    if (given(app, "--delta-g")) c.delta_g = f.delta_g;
    if (given(app, "--max-distance")) c.max_distance = f.max_distance;
    if (given(app, "--workers")) c.workers = f.workers;
    if (given(app, "--T")) c.temperatures = parse_grid(f.T);
    if (given(app, "--times")) c.times = parse_grid(f.times);
    if (given(app, "--g-grid")) {
        c.g_grid = parse_grid(f.g_grid);
    } else if (given(app, "--g") &&
               (c.task == "quench" || c.task == "kernels" || c.figure >= 5)) {
        c.g_grid = {f.g};  // per-g tables follow a single --g
    }
    if (given(app, "--grid")) {
        if (f.grid == "antiperiodic")
            c.params.grid = MomentumGrid::antiperiodic;
        else if (f.grid == "periodic")
            c.params.grid = MomentumGrid::periodic;
        else
            throw ConfigError("--grid must be antiperiodic or periodic");
    }

    if (c.figure == 2) {
        if (given(app, "--gamma"))
            c.panels = {{f.gamma, range(0.0, 0.3, 0.005), {0.0}}};
        if (given(app, "--T"))
            for (auto& p : c.panels)
                p.temperatures = c.temperatures;
    }
    if (c.task == "oracle") {
        c.oracle_n = f.oracle_n;
        c.check = f.check;
    }

    c.out = f.out;
    if (!f.format.empty())
        c.format = f.format == "json" ? Format::json : Format::csv;
    else if (c.out.size() >= 5 && c.out.ends_with(".json"))
        c.format = Format::json;

    if (c.temperatures.empty() || c.g_grid.empty() || c.times.empty())
        throw ConfigError("grids must be nonempty");
    for (double t : c.temperatures)
        Thermo{t}.validate();
    if (c.delta_g <= 0.0)
        throw ConfigError("--delta-g must be positive");
    if (c.max_distance < 0)
        throw ConfigError("--max-distance must be nonnegative");
    c.params.validate();
    return c;
}

std::filesystem::path output_path(const std::string& out)
{
    std::filesystem::path p(out);
    if (const char* dir = std::getenv("QCOUNT_OUTPUT_DIR"); dir && *dir && p.is_relative())
        p = std::filesystem::path(dir) / p;
    return p;
}

void emit(const Report& report, const RunConfig& c, std::ostream& out)
{
    std::ostringstream buffer;
    write(report, c.format, buffer);
    if (c.out.empty()) {
        out << buffer.str();
        return;
    }
    const std::filesystem::path path = output_path(c.out);
    if (path.has_parent_path())
        std::filesystem::create_directories(path.parent_path());
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    file << buffer.str();
    if (!file)
        throw ConfigError("cannot write " + path.string());
}

}  // namespace

std::vector<double> parse_grid(std::string_view text)
{
    std::vector<double> xs;
    if (text.find(':') != std::string_view::npos) {
        std::vector<double> parts;
        std::size_t start = 0;
        for (;;) {
            const std::size_t colon = text.find(':', start);
            parts.push_back(parse_number(text.substr(start, colon - start)));
            if (colon == std::string_view::npos)
                break;
            start = colon + 1;
        }
        if (parts.size() != 3)
            throw ConfigError("range must be start:stop:step, got '" + std::string(text) + "'");
        if (!(parts[2] > 0.0) || parts[1] < parts[0])
            throw ConfigError("range needs step > 0 and stop >= start");
        if ((parts[1] - parts[0]) / parts[2] > 1e7)
            throw ConfigError("range has too many points");
        return range(parts[0], parts[1], parts[2]);
    }
    std::size_t start = 0;
    for (;;) {
        const std::size_t comma = text.find(',', start);
        xs.push_back(parse_number(text.substr(start, comma - start)));
        if (comma == std::string_view::npos)
            break;
        start = comma + 1;
    }
    return xs;
}

std::vector<std::pair<std::string, std::string>> RunConfig::describe() const
{
    std::vector<std::pair<std::string, std::string>> d{
        {"J", format_number(params.J)},
        {"gamma", format_number(params.gamma)},
        {"g", format_number(params.g)},
        {"N", std::to_string(params.N)},
        {"kappa", format_number(params.kappa)},
        {"grid", grid_name(params.grid)},
        {"T", join(temperatures)},
        {"g_grid", join(g_grid)},
        {"gamma0", format_number(gamma0)},
        {"bath_T", format_number(bath_t)},
        {"times", join(times)},
        {"delta_g", format_number(delta_g)},
        {"max_distance", std::to_string(max_distance)},
    };
    for (std::size_t i = 0; i < panels.size(); ++i) {
        const std::string key = "panel" + std::to_string(i + 1);
        d.emplace_back(key + ".gamma", format_number(panels[i].gamma));
        d.emplace_back(key + ".T", join(panels[i].temperatures));
        d.emplace_back(key + ".insets", join(panels[i].insets));
    }
    if (task == "oracle") {
        d.emplace_back("n", std::to_string(oracle_n));
        d.emplace_back("check", check);
    }
    d.emplace_back("format", format == Format::json ? "json" : "csv");
    return d;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Particle-counting statistics of the pairing fermion chain", "qcount"};
    app.set_version_flag("--version", "qcount 0.1.0");
    app.set_config("--config", "", "INI or TOML file with option values; flags override it");
    app.require_subcommand(1, 1);
    app.fallthrough();

    Flags f;
    app.add_option("--J", f.J, "tunneling energy J")->check(CLI::PositiveNumber);
    app.add_option("--gamma", f.gamma, "pairing strength gamma");
    app.add_option("--g", f.g, "transverse field g")->check(CLI::NonNegativeNumber);
    app.add_option("--N", f.N, "number of sites (even)");
    app.add_option("--kappa", f.kappa, "detector efficiency")->check(CLI::Range(0.0, 1.0));
    app.add_option("--T", f.T, "temperatures k_BT/J: list a,b,c or range start:stop:step");
    app.add_option("--g-grid", f.g_grid, "field grid: list or range");
    app.add_option("--gamma0", f.gamma0, "bath coupling rate (units of J)")->check(CLI::NonNegativeNumber);
    app.add_option("--bath-T", f.bath_t, "bath temperature k_BT/J")->check(CLI::NonNegativeNumber);
    app.add_option("--times", f.times, "coupling times J*t: list or range");
    app.add_option("--delta-g", f.delta_g, "finite-difference step in g");
    app.add_option("--grid", f.grid, "momentum grid: antiperiodic or periodic");
    app.add_option("--max-distance", f.max_distance, "largest kernel distance");
    app.add_option("--out", f.out, "output file (default: standard output)");
    app.add_option("--format", f.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--workers", f.workers, "worker threads (0: one per hardware thread)");

    CLI::App* fig = app.add_subcommand("fig", "reproduce the data of one figure");
    fig->add_option("figure", f.figure, "figure number 1-7")->required();
    app.add_subcommand("dist", "counting distributions and cumulants at each T");
    app.add_subcommand("gscan", "mean, variance and their g-derivatives at each T");
    app.add_subcommand("quench", "mean and variance during a bath quench, per g");
    app.add_subcommand("kernels", "real-space bath kernels, per g");
    CLI::App* oracle = app.add_subcommand("oracle", "run the independent oracle comparisons");
    oracle->add_option("--n", f.oracle_n, "sites for the exact-rational checks (<= 16)");
    std::vector<std::string> checks = oracle_check_names();
    checks.insert(checks.begin(), "all");
    oracle->add_option("--check", f.check, "all or one check name")->check(CLI::IsMember(checks));

    std::vector<const char*> argv;
    for (const std::string& a : args)
        argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : static_cast<int>(ExitCode::config);
    }

    try {
        const RunConfig config = resolve(app, *app.get_subcommands().front(), f);
        const Report report = execute(config);
        emit(report, config, out);
        if (report.failed) {
            err << "qcount: oracle check failed\n";
            return static_cast<int>(ExitCode::numerical);
        }
        return static_cast<int>(ExitCode::ok);
    } catch (const ConfigError& e) {
        err << "qcount: " << e.what() << '\n';
        return static_cast<int>(ExitCode::config);
    } catch (const InvalidArgument& e) {
        err << "qcount: " << e.what() << '\n';
        return static_cast<int>(ExitCode::config);
    } catch (const std::out_of_range& e) {
        err << "qcount: " << e.what() << '\n';
        return static_cast<int>(ExitCode::config);
    } catch (const std::exception& e) {
        err << "qcount: " << e.what() << '\n';
        return static_cast<int>(ExitCode::numerical);
    }
}

}  // namespace qcount::cli
