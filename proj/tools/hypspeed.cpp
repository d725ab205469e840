// hypspeed: speeds of semigroup orbits, property suites, fits, combs and plots.
//
// Exit status: 0 success, 1 suite violations, 2 malformed input,
// 3 unsupported domain/operation pairing, 4 internal error.

#include "hypspeed/io.hpp"
#include "hypspeed/verify.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace hypspeed;

namespace {

constexpr int kExitViolations = 1;
constexpr int kExitMalformed = 2;
constexpr int kExitUnsupported = 3;
constexpr int kExitInternal = 4;

struct GridOptions {
    double t_min = 1.0;
    double t_max = 1e8;
    int points = 512;
};

void add_grid(CLI::App* cmd, GridOptions& g) {
    cmd->add_option("--t-min", g.t_min, "first sample time (0 selects a linear grid)")->capture_default_str();
    cmd->add_option("--t-max", g.t_max, "last sample time")->capture_default_str();
    cmd->add_option("--points", g.points, "number of grid points")->capture_default_str();
}

std::string read_domain_text(const std::string& arg) {
    const auto first = arg.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && arg[first] == '{') return arg;
    std::ifstream in(arg);
    if (!in) throw ValidationError("--domain is neither inline JSON nor a readable file: " + arg);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

DomainSpec load_domain(const std::string& arg) { return domain_from_text(read_domain_text(arg)); }

class Output {
public:
    explicit Output(const std::string& path) {
        if (path.empty() || path == "-") return;
        file_.open(path, std::ios::binary);
        if (!file_) throw ValidationError("cannot open output file: " + path);
    }
    std::ostream& stream() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }

private:
    std::ofstream file_;
};

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    for (std::string item; std::getline(ss, item, ',');)
        if (!item.empty()) out.push_back(item);
    return out;
}

double parse_number(const std::string& s, const std::string& what) {
    try {
        std::size_t used = 0;
        const double v = std::stod(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw ValidationError("invalid number '" + s + "' in " + what);
    }
}

// log1p | sqrt | pow:P | table:PATH (CSV rows t,g)
GSpec parse_g(const std::string& s) {
    if (s == "log1p") return GSpec::log1p();
    if (s == "sqrt") return GSpec::sqrt();
    if (s.rfind("pow:", 0) == 0) return GSpec::pow(parse_number(s.substr(4), "--g"));
    if (s.rfind("table:", 0) == 0) {
        std::ifstream in(s.substr(6));
        if (!in) throw ValidationError("cannot read g table: " + s.substr(6));
        std::vector<std::pair<double, double>> rows;
        for (std::string line; std::getline(in, line);) {
            const auto cells = split_list(line);
            if (cells.empty()) continue;
            if (cells.size() != 2) throw ValidationError("g table rows must be 't,g'");
            rows.emplace_back(parse_number(cells[0], "g table"), parse_number(cells[1], "g table"));
        }
        return GSpec::custom(std::move(rows));
    }
    throw ValidationError("unknown --g '" + s + "' (log1p, sqrt, pow:P, table:PATH)");
}

// linear | geometric:R | list:A1,A2,...
ASpec parse_a(const std::string& s) {
    if (s == "linear") return ASpec::linear();
    if (s.rfind("geometric:", 0) == 0) return ASpec::geometric(parse_number(s.substr(10), "--a"));
    if (s.rfind("list:", 0) == 0) {
        std::vector<double> v;
        for (const auto& item : split_list(s.substr(5))) v.push_back(parse_number(item, "--a"));
        return ASpec::explicit_list(std::move(v));
    }
    throw ValidationError("unknown --a '" + s + "' (linear, geometric:R, list:A1,A2,...)");
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ValidationError("cannot open output file: " + path);
    out << text;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Speeds of non-elliptic semigroups of holomorphic self-maps of the unit disc"};
    app.require_subcommand(1);

    std::string domain_arg, output;

    GridOptions speeds_grid;
    std::string speeds_format = "csv";
    auto* speeds = app.add_subcommand("speeds", "sample v, v_o, v_T along the orbit of 0");
    speeds->add_option("--domain", domain_arg, "domain JSON, inline or a file path")->required();
    add_grid(speeds, speeds_grid);
    speeds->add_option("--format", speeds_format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    speeds->add_option("--output,-o", output, "output file (default stdout)");

    std::string suite = "all", experiment;
    long long samples = 0;
    std::uint64_t seed = 42;
    double tol = 1e-9;
    auto* verify = app.add_subcommand("verify", "run seeded property suites and report JSON");
    verify->add_option("--suite", suite, "suite name or 'all'")->capture_default_str();
    verify->add_option("--samples", samples, "sample count (0 selects the suite default)")
        ->capture_default_str();
    verify->add_option("--seed", seed, "random seed")->envname("HYPSPEED_SEED")->capture_default_str();
    verify->add_option("--tol", tol, "slack for inequalities")->capture_default_str();
    verify->add_option("--experiment", experiment, "emit data for an open-question preset (q1..q5)");
    verify->add_option("--output,-o", output, "output file (default stdout)");
    verify->add_flag_callback("--list", [] {
        for (const auto& n : suite_names()) std::cout << n << '\n';
        for (const auto& n : experiment_names()) std::cout << n << " (experiment)\n";
        std::exit(0);
    }, "list suites and experiments");

    GridOptions fit_grid;
    std::string series = "v", basis = "log_t", fit_format = "text";
    double window_lo = 1e6, window_hi = 1e8;
    auto* fit = app.add_subcommand("fit", "least-squares asymptotic coefficient of a speed series");
    fit->add_option("--domain", domain_arg, "domain JSON, inline or a file path")->required();
    add_grid(fit, fit_grid);
    fit->add_option("--series", series, "v, v_o or v_T")
        ->check(CLI::IsMember({"v", "v_o", "v_T"}))
        ->capture_default_str();
    fit->add_option("--basis", basis, "log_t or t")->check(CLI::IsMember({"log_t", "t"}))->capture_default_str();
    fit->add_option("--window-lo", window_lo, "window start")->capture_default_str();
    fit->add_option("--window-hi", window_hi, "window end")->capture_default_str();
    fit->add_option("--format", fit_format, "text or json")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    fit->add_option("--output,-o", output, "output file (default stdout)");

    std::string g_arg = "log1p", a_arg = "linear", comb_format = "json", csv_out;
    int J = 10;
    auto* comb = app.add_subcommand("comb", "build a comb beating g infinitely often and tabulate ratios");
    comb->add_option("--g", g_arg, "log1p, sqrt, pow:P or table:PATH")->capture_default_str();
    comb->add_option("--a", a_arg, "linear, geometric:R or list:A1,A2,...")->capture_default_str();
    comb->add_option("--J", J, "number of constructed teeth")->capture_default_str();
    comb->add_option("--format", comb_format, "json (construction) or csv (ratio table) on stdout")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    comb->add_option("--output,-o", output, "construction JSON file");
    comb->add_option("--csv", csv_out, "ratio table CSV file");

    GridOptions plot_grid;
    std::string columns = "v,v_o,v_T", title;
    auto* plot = app.add_subcommand("plot", "SVG line chart of speed columns against log t");
    plot->add_option("--domain", domain_arg, "domain JSON, inline or a file path")->required();
    add_grid(plot, plot_grid);
    plot->add_option("--columns", columns, "comma-separated subset of v,v_o,v_T,log_rho,theta")
        ->capture_default_str();
    plot->add_option("--title", title, "chart title (default: the domain JSON)");
    plot->add_option("--output,-o", output, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitMalformed;
    }

    try {
        if (speeds->parsed()) {
            const DomainSpec domain = load_domain(domain_arg);
            const auto grid = make_grid(speeds_grid.t_min, speeds_grid.t_max, speeds_grid.points);
            const auto rows = sample_speeds(make_semigroup(domain), grid);
            Output out(output);
            if (speeds_format == "csv") {
                write_speeds_csv(out.stream(), rows);
            } else {
                nlohmann::ordered_json j;
                j["domain"] = domain_to_json(domain);
                auto arr = nlohmann::ordered_json::array();
                for (const auto& s : rows)
                    arr.push_back({{"t", s.t}, {"v", s.v}, {"v_o", s.v_o}, {"v_T", s.v_T},
                                   {"log_rho", s.log_rho}, {"theta", s.theta}});
                j["samples"] = arr;
                out.stream() << j.dump(2) << '\n';
            }
            return 0;
        }

        if (verify->parsed()) {
            Output out(output);
            if (!experiment.empty()) {
                out.stream() << run_experiment(experiment).dump(2) << '\n';
                return 0;
            }
            if (suite == "all") {
                auto arr = nlohmann::ordered_json::array();
                bool ok = true;
                for (const auto& name : suite_names()) {
                    const SuiteReport r = run_suite(name, samples, seed, tol);
                    ok = ok && r.passed();
                    arr.push_back(to_json(r));
                }
                out.stream() << arr.dump(2) << '\n';
                return ok ? 0 : kExitViolations;
            }
            const SuiteReport r = run_suite(suite, samples, seed, tol);
            out.stream() << to_json(r).dump(2) << '\n';
            return r.passed() ? 0 : kExitViolations;
        }

        if (fit->parsed()) {
            const DomainSpec domain = load_domain(domain_arg);
            const auto grid = make_grid(fit_grid.t_min, fit_grid.t_max, fit_grid.points);
            const auto rows = sample_speeds(make_semigroup(domain), grid);
            const AsymptoticFit f =
                fit_asymptotic(rows, series_from_string(series), basis_from_string(basis), window_lo, window_hi);
            Output out(output);
            if (fit_format == "json") {
                out.stream() << fit_to_json(f).dump(2) << '\n';
            } else {
                out.stream() << "coefficient " << format_number(f.coefficient) << '\n'
                             << "sup_residual " << format_number(f.sup_residual) << '\n';
            }
            return 0;
        }

        if (comb->parsed()) {
            const CombConstruction cc = build_comb(parse_g(g_arg), parse_a(a_arg), J);
            const auto ratios = verify_comb(cc);
            const std::string json = comb_to_json(cc).dump(2) + "\n";
            std::ostringstream csv;
            write_comb_ratios_csv(csv, ratios);
            if (!output.empty()) write_text_file(output, json);
            if (!csv_out.empty()) write_text_file(csv_out, csv.str());
            if (output.empty() && csv_out.empty()) std::cout << (comb_format == "json" ? json : csv.str());
            bool ok = true;
            for (const auto& r : ratios) ok = ok && r.ratio >= r.j / 4.0 - 1e-9;
            return ok ? 0 : kExitViolations;
        }

        if (plot->parsed()) {
            const DomainSpec domain = load_domain(domain_arg);
            const auto grid = make_grid(plot_grid.t_min, plot_grid.t_max, plot_grid.points);
            const auto rows = sample_speeds(make_semigroup(domain), grid);
            const auto cols = split_list(columns);
            if (cols.empty()) throw ValidationError("--columns is empty");
            Output out(output);
            out.stream() << render_svg(rows, cols, title.empty() ? domain_to_json(domain).dump() : title);
            return 0;
        }
    } catch (const UnsupportedError& e) {
        std::cerr << "unsupported: " << e.what() << '\n';
        return kExitUnsupported;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid input: " << e.what() << '\n';
        return kExitMalformed;
    } catch (const std::domain_error& e) {
        std::cerr << "invalid input: " << e.what() << '\n';
        return kExitMalformed;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInternal;
    }
    return 0;
}
