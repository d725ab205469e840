#include "hypspeed/io.hpp"
#include "hypspeed/verify.hpp"

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace hypspeed;

namespace {

std::string speeds_json(const std::string& domain, double t_min, double t_max, int points) {
    const auto rows = sample_speeds(make_semigroup(domain_from_text(domain)), make_grid(t_min, t_max, points));
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    for (const auto& s : rows)
        out.push_back({{"t", s.t}, {"v", s.v}, {"v_o", s.v_o}, {"v_T", s.v_T},
                       {"log_rho", s.log_rho}, {"theta", s.theta}});
    return out.dump();
}

std::string fit_json(const std::string& domain, const std::string& series, const std::string& basis,
                     double t_lo, double t_hi, double t_min, double t_max, int points) {
    const auto rows = sample_speeds(make_semigroup(domain_from_text(domain)), make_grid(t_min, t_max, points));
    return fit_to_json(fit_asymptotic(rows, series_from_string(series), basis_from_string(basis), t_lo, t_hi))
        .dump();
}

std::string comb_json(const std::string& g, double exponent, const std::vector<double>& a, int J) {
    GSpec gs = g == "log1p" ? GSpec::log1p()
               : g == "sqrt" ? GSpec::sqrt()
               : g == "pow"  ? GSpec::pow(exponent)
                             : throw ValidationError("unknown g '" + g + "' (log1p, sqrt, pow)");
    const ASpec as = a.empty() ? ASpec::linear() : ASpec::explicit_list(a);
    const CombConstruction cc = build_comb(gs, as, J);
    auto j = comb_to_json(cc);
    auto rows = nlohmann::ordered_json::array();
    for (const auto& r : verify_comb(cc))
        rows.push_back({{"j", r.j}, {"lower", r.lower}, {"g", r.g_value}, {"ratio", r.ratio},
                        {"restricted", r.restricted}, {"restricted_closed_form", r.restricted_closed_form}});
    j["ratios"] = rows;
    return j.dump();
}

std::string svg(const std::string& domain, const std::vector<std::string>& columns, double t_min, double t_max,
                int points) {
    const DomainSpec d = domain_from_text(domain);
    const auto rows = sample_speeds(make_semigroup(d), make_grid(t_min, t_max, points));
    return render_svg(rows, columns, domain_to_json(d).dump());
}

}  // namespace

PYBIND11_MODULE(_hypspeed, m) {
    py::register_exception<UnsupportedError>(m, "UnsupportedError", PyExc_NotImplementedError);
    py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);

    m.def("omega", [](Complex z, Complex w) { return omega(DiscPoint(z), DiscPoint(w)); });
    m.def("k_half", [](Complex a, Complex b) { return k_half(a, b); });
    m.def("cayley", &cayley_map);
    m.def("cayley_inv", &cayley_inv_map);
    m.def("normalize_domain", [](const std::string& d) { return domain_to_json(domain_from_text(d)).dump(); });
    m.def("delta", [](const std::string& d, Complex p) { return delta(domain_from_text(d), p); });
    m.def("k_domain", [](const std::string& d, Complex a, Complex b) { return k_domain(domain_from_text(d), a, b); });
    m.def("speeds_json", &speeds_json);
    m.def("fit_json", &fit_json);
    m.def("comb_json", &comb_json);
    m.def("svg", &svg);
    m.def("suite_names", &suite_names);
    m.def("experiment_names", &experiment_names);
    m.def("run_suite_json", [](const std::string& name, long long samples, std::uint64_t seed, double tol) {
        return to_json(run_suite(name, samples, seed, tol)).dump();
    });
    m.def("experiment_json", [](const std::string& name) { return run_experiment(name).dump(); });
}
