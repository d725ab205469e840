#include "hypspeed/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace hypspeed {

namespace {

using json = nlohmann::json;

double number(const json& j, const char* key) {
    if (!j.contains(key)) throw ValidationError(std::string("missing field '") + key + "'");
    const json& v = j.at(key);
    if (!v.is_number()) throw ValidationError(std::string("field '") + key + "' must be a number");
    return v.get<double>();
}

Complex point(const json& j, const char* key) {
    if (!j.contains(key)) return {};
    const json& v = j.at(key);
    if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number())
        throw ValidationError(std::string("field '") + key + "' must be [re, im]");
    return {v[0].get<double>(), v[1].get<double>()};
}

double column(const SpeedSample& s, const std::string& name) {
    if (name == "v") return s.v;
    if (name == "v_o") return s.v_o;
    if (name == "v_T") return s.v_T;
    if (name == "log_rho") return s.log_rho;
    if (name == "theta") return s.theta;
    throw std::invalid_argument("unknown column '" + name + "'");
}

}  // namespace

DomainSpec domain_from_json(const json& j) {
    if (!j.is_object()) throw ValidationError("domain spec must be a JSON object");
    if (!j.contains("type") || !j.at("type").is_string())
        throw ValidationError("domain spec needs a string field 'type'");
    const std::string type = j.at("type").get<std::string>();
    if (type == "halfplane") return build_domain(HalfPlaneRight{point(j, "p")});
    if (type == "strip") return build_domain(Strip{number(j, "r")});
    if (type == "sector") return build_domain(Sector{point(j, "p"), number(j, "alpha"), number(j, "beta")});
    if (type == "koebe") return build_domain(Koebe{point(j, "p")});
    if (type == "comb") {
        if (!j.contains("teeth") || !j.at("teeth").is_array())
            throw ValidationError("comb needs an array field 'teeth'");
        Comb c;
        for (const auto& t : j.at("teeth")) {
            if (!t.is_array() || t.size() != 2 || !t[0].is_number() || !t[1].is_number())
                throw ValidationError("each tooth must be [a, b]");
            c.teeth.push_back({t[0].get<double>(), t[1].get<double>()});
        }
        if (j.contains("extent")) c.extent = number(j, "extent");
        return build_domain(c);
    }
    throw ValidationError("unknown domain type '" + type + "'");
}

DomainSpec domain_from_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ValidationError(std::string("malformed JSON: ") + e.what());
    }
    return domain_from_json(j);
}

nlohmann::ordered_json domain_to_json(const DomainSpec& domain) {
    nlohmann::ordered_json j;
    j["type"] = domain.name();
    auto pt = [](Complex p) { return nlohmann::ordered_json::array({p.real(), p.imag()}); };
    switch (domain.kind()) {
        case DomainKind::HalfPlaneRight: j["p"] = pt(domain.as<HalfPlaneRight>().p); break;
        case DomainKind::Strip: j["r"] = domain.as<Strip>().r; break;
        case DomainKind::Sector: {
            const auto& s = domain.as<Sector>();
            j["p"] = pt(s.p);
            j["alpha"] = s.alpha;
            j["beta"] = s.beta;
            break;
        }
        case DomainKind::Koebe: j["p"] = pt(domain.as<Koebe>().p); break;
        case DomainKind::Comb: {
            auto teeth = nlohmann::ordered_json::array();
            for (const auto& t : domain.as<Comb>().teeth) teeth.push_back({t.a, t.b});
            j["teeth"] = teeth;
            j["extent"] = domain.extent();
            break;
        }
    }
    return j;
}

std::string format_number(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

void write_speeds_csv(std::ostream& os, std::span<const SpeedSample> samples) {
    os << "t,v,v_o,v_T,log_rho,theta\n";
    for (const auto& s : samples) {
        os << format_number(s.t) << ',' << format_number(s.v) << ',' << format_number(s.v_o) << ','
           << format_number(s.v_T) << ',' << format_number(s.log_rho) << ','
           << format_number(s.theta) << '\n';
    }
}

void write_comb_ratios_csv(std::ostream& os, std::span<const CombRatio> ratios) {
    os << "j,lower,g,ratio,restricted,restricted_closed_form\n";
    for (const auto& r : ratios) {
        os << r.j << ',' << format_number(r.lower) << ',' << format_number(r.g_value) << ','
           << format_number(r.ratio) << ',' << format_number(r.restricted) << ','
           << format_number(r.restricted_closed_form) << '\n';
    }
}

nlohmann::ordered_json comb_to_json(const CombConstruction& cc) {
    nlohmann::ordered_json j;
    auto teeth = nlohmann::ordered_json::array();
    for (std::size_t k = 0; k < cc.a.size(); ++k) teeth.push_back({cc.a[k], cc.b[k]});
    j["teeth"] = teeth;
    j["x"] = cc.x;
    j["g"] = cc.g.name();
    j["extent"] = cc.extent;
    return j;
}

nlohmann::ordered_json fit_to_json(const AsymptoticFit& fit) {
    nlohmann::ordered_json j;
    j["series"] = to_string(fit.series);
    j["basis"] = to_string(fit.basis);
    j["coefficient"] = fit.coefficient;
    j["intercept"] = fit.intercept;
    j["sup_residual"] = fit.sup_residual;
    j["window"] = {fit.t_lo, fit.t_hi};
    j["samples"] = fit.samples;
    return j;
}

std::string render_svg(std::span<const SpeedSample> samples, const std::vector<std::string>& columns,
                       const std::string& title) {
    constexpr double W = 720, H = 440, left = 64, right = 150, top = 40, bottom = 48;
    static const char* colors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e"};

    std::vector<const SpeedSample*> pts;
    for (const auto& s : samples)
        if (s.t > 0.0) pts.push_back(&s);
    if (pts.size() < 2) throw std::invalid_argument("plot needs at least two samples with t > 0");

    const double x0 = std::log10(pts.front()->t), x1 = std::log10(pts.back()->t);
    double y0 = INFINITY, y1 = -INFINITY;
    for (const auto& c : columns)
        for (const auto* s : pts) {
            y0 = std::min(y0, column(*s, c));
            y1 = std::max(y1, column(*s, c));
        }
    if (y1 <= y0) y1 = y0 + 1.0;
    const double xs = x1 > x0 ? (W - left - right) / (x1 - x0) : 1.0;
    const double ys = (H - top - bottom) / (y1 - y0);
    auto px = [&](double t) { return left + (std::log10(t) - x0) * xs; };
    auto py = [&](double v) { return H - bottom - (v - y0) * ys; };

    std::ostringstream os;
    os.setf(std::ios::fixed);
    os.precision(2);
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H
       << "\" viewBox=\"0 0 " << W << ' ' << H << "\">\n";
    os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    os << "<text x=\"" << left << "\" y=\"24\" font-family=\"sans-serif\" font-size=\"15\">" << title
       << "</text>\n";
    os << "<line x1=\"" << left << "\" y1=\"" << H - bottom << "\" x2=\"" << W - right << "\" y2=\""
       << H - bottom << "\" stroke=\"black\"/>\n";
    os << "<line x1=\"" << left << "\" y1=\"" << top << "\" x2=\"" << left << "\" y2=\"" << H - bottom
       << "\" stroke=\"black\"/>\n";
    for (int d = static_cast<int>(std::ceil(x0)); d <= static_cast<int>(std::floor(x1)); ++d) {
        const double x = left + (d - x0) * xs;
        os << "<line x1=\"" << x << "\" y1=\"" << H - bottom << "\" x2=\"" << x << "\" y2=\""
           << H - bottom + 5 << "\" stroke=\"black\"/>\n";
        os << "<text x=\"" << x << "\" y=\"" << H - bottom + 20
           << "\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"middle\">1e" << d
           << "</text>\n";
    }
    for (int k = 0; k <= 4; ++k) {
        const double v = y0 + (y1 - y0) * k / 4.0;
        os << "<text x=\"" << left - 6 << "\" y=\"" << py(v) + 4
           << "\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"end\">"
           << format_number(std::round(v * 1000.0) / 1000.0) << "</text>\n";
    }
    os << "<text x=\"" << (left + W - right) / 2 << "\" y=\"" << H - 8
       << "\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"middle\">t (log scale)</text>\n";
    for (std::size_t c = 0; c < columns.size(); ++c) {
        const char* color = colors[c % 5];
        os << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
        for (const auto* s : pts) os << px(s->t) << ',' << py(column(*s, columns[c])) << ' ';
        os << "\"/>\n";
        const double ly = top + 18.0 * c + 10;
        os << "<line x1=\"" << W - right + 16 << "\" y1=\"" << ly << "\" x2=\"" << W - right + 40
           << "\" y2=\"" << ly << "\" stroke=\"" << color << "\" stroke-width=\"2\"/>\n";
        os << "<text x=\"" << W - right + 46 << "\" y=\"" << ly + 4
           << "\" font-family=\"sans-serif\" font-size=\"12\">" << columns[c] << "</text>\n";
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace hypspeed
