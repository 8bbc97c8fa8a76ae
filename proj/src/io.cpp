#include "logharm/io.hpp"

#include <cmath>
#include <nlohmann/json.hpp>

#include "logharm/builtins.hpp"

namespace logharm::io {

using ordered_json = nlohmann::ordered_json;

namespace {

Complex complex_from_entry(const ordered_json& entry, const std::string& path) {
    if (entry.is_number()) return {entry.get<double>(), 0.0};
    if (entry.is_array() && entry.size() == 2 && entry[0].is_number() && entry[1].is_number()) {
        return {entry[0].get<double>(), entry[1].get<double>()};
    }
    throw SpecParseError(path + ": expected a number or an [re, im] pair");
}

std::vector<Complex> coeff_list(const ordered_json& node, const std::string& path) {
    if (!node.is_array() || node.empty()) {
        throw SpecParseError(path + ": expected a nonempty coefficient array");
    }
    std::vector<Complex> out;
    out.reserve(node.size());
    for (std::size_t i = 0; i < node.size(); ++i) {
        out.push_back(complex_from_entry(node[i], path + "[" + std::to_string(i) + "]"));
    }
    return out;
}

// "name" or "name(a,b,...)" with numeric args.
struct BuiltinCall {
    std::string name;
    std::vector<double> args;
};

BuiltinCall parse_builtin(const std::string& text, const std::string& path) {
    const auto open = text.find('(');
    if (open == std::string::npos) return {text, {}};
    if (text.back() != ')') throw SpecParseError(path + ": unbalanced builtin call");
    BuiltinCall call;
    call.name = text.substr(0, open);
    std::string args = text.substr(open + 1, text.size() - open - 2);
    std::size_t pos = 0;
    while (pos < args.size()) {
        std::size_t next = args.find(',', pos);
        if (next == std::string::npos) next = args.size();
        try {
            call.args.push_back(std::stod(args.substr(pos, next - pos)));
        } catch (...) {
            throw SpecParseError(path + ": bad numeric argument in builtin call");
        }
        pos = next + 1;
    }
    return call;
}

TaylorSeries factor_series(const std::string& source, const std::vector<Complex>& coeffs,
                           int order, double radius, const std::string& path) {
    if (source == "@list") {
        std::vector<Complex> padded = coeffs;
        if (static_cast<int>(padded.size()) - 1 > order) {
            throw SpecParseError(path + ": coefficient list exceeds the truncation order");
        }
        padded.resize(static_cast<std::size_t>(order) + 1, Complex{0.0, 0.0});
        return TaylorSeries(std::move(padded), radius);
    }
    const BuiltinCall call = parse_builtin(source, path);
    if (call.name == "one" && call.args.empty()) return builtin::one(order, radius);
    if (call.name == "koebe_factor" && call.args.size() == 1) {
        return builtin::koebe_factor(call.args[0], order, radius);
    }
    if (call.name == "exp" && (call.args.size() == 1 || call.args.size() == 2)) {
        const Complex c{call.args[0], call.args.size() == 2 ? call.args[1] : 0.0};
        return builtin::exp_cz(c, order, radius);
    }
    if (call.name == "poly" && !call.args.empty()) {
        std::vector<Complex> v(call.args.size() + 1);
        v[0] = {1.0, 0.0};
        for (std::size_t i = 0; i < call.args.size(); ++i) v[i + 1] = {call.args[i], 0.0};
        if (static_cast<int>(v.size()) - 1 > order) {
            throw SpecParseError(path + ": poly degree exceeds the truncation order");
        }
        v.resize(static_cast<std::size_t>(order) + 1, Complex{0.0, 0.0});
        return TaylorSeries(std::move(v), radius);
    }
    throw SpecParseError(path + ": unknown builtin '" + source + "'");
}

TaylorSeries psi_series(const MapSpec& spec, int order, double radius) {
    const std::string& source = *spec.psi_source;
    if (source == "@list") {
        std::vector<Complex> padded = spec.psi_coeffs;
        padded.resize(static_cast<std::size_t>(order) + 1, Complex{0.0, 0.0});
        return TaylorSeries(std::move(padded), radius);
    }
    if (source == "identity") return builtin::schwarz_identity(order, radius);
    if (source == "mobius") return builtin::schwarz_mobius(order, radius);
    if (source == "zero") return builtin::schwarz_zero(order, radius);
    throw SpecParseError("psi: unknown builtin '" + source + "'");
}

ordered_json complex_json(Complex z) {
    return ordered_json{{"re", z.real()}, {"im", z.imag()}};
}

Complex complex_from_json(const ordered_json& node, const std::string& path) {
    if (!node.is_object() || !node.contains("re") || !node.contains("im")) {
        throw SpecParseError(path + ": expected {re, im}");
    }
    return {node["re"].get<double>(), node["im"].get<double>()};
}

ordered_json series_json(const TaylorSeries& s) {
    ordered_json coeffs = ordered_json::array();
    for (const Complex& c : s.coeffs()) {
        coeffs.push_back(ordered_json::array({c.real(), c.imag()}));
    }
    return ordered_json{{"coeffs", std::move(coeffs)}, {"ref_radius", s.ref_radius()}};
}

TaylorSeries series_from_json(const ordered_json& node, const std::string& path) {
    if (!node.is_object() || !node.contains("coeffs") || !node.contains("ref_radius")) {
        throw SpecParseError(path + ": expected {coeffs, ref_radius}");
    }
    std::vector<Complex> coeffs = coeff_list(node["coeffs"], path + ".coeffs");
    return TaylorSeries(std::move(coeffs), node["ref_radius"].get<double>());
}

ordered_json grid_json(const SampleGrid& grid) {
    return ordered_json{{"radii", grid.radii},
                        {"angles_per_ring", grid.angles_per_ring},
                        {"includes_origin", grid.includes_origin}};
}

ordered_json report_json_node(const VerificationReport& r) {
    ordered_json node;
    node["theorem_id"] = theorem_name(r.theorem_id);
    node["passed"] = r.passed;
    node["worst_margin"] = r.worst_margin;
    node["witness"] = complex_json(r.witness_point);
    node["grid"] = grid_json(r.grid);
    node["truncation_order"] = r.truncation_order;
    ordered_json metrics;
    for (const auto& [key, value] : r.metrics) metrics[key] = value;  // std::map: sorted keys
    node["metrics"] = std::move(metrics);
    node["note"] = r.note;
    return node;
}

}  // namespace

MapSpec parse_map_spec(const std::string& text) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw SpecParseError(std::string("spec: not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw SpecParseError("spec: top level must be an object");

    static const char* known[] = {"beta_re", "beta_im", "alpha", "h", "g",
                                  "psi",     "radius",  "order"};
    for (const auto& [key, _] : doc.items()) {
        bool ok = false;
        for (const char* k : known) ok = ok || key == k;
        if (!ok) throw SpecParseError(key + ": unknown field");
    }

    MapSpec spec;
    const auto number_field = [&](const char* key, double fallback) {
        if (!doc.contains(key)) return fallback;
        if (!doc[key].is_number()) throw SpecParseError(std::string(key) + ": expected a number");
        return doc[key].get<double>();
    };
    spec.beta = {number_field("beta_re", 0.0), number_field("beta_im", 0.0)};
    if (!(spec.beta.real() > -0.5)) {
        throw SpecParseError("beta_re: Re(beta) must exceed -1/2");
    }
    if (doc.contains("alpha")) {
        if (!doc["alpha"].is_number()) throw SpecParseError("alpha: expected a number");
        spec.alpha = doc["alpha"].get<double>();
        if (!(*spec.alpha >= 0.0 && *spec.alpha < 1.0)) {
            throw SpecParseError("alpha: must lie in [0, 1)");
        }
    }
    if (doc.contains("order")) {
        if (!doc["order"].is_number_integer() || doc["order"].get<int>() < 1 ||
            doc["order"].get<int>() > 4096) {
            throw SpecParseError("order: expected an integer in [1, 4096]");
        }
        spec.order = doc["order"].get<int>();
    }
    if (doc.contains("radius")) {
        if (!doc["radius"].is_number()) throw SpecParseError("radius: expected a number");
        spec.radius = doc["radius"].get<double>();
        if (!(*spec.radius > 0.0 && *spec.radius <= 1.0)) {
            throw SpecParseError("radius: must lie in (0, 1]");
        }
    }
    if (doc.contains("g")) {
        if (doc["g"].is_string()) {
            spec.g_source = doc["g"].get<std::string>();
        } else {
            spec.g_source = "@list";
            spec.g_coeffs = coeff_list(doc["g"], "g");
            if (spec.g_coeffs[0] != Complex{1.0, 0.0}) {
                throw SpecParseError("g[0]: g(0) must equal 1 exactly");
            }
        }
    }
    if (doc.contains("h") && doc.contains("psi")) {
        throw SpecParseError("h: exclusive with psi (give one of the two)");
    }
    if (doc.contains("h")) {
        if (doc["h"].is_string()) {
            spec.h_source = doc["h"].get<std::string>();
        } else {
            spec.h_source = "@list";
            spec.h_coeffs = coeff_list(doc["h"], "h");
            if (spec.h_coeffs[0] == Complex{0.0, 0.0}) {
                throw SpecParseError("h[0]: h(0) must be nonzero");
            }
        }
    } else if (doc.contains("psi")) {
        if (doc["psi"].is_string()) {
            spec.psi_source = doc["psi"].get<std::string>();
        } else {
            spec.psi_source = "@list";
            spec.psi_coeffs = coeff_list(doc["psi"], "psi");
            if (spec.psi_coeffs[0] != Complex{0.0, 0.0}) {
                throw SpecParseError("psi[0]: a Schwarz candidate needs psi(0) = 0");
            }
        }
        if (!spec.alpha) {
            throw SpecParseError("alpha: required when constructing from psi");
        }
    } else {
        throw SpecParseError("h: one of h or psi is required");
    }
    return spec;
}

LogHarmonicMap build_map(const MapSpec& spec) {
    if (spec.psi_source) {
        const bool mobius_like = *spec.psi_source == "mobius";
        const double radius =
            spec.radius.value_or(mobius_like ? builtin::kMobiusDefaultRadius
                                             : TaylorSeries::kDefaultRadius);
        const TaylorSeries psi = psi_series(spec, spec.order, std::max(radius, 0.95));
        const TaylorSeries g =
            factor_series(spec.g_source, spec.g_coeffs, spec.order, std::max(radius, 0.95), "g");
        const SchwarzWitness witness =
            schwarz_check(psi, radius, SampleGrid::up_to(radius, 0.05, 720));
        return construct_starlike(g, witness, *spec.alpha, spec.beta);
    }
    const double radius = spec.radius.value_or(TaylorSeries::kDefaultRadius);
    const TaylorSeries h = factor_series(*spec.h_source, spec.h_coeffs, spec.order, radius, "h");
    const TaylorSeries g = factor_series(spec.g_source, spec.g_coeffs, spec.order, radius, "g");
    try {
        return LogHarmonicMap(spec.beta, h, g, spec.alpha);
    } catch (const InvalidMap& e) {
        throw SpecParseError(std::string("spec: ") + e.what());
    }
}

std::string map_to_json(const LogHarmonicMap& m) {
    ordered_json node;
    node["beta"] = complex_json(m.beta());
    if (m.alpha()) {
        node["alpha"] = *m.alpha();
    } else {
        node["alpha"] = nullptr;
    }
    node["h"] = series_json(m.h());
    node["g"] = series_json(m.g());
    node["hg_normalized"] = m.hg_normalized();
    return node.dump(2) + "\n";
}

LogHarmonicMap map_from_json(const std::string& text) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw SpecParseError(std::string("map: not valid JSON: ") + e.what());
    }
    for (const char* key : {"beta", "h", "g"}) {
        if (!doc.contains(key)) throw SpecParseError(std::string(key) + ": missing field");
    }
    std::optional<double> alpha;
    if (doc.contains("alpha") && !doc["alpha"].is_null()) {
        alpha = doc["alpha"].get<double>();
    }
    try {
        return LogHarmonicMap(complex_from_json(doc["beta"], "beta"),
                              series_from_json(doc["h"], "h"), series_from_json(doc["g"], "g"),
                              alpha);
    } catch (const InvalidMap& e) {
        throw SpecParseError(std::string("map: ") + e.what());
    }
}

std::string report_to_json(const VerificationReport& report) {
    return report_json_node(report).dump(2) + "\n";
}

std::string reports_to_json(const std::vector<VerificationReport>& reports) {
    ordered_json node;
    bool all = true;
    ordered_json list = ordered_json::array();
    for (const VerificationReport& r : reports) {
        all = all && r.passed;
        list.push_back(report_json_node(r));
    }
    node["all_passed"] = all;
    node["reports"] = std::move(list);
    return node.dump(2) + "\n";
}

std::string estimate_to_json(const InjectivityEstimate& est, int samples_per_ring) {
    ordered_json node;
    node["lower"] = est.lower;
    node["upper"] = est.upper;
    node["resolution"] = est.resolution;
    node["samples_per_ring"] = samples_per_ring;
    if (est.collision) {
        ordered_json c;
        c["z1"] = complex_json(est.collision->z1);
        c["z2"] = complex_json(est.collision->z2);
        c["image_distance"] = est.collision->image_distance;
        node["collision"] = std::move(c);
    } else {
        node["collision"] = nullptr;
    }
    return node.dump(2) + "\n";
}

}  // namespace logharm::io
