// logharm: build starlike log-harmonic maps, certify the theorems that make
// them tick, render disc images, and estimate injectivity radii.
//
// Exit codes: 0 all checks passed, 1 a certification failed, 2 usage or
// input error. LOGHARM_THREADS caps the sweep parallelism.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "logharm/analysis.hpp"
#include "logharm/geometry.hpp"
#include "logharm/io.hpp"

namespace {

using namespace logharm;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw SpecParseError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& bytes) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw SpecParseError("cannot write '" + path + "'");
    out << bytes;
}

// "--grid r1,r2,.../angles"
SampleGrid parse_grid_flag(const std::string& text) {
    SampleGrid grid;
    const auto slash = text.find('/');
    const std::string radii_part = text.substr(0, slash);
    std::istringstream radii(radii_part);
    std::string tok;
    while (std::getline(radii, tok, ',')) {
        grid.radii.push_back(std::stod(tok));
    }
    if (slash != std::string::npos) {
        grid.angles_per_ring = std::stoi(text.substr(slash + 1));
    }
    grid.validate();
    return grid;
}

SampleGrid grid_for(const LogHarmonicMap& m, const std::string& grid_flag) {
    if (!grid_flag.empty()) return parse_grid_flag(grid_flag);
    // default grid, clipped to the map's trusted radius
    const double r = std::min(0.95, m.ref_radius());
    return SampleGrid::up_to(r, 0.05, 720);
}

int cmd_construct(const std::string& spec_path, const std::string& out_path, int order_override) {
    io::MapSpec spec = io::parse_map_spec(read_file(spec_path));
    if (order_override > 0) spec.order = order_override;
    const LogHarmonicMap map = io::build_map(spec);
    write_file(out_path, io::map_to_json(map));
    std::cout << "wrote " << out_path << " (order " << map.h().order() << ", ref_radius "
              << map.ref_radius() << ")\n";
    return 0;
}

int cmd_verify(const std::string& map_path, const std::string& theorems,
               const std::string& grid_flag, double alpha_flag, double tol,
               const std::string& out_path) {
    const LogHarmonicMap map = io::map_from_json(read_file(map_path));
    const SampleGrid grid = grid_for(map, grid_flag);

    double alpha = alpha_flag;
    if (alpha < 0.0) {
        if (!map.alpha()) {
            std::cerr << "error: map carries no alpha annotation; pass --alpha\n";
            return 2;
        }
        alpha = *map.alpha();
    }

    std::vector<VerificationReport> reports;
    std::istringstream names(theorems);
    std::string name;
    while (std::getline(names, name, ',')) {
        if (name == "starlike") {
            reports.push_back(verify_starlike(map, alpha, grid));
        } else if (name == "subordination") {
            reports.push_back(subordination_margin(map, alpha, grid));
        } else if (name == "sense") {
            // the coefficient hypothesis and the |w| < 1 conclusion
            reports.push_back(sense_preserving_check(
                map, std::min(map.h().order(), map.g().order())));
            reports.push_back(dilatation_bound_check(map, grid));
        } else if (name == "jacobian") {
            reports.push_back(jacobian_bounds_check(map, grid));
        } else if (name == "hg") {
            reports.push_back(h_over_g_bound_check(map, alpha, grid));
        } else if (name == "disc") {
            reports.push_back(dilatation_disc_check(map, grid));
        } else {
            std::cerr << "error: unknown theorem '" << name
                      << "' (starlike,subordination,sense,jacobian,hg,disc)\n";
            return 2;
        }
    }
    for (VerificationReport& r : reports) {
        if (tol >= 0.0) r.passed = r.worst_margin > -tol;
    }
    if (!out_path.empty()) write_file(out_path, io::reports_to_json(reports));

    int rc = 0;
    for (const VerificationReport& r : reports) {
        std::cout << (r.passed ? "PASS " : "FAIL ") << theorem_name(r.theorem_id)
                  << "  worst_margin=" << r.worst_margin << "  witness=("
                  << r.witness_point.real() << ", " << r.witness_point.imag() << ")";
        if (!r.note.empty()) std::cout << "  [" << r.note << "]";
        std::cout << "\n";
        if (!r.passed && rc == 0) {
            std::cerr << "first failure: " << theorem_name(r.theorem_id) << "\n";
            rc = 1;
        }
    }
    return rc;
}

int cmd_render(const std::string& map_path, double r, int points, const std::string& format,
               const std::string& out_path) {
    const LogHarmonicMap map = io::map_from_json(read_file(map_path));
    const BoundaryCurve curve = sample_boundary(map, r, points);
    const CurveFormat fmt = (format == "svg") ? CurveFormat::svg : CurveFormat::csv;
    write_file(out_path, export_curve(curve, fmt));
    std::cout << "wrote " << out_path << " (" << points << " points at r=" << r << ")\n";
    return 0;
}

int cmd_injectivity(const std::string& map_path, double resolution, int samples,
                    const std::string& out_path) {
    const LogHarmonicMap map = io::map_from_json(read_file(map_path));
    const InjectivityEstimate est = injectivity_radius(map, resolution, samples);
    if (!out_path.empty()) write_file(out_path, io::estimate_to_json(est, samples));
    std::cout << "injectivity radius in [" << est.lower << ", " << est.upper
              << "] at resolution " << est.resolution;
    if (est.collision) {
        std::cout << "; collision witness (" << est.collision->z1.real() << ", "
                  << est.collision->z1.imag() << ") ~ (" << est.collision->z2.real() << ", "
                  << est.collision->z2.imag() << ")";
    } else {
        std::cout << "; no collision found at this resolution";
    }
    std::cout << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"starlike log-harmonic mapping toolkit"};
    app.require_subcommand(1);

    std::string spec_path, map_path, out_path, theorems = "starlike", grid_flag, format = "csv";
    double alpha_flag = -1.0, tol = -1.0, r = 0.9, resolution = 0.01;
    int points = 1024, samples = 256, order_override = 0;

    auto* construct = app.add_subcommand("construct", "build a map file from a spec file");
    construct->add_option("spec", spec_path, "spec JSON file")->required();
    construct->add_option("-o,--out", out_path, "output map file")->required();
    construct->add_option("--order", order_override, "override truncation order");

    auto* verify = app.add_subcommand("verify", "run certifiers; exit 0 iff all pass");
    verify->add_option("map", map_path, "map JSON file")->required();
    verify->add_option("--theorems", theorems,
                       "comma list: starlike,subordination,sense,jacobian,hg,disc");
    verify->add_option("--grid", grid_flag, "grid as r1,r2,.../angles");
    verify->add_option("--alpha", alpha_flag, "order of starlikeness to certify");
    verify->add_option("--tol", tol, "pass tolerance on margins (default 1e-9)");
    verify->add_option("-o,--out", out_path, "report JSON file");

    auto* render = app.add_subcommand("render", "export a boundary curve");
    render->add_option("map", map_path, "map JSON file")->required();
    render->add_option("--r", r, "circle radius")->required();
    render->add_option("--points", points, "number of samples");
    render->add_option("--format", format, "csv or svg")
        ->check(CLI::IsMember({"csv", "svg"}));
    render->add_option("-o,--out", out_path, "output file")->required();

    auto* injectivity = app.add_subcommand("injectivity", "bracket the injectivity radius");
    injectivity->add_option("map", map_path, "map JSON file")->required();
    injectivity->add_option("--resolution", resolution, "ring spacing (>= 1e-3)");
    injectivity->add_option("--samples-per-ring", samples, "samples per ring");
    injectivity->add_option("-o,--out", out_path, "estimate JSON file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (construct->parsed()) return cmd_construct(spec_path, out_path, order_override);
        if (verify->parsed()) {
            return cmd_verify(map_path, theorems, grid_flag, alpha_flag, tol, out_path);
        }
        if (render->parsed()) return cmd_render(map_path, r, points, format, out_path);
        if (injectivity->parsed()) return cmd_injectivity(map_path, resolution, samples, out_path);
    } catch (const logharm::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
