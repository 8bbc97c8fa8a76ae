#pragma once

#include <optional>
#include <string>
#include <vector>

#include "logharm/analysis.hpp"
#include "logharm/geometry.hpp"
#include "logharm/mapping.hpp"

namespace logharm::io {

/// Flat, human-writable description of a map. h and g are either explicit
/// coefficient lists (entries: number or [re, im]) or a named builtin:
///   one | koebe_factor(alpha) | exp(c) | exp(re,im) | poly(c1,...)
/// psi (exclusive with h) selects the representation-formula constructor:
///   identity | mobius | zero, or an explicit coefficient list with c_0 = 0.
struct MapSpec {
    Complex beta{0.0, 0.0};
    std::optional<double> alpha;
    std::string g_source = "one";
    std::vector<Complex> g_coeffs;  // used when g_source == "@list"
    std::optional<std::string> h_source;
    std::vector<Complex> h_coeffs;
    std::optional<std::string> psi_source;
    std::vector<Complex> psi_coeffs;
    std::optional<double> radius;
    int order = TaylorSeries::kDefaultOrder;
};

/// Parse a spec file's text; SpecParseError messages carry the field path.
MapSpec parse_map_spec(const std::string& text);

/// Resolve builtins and construct the map. psi-based specs run schwarz_check
/// on the spec radius and then the representation-formula constructor.
LogHarmonicMap build_map(const MapSpec& spec);

std::string map_to_json(const LogHarmonicMap& m);
LogHarmonicMap map_from_json(const std::string& text);

std::string report_to_json(const VerificationReport& report);
std::string reports_to_json(const std::vector<VerificationReport>& reports);

std::string estimate_to_json(const InjectivityEstimate& est, int samples_per_ring);

}  // namespace logharm::io
