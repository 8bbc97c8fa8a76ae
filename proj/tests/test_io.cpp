#include <cmath>

#include "doctest.h"
#include "logharm/builtins.hpp"
#include "logharm/io.hpp"

using namespace logharm;

TEST_CASE("map spec: Koebe builtin constructs the (n+1) coefficients") {
    const io::MapSpec spec = io::parse_map_spec(R"json({
        "beta_re": 0.0, "beta_im": 0.0, "alpha": 0.0,
        "g": "one", "psi": "identity"
    })json");
    const LogHarmonicMap m = io::build_map(spec);
    for (int n = 0; n <= 32; ++n) {
        CHECK(std::abs(m.h().coeff(n) - Complex{double(n + 1), 0.0}) < 1e-9);
    }
}

TEST_CASE("map spec: mobius psi yields h = e^{2z} at its default radius") {
    const io::MapSpec spec = io::parse_map_spec(R"json({
        "alpha": 0.0, "g": "one", "psi": "mobius"
    })json");
    const LogHarmonicMap m = io::build_map(spec);
    double factorial = 1.0;
    for (int n = 0; n <= 20; ++n) {
        CHECK(std::abs(m.h().coeff(n) - Complex{factorial, 0.0}) < 1e-9);
        factorial *= 2.0 / (n + 1);
    }
    CHECK(m.ref_radius() == doctest::Approx(builtin::kMobiusDefaultRadius));
}

TEST_CASE("map spec: zero psi copies g into h") {
    const io::MapSpec spec = io::parse_map_spec(R"json({
        "alpha": 0.25, "g": [1.0, 0.25, [0.0, 0.125]], "psi": "zero"
    })json");
    const LogHarmonicMap m = io::build_map(spec);
    for (int n = 0; n <= m.h().order(); ++n) {
        CHECK(std::abs(m.h().coeff(n) - m.g().coeff(n)) < 1e-15);
    }
    CHECK(m.g().coeff(2) == Complex{0.0, 0.125});
}

TEST_CASE("map spec: field-precise rejections") {
    CHECK_THROWS_WITH_AS(io::build_map(io::parse_map_spec(R"json({"beta_re": -0.6, "h": "one"})json")),
                         doctest::Contains("beta_re"), SpecParseError);
    CHECK_THROWS_WITH_AS(io::parse_map_spec(R"json({"h": "one", "alpha": 1.5})json"),
                         doctest::Contains("alpha"), SpecParseError);
    CHECK_THROWS_WITH_AS(io::parse_map_spec(R"json({"g": [0.5], "h": "one"})json"),
                         doctest::Contains("g[0]"), SpecParseError);
    CHECK_THROWS_WITH_AS(io::parse_map_spec(R"json({"psi": [0.0, 1.0]})json"),
                         doctest::Contains("alpha"), SpecParseError);
    CHECK_THROWS_WITH_AS(io::parse_map_spec(R"json({"h": "one", "psi": "zero", "alpha": 0.0})json"),
                         doctest::Contains("exclusive"), SpecParseError);
    CHECK_THROWS_WITH_AS(io::parse_map_spec(R"json({"h": "one", "beta_quux": 1})json"),
                         doctest::Contains("beta_quux"), SpecParseError);
    CHECK_THROWS_WITH_AS(io::parse_map_spec(R"json({})json"), doctest::Contains("h"), SpecParseError);
}

TEST_CASE("map spec: builtins exp, poly, koebe_factor and the order override") {
    const io::MapSpec spec = io::parse_map_spec(R"json({
        "h": "exp(2)", "g": "poly(0.5,0.25)", "order": 20, "radius": 0.8
    })json");
    const LogHarmonicMap m = io::build_map(spec);
    CHECK(m.h().order() == 20);
    CHECK(m.ref_radius() == 0.8);
    CHECK(std::abs(m.h().coeff(2) - Complex{2.0, 0.0}) < 1e-15);
    CHECK(m.g().coeff(1) == Complex{0.5, 0.0});
    CHECK(m.g().coeff(2) == Complex{0.25, 0.0});
    CHECK(m.g().coeff(3) == Complex{0.0, 0.0});

    const io::MapSpec k = io::parse_map_spec(R"json({"h": "koebe_factor(0.5)", "g": "one"})json");
    CHECK(std::abs(io::build_map(k).h().coeff(3) - Complex{1.0, 0.0}) < 1e-12);
}

TEST_CASE("map JSON round trip reproduces identical coefficients") {
    const io::MapSpec spec = io::parse_map_spec(R"json({
        "beta_re": 0.125, "beta_im": -0.375, "alpha": 0.25,
        "g": "poly(0.3)", "psi": "identity", "radius": 0.9
    })json");
    const LogHarmonicMap m = io::build_map(spec);
    const std::string text = io::map_to_json(m);
    const LogHarmonicMap back = io::map_from_json(text);

    CHECK(back.beta() == m.beta());
    CHECK(back.alpha() == m.alpha());
    CHECK(back.h().ref_radius() == m.h().ref_radius());
    REQUIRE(back.h().order() == m.h().order());
    for (int n = 0; n <= m.h().order(); ++n) {
        CHECK(back.h().coeff(n) == m.h().coeff(n));
        CHECK(back.g().coeff(n) == m.g().coeff(n));
    }
    // serialization is deterministic
    CHECK(io::map_to_json(back) == text);
}

TEST_CASE("report JSON carries the documented fields") {
    const LogHarmonicMap koebe({0.0, 0.0}, builtin::koebe_factor(0.0), builtin::one());
    const VerificationReport rep = verify_starlike(koebe, 0.0, SampleGrid::up_to(0.9));
    const std::string text = io::report_to_json(rep);
    for (const char* field :
         {"theorem_id", "passed", "worst_margin", "witness", "grid", "truncation_order"}) {
        CHECK(text.find(field) != std::string::npos);
    }
    CHECK(text.find("starlike") != std::string::npos);
    CHECK(io::report_to_json(rep) == text);
}
