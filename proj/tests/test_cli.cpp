#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cli/config.hpp"
#include "cli/render.hpp"

using namespace kstab;
using nlohmann::json;

namespace {

json a1g2_doc() {
    return json::parse(R"({
        "name": "custom",
        "diagram": "A1xG2",
        "omega_Y": [0, 0, 1],
        "omega_Z": ["1", 1, 0],
        "dim_X": 8,
        "codim": 2,
        "epsilon": "3",
        "minus_KX_multiple": 6,
        "E_class": {"a_Y": -1, "a_X": 2}
    })");
}

}  // namespace

TEST_CASE("presets") {
    REQUIRE(cli::presets().size() == 2);
    CHECK(cli::find_preset("pas-f4") != nullptr);
    CHECK(cli::find_preset("pas-a1g2") != nullptr);
    CHECK(cli::find_preset("pas-e8") == nullptr);
    const auto& f4 = cli::find_preset("pas-f4")->config;
    CHECK(f4.dim_X == 23);
    CHECK(f4.epsilon == BigRational(8));
}

TEST_CASE("configuration documents") {
    const TwoOrbitConfig c = cli::config_from_json(a1g2_doc());
    CHECK(c.diagram.to_string() == "A1xG2");
    CHECK(c.omega_Z == Weight::fundamental(3, 1) + Weight::fundamental(3, 2));
    CHECK(c.E_class == ExceptionalClass{-1, 2});
    CHECK(c.symmetrizer_scales.empty());
    CHECK(xi(BlowUpModel(c)) == BigRational(17321040));

    const TwoOrbitConfig round = cli::config_from_json(cli::config_to_json(c));
    CHECK(round.omega_Y == c.omega_Y);
    CHECK(round.epsilon == c.epsilon);
    CHECK(round.dim_X == c.dim_X);

    for (const auto& p : cli::presets()) {
        const auto back = cli::config_from_json(cli::config_to_json(p.config));
        CHECK(xi(BlowUpModel(back)) == xi(BlowUpModel(p.config)));
    }
}

TEST_CASE("malformed configuration documents") {
    auto doc = a1g2_doc();
    doc["colour"] = "blue";
    CHECK_THROWS_AS(cli::config_from_json(doc), InputError);
    doc = a1g2_doc();
    doc["E_class"]["a_Z"] = 1;
    CHECK_THROWS_AS(cli::config_from_json(doc), InputError);
    doc = a1g2_doc();
    doc.erase("epsilon");
    CHECK_THROWS_AS(cli::config_from_json(doc), InputError);
    doc = a1g2_doc();
    doc["omega_Y"] = json::array({0, 1});
    CHECK_THROWS_AS(cli::config_from_json(doc), InputError);
    doc = a1g2_doc();
    doc["epsilon"] = "3/0";
    CHECK_THROWS_AS(cli::config_from_json(doc), InputError);
    doc = a1g2_doc();
    doc["dim_X"] = "eight";
    CHECK_THROWS_AS(cli::config_from_json(doc), InputError);
    doc = a1g2_doc();
    doc["symmetrizer_scales"] = json::array({1});
    CHECK_THROWS_AS(cli::config_from_json(doc), InputError);
    CHECK_THROWS_AS(cli::config_from_json(json::array()), InputError);
    CHECK_THROWS_AS(cli::load_config("/nonexistent/kstab.json"), InputError);
}

TEST_CASE("list parsing") {
    CHECK(cli::parse_index_list("1,3") == std::vector<int>{1, 3});
    CHECK(cli::parse_rational_list("0,1/2,-3") == std::vector<BigRational>{0, BigRational(1, 2), -3});
    CHECK_THROWS_AS(cli::parse_index_list("1,,3"), InputError);
    CHECK_THROWS_AS(cli::parse_rational_list("a"), InputError);
}

TEST_CASE("JSON report schema") {
    const auto& preset = *cli::find_preset("pas-a1g2");
    const json j = cli::report_to_json(report(BlowUpModel(preset.config)));
    const json reparsed = json::parse(j.dump());
    for (const char* key : {"name", "xi", "beta", "S", "A", "L_to_n", "volume_poly", "integrand_poly", "table", "verdict"})
        CHECK(reparsed.contains(key));
    CHECK(reparsed.size() == 10);
    CHECK(reparsed["xi"]["value"] == "17321040");
    CHECK(reparsed["xi"]["factored"] == "2^4 · 3^9 · 5 · 11");
    CHECK(reparsed["verdict"] == "positive");
    CHECK(reparsed["table"].size() == 7);
    CHECK(reparsed["table"][0].contains("root"));

    auto zero = preset.config;
    zero.epsilon = 0;
    const json z = cli::report_to_json(report(BlowUpModel(zero)));
    CHECK(z["xi"]["value"] == "0");
    CHECK(z["verdict"] == "zero");
}

TEST_CASE("text report") {
    const auto& preset = *cli::find_preset("pas-f4");
    const auto r = report(BlowUpModel(preset.config));
    const std::string text = cli::render_text(preset.config, r, {});
    CHECK(text.find("xi(Z)           861588086231665623195717730304  (= 2^73 · 19 · 23 · 199 · 1049)") !=
          std::string::npos);
    CHECK(text.find("(1,2,3,1) | (24-x)/2 | 5") != std::string::npos);
    CHECK(text.find("verdict         positive") != std::string::npos);
    CHECK(text.find("\x1b[") == std::string::npos);
    const std::string bare = cli::render_text(preset.config, r, {false, false, false});
    CHECK(bare.find("(24-x)/2") == std::string::npos);
    CHECK(bare.find("(= ") == std::string::npos);
    CHECK(cli::render_value(BigRational(12), true) == "12  (= 2^2 · 3)");
    CHECK(cli::render_value(BigRational(1, 2), true) == "1/2");
}

TEST_CASE("roots listing") {
    const std::string text = cli::render_roots(RootSystem::build(DynkinDiagram::parse("G2")));
    CHECK(text.find("6 positive roots, dim g = 14") != std::string::npos);
    CHECK(text.find("omega_2 = (3,2)") != std::string::npos);
    CHECK(text.find("rho = (5,3)") != std::string::npos);
}
