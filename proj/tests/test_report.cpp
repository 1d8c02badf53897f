#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "homeo/report.hpp"
#include "homeo/svg.hpp"
#include "json.hpp"

using namespace homeo;

namespace {

VerificationReport sample_report() {
    VerificationReport r;
    r.seed = 42;
    r.checks.push_back(CheckResult::make("exact", 1.0 / 3.0, 1.0 / 3.0, 1e-12, Relation::Equal));
    r.checks.push_back(CheckResult::make("bound \"quoted\"", 0.1, 0.05, 0.0, Relation::LessEqual));
    r.checks.push_back(CheckResult::make("probe", INFINITY, 0.15, 0.0, Relation::Less, true));
    return r;
}

}  // namespace

TEST(FormatNumber, SeventeenSignificantDigits) {
    EXPECT_EQ(format_number(0.1), "0.10000000000000001");
    EXPECT_EQ(format_number(1.0), "1");
    EXPECT_EQ(format_number(1.0 / 3.0), "0.33333333333333331");
    for (double v : {0.1, 1.0 / 3.0, 1e-300, 6.02214076e23, -2.5e-7}) {
        EXPECT_EQ(std::stod(format_number(v)), v);
    }
}

TEST(Json, ParsesWithExpectedFields) {
    const auto j = nlohmann::json::parse(to_json(sample_report()));
    EXPECT_EQ(j["artifact_version"], kArtifactVersion);
    EXPECT_EQ(j["seed"], 42);
    EXPECT_EQ(j["wall_time"], 0.0);
    ASSERT_EQ(j["checks"].size(), 3u);
    EXPECT_EQ(j["checks"][0]["measured"].get<double>(), 1.0 / 3.0);
    EXPECT_EQ(j["checks"][0]["relation"], "=");
    EXPECT_EQ(j["checks"][0]["passed"], true);
    EXPECT_EQ(j["checks"][1]["name"], "bound \"quoted\"");
    EXPECT_EQ(j["checks"][1]["passed"], false);
    EXPECT_TRUE(j["checks"][2]["measured"].is_null());
    EXPECT_EQ(j["checks"][2]["informational"], true);
}

TEST(Json, EmptyReport) {
    const auto j = nlohmann::json::parse(to_json(VerificationReport{}));
    EXPECT_TRUE(j["checks"].empty());
}

TEST(Json, ByteStable) {
    EXPECT_EQ(to_json(sample_report()), to_json(sample_report()));
}

TEST(Csv, HeaderAndRows) {
    const C1Breakdown rows[] = {{2.0, 0.25, 0.1, 0.3, 0.2}, {1.5, 0.125, 0.05, 0.15, 0.1}};
    std::istringstream in(sweep_csv(rows));
    std::string line;
    std::getline(in, line);
    EXPECT_EQ(line, "t,c1_distance,sup_f_minus_id,max_diag_dev,max_offdiag");
    std::getline(in, line);
    EXPECT_EQ(line, "2,0.20000000000000001,0.25,0.10000000000000001,0.29999999999999999");
    std::getline(in, line);
    EXPECT_EQ(line.substr(0, 4), "1.5,");
    EXPECT_FALSE(std::getline(in, line));
}

TEST(Text, StatusTags) {
    const std::string text = to_text(sample_report());
    EXPECT_NE(text.find("[PASS] exact"), std::string::npos);
    EXPECT_NE(text.find("[FAIL] bound"), std::string::npos);
    EXPECT_NE(text.find("[INFO] probe"), std::string::npos);
}

TEST(Svg, GridStructure) {
    const DiscHighlight marks[] = {{{0.3, 0.0}, 0.05, "#1f77b4"}, {{0.0, -0.4}, 0.1, "#d62728"}};
    const std::string svg = deformation_grid_svg([](PlanePoint z) { return rotate(z, 0.3); }, marks);
    auto count = [&](const std::string& needle) {
        std::size_t n = 0;
        for (auto pos = svg.find(needle); pos != std::string::npos; pos = svg.find(needle, pos + 1)) ++n;
        return n;
    };
    EXPECT_EQ(svg.rfind("<?xml", 0), 0u);
    EXPECT_NE(svg.find("</svg>"), std::string::npos);
    EXPECT_EQ(count("<polyline"), 48u);  // 24 spokes, source and image
    EXPECT_EQ(count("<polygon"), 32u);   // 16 circles, source and image
    EXPECT_EQ(count("<circle"), 2u);
    EXPECT_EQ(count("href"), 0u);
    EXPECT_EQ(count("<g "), count("</g>"));
}
