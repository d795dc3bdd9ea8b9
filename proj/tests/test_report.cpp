#include <catch2/catch_amalgamated.hpp>

#include <glab/report.hpp>

using namespace glab;

namespace {

AnalysisReport sample_report() {
    Family2Params p;
    p.q = 2;
    p.k = 6;
    p.u0 = 2;
    p.u = {4, 4};
    auto built = build_family2(p);
    AnalysisRequest req;
    req.weights = true;
    req.ghw = true;
    req.sswd = true;
    req.sswd_range = {1, 3};
    req.optimality = true;
    req.lrc = true;
    req.cm = true;
    return analyze(built, req);
}

}  // namespace

TEST_CASE("analysis report carries matching predictions", "[report]") {
    const AnalysisReport rep = sample_report();
    CHECK(rep.n == 36);
    CHECK(rep.d == 16);
    REQUIRE(rep.weights.has_value());
    CHECK(rep.weights->agreement.kind == Agreement::Kind::Match);
    REQUIRE(!rep.ghw.empty());
    for (const auto& e : rep.ghw) CHECK(e.agreement.kind == Agreement::Kind::Match);
    for (const auto& e : rep.sswd) CHECK(e.agreement.kind == Agreement::Kind::Match);
    REQUIRE(rep.optimality.has_value());
    CHECK(rep.optimality->distance_optimal());
    REQUIRE(rep.lrc.has_value());
    CHECK(rep.lrc->locality == 2);
    CHECK(rep.lrc->all_verified);
    REQUIRE(rep.cm.has_value());
    CHECK(!rep.any_mismatch());
}

TEST_CASE("JSON round-trips", "[report]") {
    const AnalysisReport rep = sample_report();
    const Json j = to_json(rep);
    const AnalysisReport back = report_from_json(j);
    CHECK(back == rep);
    // and serialization is stable
    CHECK(to_json(back).dump(2) == j.dump(2));
}

TEST_CASE("serialization is deterministic apart from timing", "[report]") {
    AnalysisReport a = sample_report();
    AnalysisReport b = sample_report();
    a.elapsed_seconds = 0.0;
    b.elapsed_seconds = 0.0;
    CHECK(to_json(a).dump() == to_json(b).dump());
    CHECK(a == b);
}

TEST_CASE("CSV and text renderings contain the headline facts", "[report]") {
    const AnalysisReport rep = sample_report();
    const std::string csv = to_csv(rep);
    CHECK(csv.find("section,weight_distribution") != std::string::npos);
    CHECK(csv.find("section,optimality") != std::string::npos);
    CHECK(csv.find("16,9,9,match") != std::string::npos);
    const std::string text = to_text(rep);
    CHECK(text.find("[36,6,16]_2") != std::string::npos);
    // u0 = 2 is outside the meets-CM hypotheses; the report carries the
    // certified one-sided bound instead
    CHECK(text.find("defect_at_most") != std::string::npos);
    REQUIRE(rep.cm.has_value());
    CHECK(rep.cm->defect_upper == 2);
}

TEST_CASE("big multiplicities serialize as decimal strings", "[report]") {
    WeightDistribution wd;
    wd.counts[0] = 1;
    wd.counts[100] = BigInt("123456789012345678901234567890");
    const Json j = detail::counts_to_json(wd.counts);
    CHECK(j[1][1].get<std::string>() == "123456789012345678901234567890");
    CHECK(detail::counts_from_json(j) == wd.counts);
}
