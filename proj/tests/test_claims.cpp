#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "galrec/claims.hpp"
#include "galrec/config.hpp"
#include "galrec/emit.hpp"

using namespace galrec;
using claims::Verdict;

namespace {
config::RunConfig default_cfg() { return {}; }
}

TEST_CASE("registry lists at least 22 claims, sorted by id") {
    auto ids = claims::claim_ids();
    CHECK(ids.size() >= 22);
    CHECK(std::is_sorted(ids.begin(), ids.end()));
    CHECK(std::find(ids.begin(), ids.end(), "cycloid-area") != ids.end());
    CHECK(std::find(ids.begin(), ids.end(), "moon-fall") != ids.end());
    auto records = claims::list_claims();
    CHECK(records.size() == ids.size());
    for (const auto& r : records) {
        CHECK_FALSE(r.verdict.has_value());  // metadata only
        CHECK_FALSE(r.citations.empty());
    }
}

TEST_CASE("fixed claim ids are all present") {
    auto ids = claims::claim_ids();
    for (const char* id :
         {"cycloid-area", "matching-fallacy", "mean-speed", "incline-ratio",
          "pendulum-isochrony", "projectile-upright", "projectile-tilted", "range-table",
          "centrifugal-extrusion", "path-of-fall", "pisan-drop", "moon-fall", "tides-period",
          "catenary", "brachistochrone", "displacement-blunder", "wine-cooler", "wreath",
          "paraboloid-stability", "tycho-distance", "mizar-parallax", "sunspot-seasons",
          "venus-phases", "venus-nonlinearity", "venus-tabletop", "aristarchus-ratio",
          "aristarchus-ci", "aristarchus-volumes", "hipparchus-combinatorics"}) {
        CAPTURE(id);
        CHECK(std::find(ids.begin(), ids.end(), id) != ids.end());
    }
}

TEST_CASE("representative verdicts") {
    auto cfg = default_cfg();
    auto cycloid = claims::run_claim("cycloid-area", cfg);
    REQUIRE(cycloid.verdict.has_value());
    CHECK(*cycloid.verdict == Verdict::REFUTED);
    CHECK(*cycloid.computed.value == doctest::Approx(3.0).epsilon(1e-9));

    auto pendulum = claims::run_claim("pendulum-isochrony", cfg);
    CHECK(*pendulum.verdict == Verdict::REFUTED);
    CHECK(*pendulum.computed.value == doctest::Approx(1.1803).epsilon(1e-3));

    auto tides = claims::run_claim("tides-period", cfg);
    CHECK(*tides.verdict == Verdict::REFUTED);
    CHECK(*tides.computed.value == doctest::Approx(43200.0).epsilon(1e-6));
}

TEST_CASE("unknown ids suggest near matches") {
    auto cfg = default_cfg();
    CHECK_THROWS_AS(claims::run_claim("cycloid", cfg), NotFoundError);
    try {
        claims::run_claim("cycloid", cfg);
    } catch (const NotFoundError& e) {
        REQUIRE_FALSE(e.suggestions.empty());
        CHECK(e.suggestions.front() == "cycloid-area");
    }
}

TEST_CASE("run_claim is idempotent") {
    auto cfg = default_cfg();
    auto a = claims::run_claim("wreath", cfg);
    auto b = claims::run_claim("wreath", cfg);
    CHECK(a.id == b.id);
    CHECK(*a.computed.value == *b.computed.value);
    CHECK(*a.verdict == *b.verdict);
    CHECK(a.detail == b.detail);
}

TEST_CASE("emit produces the contracted csv schemas") {
    auto cfg = default_cfg();
    auto venus = claims::claim_series("venus-phases", cfg);
    CHECK(venus.columns ==
          std::vector<std::string>{"date_offset", "alpha_deg", "k", "diameter_ratio",
                                   "elongation_deg"});
    CHECK(venus.rows.size() == 9);

    auto spots = claims::claim_series("sunspot-seasons", cfg);
    CHECK(spots.columns == std::vector<std::string>{"day", "slope", "curvature", "shape"});

    auto brach = claims::claim_series("brachistochrone", cfg);
    CHECK(brach.columns == std::vector<std::string>{"curve", "x", "y", "t"});
    // three blocks keyed by curve kind
    std::vector<std::string> kinds;
    for (const auto& row : brach.rows) {
        std::string k = std::get<std::string>(row[0]);
        if (kinds.empty() || kinds.back() != k) kinds.push_back(k);
    }
    CHECK(kinds == std::vector<std::string>{"cycloid", "circular-arc", "straight"});

    CHECK_THROWS_AS(claims::claim_series("moon-fall", cfg), NoDataError);
}

TEST_CASE("csv and json emission formats") {
    auto cfg = default_cfg();
    auto series = claims::claim_series("hipparchus-combinatorics", cfg);
    std::string csv = emit::to_csv(series);
    CHECK(csv.rfind("n,count\n", 0) == 0);
    CHECK(csv.find("10,103049\n") != std::string::npos);
    CHECK(csv.find('\r') == std::string::npos);

    std::string json = emit::to_json("hipparchus-combinatorics", series);
    CHECK(json.find("\"claim_id\": \"hipparchus-combinatorics\"") != std::string::npos);
    CHECK(json.find("\"schema_version\": 1") != std::string::npos);

    auto tmp = std::filesystem::temp_directory_path() / "galrec_emit_test.csv";
    claims::emit_claim("hipparchus-combinatorics", "csv", tmp.string(), cfg);
    std::ifstream in(tmp);
    std::stringstream buf;
    buf << in.rdbuf();
    CHECK(buf.str() == csv);
    std::filesystem::remove(tmp);
}

TEST_CASE("csv quoting follows rfc 4180") {
    emit::Series s;
    s.columns = {"plain", "with,comma", "with\"quote"};
    s.rows.push_back({std::string("a"), std::string("b,c"), std::string("d\"e")});
    std::string csv = emit::to_csv(s);
    CHECK(csv == "plain,\"with,comma\",\"with\"\"quote\"\na,\"b,c\",\"d\"\"e\"\n");
}

TEST_CASE("report matches expectations and is byte-identical across parallelism") {
    auto cfg = default_cfg();
    cfg.parallelism = 1;
    auto rep1 = claims::report(cfg);
    CHECK(rep1.all_match);
    CHECK(rep1.exit_code == 0);
    CHECK(rep1.rows.size() >= 22);

    auto cfg4 = default_cfg();
    cfg4.parallelism = 4;
    auto rep4 = claims::report(cfg4);
    CHECK(claims::render_report_markdown(rep1) == claims::render_report_markdown(rep4));
    CHECK(claims::render_report_json(rep1) == claims::render_report_json(rep4));

    auto rep1b = claims::report(cfg);
    CHECK(claims::render_report_markdown(rep1) == claims::render_report_markdown(rep1b));
}

TEST_CASE("constant overrides shift computed values and flag the drift") {
    auto cfg = config::parse_config_text("g = 4.0\n", claims::claim_ids());
    CHECK(cfg.constants.g == 4.0);
    auto rec = claims::run_claim("centrifugal-extrusion", cfg);
    CHECK(*rec.computed.value == doctest::Approx(4.0 * 6.371e6 / (465.1 * 465.1)).epsilon(1e-9));
    auto rep = claims::report(cfg);
    CHECK_FALSE(rep.all_match);
    CHECK(rep.exit_code == 1);
    bool flagged = false;
    for (const auto& row : rep.rows)
        if (row.record.id == "centrifugal-extrusion") flagged = !row.value_match;
    CHECK(flagged);
}

TEST_CASE("configuration errors fail fast") {
    CHECK_THROWS_AS(config::parse_config_text("tolerance.nonexistent-claim.abs = 1\n",
                                              claims::claim_ids()),
                    ConfigError);
    CHECK_THROWS_AS(config::parse_config_text("unknown_key = 1\n", claims::claim_ids()),
                    ConfigError);
    CHECK_THROWS_AS(config::parse_config_text("g 9.8\n", claims::claim_ids()), ConfigError);
    auto ok = config::parse_config_text("# comment only\n\ng = 9.8 # inline\n",
                                        claims::claim_ids());
    CHECK(ok.constants.g == 9.8);
}

TEST_CASE("tolerance overrides change the verdict boundary") {
    // a huge tolerance turns the moon-fall mismatch into a confirmation
    auto cfg = config::parse_config_text("tolerance.moon-fall.rel = 1e6\n", claims::claim_ids());
    auto rec = claims::run_claim("moon-fall", cfg);
    CHECK(*rec.verdict == Verdict::CONFIRMED);
    // and the report flags it as an expectation mismatch
    auto rep = claims::report(cfg);
    CHECK_FALSE(rep.all_match);
}

TEST_CASE("every citation appears verbatim in the claim index document") {
    std::ifstream in(std::string(GALREC_SOURCE_DIR) + "/docs/claims_index.md");
    REQUIRE(in.good());
    std::stringstream buf;
    buf << in.rdbuf();
    std::string doc = buf.str();
    for (const auto& rec : claims::list_claims()) {
        for (const auto& cite : rec.citations) {
            CAPTURE(rec.id);
            CAPTURE(cite);
            CHECK(doc.find(cite) != std::string::npos);
        }
    }
}
