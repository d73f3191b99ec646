// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 servqual contributors

#include "support/fixtures.hpp"
#include "support/tables.hpp"

#include "servqual/error.hpp"
#include "servqual/random.hpp"
#include "servqual/report.hpp"

#include <catch_amalgamated.hpp>
#include <nlohmann/json.hpp>

#include <cmath>
#include <cstdio>
#include <set>

using namespace servqual;
using Catch::Matchers::ContainsSubstring;
using Catch::Matchers::WithinAbs;

namespace {

const DimensionSet kDims;
Dimension dim(const char* label) { return kDims.parse(label); }

std::vector<std::string> hotels_of(const HotelRanking& r) {
    std::vector<std::string> out;
    for (const auto& [h, _] : r.ordered) out.push_back(h);
    return out;
}

MetricsReport some_metrics(std::uint64_t seed) {
    Rng rng(seed);
    std::vector<std::vector<std::uint64_t>> rows(4, std::vector<std::uint64_t>(4));
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) rows[i][j] = (i == j ? 10 : 0) + rng.uniform_index(4);
    return compute_metrics(ConfusionMatrix::from_rows(kDims, rows));
}

} // namespace

TEST_CASE("profile from predictions", "[report]") {
    const std::vector<Dimension> labels{dim("Assurance"), dim("Assurance"), dim("Tangible"), dim("Empathy")};
    const auto p = dimension_profile("H1", labels, kDims);
    CHECK(p.shares == std::vector<double>{0.50, 0.25, 0.0, 0.25});
    CHECK(lowest_dimension(p) == dim("Responsiveness"));

    std::vector<Prediction> preds;
    for (int i = 0; i < 3; ++i) preds.push_back({"d", dim("Empathy"), {}});
    CHECK(dimension_profile("H1", preds, kDims).shares[dim("Empathy").index] == 1.0);
    CHECK_THROWS_AS(dimension_profile("H1", std::vector<Prediction>{}, kDims), DataError);
    CHECK_THROWS_AS(profile_from_counts("H1", kDims, {0, 0, 0, 0}), DataError);
}

TEST_CASE("published shares give the published weakest dimensions", "[report]") {
    for (const auto& s : servq_test::published_shares()) {
        const auto p = profile_from_counts(s.hotel, kDims, s.percent);
        INFO(s.hotel);
        CHECK(kDims.label(lowest_dimension(p)) == s.lowest);
    }
    CHECK(lowest_dimension(profile_from_counts("U", kDims, {3, 3, 3, 3})) == dim("Assurance"));
}

TEST_CASE("rank by tangible share", "[report]") {
    const auto profiles = servq_test::published_profiles();
    const auto r = rank_hotels(profiles, dim("Tangible"));
    CHECK(hotels_of(r) == std::vector<std::string>{"Viceroy", "Komaneka", "Katamama", "Jamahal", "Mandapa"});
    CHECK_THAT(r.ordered[0].second, WithinAbs(0.56, 1e-12));

    const std::vector<DimensionProfile> one{profiles[0]};
    CHECK(rank_hotels(one, dim("Empathy")).ordered.size() == 1);

    const std::vector<DimensionProfile> tied{profile_from_counts("b", kDims, {1, 1, 1, 1}),
                                             profile_from_counts("a", kDims, {2, 2, 2, 2})};
    CHECK(hotels_of(rank_hotels(tied, dim("Empathy"))) == std::vector<std::string>{"a", "b"});

    // overall: by each hotel's weakest share
    const auto overall = rank_hotels_overall(profiles);
    CHECK_FALSE(overall.dimension);
    CHECK(hotels_of(overall) == std::vector<std::string>{"Komaneka", "Viceroy", "Mandapa", "Jamahal", "Katamama"});
}

TEST_CASE("profile and ranking properties", "[report][property]") {
    Rng rng(42);
    for (int trial = 0; trial < 300; ++trial) {
        std::vector<DimensionProfile> profiles;
        const auto n = 1 + rng.uniform_index(6);
        for (std::uint64_t h = 0; h < n; ++h) {
            std::vector<std::uint64_t> counts(4);
            for (auto& c : counts) c = rng.uniform_index(6);
            counts[rng.uniform_index(4)] += 1;
            profiles.push_back(profile_from_counts("h" + std::to_string(h), kDims, counts));
        }
        for (const auto& p : profiles) {
            double s = 0;
            for (double x : p.shares) s += x;
            REQUIRE_THAT(s, WithinAbs(1.0, 1e-9));
        }
        const auto d = Dimension{static_cast<std::uint32_t>(rng.uniform_index(4))};
        const auto r = rank_hotels(profiles, d);
        const auto names = hotels_of(r);
        const std::set<std::string> seen(names.begin(), names.end());
        REQUIRE(seen.size() == profiles.size());
        for (std::size_t i = 1; i < r.ordered.size(); ++i) REQUIRE(r.ordered[i - 1].second >= r.ordered[i].second);

        // rescale one hotel's counts
        auto scaled = profiles;
        const auto which = rng.uniform_index(n);
        const auto factor = 2 + rng.uniform_index(5);
        auto counts = scaled[which].counts;
        for (auto& c : counts) c *= factor;
        scaled[which] = profile_from_counts(scaled[which].hotel_id, kDims, counts);
        REQUIRE(hotels_of(rank_hotels(scaled, d)) == hotels_of(r));
        REQUIRE(lowest_dimension(scaled[which]) == lowest_dimension(profiles[which]));
    }
}

TEST_CASE("summarize joins per-hotel parts", "[report]") {
    const auto profiles = servq_test::published_profiles();
    std::map<std::string, MetricsReport> metrics;
    std::map<std::string, std::vector<std::vector<std::string>>> topics;
    for (std::size_t i = 0; i < profiles.size(); ++i) {
        metrics[profiles[i].hotel_id] = some_metrics(i);
        topics[profiles[i].hotel_id] = {{"pool", "spa", "view"}, {"staff", "kind", "quick"}};
    }
    const auto s = summarize(profiles, metrics, topics);
    CHECK(s.hotels.size() == 5);
    CHECK(s.rankings.size() == 5);
    for (const auto& [id, h] : s.hotels) {
        CHECK(h.profile.shares.size() == 4);
        CHECK(h.topics.size() == 2);
    }
    CHECK(kDims.label(s.hotels.at("Komaneka").lowest) == "Empathy");

    auto missing_metrics = metrics;
    missing_metrics.erase("Viceroy");
    auto missing_topics = topics;
    missing_topics.erase("Mandapa");
    CHECK_THROWS_WITH(summarize(profiles, missing_metrics, missing_topics),
                      ContainsSubstring("Viceroy") && ContainsSubstring("Mandapa"));
}

TEST_CASE("summary json and text agree", "[report]") {
    const auto profiles = servq_test::published_profiles();
    std::map<std::string, MetricsReport> metrics;
    std::map<std::string, std::vector<std::vector<std::string>>> topics;
    for (std::size_t i = 0; i < profiles.size(); ++i) {
        metrics[profiles[i].hotel_id] = some_metrics(i + 10);
        topics[profiles[i].hotel_id] = {{"pool", "spa", "view"}};
    }
    const auto s = summarize(profiles, metrics, topics);
    const auto j = summary_to_json(s);
    const auto text = format_summary_text(s);

    CHECK(j["hotels"]["Mandapa"]["lowest"] == "Responsiveness");
    CHECK(j["rankings"].contains("overall"));
    CHECK(j["rankings"]["Tangible"][0]["hotel"] == "Viceroy");

    const auto rows = servq_test::table_cells(text);
    std::size_t metric_rows = 0, share_rows = 0;
    for (const auto& row : rows) {
        if (!j["hotels"].contains(row[0])) continue;
        const auto& h = j["hotels"][row[0]];
        if (row.size() == 6 && row[1].back() == '%') { // metric row
            ++metric_rows;
            char buf[32];
            std::snprintf(buf, sizeof buf, "%.2f%%", h["metrics"]["accuracy"].get<double>() * 100);
            CHECK(row[1] == buf);
            std::snprintf(buf, sizeof buf, "%.3f", h["metrics"]["kappa"].get<double>());
            CHECK(row[2] == buf);
            std::snprintf(buf, sizeof buf, "%.2f%%", h["metrics"]["f_measure"].get<double>() * 100);
            CHECK(row[5] == buf);
        } else if (row.size() == 5) { // share row
            ++share_rows;
            double total = 0;
            for (std::size_t c = 0; c < 4; ++c) {
                const auto share = h["profile"]["shares"][std::string(kDims.labels()[c])].get<double>();
                CHECK(servq_test::percent_cell(row[c + 1]) == std::round(share * 100));
                total += servq_test::percent_cell(row[c + 1]);
            }
            CHECK(std::abs(total - 100) <= 2);
        }
    }
    CHECK(metric_rows == 5);
    CHECK(share_rows == 5);
    CHECK_THAT(text, ContainsSubstring("Mandapa: Responsiveness"));
}

TEST_CASE("table layout", "[report]") {
    const auto metrics = format_metrics_table({{"Mandapa", some_metrics(1)}});
    const auto header = servq_test::table_cells(metrics)[0];
    CHECK(header == std::vector<std::string>{"Hotel", "Accuracy", "Kappa", "Precision", "Recall", "F-Measure"});

    const auto profiles = servq_test::published_profiles();
    const auto shares = servq_test::table_cells(format_profile_table(profiles));
    CHECK(shares[0] == std::vector<std::string>{"Hotel", "Assurance", "Empathy", "Responsiveness", "Tangible"});
    CHECK(shares[1] == std::vector<std::string>{"Mandapa", "49%", "16%", "5%", "30%"});
    CHECK(percent_rounded(0.125) == 13);
}
