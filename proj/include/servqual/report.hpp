// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 servqual contributors

#pragma once

#include "servqual/classify.hpp"
#include "servqual/dimension.hpp"
#include "servqual/evaluate.hpp"

#include <nlohmann/json_fwd.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace servqual {

/// A hotel's distribution of labels over the dimension set.
struct DimensionProfile {
    std::string hotel_id;
    DimensionSet dimensions;
    std::vector<std::uint64_t> counts;
    std::vector<double> shares;
};

/// Throws DataError when the counts sum to zero.
DimensionProfile profile_from_counts(std::string hotel_id, DimensionSet dimensions,
                                     std::vector<std::uint64_t> counts);

/// Tallies predicted labels. Throws DataError on an empty sequence.
DimensionProfile dimension_profile(std::string hotel_id, std::span<const Prediction> predictions,
                                   const DimensionSet& dimensions);

/// Same, from bare labels (gold labels, or predictions read back from disk).
DimensionProfile dimension_profile(std::string hotel_id, std::span<const Dimension> labels,
                                   const DimensionSet& dimensions);

/// argmin share; ties go to the canonically first dimension.
Dimension lowest_dimension(const DimensionProfile& profile);

struct HotelRanking {
    std::optional<Dimension> dimension; ///< nullopt for the overall ranking
    std::vector<std::pair<std::string, double>> ordered;
};

/// Descending share of `dimension`, ties by hotel_id.
HotelRanking rank_hotels(std::span<const DimensionProfile> profiles, Dimension dimension);

/// Descending share of each hotel's weakest dimension, ties by hotel_id.
HotelRanking rank_hotels_overall(std::span<const DimensionProfile> profiles);

struct HotelSummary {
    DimensionProfile profile;
    MetricsReport metrics;
    Dimension lowest;
    std::vector<std::vector<std::string>> topics; ///< top terms per topic
};

struct Summary {
    DimensionSet dimensions;
    std::map<std::string, HotelSummary> hotels;
    std::vector<HotelRanking> rankings; ///< one per dimension, then overall
};

/// Joins the three per-hotel maps. Throws DataError listing every hotel that
/// is missing from one of them.
Summary summarize(std::span<const DimensionProfile> profiles, const std::map<std::string, MetricsReport>& metrics,
                  const std::map<std::string, std::vector<std::vector<std::string>>>& topics);

nlohmann::json summary_to_json(const Summary& summary);

/// Metric table (accuracy, kappa, precision, recall, F-measure) with
/// percentages to two decimals.
std::string format_metrics_table(const std::vector<std::pair<std::string, MetricsReport>>& rows);

/// Share table with whole percentages.
std::string format_profile_table(std::span<const DimensionProfile> profiles);

/// Full human-readable summary: both tables, weakest dimensions, topic
/// terms and rankings.
std::string format_summary_text(const Summary& summary);

/// Rounds a share to a whole percentage for display.
long percent_rounded(double share);

} // namespace servqual
