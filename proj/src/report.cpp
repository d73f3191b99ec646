// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 servqual contributors

#include "servqual/report.hpp"

#include "servqual/error.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>

namespace servqual {

DimensionProfile profile_from_counts(std::string hotel_id, DimensionSet dimensions, std::vector<std::uint64_t> counts) {
    if (counts.size() != dimensions.size()) throw DataError("profile: one count per dimension expected");
    std::uint64_t total = 0;
    for (auto c : counts) total += c;
    if (total == 0) throw DataError("profile for hotel " + hotel_id + " has no labeled documents");
    DimensionProfile p{std::move(hotel_id), std::move(dimensions), std::move(counts), {}};
    for (auto c : p.counts) p.shares.push_back(static_cast<double>(c) / static_cast<double>(total));
    return p;
}

DimensionProfile dimension_profile(std::string hotel_id, std::span<const Dimension> labels,
                                   const DimensionSet& dimensions) {
    if (labels.empty()) throw DataError("profile for hotel " + hotel_id + ": no predictions");
    std::vector<std::uint64_t> counts(dimensions.size(), 0);
    for (auto d : labels) {
        if (d.index >= counts.size()) throw DataError("profile: label outside the configured dimension set");
        ++counts[d.index];
    }
    return profile_from_counts(std::move(hotel_id), dimensions, std::move(counts));
}

DimensionProfile dimension_profile(std::string hotel_id, std::span<const Prediction> predictions,
                                   const DimensionSet& dimensions) {
    std::vector<Dimension> labels;
    labels.reserve(predictions.size());
    for (const auto& p : predictions) labels.push_back(p.label);
    return dimension_profile(std::move(hotel_id), std::span<const Dimension>(labels), dimensions);
}

Dimension lowest_dimension(const DimensionProfile& profile) {
    // shares have one denominator, so count order is share order
    std::size_t best = 0;
    for (std::size_t d = 1; d < profile.counts.size(); ++d) {
        if (profile.counts[d] < profile.counts[best]) best = d;
    }
    return Dimension{static_cast<std::uint32_t>(best)};
}

namespace {

HotelRanking sort_ranking(HotelRanking r) {
    std::ranges::sort(r.ordered, [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second > b.second;
        return a.first < b.first;
    });
    return r;
}

} // namespace

HotelRanking rank_hotels(std::span<const DimensionProfile> profiles, Dimension dimension) {
    if (profiles.empty()) throw DataError("cannot rank zero hotels");
    HotelRanking r{dimension, {}};
    for (const auto& p : profiles) r.ordered.emplace_back(p.hotel_id, p.shares.at(dimension.index));
    return sort_ranking(std::move(r));
}

HotelRanking rank_hotels_overall(std::span<const DimensionProfile> profiles) {
    if (profiles.empty()) throw DataError("cannot rank zero hotels");
    HotelRanking r{std::nullopt, {}};
    for (const auto& p : profiles) r.ordered.emplace_back(p.hotel_id, p.shares[lowest_dimension(p).index]);
    return sort_ranking(std::move(r));
}

Summary summarize(std::span<const DimensionProfile> profiles, const std::map<std::string, MetricsReport>& metrics,
                  const std::map<std::string, std::vector<std::vector<std::string>>>& topics) {
    if (profiles.empty()) throw DataError("summary: no hotel profiles");
    std::set<std::string> all;
    std::set<std::string> in_profiles;
    for (const auto& p : profiles) {
        all.insert(p.hotel_id);
        in_profiles.insert(p.hotel_id);
    }
    for (const auto& [h, _] : metrics) all.insert(h);
    for (const auto& [h, _] : topics) all.insert(h);

    std::vector<std::string> problems;
    for (const auto& h : all) {
        std::vector<std::string> missing;
        if (!in_profiles.contains(h)) missing.emplace_back("predictions");
        if (!metrics.contains(h)) missing.emplace_back("metrics");
        if (!topics.contains(h)) missing.emplace_back("topics");
        if (missing.empty()) continue;
        std::string line = h + " (missing from";
        for (const auto& m : missing) line += " " + m;
        problems.push_back(line + ")");
    }
    if (!problems.empty()) {
        std::string msg = "summary: inconsistent hotel sets:";
        for (const auto& p : problems) msg += " " + p;
        throw DataError(msg);
    }

    Summary s;
    s.dimensions = profiles.front().dimensions;
    for (const auto& p : profiles) {
        if (!(p.dimensions == s.dimensions)) throw DataError("summary: profiles use different dimension sets");
        s.hotels.emplace(p.hotel_id, HotelSummary{p, metrics.at(p.hotel_id), lowest_dimension(p), topics.at(p.hotel_id)});
    }
    for (auto d : s.dimensions.all()) s.rankings.push_back(rank_hotels(profiles, d));
    s.rankings.push_back(rank_hotels_overall(profiles));
    return s;
}

nlohmann::json summary_to_json(const Summary& summary) {
    nlohmann::json hotels = nlohmann::json::object();
    for (const auto& [id, h] : summary.hotels) {
        nlohmann::json counts = nlohmann::json::object();
        nlohmann::json shares = nlohmann::json::object();
        for (auto d : summary.dimensions.all()) {
            counts[summary.dimensions.label(d)] = h.profile.counts[d.index];
            shares[summary.dimensions.label(d)] = h.profile.shares[d.index];
        }
        hotels[id] = {{"metrics", metrics_to_json(h.metrics)},
                      {"profile", {{"counts", std::move(counts)}, {"shares", std::move(shares)}}},
                      {"lowest", summary.dimensions.label(h.lowest)},
                      {"topics", h.topics}};
    }
    nlohmann::json rankings = nlohmann::json::object();
    for (const auto& r : summary.rankings) {
        nlohmann::json rows = nlohmann::json::array();
        for (const auto& [hotel, share] : r.ordered) rows.push_back({{"hotel", hotel}, {"share", share}});
        rankings[r.dimension ? summary.dimensions.label(*r.dimension) : std::string("overall")] = std::move(rows);
    }
    return {{"hotels", std::move(hotels)}, {"rankings", std::move(rankings)}};
}

long percent_rounded(double share) { return std::lround(share * 100.0); }

namespace {

std::string pad_right(std::string s, std::size_t width) {
    if (s.size() < width) s.append(width - s.size(), ' ');
    return s;
}

std::string pad_left(std::string s, std::size_t width) {
    if (s.size() < width) s.insert(0, width - s.size(), ' ');
    return s;
}

std::string fixed(double v, int decimals) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
    return buf;
}

template <typename Rows>
std::size_t name_width(const Rows& names) {
    std::size_t w = 5;
    for (const auto& n : names) w = std::max(w, n.size());
    return w + 2;
}

} // namespace

std::string format_metrics_table(const std::vector<std::pair<std::string, MetricsReport>>& rows) {
    std::vector<std::string> names;
    for (const auto& [n, _] : rows) names.push_back(n);
    const auto w = name_width(names);
    std::ostringstream out;
    out << pad_right("Hotel", w) << pad_left("Accuracy", 10) << pad_left("Kappa", 8) << pad_left("Precision", 11)
        << pad_left("Recall", 9) << pad_left("F-Measure", 11) << '\n';
    for (const auto& [name, m] : rows) {
        out << pad_right(name, w) << pad_left(fixed(m.accuracy * 100.0, 2) + "%", 10) << pad_left(fixed(m.kappa, 3), 8)
            << pad_left(fixed(m.macro.precision * 100.0, 2) + "%", 11)
            << pad_left(fixed(m.macro.recall * 100.0, 2) + "%", 9)
            << pad_left(fixed(m.macro.f_measure * 100.0, 2) + "%", 11) << '\n';
    }
    return out.str();
}

std::string format_profile_table(std::span<const DimensionProfile> profiles) {
    if (profiles.empty()) return {};
    std::vector<std::string> names;
    for (const auto& p : profiles) names.push_back(p.hotel_id);
    const auto w = name_width(names);
    const auto& dims = profiles.front().dimensions;
    std::ostringstream out;
    out << pad_right("Hotel", w);
    for (const auto& label : dims.labels()) out << pad_left(label, std::max<std::size_t>(label.size(), 4) + 2);
    out << '\n';
    for (const auto& p : profiles) {
        out << pad_right(p.hotel_id, w);
        for (auto d : dims.all()) {
            const auto& label = dims.label(d);
            out << pad_left(std::to_string(percent_rounded(p.shares[d.index])) + "%",
                            std::max<std::size_t>(label.size(), 4) + 2);
        }
        out << '\n';
    }
    return out.str();
}

std::string format_summary_text(const Summary& summary) {
    std::vector<std::pair<std::string, MetricsReport>> metric_rows;
    std::vector<DimensionProfile> profiles;
    for (const auto& [id, h] : summary.hotels) {
        metric_rows.emplace_back(id, h.metrics);
        profiles.push_back(h.profile);
    }
    std::ostringstream out;
    out << "Model evaluation\n" << format_metrics_table(metric_rows) << '\n';
    out << "Dimension shares\n" << format_profile_table(profiles) << '\n';
    out << "Lowest dimension\n";
    for (const auto& [id, h] : summary.hotels) out << "  " << id << ": " << summary.dimensions.label(h.lowest) << '\n';
    out << '\n' << "Topic terms\n";
    for (const auto& [id, h] : summary.hotels) {
        for (std::size_t t = 0; t < h.topics.size(); ++t) {
            out << "  " << id << " topic " << t << ":";
            for (const auto& w : h.topics[t]) out << ' ' << w;
            out << '\n';
        }
    }
    out << '\n' << "Rankings\n";
    for (const auto& r : summary.rankings) {
        out << "  " << (r.dimension ? summary.dimensions.label(*r.dimension) : std::string("overall")) << ":";
        for (std::size_t i = 0; i < r.ordered.size(); ++i) {
            out << (i == 0 ? " " : " > ") << r.ordered[i].first << " (" << percent_rounded(r.ordered[i].second) << "%)";
        }
        out << '\n';
    }
    return out.str();
}

} // namespace servqual
