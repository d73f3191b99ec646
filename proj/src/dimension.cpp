// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 servqual contributors

#include "servqual/dimension.hpp"

#include "servqual/error.hpp"

#include <algorithm>
#include <cctype>

namespace servqual {

namespace {

bool iequals(std::string_view a, std::string_view b) {
    return std::ranges::equal(a, b, [](unsigned char x, unsigned char y) {
        return std::tolower(x) == std::tolower(y);
    });
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

} // namespace

DimensionSet::DimensionSet() : labels_{"Assurance", "Empathy", "Responsiveness", "Tangible"} {}

DimensionSet::DimensionSet(std::vector<std::string> labels) : labels_(std::move(labels)) {
    if (labels_.empty()) throw ConfigError("dimension set must not be empty");
    std::ranges::sort(labels_);
    for (std::size_t i = 0; i < labels_.size(); ++i) {
        if (labels_[i].empty()) throw ConfigError("dimension label must not be empty");
        for (std::size_t j = 0; j < i; ++j) {
            if (iequals(labels_[i], labels_[j]))
                throw ConfigError("duplicate dimension label: " + labels_[i]);
        }
    }
}

Dimension DimensionSet::at(std::size_t i) const {
    if (i >= labels_.size()) throw std::out_of_range("dimension index out of range");
    return Dimension{static_cast<std::uint32_t>(i)};
}

std::optional<Dimension> DimensionSet::find(std::string_view label) const {
    for (std::size_t i = 0; i < labels_.size(); ++i) {
        if (iequals(labels_[i], label)) return Dimension{static_cast<std::uint32_t>(i)};
    }
    return std::nullopt;
}

Dimension DimensionSet::parse(std::string_view label) const {
    if (auto d = find(label)) return *d;
    throw DataError("unknown dimension label '" + std::string(label) + "'");
}

std::vector<Dimension> DimensionSet::all() const {
    std::vector<Dimension> out;
    out.reserve(labels_.size());
    for (std::size_t i = 0; i < labels_.size(); ++i) out.push_back(Dimension{static_cast<std::uint32_t>(i)});
    return out;
}

DimensionSet parse_dimension_list(std::string_view csv) {
    std::vector<std::string> labels;
    while (true) {
        auto comma = csv.find(',');
        auto piece = trim(csv.substr(0, comma));
        if (!piece.empty()) labels.emplace_back(piece);
        if (comma == std::string_view::npos) break;
        csv.remove_prefix(comma + 1);
    }
    return DimensionSet(std::move(labels));
}

} // namespace servqual
