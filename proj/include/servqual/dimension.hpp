// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 servqual contributors

#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace servqual {

/// A service-quality category, identified by its position in a DimensionSet.
///
/// Positions follow the set's canonical order, so comparing two Dimensions
/// of the same set compares their labels lexicographically.
struct Dimension {
    std::uint32_t index = 0;

    friend auto operator<=>(const Dimension&, const Dimension&) = default;
};

/// The configured label set. Labels are stored sorted (byte-lexicographic),
/// which is the canonical order used for every tie-break in the library.
class DimensionSet {
public:
    /// Assurance, Empathy, Responsiveness, Tangible.
    DimensionSet();

    /// Throws ConfigError when `labels` is empty, has an empty label, or has
    /// duplicates (compared case-insensitively).
    explicit DimensionSet(std::vector<std::string> labels);

    std::size_t size() const { return labels_.size(); }
    std::span<const std::string> labels() const { return labels_; }
    const std::string& label(Dimension d) const { return labels_.at(d.index); }
    Dimension at(std::size_t i) const;

    /// Case-insensitive lookup.
    std::optional<Dimension> find(std::string_view label) const;

    /// Case-insensitive lookup; throws DataError for unknown labels.
    Dimension parse(std::string_view label) const;

    std::vector<Dimension> all() const;

    friend bool operator==(const DimensionSet&, const DimensionSet&) = default;

private:
    std::vector<std::string> labels_;
};

/// Parses a comma-separated label list ("Assurance,Empathy,...").
DimensionSet parse_dimension_list(std::string_view csv);

} // namespace servqual
