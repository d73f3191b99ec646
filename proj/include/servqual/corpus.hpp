// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 servqual contributors

#pragma once

#include "servqual/dimension.hpp"

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace servqual {

/// One customer review as ingested from a corpus file.
struct Review {
    std::string hotel_id;
    std::string review_id;
    std::string text;
    std::optional<Dimension> label;
};

/// A classification unit (sentence or whole review). The label is required
/// for training and evaluation and absent on the deployment path.
struct Document {
    std::string doc_id;
    std::string hotel_id;
    std::string text;
    std::optional<Dimension> label;
};

/// A document that is guaranteed to carry exactly one dimension.
struct LabeledDocument {
    std::string doc_id;
    std::string hotel_id;
    std::string text;
    Dimension label;
};

enum class ReviewFormat { jsonl, csv };
enum class Granularity { sentence, review };

ReviewFormat parse_review_format(std::string_view name);
Granularity parse_granularity(std::string_view name);

struct SplitConfig {
    double train_fraction = 0.30;
    std::uint64_t seed = 0;
    bool stratified = true;

    /// Throws ConfigError unless 0 < train_fraction < 1.
    void validate() const;
};

struct Split {
    std::vector<LabeledDocument> train;
    std::vector<LabeledDocument> test;
};

/// Reads one Review per record in file order. Labels are matched
/// case-insensitively against `dimensions`.
///
/// Throws DataError on a malformed record (message names the line and the
/// field), a duplicate (hotel_id, review_id) key, or an empty file.
std::vector<Review> load_reviews(const std::filesystem::path& path, ReviewFormat format,
                                 const DimensionSet& dimensions);

/// Same, reading from an in-memory buffer.
std::vector<Review> parse_reviews(std::string_view content, ReviewFormat format,
                                  const DimensionSet& dimensions);

/// Splits on '.', '!' or '?' followed by whitespace or end of text. The
/// separator itself is dropped, fragments are trimmed and empty ones
/// discarded. doc_id is "<review_id>#<n>" with n counting kept fragments.
std::vector<Document> segment_sentences(const Review& review);

/// Whole review as a single document with doc_id = review_id.
Document review_document(const Review& review);

/// Applies the chosen granularity to every review, preserving order.
std::vector<Document> to_documents(std::span<const Review> reviews, Granularity granularity);

/// Throws DataError naming the first unlabeled document.
std::vector<LabeledDocument> require_labels(std::span<const Document> docs);

/// Seeded random partition with |train| = round(train_fraction * N).
///
/// Under stratification each label receives floor(f * n_label) training
/// documents and the remainder is handed out by largest fractional part
/// (ties by canonical label order), so every label is within one document of
/// its exact share. Both outputs keep input order.
Split split_train_test(std::span<const Document> docs, const SplitConfig& cfg,
                       const DimensionSet& dimensions);

/// Groups by hotel_id, keeping input order inside each group.
template <typename Doc>
std::map<std::string, std::vector<Doc>> group_by_hotel(std::span<const Doc> docs) {
    std::map<std::string, std::vector<Doc>> groups;
    for (const auto& d : docs) groups[d.hotel_id].push_back(d);
    return groups;
}

template <typename Doc>
std::map<std::string, std::vector<Doc>> group_by_hotel(const std::vector<Doc>& docs) {
    return group_by_hotel(std::span<const Doc>(docs));
}

} // namespace servqual
