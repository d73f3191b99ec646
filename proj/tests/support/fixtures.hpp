// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 servqual contributors

#pragma once

#include "support/oracles.hpp"

#include "servqual/corpus.hpp"
#include "servqual/evaluate.hpp"
#include "servqual/preprocess.hpp"
#include "servqual/report.hpp"

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace servq_test {

std::filesystem::path fixture(const std::string& name);
std::string slurp(const std::filesystem::path& path);

/// Fresh empty directory under the system temp dir.
std::filesystem::path scratch_dir(const std::string& tag);

/// Two disjoint blocks {beach, pool, spa} and {staff, service, friendly};
/// each document draws `length` tokens from one block, blocks alternate.
struct TwoTopicCorpus {
    std::vector<servqual::TokenizedDocument> docs;
    std::vector<int> block; ///< per document
    static bool in_first_block(const std::string& term);
};
TwoTopicCorpus two_topic_corpus(std::size_t n_docs, std::size_t length, std::uint64_t seed);

/// 50 documents over a 12-term vocabulary with lengths between 3 and 15.
std::vector<servqual::TokenizedDocument> mixed_corpus(std::size_t n_docs, std::uint64_t seed);

/// The published per-hotel shares (percent) used as a profile fixture.
struct PublishedShares {
    std::string hotel;
    std::vector<std::uint64_t> percent; ///< Assurance, Empathy, Responsiveness, Tangible
    std::string lowest;
};
std::vector<PublishedShares> published_shares();
std::vector<servqual::DimensionProfile> published_profiles();

/// One corpus of the classifier oracle grid, plus the queries to score.
struct NbCase {
    std::vector<std::string> labels;
    std::vector<NbTrainDoc> train;
    std::vector<std::vector<std::string>> queries;
};

/// Every (n_docs <= 6, pool <= 8 terms, 2 or 3 labels) cell, several seeded
/// corpora per cell.
std::vector<NbCase> nb_grid();

/// Label the library predicts for each query of `c` (raw counts, alpha 1).
std::vector<std::string> library_nb_labels(const NbCase& c);

/// Sentence-level planted corpus, 30:70 stratified split with `seed`,
/// default pipeline, TF-IDF, alpha 1; metrics on the test part.
servqual::MetricsReport planted_metrics(std::uint64_t seed);

} // namespace servq_test
