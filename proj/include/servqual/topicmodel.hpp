// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 servqual contributors

#pragma once

#include "servqual/exec.hpp"
#include "servqual/preprocess.hpp"

#include <nlohmann/json_fwd.hpp>

#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace servqual {

enum class LdaEstimator {
    averaged,     ///< mean counts over post-burn-in sweeps, every `thin`-th sweep
    final_sample, ///< counts of the last sweep only
};

struct LdaConfig {
    std::size_t k = 5;
    std::optional<double> alpha; ///< document-topic prior; 50/k when unset
    double beta = 0.01;
    std::size_t iterations = 1000;
    std::size_t burn_in = 800;
    std::size_t thin = 10;
    LdaEstimator estimator = LdaEstimator::averaged;
    std::uint64_t seed = 0;

    double doc_topic_prior() const { return alpha.value_or(50.0 / static_cast<double>(k)); }

    /// Throws ConfigError unless k >= 1, alpha, beta > 0, thin >= 1 and
    /// 0 < burn_in < iterations.
    void validate() const;
};

/// Read-only view of the sampler counts, handed to a SweepObserver.
struct GibbsCounts {
    std::size_t k = 0;
    std::size_t n_terms = 0;
    std::span<const std::uint32_t> doc_topic;   ///< n_docs x k
    std::span<const std::uint32_t> topic_term;  ///< k x n_terms
    std::span<const std::uint32_t> topic_total; ///< k
    std::span<const std::uint32_t> doc_length;  ///< n_docs
};

/// Called after every sweep (1-based sweep number).
using SweepObserver = std::function<void(std::size_t sweep, const GibbsCounts&)>;

struct LdaModel {
    LdaConfig config;
    std::shared_ptr<const Vocabulary> vocab;
    std::size_t k = 0;
    std::vector<std::string> doc_ids;                    ///< documents kept for sampling
    std::vector<double> phi;                             ///< k x |V|
    std::vector<double> theta;                           ///< n_docs x k
    std::vector<double> topic_proportions;               ///< k
    std::vector<std::uint64_t> term_frequency;           ///< |V| corpus token counts
    std::vector<double> topic_term_frequency;            ///< k x |V| expected counts
    std::vector<std::vector<std::uint32_t>> words;       ///< vocabulary ids per kept document
    std::vector<std::vector<std::uint32_t>> assignments; ///< final-sweep topic per token
    std::uint64_t total_tokens = 0;
    std::vector<std::string> warnings;

    std::size_t n_terms() const { return vocab ? vocab->size() : 0; }
    std::span<const double> phi_row(std::size_t topic) const {
        return std::span<const double>(phi).subspan(topic * n_terms(), n_terms());
    }
};

/// Collapsed Gibbs sampling. Tokens outside `vocab` are ignored; documents
/// left without tokens are dropped with a warning.
///
///   p(z = t | rest) ~ (n_dt + alpha) (n_tw + beta) / (n_t + |V| beta)
///   phi[t,w]   = (n_tw + beta) / (n_t + |V| beta)
///   theta[d,t] = (n_dt + alpha) / (n_d + k alpha)
///
/// Throws DataError when no document has a usable token or k exceeds the
/// token count.
LdaModel fit_lda(std::span<const TokenizedDocument> docs, std::shared_ptr<const Vocabulary> vocab,
                 const LdaConfig& cfg, const SweepObserver& observer = {});

struct LdaJob {
    std::vector<TokenizedDocument> docs;
    std::shared_ptr<const Vocabulary> vocab;
    LdaConfig config;
};

/// Independent chains, one per job; results in job order.
std::vector<LdaModel> fit_lda_many(std::span<const LdaJob> jobs, Exec exec = Exec::parallel);

/// lambda * ln(phi) + (1 - lambda) * ln(phi / p)
double relevance_score(double phi, double corpus_probability, double lambda);

struct RankedTerm {
    std::string term;
    double relevance = 0.0;
    double phi = 0.0;
    double corpus_probability = 0.0;
};

struct RelevanceRanking {
    std::size_t topic = 0;
    double lambda = 0.0;
    std::vector<RankedTerm> ranked_terms; ///< relevance descending, ties by term
};

/// Ranks from raw columns: the same arithmetic the viewer performs on the
/// exported payload. Throws ConfigError unless 0 <= lambda <= 1.
RelevanceRanking rank_terms(std::span<const std::string> terms, std::span<const double> phi_row,
                            std::span<const std::uint64_t> term_frequency, std::size_t topic, double lambda);

RelevanceRanking term_relevance(const LdaModel& model, std::size_t topic, double lambda);

/// First n terms of term_relevance; all terms when n exceeds |V|.
std::vector<std::string> top_terms(const LdaModel& model, std::size_t topic, std::size_t n, double lambda);

/// Viewer payload:
/// {"lambda_default": x, "hotels": {id: {"terms": [...], "term_frequency": [...],
///   "topics": [{"proportion": x, "phi": [...], "topic_term_frequency": [...]}]}}}
nlohmann::json viz_payload(const std::map<std::string, LdaModel>& models, double lambda_default);

/// Writes viz_payload to `path`. Throws DataError on an empty model map or a
/// failed write.
void export_viz_data(const std::map<std::string, LdaModel>& models, double lambda_default,
                     const std::filesystem::path& path);

/// Top-n terms per topic for every hotel of a payload, recomputed at `lambda`.
std::map<std::string, std::vector<std::vector<std::string>>> top_terms_from_payload(const nlohmann::json& payload,
                                                                                   std::size_t n, double lambda);

} // namespace servqual
