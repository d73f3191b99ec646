// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 servqual contributors

#pragma once

#include "servqual/dimension.hpp"
#include "servqual/exec.hpp"
#include "servqual/preprocess.hpp"

#include <nlohmann/json_fwd.hpp>

#include <filesystem>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace servqual {

struct LabeledVector {
    WeightedVector features;
    Dimension label;
};

/// Multinomial Naive Bayes over (possibly fractional) feature weights.
///
/// log_likelihood is stored row-major, one row of |V| entries per dimension.
/// Dimensions absent from training carry a log prior of -infinity and are
/// never predicted.
struct NbcModel {
    DimensionSet dimensions;
    std::vector<double> log_prior;
    std::vector<double> log_likelihood;
    double alpha = 1.0;
    std::shared_ptr<const Vocabulary> vocab;
    Weighting weighting = Weighting::tfidf;
    std::vector<std::string> warnings;

    std::size_t n_terms() const { return vocab ? vocab->size() : 0; }
    double likelihood(Dimension d, std::size_t term) const {
        return log_likelihood[d.index * n_terms() + term];
    }
};

struct Prediction {
    std::string doc_id;
    Dimension label;
    std::vector<double> log_posterior; ///< unnormalized joint log-score per dimension
};

/// Per-class summed feature weights and document counts: the sufficient
/// statistics of the multinomial model.
struct ClassWeights {
    std::vector<double> weight;         ///< |D| x |V| row-major
    std::vector<std::uint64_t> n_docs;  ///< |D|
};

ClassWeights accumulate_class_weights(std::span<const LabeledVector> train, std::size_t n_dims,
                                      std::size_t n_terms, Exec exec = Exec::parallel);

/// log_prior[d] = ln(n_d / N);
/// log_likelihood[d,t] = ln((W_dt + alpha) / (sum_t' W_dt' + alpha |V|)).
/// Throws DataError on an empty training set or a label outside `dimensions`,
/// ConfigError on alpha <= 0.
NbcModel train_nbc(std::span<const LabeledVector> train, std::shared_ptr<const Vocabulary> vocab,
                   const DimensionSet& dimensions, double alpha, Weighting weighting = Weighting::tfidf,
                   Exec exec = Exec::parallel);

/// score(d) = log_prior[d] + sum_t x[t] * log_likelihood[d,t]. Positions
/// outside the model vocabulary contribute nothing.
std::vector<double> log_posterior(const NbcModel& model, const WeightedVector& x);

/// Relative gap below which two scores count as tied.
inline constexpr double kScoreTieTolerance = 1e-12;

/// argmax of log_posterior; ties (within kScoreTieTolerance of the best,
/// relative) go to the canonically first dimension.
Prediction predict(const NbcModel& model, const WeightedVector& x);

std::vector<Prediction> predict_batch(const NbcModel& model, std::span<const WeightedVector> docs,
                                      Exec exec = Exec::parallel);

/// Model JSON. `vocab_ref` is stored verbatim and resolved by load_model
/// relative to the model file.
nlohmann::json model_to_json(const NbcModel& model, const std::string& vocab_ref);
NbcModel model_from_json(const nlohmann::json& j, std::shared_ptr<const Vocabulary> vocab);

/// Writes the model and its vocabulary (as `vocab_file`, next to the model).
void save_model(const NbcModel& model, const std::filesystem::path& model_path,
                const std::string& vocab_file = "vocab.json");

/// Throws DataError on missing files, malformed JSON, or a vocabulary whose
/// fingerprint or size does not match the model.
NbcModel load_model(const std::filesystem::path& model_path);

} // namespace servqual
