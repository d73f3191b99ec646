// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 servqual contributors

#include "servqual/classify.hpp"

#include "servqual/error.hpp"
#include "servqual/io.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace servqual {

NbcModel train_nbc(std::span<const LabeledVector> train, std::shared_ptr<const Vocabulary> vocab,
                   const DimensionSet& dimensions, double alpha, Weighting weighting, Exec exec) {
    if (!(alpha > 0.0) || !std::isfinite(alpha)) throw ConfigError("smoothing alpha must be a positive finite number");
    if (!vocab) throw ConfigError("train_nbc: vocabulary is required");
    if (train.empty()) throw DataError("cannot train on an empty training set");
    const std::size_t n_dims = dimensions.size();
    const std::size_t n_terms = vocab->size();
    for (const auto& ex : train) {
        if (ex.label.index >= n_dims) throw DataError("training label outside the configured dimension set");
        for (auto [pos, w] : ex.features.entries) {
            if (pos >= n_terms) throw DataError("feature position outside the vocabulary in " + ex.features.doc_id);
        }
    }

    const auto stats = accumulate_class_weights(train, n_dims, n_terms, exec);

    NbcModel model;
    model.dimensions = dimensions;
    model.alpha = alpha;
    model.vocab = std::move(vocab);
    model.weighting = weighting;
    model.log_prior.assign(n_dims, 0.0);
    model.log_likelihood.assign(n_dims * n_terms, 0.0);

    const double n_total = static_cast<double>(train.size());
    for (std::size_t d = 0; d < n_dims; ++d) {
        if (stats.n_docs[d] == 0) {
            model.log_prior[d] = -std::numeric_limits<double>::infinity();
            model.warnings.push_back("dimension '" + dimensions.label(Dimension{static_cast<std::uint32_t>(d)}) +
                                     "' absent from training data; it will never be predicted");
        } else {
            model.log_prior[d] = std::log(static_cast<double>(stats.n_docs[d]) / n_total);
        }
        const double* row = stats.weight.data() + d * n_terms;
        double row_total = 0.0;
        for (std::size_t t = 0; t < n_terms; ++t) row_total += row[t];
        const double log_denominator = std::log(row_total + alpha * static_cast<double>(n_terms));
        double* out = model.log_likelihood.data() + d * n_terms;
        for (std::size_t t = 0; t < n_terms; ++t) out[t] = std::log(row[t] + alpha) - log_denominator;
    }
    return model;
}

std::vector<double> log_posterior(const NbcModel& model, const WeightedVector& x) {
    const std::size_t n_terms = model.n_terms();
    std::vector<double> score = model.log_prior;
    for (std::size_t d = 0; d < score.size(); ++d) {
        const double* row = model.log_likelihood.data() + d * n_terms;
        double sum = 0.0;
        for (auto [pos, w] : x.entries) {
            if (pos < n_terms) sum += w * row[pos];
        }
        score[d] += sum;
    }
    return score;
}

Prediction predict(const NbcModel& model, const WeightedVector& x) {
    auto score = log_posterior(model, x);
    const double top = *std::max_element(score.begin(), score.end());
    // scores this close are ties up to summation rounding
    const double slack = kScoreTieTolerance * std::max(1.0, std::abs(top));
    std::size_t best = 0;
    while (score[best] < top - slack) ++best;
    return Prediction{x.doc_id, Dimension{static_cast<std::uint32_t>(best)}, std::move(score)};
}

namespace {

nlohmann::json finite_or_null(double v) { return std::isfinite(v) ? nlohmann::json(v) : nlohmann::json(nullptr); }

double number_or_neg_inf(const nlohmann::json& v) {
    return v.is_null() ? -std::numeric_limits<double>::infinity() : v.get<double>();
}

std::string hex64(std::uint64_t v) {
    std::ostringstream s;
    s << std::hex << v;
    return s.str();
}

} // namespace

nlohmann::json model_to_json(const NbcModel& model, const std::string& vocab_ref) {
    nlohmann::json prior = nlohmann::json::object();
    for (auto d : model.dimensions.all()) prior[model.dimensions.label(d)] = finite_or_null(model.log_prior[d.index]);
    nlohmann::json ll = nlohmann::json::array();
    for (double v : model.log_likelihood) ll.push_back(v);
    return {
        {"dimensions", model.dimensions.labels()},
        {"log_prior", std::move(prior)},
        {"log_likelihood", std::move(ll)},
        {"alpha", model.alpha},
        {"vocab_ref", vocab_ref},
        {"vocab_size", model.n_terms()},
        {"vocab_fingerprint", hex64(model.vocab ? model.vocab->fingerprint() : 0)},
        {"weighting", weighting_name(model.weighting)},
        {"warnings", model.warnings},
    };
}

NbcModel model_from_json(const nlohmann::json& j, std::shared_ptr<const Vocabulary> vocab) {
    if (!vocab) throw DataError("model requires a vocabulary");
    NbcModel model;
    try {
        model.dimensions = DimensionSet(j.at("dimensions").get<std::vector<std::string>>());
        model.alpha = j.at("alpha").get<double>();
        model.weighting = parse_weighting(j.at("weighting").get<std::string>());
        const auto& prior = j.at("log_prior");
        for (const auto& label : model.dimensions.labels()) model.log_prior.push_back(number_or_neg_inf(prior.at(label)));
        for (const auto& v : j.at("log_likelihood")) model.log_likelihood.push_back(v.get<double>());
        if (j.contains("warnings")) model.warnings = j.at("warnings").get<std::vector<std::string>>();
        if (j.contains("vocab_fingerprint") &&
            j.at("vocab_fingerprint").get<std::string>() != hex64(vocab->fingerprint())) {
            throw DataError("vocabulary/model mismatch: vocabulary fingerprint differs from the one recorded in the model");
        }
    } catch (const nlohmann::json::exception& e) {
        throw DataError(std::string("malformed model JSON: ") + e.what());
    } catch (const ConfigError& e) {
        throw DataError(std::string("malformed model JSON: ") + e.what());
    }
    if (model.log_likelihood.size() != model.dimensions.size() * vocab->size()) {
        throw DataError("vocabulary/model mismatch: model has " + std::to_string(model.log_likelihood.size()) +
                        " likelihood entries, expected " + std::to_string(model.dimensions.size()) + " x " +
                        std::to_string(vocab->size()));
    }
    model.vocab = std::move(vocab);
    return model;
}

void save_model(const NbcModel& model, const std::filesystem::path& model_path, const std::string& vocab_file) {
    write_json_file(model_path.parent_path() / vocab_file, vocabulary_to_json(*model.vocab));
    write_json_file(model_path, model_to_json(model, vocab_file));
}

NbcModel load_model(const std::filesystem::path& model_path) {
    const auto j = read_json_file(model_path);
    std::string vocab_ref;
    try {
        vocab_ref = j.at("vocab_ref").get<std::string>();
    } catch (const nlohmann::json::exception& e) {
        throw DataError(model_path.string() + ": malformed model JSON: " + e.what());
    }
    auto vocab = std::make_shared<const Vocabulary>(vocabulary_from_json(read_json_file(model_path.parent_path() / vocab_ref)));
    return model_from_json(j, std::move(vocab));
}

} // namespace servqual
