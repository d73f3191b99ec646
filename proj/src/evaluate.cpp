// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 servqual contributors

#include "servqual/evaluate.hpp"

#include "servqual/error.hpp"

#include <nlohmann/json.hpp>

namespace servqual {

ConfusionMatrix::ConfusionMatrix(DimensionSet dimensions, std::vector<std::uint64_t> counts)
    : dimensions_(std::move(dimensions)), counts_(std::move(counts)) {
    if (counts_.size() != dimensions_.size() * dimensions_.size())
        throw DataError("confusion matrix must be |D| x |D|");
    for (auto c : counts_) n_ += c;
}

ConfusionMatrix ConfusionMatrix::from_rows(DimensionSet dimensions, const std::vector<std::vector<std::uint64_t>>& rows) {
    std::vector<std::uint64_t> flat;
    if (rows.size() != dimensions.size()) throw DataError("confusion matrix must be |D| x |D|");
    for (const auto& row : rows) {
        if (row.size() != dimensions.size()) throw DataError("confusion matrix must be |D| x |D|");
        flat.insert(flat.end(), row.begin(), row.end());
    }
    return ConfusionMatrix(std::move(dimensions), std::move(flat));
}

std::uint64_t ConfusionMatrix::row_sum(Dimension predicted) const {
    std::uint64_t s = 0;
    for (std::size_t a = 0; a < size(); ++a) s += counts_[predicted.index * size() + a];
    return s;
}

std::uint64_t ConfusionMatrix::col_sum(Dimension actual) const {
    std::uint64_t s = 0;
    for (std::size_t p = 0; p < size(); ++p) s += counts_[p * size() + actual.index];
    return s;
}

std::uint64_t ConfusionMatrix::trace() const {
    std::uint64_t s = 0;
    for (std::size_t d = 0; d < size(); ++d) s += counts_[d * size() + d];
    return s;
}

ConfusionMatrix build_confusion_matrix(std::span<const std::pair<Dimension, Dimension>> pairs,
                                       const DimensionSet& dimensions) {
    if (pairs.empty()) throw DataError("cannot build a confusion matrix from zero predictions");
    const std::size_t k = dimensions.size();
    std::vector<std::uint64_t> counts(k * k, 0);
    for (auto [p, a] : pairs) {
        if (p.index >= k || a.index >= k) throw DataError("confusion matrix: label outside the configured dimension set");
        ++counts[p.index * k + a.index];
    }
    return ConfusionMatrix(dimensions, std::move(counts));
}

std::optional<double> recall(const ConfusionMatrix& cm, Dimension d) {
    const auto denom = cm.tp(d) + cm.fn(d);
    if (denom == 0) return std::nullopt;
    return static_cast<double>(cm.tp(d)) / static_cast<double>(denom);
}

std::optional<double> precision(const ConfusionMatrix& cm, Dimension d) {
    const auto denom = cm.tp(d) + cm.fp(d);
    if (denom == 0) return std::nullopt;
    return static_cast<double>(cm.tp(d)) / static_cast<double>(denom);
}

double accuracy(const ConfusionMatrix& cm) {
    if (cm.n() == 0) throw DataError("accuracy of an empty confusion matrix");
    return static_cast<double>(cm.trace()) / static_cast<double>(cm.n());
}

double f_measure(double p, double r) {
    if (p + r == 0.0) return 0.0;
    return 2.0 * p * r / (p + r);
}

double cohen_kappa(const ConfusionMatrix& cm) {
    if (cm.n() == 0) throw DataError("kappa of an empty confusion matrix");
    const double n = static_cast<double>(cm.n());
    std::uint64_t chance_mass = 0; // sum of rowsum * colsum, exact in integers
    for (auto d : cm.dimensions().all()) chance_mass += cm.row_sum(d) * cm.col_sum(d);
    const double p_a = static_cast<double>(cm.trace()) / n;
    if (chance_mass == cm.n() * cm.n()) return cm.trace() == cm.n() ? 1.0 : 0.0;
    const double p_e = static_cast<double>(chance_mass) / (n * n);
    return (p_a - p_e) / (1.0 - p_e);
}

AgreementBand kappa_band(double kappa) {
    if (!(kappa >= 0.0)) return AgreementBand::poor;
    if (kappa <= 0.20) return AgreementBand::slight;
    if (kappa <= 0.40) return AgreementBand::fair;
    if (kappa <= 0.60) return AgreementBand::moderate;
    if (kappa <= 0.80) return AgreementBand::substantial;
    return AgreementBand::almost_perfect;
}

std::string_view band_name(AgreementBand band) {
    switch (band) {
    case AgreementBand::poor: return "Poor";
    case AgreementBand::slight: return "Slight";
    case AgreementBand::fair: return "Fair";
    case AgreementBand::moderate: return "Moderate";
    case AgreementBand::substantial: return "Substantial";
    case AgreementBand::almost_perfect: return "Almost Perfect";
    }
    return "Poor";
}

namespace {

AgreementBand band_from_name(std::string_view name) {
    for (auto b : {AgreementBand::poor, AgreementBand::slight, AgreementBand::fair, AgreementBand::moderate,
                   AgreementBand::substantial, AgreementBand::almost_perfect}) {
        if (band_name(b) == name) return b;
    }
    throw DataError("unknown agreement band '" + std::string(name) + "'");
}

double mean_of_defined(const std::vector<ClassMetrics>& rows, std::optional<double> ClassMetrics::*field) {
    double sum = 0.0;
    std::size_t n = 0;
    for (const auto& r : rows) {
        if (auto v = r.*field) {
            sum += *v;
            ++n;
        }
    }
    return n == 0 ? 0.0 : sum / static_cast<double>(n);
}

} // namespace

MetricsReport compute_metrics(const ConfusionMatrix& cm) {
    MetricsReport r;
    r.dimensions = cm.dimensions();
    r.n = cm.n();
    r.accuracy = accuracy(cm);
    r.kappa = cohen_kappa(cm);
    r.band = kappa_band(r.kappa);
    r.kappa_above_threshold = meets_kappa_threshold(r.kappa);
    r.confusion = cm.counts();
    for (auto d : cm.dimensions().all()) {
        ClassMetrics m{precision(cm, d), recall(cm, d), std::nullopt};
        if (m.precision && m.recall) m.f_measure = f_measure(*m.precision, *m.recall);
        r.per_class.push_back(m);
    }
    r.macro.precision = mean_of_defined(r.per_class, &ClassMetrics::precision);
    r.macro.recall = mean_of_defined(r.per_class, &ClassMetrics::recall);
    r.macro.f_measure = mean_of_defined(r.per_class, &ClassMetrics::f_measure);
    return r;
}

MetricsReport evaluate_model(const NbcModel& model, std::span<const LabeledTestVector> test) {
    if (test.empty()) throw DataError("cannot evaluate on an empty test set");
    std::vector<WeightedVector> features;
    features.reserve(test.size());
    for (const auto& t : test) features.push_back(t.features);
    const auto predictions = predict_batch(model, features);
    std::vector<std::pair<Dimension, Dimension>> pairs;
    pairs.reserve(test.size());
    for (std::size_t i = 0; i < test.size(); ++i) pairs.emplace_back(predictions[i].label, test[i].actual);
    return compute_metrics(build_confusion_matrix(pairs, model.dimensions));
}

namespace {

nlohmann::json opt(std::optional<double> v) { return v ? nlohmann::json(*v) : nlohmann::json(nullptr); }
std::optional<double> opt_from(const nlohmann::json& v) {
    if (v.is_null()) return std::nullopt;
    return v.get<double>();
}

} // namespace

nlohmann::json metrics_to_json(const MetricsReport& report) {
    nlohmann::json per_class = nlohmann::json::object();
    for (auto d : report.dimensions.all()) {
        const auto& m = report.per_class[d.index];
        per_class[report.dimensions.label(d)] = {
            {"precision", opt(m.precision)}, {"recall", opt(m.recall)}, {"f_measure", opt(m.f_measure)}};
    }
    return {
        {"accuracy", report.accuracy},
        {"kappa", report.kappa},
        {"precision", report.macro.precision},
        {"recall", report.macro.recall},
        {"f_measure", report.macro.f_measure},
        {"band", band_name(report.band)},
        {"kappa_above_threshold", report.kappa_above_threshold},
        {"n", report.n},
        {"dimensions", report.dimensions.labels()},
        {"per_class", std::move(per_class)},
        {"confusion", report.confusion},
    };
}

MetricsReport metrics_from_json(const nlohmann::json& j) {
    try {
        MetricsReport r;
        r.dimensions = DimensionSet(j.at("dimensions").get<std::vector<std::string>>());
        r.n = j.at("n").get<std::uint64_t>();
        r.accuracy = j.at("accuracy").get<double>();
        r.kappa = j.at("kappa").get<double>();
        r.macro = {j.at("precision").get<double>(), j.at("recall").get<double>(), j.at("f_measure").get<double>()};
        r.band = band_from_name(j.at("band").get<std::string>());
        r.kappa_above_threshold = j.at("kappa_above_threshold").get<bool>();
        r.confusion = j.at("confusion").get<std::vector<std::uint64_t>>();
        for (const auto& label : r.dimensions.labels()) {
            const auto& m = j.at("per_class").at(label);
            r.per_class.push_back({opt_from(m.at("precision")), opt_from(m.at("recall")), opt_from(m.at("f_measure"))});
        }
        return r;
    } catch (const nlohmann::json::exception& e) {
        throw DataError(std::string("malformed metrics JSON: ") + e.what());
    } catch (const ConfigError& e) {
        throw DataError(std::string("malformed metrics JSON: ") + e.what());
    }
}

} // namespace servqual
