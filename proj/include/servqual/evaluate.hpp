// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 servqual contributors

#pragma once

#include "servqual/classify.hpp"
#include "servqual/dimension.hpp"

#include <nlohmann/json_fwd.hpp>

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

namespace servqual {

/// Multiclass confusion matrix; rows are predicted labels, columns actual.
class ConfusionMatrix {
public:
    ConfusionMatrix(DimensionSet dimensions, std::vector<std::uint64_t> counts);

    /// rows[p][a]; must be square over `dimensions`.
    static ConfusionMatrix from_rows(DimensionSet dimensions, const std::vector<std::vector<std::uint64_t>>& rows);

    const DimensionSet& dimensions() const { return dimensions_; }
    std::size_t size() const { return dimensions_.size(); }
    std::uint64_t n() const { return n_; }
    std::uint64_t count(Dimension predicted, Dimension actual) const {
        return counts_[predicted.index * size() + actual.index];
    }
    std::uint64_t row_sum(Dimension predicted) const;
    std::uint64_t col_sum(Dimension actual) const;
    std::uint64_t trace() const;

    std::uint64_t tp(Dimension d) const { return count(d, d); }
    std::uint64_t fp(Dimension d) const { return row_sum(d) - tp(d); }
    std::uint64_t fn(Dimension d) const { return col_sum(d) - tp(d); }
    std::uint64_t tn(Dimension d) const { return n_ - tp(d) - fp(d) - fn(d); }

    const std::vector<std::uint64_t>& counts() const { return counts_; }

private:
    DimensionSet dimensions_;
    std::vector<std::uint64_t> counts_;
    std::uint64_t n_ = 0;
};

/// Tallies (predicted, actual) pairs. Throws DataError on an empty input or
/// a label outside `dimensions`.
ConfusionMatrix build_confusion_matrix(std::span<const std::pair<Dimension, Dimension>> pairs,
                                       const DimensionSet& dimensions);

/// TP / (TP + FN); nullopt when the class never occurs among actuals.
std::optional<double> recall(const ConfusionMatrix& cm, Dimension d);

/// TP / (TP + FP); nullopt when the class is never predicted.
std::optional<double> precision(const ConfusionMatrix& cm, Dimension d);

/// trace / n
double accuracy(const ConfusionMatrix& cm);

/// 2pr / (p + r), with 0 when p = r = 0.
double f_measure(double p, double r);

/// (P(A) - P(E)) / (1 - P(E)) with P(E) from the row/column marginals.
/// When P(E) = 1 the result is 1 for perfect agreement and 0 otherwise.
double cohen_kappa(const ConfusionMatrix& cm);

enum class AgreementBand { poor, slight, fair, moderate, substantial, almost_perfect };

/// Landis-Koch band; upper edges inclusive (0.20 Slight, 0.40 Fair, ...).
AgreementBand kappa_band(double kappa);
std::string_view band_name(AgreementBand band);

/// Quality threshold: kappa strictly above 0.75.
inline constexpr double kKappaQualityThreshold = 0.75;
inline bool meets_kappa_threshold(double kappa) { return kappa > kKappaQualityThreshold; }

struct ClassMetrics {
    std::optional<double> precision;
    std::optional<double> recall;
    std::optional<double> f_measure; ///< defined when precision and recall both are
};

struct MacroMetrics {
    double precision = 0.0;
    double recall = 0.0;
    double f_measure = 0.0;
};

struct MetricsReport {
    DimensionSet dimensions;
    std::uint64_t n = 0;
    double accuracy = 0.0;
    double kappa = 0.0;
    std::vector<ClassMetrics> per_class;
    MacroMetrics macro;
    AgreementBand band = AgreementBand::poor;
    bool kappa_above_threshold = false;
    std::vector<std::uint64_t> confusion; ///< row-major, rows predicted
};

/// Macro values are unweighted means over classes whose value is defined.
MetricsReport compute_metrics(const ConfusionMatrix& cm);

struct LabeledTestVector {
    WeightedVector features;
    Dimension actual;
};

/// Predicts every test vector, tallies the matrix, fills the report.
MetricsReport evaluate_model(const NbcModel& model, std::span<const LabeledTestVector> test);

/// {"accuracy", "kappa", "precision", "recall", "f_measure", "band",
///  "kappa_above_threshold", "n", "per_class": {label: {...}}, "confusion"}
/// Undefined per-class values are null.
nlohmann::json metrics_to_json(const MetricsReport& report);
MetricsReport metrics_from_json(const nlohmann::json& j);

} // namespace servqual
