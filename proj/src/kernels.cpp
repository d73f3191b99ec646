// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 servqual contributors

// Batch kernels. Each has a serial reference path and an OpenMP path; the
// parallel path partitions work so that every floating-point reduction
// runs in the same order as the serial one, keeping results bit-identical.

#include "servqual/classify.hpp"
#include "servqual/preprocess.hpp"
#include "servqual/topicmodel.hpp"

#include <omp.h>

#include <exception>

namespace servqual {

std::vector<WeightedVector> vectorize_batch(std::span<const TokenizedDocument> docs, const Vocabulary& vocab,
                                            Weighting weighting, Exec exec) {
    std::vector<WeightedVector> out(docs.size());
    const auto n = static_cast<std::ptrdiff_t>(docs.size());
    if (exec == Exec::serial) {
        for (std::ptrdiff_t i = 0; i < n; ++i) out[i] = vectorize(docs[i], vocab, weighting);
        return out;
    }
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < n; ++i) out[i] = vectorize(docs[i], vocab, weighting);
    return out;
}

namespace {

// Sums one class row over the training set in document order.
void accumulate_row(std::span<const LabeledVector> train, std::size_t d, std::size_t n_terms, double* row,
                    std::uint64_t& n_docs) {
    for (const auto& ex : train) {
        if (ex.label.index != d) continue;
        ++n_docs;
        for (auto [pos, w] : ex.features.entries) {
            if (pos < n_terms) row[pos] += w;
        }
    }
}

} // namespace

ClassWeights accumulate_class_weights(std::span<const LabeledVector> train, std::size_t n_dims, std::size_t n_terms,
                                      Exec exec) {
    ClassWeights stats{std::vector<double>(n_dims * n_terms, 0.0), std::vector<std::uint64_t>(n_dims, 0)};
    const auto dims = static_cast<std::ptrdiff_t>(n_dims);
    if (exec == Exec::serial) {
        for (std::ptrdiff_t d = 0; d < dims; ++d) {
            accumulate_row(train, static_cast<std::size_t>(d), n_terms, stats.weight.data() + d * n_terms, stats.n_docs[d]);
        }
        return stats;
    }
    // one class row per thread; rows are disjoint
#pragma omp parallel for schedule(dynamic, 1)
    for (std::ptrdiff_t d = 0; d < dims; ++d) {
        accumulate_row(train, static_cast<std::size_t>(d), n_terms, stats.weight.data() + d * n_terms, stats.n_docs[d]);
    }
    return stats;
}

std::vector<Prediction> predict_batch(const NbcModel& model, std::span<const WeightedVector> docs, Exec exec) {
    std::vector<Prediction> out(docs.size());
    const auto n = static_cast<std::ptrdiff_t>(docs.size());
    if (exec == Exec::serial) {
        for (std::ptrdiff_t i = 0; i < n; ++i) out[i] = predict(model, docs[i]);
        return out;
    }
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < n; ++i) out[i] = predict(model, docs[i]);
    return out;
}

std::vector<LdaModel> fit_lda_many(std::span<const LdaJob> jobs, Exec exec) {
    std::vector<LdaModel> out(jobs.size());
    const auto n = static_cast<std::ptrdiff_t>(jobs.size());
    if (exec == Exec::serial) {
        for (std::ptrdiff_t i = 0; i < n; ++i) out[i] = fit_lda(jobs[i].docs, jobs[i].vocab, jobs[i].config);
        return out;
    }
    std::vector<std::exception_ptr> errors(jobs.size());
#pragma omp parallel for schedule(dynamic, 1)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        try {
            out[i] = fit_lda(jobs[i].docs, jobs[i].vocab, jobs[i].config);
        } catch (...) {
            errors[i] = std::current_exception();
        }
    }
    for (auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
    return out;
}

} // namespace servqual
