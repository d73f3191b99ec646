// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 servqual contributors

// Serial reference vs OpenMP path for each batch kernel.
//
//   ./servq_bench --benchmark_filter=Predict
//   OMP_NUM_THREADS=8 ./servq_bench

#include "servqual/classify.hpp"
#include "servqual/preprocess.hpp"
#include "servqual/random.hpp"
#include "servqual/topicmodel.hpp"

#include <benchmark/benchmark.h>

#include <memory>
#include <string>
#include <vector>

namespace {

using namespace servqual;

constexpr std::size_t kTerms = 2000;
constexpr std::size_t kDims = 4;

std::vector<TokenizedDocument> synthetic_docs(std::size_t n, std::size_t length, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<TokenizedDocument> docs;
    docs.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        TokenizedDocument d{"d" + std::to_string(i), {}};
        for (std::size_t j = 0; j < length; ++j) d.tokens.push_back("w" + std::to_string(rng.uniform_index(kTerms)));
        docs.push_back(std::move(d));
    }
    return docs;
}

struct Fixture {
    std::vector<TokenizedDocument> docs;
    std::shared_ptr<const Vocabulary> vocab;
    std::vector<WeightedVector> vectors;
    std::vector<LabeledVector> labeled;
    NbcModel model;

    explicit Fixture(std::size_t n) : docs(synthetic_docs(n, 40, 7)) {
        vocab = std::make_shared<const Vocabulary>(Vocabulary::build(docs));
        vectors = vectorize_batch(docs, *vocab, Weighting::tfidf, Exec::serial);
        for (std::size_t i = 0; i < vectors.size(); ++i)
            labeled.push_back({vectors[i], Dimension{static_cast<std::uint32_t>(i % kDims)}});
        model = train_nbc(labeled, vocab, DimensionSet(), 1.0, Weighting::tfidf, Exec::serial);
    }
};

const Fixture& fixture() {
    static const Fixture f(20000);
    return f;
}

Exec exec_of(const benchmark::State& state) { return state.range(0) == 0 ? Exec::serial : Exec::parallel; }

void BM_Vectorize(benchmark::State& state) {
    const auto& f = fixture();
    for (auto _ : state) benchmark::DoNotOptimize(vectorize_batch(f.docs, *f.vocab, Weighting::tfidf, exec_of(state)));
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * f.docs.size()));
}
BENCHMARK(BM_Vectorize)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond);

void BM_AccumulateClassWeights(benchmark::State& state) {
    const auto& f = fixture();
    for (auto _ : state)
        benchmark::DoNotOptimize(accumulate_class_weights(f.labeled, kDims, f.vocab->size(), exec_of(state)));
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * f.labeled.size()));
}
BENCHMARK(BM_AccumulateClassWeights)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond);

void BM_PredictBatch(benchmark::State& state) {
    const auto& f = fixture();
    for (auto _ : state) benchmark::DoNotOptimize(predict_batch(f.model, f.vectors, exec_of(state)));
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * f.vectors.size()));
}
BENCHMARK(BM_PredictBatch)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond);

void BM_FitLdaMany(benchmark::State& state) {
    std::vector<LdaJob> jobs;
    for (std::uint64_t h = 0; h < 5; ++h) {
        auto docs = synthetic_docs(200, 30, 100 + h);
        auto vocab = std::make_shared<const Vocabulary>(Vocabulary::build(docs));
        LdaConfig cfg;
        cfg.k = 5;
        cfg.iterations = 50;
        cfg.burn_in = 40;
        cfg.seed = h;
        jobs.push_back(LdaJob{std::move(docs), std::move(vocab), cfg});
    }
    for (auto _ : state) benchmark::DoNotOptimize(fit_lda_many(jobs, exec_of(state)));
}
BENCHMARK(BM_FitLdaMany)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
