// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 servqual contributors

#include "support/fixtures.hpp"
#include "support/oracles.hpp"

#include "servqual/classify.hpp"
#include "servqual/error.hpp"
#include "servqual/io.hpp"
#include "servqual/random.hpp"

#include <catch_amalgamated.hpp>
#include <nlohmann/json.hpp>

#include <cmath>
#include <limits>

using namespace servqual;
using Catch::Matchers::ContainsSubstring;
using Catch::Matchers::WithinAbs;

namespace {

struct XyFixture {
    DimensionSet dims{{"X", "Y"}};
    std::vector<TokenizedDocument> docs{{"1", {"good", "staff"}}, {"2", {"great", "staff"}},
                                        {"3", {"dirty", "pool"}}, {"4", {"cold", "pool"}}};
    std::shared_ptr<const Vocabulary> vocab = std::make_shared<const Vocabulary>(Vocabulary::build(docs));
    NbcModel model = train(Weighting::raw_count);

    NbcModel train(Weighting w) const {
        std::vector<LabeledVector> tr;
        for (std::size_t i = 0; i < docs.size(); ++i)
            tr.push_back({vectorize(docs[i], *vocab, w), Dimension{i < 2 ? 0u : 1u}});
        return train_nbc(tr, vocab, dims, 1.0, w);
    }
    WeightedVector x(std::vector<std::string> tokens) const { return count_vectorize({"q", std::move(tokens)}, *vocab); }
};

double sum_exp(std::span<const double> v) {
    double s = 0;
    for (double x : v) s += std::exp(x);
    return s;
}

} // namespace

TEST_CASE("nbc: hand-computed smoothed estimates", "[classify]") {
    XyFixture f;
    const auto staff = *f.vocab->find("staff");
    REQUIRE(f.vocab->size() == 6);
    CHECK_THAT(std::exp(f.model.likelihood(Dimension{0}, staff)), WithinAbs(0.3, 1e-12));
    CHECK_THAT(std::exp(f.model.likelihood(Dimension{1}, staff)), WithinAbs(0.1, 1e-12));
    CHECK_THAT(std::exp(f.model.log_prior[0]), WithinAbs(0.5, 1e-12));
    CHECK_THAT(std::exp(f.model.log_prior[1]), WithinAbs(0.5, 1e-12));

    const auto score = log_posterior(f.model, f.x({"staff"}));
    CHECK_THAT(score[0], WithinAbs(std::log(0.5) + std::log(0.3), 1e-12));
    CHECK_THAT(score[1], WithinAbs(std::log(0.5) + std::log(0.1), 1e-12));
    CHECK(score[0] > score[1]);
    CHECK(predict(f.model, f.x({"staff"})).label == Dimension{0});
}

TEST_CASE("nbc: degenerate and prior-only cases", "[classify]") {
    XyFixture f;
    const auto empty = log_posterior(f.model, WeightedVector{});
    CHECK(empty == f.model.log_prior);
    CHECK(predict(f.model, WeightedVector{}).label == Dimension{0});
    CHECK(predict(f.model, f.x({"sauna", "gym"})).label == predict(f.model, WeightedVector{}).label);

    // a never-seen term keeps a positive smoothing floor
    const auto good = *f.vocab->find("good");
    CHECK_THAT(std::exp(f.model.likelihood(Dimension{1}, good)), WithinAbs(1.0 / 10.0, 1e-12));

    // one document, one label
    const std::vector<TokenizedDocument> one{{"1", {"pool"}}};
    auto v = std::make_shared<const Vocabulary>(Vocabulary::build(one));
    const std::vector<LabeledVector> tr{{count_vectorize(one[0], *v), Dimension{0}}};
    const auto m = train_nbc(tr, v, f.dims, 1.0, Weighting::raw_count);
    CHECK(m.log_prior[0] == 0.0);
    CHECK(m.log_prior[1] == -std::numeric_limits<double>::infinity());
    REQUIRE(m.warnings.size() == 1);
    CHECK_THAT(m.warnings[0], ContainsSubstring("'Y'"));
    CHECK(predict(m, WeightedVector{}).label == Dimension{0});
}

TEST_CASE("nbc: errors", "[classify]") {
    XyFixture f;
    CHECK_THROWS_AS(train_nbc({}, f.vocab, f.dims, 1.0), DataError);
    const std::vector<LabeledVector> bad{{WeightedVector{}, Dimension{7}}};
    CHECK_THROWS_AS(train_nbc(bad, f.vocab, f.dims, 1.0), DataError);
    const std::vector<LabeledVector> ok{{WeightedVector{}, Dimension{0}}};
    CHECK_THROWS_AS(train_nbc(ok, f.vocab, f.dims, 0.0), ConfigError);
}

TEST_CASE("nbc: doubling weights preserves the argmax under equal priors", "[classify][property]") {
    XyFixture f;
    Rng rng(8);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<std::string> toks;
        for (std::uint64_t i = 0, n = 1 + rng.uniform_index(6); i < n; ++i)
            toks.push_back(f.vocab->term(rng.uniform_index(f.vocab->size())));
        auto x = f.x(toks);
        auto x2 = x;
        for (auto& e : x2.entries) e.second *= 2;
        REQUIRE(predict(f.model, x).label == predict(f.model, x2).label);
    }
}

TEST_CASE("nbc: matches the exact-arithmetic oracle on the small-corpus grid", "[classify][oracle]") {
    const auto grid = servq_test::nb_grid();
    std::size_t checked = 0, ties = 0;
    for (const auto& c : grid) {
        const auto got = servq_test::library_nb_labels(c);
        for (std::size_t q = 0; q < c.queries.size(); ++q) {
            const auto want = servq_test::brute_force_nb(c.train, c.labels, c.queries[q], 1);
            ties += want.tied;
            if (got[q] != want.label) {
                INFO("query " << q << " of corpus with " << c.train.size() << " docs");
                REQUIRE(got[q] == want.label);
            }
            ++checked;
        }
    }
    CHECK(checked > 10000);
    CHECK(ties > 0); // the grid exercises the tie-break
}

TEST_CASE("nbc: normalization", "[classify][property]") {
    Rng rng(17);
    const DimensionSet dims;
    for (int trial = 0; trial < 50; ++trial) {
        const auto corpus = servq_test::mixed_corpus(4 + rng.uniform_index(20), rng.next());
        auto vocab = std::make_shared<const Vocabulary>(Vocabulary::build(corpus));
        for (auto w : {Weighting::tfidf, Weighting::raw_count}) {
            std::vector<LabeledVector> tr;
            for (const auto& d : corpus)
                tr.push_back({vectorize(d, *vocab, w), Dimension{static_cast<std::uint32_t>(rng.uniform_index(4))}});
            const auto m = train_nbc(tr, vocab, dims, 0.5 + rng.uniform01(), w);
            double prior_sum = 0;
            for (double p : m.log_prior) prior_sum += std::exp(p);
            REQUIRE_THAT(prior_sum, WithinAbs(1.0, 1e-9));
            for (std::size_t d = 0; d < 4; ++d) {
                const auto row = std::span<const double>(m.log_likelihood).subspan(d * vocab->size(), vocab->size());
                REQUIRE_THAT(sum_exp(row), WithinAbs(1.0, 1e-9));
            }
            for (std::size_t d = 0; d < 4; ++d) {
                const bool seen = std::any_of(tr.begin(), tr.end(), [&](auto& t) { return t.label.index == d; });
                REQUIRE((m.log_prior[d] > -std::numeric_limits<double>::infinity()) == seen);
            }
        }
    }
}

TEST_CASE("nbc: label renaming permutes predictions", "[classify][property]") {
    Rng rng(23);
    for (int trial = 0; trial < 40; ++trial) {
        const auto corpus = servq_test::mixed_corpus(12, rng.next());
        auto vocab = std::make_shared<const Vocabulary>(Vocabulary::build(corpus));
        std::vector<std::uint32_t> raw;
        for (std::size_t i = 0; i < corpus.size(); ++i) raw.push_back(static_cast<std::uint32_t>(rng.uniform_index(3)));

        // names whose sorted order reverses the original: a->"c", b->"b", c->"a"
        const DimensionSet abc({"a", "b", "c"});
        auto train_with = [&](auto relabel) {
            std::vector<LabeledVector> tr;
            for (std::size_t i = 0; i < corpus.size(); ++i)
                tr.push_back({tfidf_vectorize(corpus[i], *vocab), Dimension{relabel(raw[i])}});
            return train_nbc(tr, vocab, abc, 1.0);
        };
        const auto m1 = train_with([](std::uint32_t l) { return l; });
        const auto m2 = train_with([](std::uint32_t l) { return 2 - l; });
        for (const auto& doc : servq_test::mixed_corpus(20, rng.next())) {
            const auto x = tfidf_vectorize(doc, *vocab);
            const auto s1 = log_posterior(m1, x);
            const auto s2 = log_posterior(m2, x);
            for (std::uint32_t l = 0; l < 3; ++l) REQUIRE(s1[l] == s2[2 - l]);
            const auto best = *std::max_element(s1.begin(), s1.end());
            const auto near_best = std::count_if(s1.begin(), s1.end(), [&](double s) {
                return s >= best - kScoreTieTolerance * std::max(1.0, std::abs(best));
            });
            if (near_best == 1)
                REQUIRE(predict(m2, x).label.index == 2 - predict(m1, x).label.index);
        }
    }
}

TEST_CASE("nbc: shifting all scores keeps the argmax", "[classify][property]") {
    XyFixture f;
    auto shifted = f.model;
    for (auto& p : shifted.log_prior) p -= 3.25;
    for (const auto& toks : {std::vector<std::string>{"staff"}, {"pool", "cold"}, {}, {"good", "pool"}})
        CHECK(predict(shifted, f.x(toks)).label == predict(f.model, f.x(toks)).label);
}

TEST_CASE("nbc: batch prediction is element-wise", "[classify]") {
    XyFixture f;
    CHECK(predict_batch(f.model, std::vector<WeightedVector>{}).empty());
    std::vector<WeightedVector> xs;
    Rng rng(4);
    for (int i = 0; i < 1000; ++i) {
        auto x = f.x({f.vocab->term(rng.uniform_index(6)), f.vocab->term(rng.uniform_index(6))});
        x.doc_id = "doc" + std::to_string(i);
        xs.push_back(std::move(x));
    }
    const auto ps = predict_batch(f.model, xs);
    REQUIRE(ps.size() == 1000);
    for (std::size_t i = 0; i < xs.size(); ++i) {
        REQUIRE(ps[i].doc_id == xs[i].doc_id);
        REQUIRE(ps[i].label == predict(f.model, xs[i]).label);
    }
}

TEST_CASE("nbc: model json round trip is bit exact", "[classify]") {
    XyFixture f;
    const auto tfidf_model = f.train(Weighting::tfidf);
    const auto dir = servq_test::scratch_dir("model");
    save_model(tfidf_model, dir / "model.json");
    REQUIRE(std::filesystem::exists(dir / "vocab.json"));
    const auto loaded = load_model(dir / "model.json");
    CHECK(loaded.log_prior == tfidf_model.log_prior);
    CHECK(loaded.log_likelihood == tfidf_model.log_likelihood);
    CHECK(loaded.dimensions == tfidf_model.dimensions);
    CHECK(*loaded.vocab == *tfidf_model.vocab);
    CHECK(loaded.weighting == Weighting::tfidf);

    const auto j = read_json_file(dir / "model.json");
    for (const char* key : {"dimensions", "log_prior", "log_likelihood", "alpha", "vocab_ref"}) CHECK(j.contains(key));
    CHECK(j["log_likelihood"].size() == 12);

    // the same bytes come out of a second save
    save_model(loaded, dir / "again.json", "vocab2.json");
    auto j2 = read_json_file(dir / "again.json");
    j2["vocab_ref"] = j["vocab_ref"];
    CHECK(j2.dump() == j.dump());

    // model with an untrained class serializes its prior as null
    const std::vector<TokenizedDocument> one{{"1", {"pool"}}};
    auto v = std::make_shared<const Vocabulary>(Vocabulary::build(one));
    const std::vector<LabeledVector> tr{{count_vectorize(one[0], *v), Dimension{1}}};
    const auto partial = train_nbc(tr, v, f.dims, 1.0);
    const auto pj = model_to_json(partial, "vocab.json");
    CHECK(pj["log_prior"]["X"].is_null());
    CHECK(model_from_json(pj, v).log_prior[0] == -std::numeric_limits<double>::infinity());
}

TEST_CASE("nbc: vocabulary mismatch is a data error", "[classify]") {
    XyFixture f;
    const auto dir = servq_test::scratch_dir("mismatch");
    save_model(f.model, dir / "model.json");
    const std::vector<TokenizedDocument> other{{"1", {"beach", "pool"}}};
    write_json_file(dir / "vocab.json", vocabulary_to_json(Vocabulary::build(other)));
    CHECK_THROWS_WITH(load_model(dir / "model.json"), ContainsSubstring("mismatch"));
    CHECK_THROWS_AS(load_model(dir / "absent.json"), DataError);
}
