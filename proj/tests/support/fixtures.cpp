// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 servqual contributors

#include "support/fixtures.hpp"

#include "servqual/classify.hpp"
#include "servqual/random.hpp"

#include <unistd.h>

#include <fstream>
#include <memory>
#include <sstream>
#include <stdexcept>

namespace servq_test {

using namespace servqual;

std::filesystem::path fixture(const std::string& name) {
    return std::filesystem::path(SERVQ_FIXTURE_DIR) / name;
}

std::string slurp(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::filesystem::path scratch_dir(const std::string& tag) {
    static std::uint64_t counter = 0;
    const auto base = std::filesystem::temp_directory_path() /
                      ("servq-test-" + std::to_string(::getpid()) + "-" + tag + "-" + std::to_string(counter++));
    std::filesystem::remove_all(base);
    std::filesystem::create_directories(base);
    return base;
}

namespace {
const std::vector<std::string> kBlockA = {"beach", "pool", "spa"};
const std::vector<std::string> kBlockB = {"staff", "service", "friendly"};
} // namespace

bool TwoTopicCorpus::in_first_block(const std::string& term) {
    return term == "beach" || term == "pool" || term == "spa";
}

TwoTopicCorpus two_topic_corpus(std::size_t n_docs, std::size_t length, std::uint64_t seed) {
    Rng rng(seed);
    TwoTopicCorpus c;
    for (std::size_t d = 0; d < n_docs; ++d) {
        const int b = static_cast<int>(d % 2);
        const auto& block = b == 0 ? kBlockA : kBlockB;
        TokenizedDocument doc{"d" + std::to_string(d), {}};
        for (std::size_t i = 0; i < length; ++i) doc.tokens.push_back(block[rng.uniform_index(block.size())]);
        c.docs.push_back(std::move(doc));
        c.block.push_back(b);
    }
    return c;
}

std::vector<TokenizedDocument> mixed_corpus(std::size_t n_docs, std::uint64_t seed) {
    static const std::vector<std::string> terms = {"beach", "breakfast", "clean", "friendly", "garden", "pool",
                                                   "quick", "room", "service", "spa", "staff", "view"};
    Rng rng(seed);
    std::vector<TokenizedDocument> docs;
    for (std::size_t d = 0; d < n_docs; ++d) {
        TokenizedDocument doc{"m" + std::to_string(d), {}};
        const auto len = 3 + rng.uniform_index(13);
        for (std::uint64_t i = 0; i < len; ++i) doc.tokens.push_back(terms[rng.uniform_index(terms.size())]);
        docs.push_back(std::move(doc));
    }
    return docs;
}

std::vector<PublishedShares> published_shares() {
    return {
        {"Mandapa", {49, 16, 5, 30}, "Responsiveness"},
        {"Komaneka", {35, 8, 10, 47}, "Empathy"},
        {"Viceroy", {7, 13, 24, 56}, "Assurance"},
        {"Katamama", {39, 11, 4, 46}, "Responsiveness"},
        {"Jamahal", {26, 32, 4, 38}, "Responsiveness"},
    };
}

std::vector<DimensionProfile> published_profiles() {
    std::vector<DimensionProfile> out;
    for (const auto& s : published_shares()) out.push_back(profile_from_counts(s.hotel, DimensionSet{}, s.percent));
    return out;
}

std::vector<NbCase> nb_grid() {
    static const std::vector<std::string> pool = {"ta", "tb", "tc", "td", "te", "tf", "tg", "th"};
    std::vector<NbCase> cases;
    Rng rng(0x5eed);
    for (std::size_t n_docs = 1; n_docs <= 6; ++n_docs) {
        for (std::size_t n_terms = 1; n_terms <= pool.size(); ++n_terms) {
            for (std::size_t n_labels = 2; n_labels <= 3; ++n_labels) {
                for (int rep = 0; rep < 8; ++rep) {
                    NbCase c;
                    c.labels = n_labels == 2 ? std::vector<std::string>{"X", "Y"}
                                             : std::vector<std::string>{"X", "Y", "Z"};
                    for (std::size_t d = 0; d < n_docs; ++d) {
                        NbTrainDoc doc;
                        doc.label = c.labels[rng.uniform_index(n_labels)];
                        const auto len = 1 + rng.uniform_index(4);
                        for (std::uint64_t i = 0; i < len; ++i) doc.tokens.push_back(pool[rng.uniform_index(n_terms)]);
                        c.train.push_back(std::move(doc));
                    }
                    c.queries.push_back({});
                    c.queries.push_back({"zz"});
                    for (std::size_t a = 0; a < n_terms; ++a) {
                        c.queries.push_back({pool[a]});
                        for (std::size_t b = a; b < n_terms; ++b) c.queries.push_back({pool[a], pool[b]});
                    }
                    for (int q = 0; q < 4; ++q) {
                        std::vector<std::string> query;
                        const auto len = 3 + rng.uniform_index(4);
                        for (std::uint64_t i = 0; i < len; ++i) query.push_back(pool[rng.uniform_index(n_terms)]);
                        query.push_back("zz");
                        c.queries.push_back(std::move(query));
                    }
                    cases.push_back(std::move(c));
                }
            }
        }
    }
    return cases;
}

std::vector<std::string> library_nb_labels(const NbCase& c) {
    const DimensionSet dims(c.labels);
    std::vector<TokenizedDocument> train_docs;
    for (std::size_t i = 0; i < c.train.size(); ++i)
        train_docs.push_back({"t" + std::to_string(i), c.train[i].tokens});
    auto vocab = std::make_shared<const Vocabulary>(Vocabulary::build(train_docs));
    std::vector<LabeledVector> train;
    for (std::size_t i = 0; i < c.train.size(); ++i)
        train.push_back({count_vectorize(train_docs[i], *vocab), dims.parse(c.train[i].label)});
    const auto model = train_nbc(train, vocab, dims, 1.0, Weighting::raw_count);
    std::vector<std::string> out;
    for (const auto& q : c.queries) {
        const auto p = predict(model, count_vectorize({"q", q}, *vocab));
        out.push_back(dims.label(p.label));
    }
    return out;
}

MetricsReport planted_metrics(std::uint64_t seed) {
    const DimensionSet dims;
    const auto reviews = load_reviews(fixture("planted_200.jsonl"), ReviewFormat::jsonl, dims);
    const auto docs = to_documents(reviews, Granularity::sentence);
    SplitConfig cfg;
    cfg.seed = seed;
    const auto split = split_train_test(docs, cfg, dims);

    const TextPipeline pipe;
    std::vector<TokenizedDocument> train_tok;
    for (const auto& d : split.train) train_tok.push_back(pipe(d.doc_id, d.text));
    auto vocab = std::make_shared<const Vocabulary>(Vocabulary::build(train_tok));
    std::vector<LabeledVector> train;
    for (std::size_t i = 0; i < train_tok.size(); ++i)
        train.push_back({tfidf_vectorize(train_tok[i], *vocab), split.train[i].label});
    const auto model = train_nbc(train, vocab, dims, 1.0);

    std::vector<LabeledTestVector> test;
    for (const auto& d : split.test) test.push_back({tfidf_vectorize(pipe(d.doc_id, d.text), *vocab), d.label});
    return evaluate_model(model, test);
}

} // namespace servq_test
