// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 servqual contributors

#include "servqual/topicmodel.hpp"

#include "servqual/error.hpp"
#include "servqual/io.hpp"
#include "servqual/random.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>

namespace servqual {

void LdaConfig::validate() const {
    if (k < 1) throw ConfigError("LDA: k must be at least 1");
    if (alpha && !(*alpha > 0.0)) throw ConfigError("LDA: alpha must be positive");
    if (!(beta > 0.0)) throw ConfigError("LDA: beta must be positive");
    if (thin < 1) throw ConfigError("LDA: thinning interval must be at least 1");
    if (!(burn_in > 0 && burn_in < iterations)) throw ConfigError("LDA: burn-in must satisfy 0 < burn_in < iterations");
}

namespace {

class GibbsSampler {
public:
    GibbsSampler(const std::vector<std::vector<std::uint32_t>>& words, std::size_t k, std::size_t n_terms,
                 double alpha, double beta, std::uint64_t seed)
        : words_(words), k_(k), n_terms_(n_terms), alpha_(alpha), beta_(beta), rng_(seed),
          doc_topic_(words.size() * k, 0), topic_term_(k * n_terms, 0), topic_total_(k, 0),
          doc_length_(words.size(), 0), weights_(k, 0.0) {
        z_.resize(words.size());
        for (std::size_t d = 0; d < words.size(); ++d) {
            doc_length_[d] = static_cast<std::uint32_t>(words[d].size());
            z_[d].resize(words[d].size());
            for (std::size_t i = 0; i < words[d].size(); ++i) {
                const auto t = static_cast<std::uint32_t>(rng_.uniform_index(k_));
                z_[d][i] = t;
                add(d, words[d][i], t);
            }
        }
    }

    void sweep() {
        const double v_beta = static_cast<double>(n_terms_) * beta_;
        for (std::size_t d = 0; d < words_.size(); ++d) {
            const auto& doc = words_[d];
            std::uint32_t* dt = doc_topic_.data() + d * k_;
            for (std::size_t i = 0; i < doc.size(); ++i) {
                const std::uint32_t w = doc[i];
                remove(d, w, z_[d][i]);
                double total = 0.0;
                for (std::size_t t = 0; t < k_; ++t) {
                    total += (dt[t] + alpha_) * (topic_term_[t * n_terms_ + w] + beta_) / (topic_total_[t] + v_beta);
                    weights_[t] = total;
                }
                const double u = rng_.uniform01() * total;
                std::size_t t = 0;
                while (t + 1 < k_ && weights_[t] <= u) ++t;
                z_[d][i] = static_cast<std::uint32_t>(t);
                add(d, w, t);
            }
        }
    }

    GibbsCounts counts() const {
        return GibbsCounts{k_, n_terms_, doc_topic_, topic_term_, topic_total_, doc_length_};
    }

    const std::vector<std::vector<std::uint32_t>>& assignments() const { return z_; }

private:
    void add(std::size_t d, std::uint32_t w, std::size_t t) {
        ++doc_topic_[d * k_ + t];
        ++topic_term_[t * n_terms_ + w];
        ++topic_total_[t];
    }
    void remove(std::size_t d, std::uint32_t w, std::size_t t) {
        --doc_topic_[d * k_ + t];
        --topic_term_[t * n_terms_ + w];
        --topic_total_[t];
    }

    const std::vector<std::vector<std::uint32_t>>& words_;
    std::size_t k_;
    std::size_t n_terms_;
    double alpha_;
    double beta_;
    Rng rng_;
    std::vector<std::uint32_t> doc_topic_;
    std::vector<std::uint32_t> topic_term_;
    std::vector<std::uint32_t> topic_total_;
    std::vector<std::uint32_t> doc_length_;
    std::vector<std::vector<std::uint32_t>> z_;
    std::vector<double> weights_;
};

// Running sums of the count tables over retained sweeps.
struct CountAccumulator {
    std::vector<std::uint64_t> doc_topic;
    std::vector<std::uint64_t> topic_term;
    std::vector<std::uint64_t> topic_total;
    std::uint64_t samples = 0;

    void add(const GibbsCounts& c) {
        if (samples == 0) {
            doc_topic.assign(c.doc_topic.size(), 0);
            topic_term.assign(c.topic_term.size(), 0);
            topic_total.assign(c.topic_total.size(), 0);
        }
        for (std::size_t i = 0; i < c.doc_topic.size(); ++i) doc_topic[i] += c.doc_topic[i];
        for (std::size_t i = 0; i < c.topic_term.size(); ++i) topic_term[i] += c.topic_term[i];
        for (std::size_t i = 0; i < c.topic_total.size(); ++i) topic_total[i] += c.topic_total[i];
        ++samples;
    }
};

bool retained(std::size_t sweep, const LdaConfig& cfg) {
    return cfg.estimator == LdaEstimator::averaged && sweep > cfg.burn_in && (sweep - cfg.burn_in) % cfg.thin == 0;
}

} // namespace

LdaModel fit_lda(std::span<const TokenizedDocument> docs, std::shared_ptr<const Vocabulary> vocab,
                 const LdaConfig& cfg, const SweepObserver& observer) {
    cfg.validate();
    if (!vocab) throw ConfigError("fit_lda: vocabulary is required");

    LdaModel model;
    model.config = cfg;
    model.vocab = vocab;
    model.k = cfg.k;
    const std::size_t n_terms = vocab->size();
    model.term_frequency.assign(n_terms, 0);

    for (const auto& doc : docs) {
        std::vector<std::uint32_t> ids;
        ids.reserve(doc.tokens.size());
        for (const auto& t : doc.tokens) {
            if (auto id = vocab->find(t)) ids.push_back(*id);
        }
        if (ids.empty()) {
            model.warnings.push_back("document " + doc.doc_id + " has no in-vocabulary tokens; dropped");
            continue;
        }
        for (auto id : ids) ++model.term_frequency[id];
        model.total_tokens += ids.size();
        model.doc_ids.push_back(doc.doc_id);
        model.words.push_back(std::move(ids));
    }
    if (model.words.empty()) throw DataError("topic model: every document is empty after preprocessing");
    if (cfg.k > model.total_tokens) {
        throw DataError("topic model: k = " + std::to_string(cfg.k) + " exceeds the token count " +
                        std::to_string(model.total_tokens));
    }

    const double alpha = cfg.doc_topic_prior();
    const double beta = cfg.beta;
    const std::size_t k = cfg.k;
    GibbsSampler sampler(model.words, k, n_terms, alpha, beta, cfg.seed);
    CountAccumulator acc;
    for (std::size_t sweep = 1; sweep <= cfg.iterations; ++sweep) {
        sampler.sweep();
        const auto counts = sampler.counts();
        if (observer) observer(sweep, counts);
        if (retained(sweep, cfg)) acc.add(counts);
    }
    if (acc.samples == 0) acc.add(sampler.counts());
    model.assignments = sampler.assignments();

    const double samples = static_cast<double>(acc.samples);
    const double v_beta = static_cast<double>(n_terms) * beta;
    const double n_tokens = static_cast<double>(model.total_tokens);
    model.phi.assign(k * n_terms, 0.0);
    model.topic_proportions.assign(k, 0.0);
    model.topic_term_frequency.assign(k * n_terms, 0.0);
    for (std::size_t t = 0; t < k; ++t) {
        const double n_t = static_cast<double>(acc.topic_total[t]) / samples;
        const double denom = n_t + v_beta;
        for (std::size_t w = 0; w < n_terms; ++w) {
            const double n_tw = static_cast<double>(acc.topic_term[t * n_terms + w]) / samples;
            model.phi[t * n_terms + w] = (n_tw + beta) / denom;
        }
        model.topic_proportions[t] = n_t / n_tokens;
        for (std::size_t w = 0; w < n_terms; ++w) {
            model.topic_term_frequency[t * n_terms + w] =
                model.phi[t * n_terms + w] * model.topic_proportions[t] * n_tokens;
        }
    }

    const std::size_t n_docs = model.words.size();
    const double k_alpha = static_cast<double>(k) * alpha;
    model.theta.assign(n_docs * k, 0.0);
    for (std::size_t d = 0; d < n_docs; ++d) {
        const double n_d = static_cast<double>(model.words[d].size());
        for (std::size_t t = 0; t < k; ++t) {
            const double n_dt = static_cast<double>(acc.doc_topic[d * k + t]) / samples;
            model.theta[d * k + t] = (n_dt + alpha) / (n_d + k_alpha);
        }
    }
    return model;
}

double relevance_score(double phi, double corpus_probability, double lambda) {
    return lambda * std::log(phi) + (1.0 - lambda) * std::log(phi / corpus_probability);
}

RelevanceRanking rank_terms(std::span<const std::string> terms, std::span<const double> phi_row,
                            std::span<const std::uint64_t> term_frequency, std::size_t topic, double lambda) {
    if (!(lambda >= 0.0 && lambda <= 1.0)) throw ConfigError("lambda must lie in [0, 1]");
    if (terms.size() != phi_row.size() || terms.size() != term_frequency.size())
        throw DataError("relevance: terms, phi and term_frequency differ in length");
    std::uint64_t total = 0;
    for (auto f : term_frequency) total += f;

    RelevanceRanking ranking;
    ranking.topic = topic;
    ranking.lambda = lambda;
    ranking.ranked_terms.reserve(terms.size());
    for (std::size_t w = 0; w < terms.size(); ++w) {
        const double p = static_cast<double>(term_frequency[w]) / static_cast<double>(total);
        ranking.ranked_terms.push_back(RankedTerm{terms[w], relevance_score(phi_row[w], p, lambda), phi_row[w], p});
    }
    std::ranges::sort(ranking.ranked_terms, [](const RankedTerm& a, const RankedTerm& b) {
        if (a.relevance != b.relevance) return a.relevance > b.relevance;
        return a.term < b.term;
    });
    return ranking;
}

RelevanceRanking term_relevance(const LdaModel& model, std::size_t topic, double lambda) {
    if (topic >= model.k) throw ConfigError("topic index out of range");
    return rank_terms(model.vocab->terms(), model.phi_row(topic), model.term_frequency, topic, lambda);
}

std::vector<std::string> top_terms(const LdaModel& model, std::size_t topic, std::size_t n, double lambda) {
    auto ranking = term_relevance(model, topic, lambda);
    std::vector<std::string> out;
    for (std::size_t i = 0; i < std::min(n, ranking.ranked_terms.size()); ++i) {
        out.push_back(std::move(ranking.ranked_terms[i].term));
    }
    return out;
}

nlohmann::json viz_payload(const std::map<std::string, LdaModel>& models, double lambda_default) {
    if (models.empty()) throw DataError("no topic models to export");
    if (!(lambda_default >= 0.0 && lambda_default <= 1.0)) throw ConfigError("lambda must lie in [0, 1]");
    nlohmann::json hotels = nlohmann::json::object();
    for (const auto& [hotel, model] : models) {
        nlohmann::json topics = nlohmann::json::array();
        const std::size_t v = model.n_terms();
        for (std::size_t t = 0; t < model.k; ++t) {
            auto phi = model.phi_row(t);
            std::vector<double> ttf(model.topic_term_frequency.begin() + static_cast<std::ptrdiff_t>(t * v),
                                    model.topic_term_frequency.begin() + static_cast<std::ptrdiff_t>((t + 1) * v));
            topics.push_back({{"proportion", model.topic_proportions[t]},
                              {"phi", std::vector<double>(phi.begin(), phi.end())},
                              {"topic_term_frequency", std::move(ttf)}});
        }
        hotels[hotel] = {{"terms", model.vocab->terms()},
                         {"term_frequency", model.term_frequency},
                         {"topics", std::move(topics)}};
    }
    return {{"lambda_default", lambda_default}, {"hotels", std::move(hotels)}};
}

void export_viz_data(const std::map<std::string, LdaModel>& models, double lambda_default,
                     const std::filesystem::path& path) {
    write_json_file(path, viz_payload(models, lambda_default));
}

std::map<std::string, std::vector<std::vector<std::string>>> top_terms_from_payload(const nlohmann::json& payload,
                                                                                   std::size_t n, double lambda) {
    std::map<std::string, std::vector<std::vector<std::string>>> out;
    try {
        for (const auto& [hotel, block] : payload.at("hotels").items()) {
            const auto terms = block.at("terms").get<std::vector<std::string>>();
            const auto tf = block.at("term_frequency").get<std::vector<std::uint64_t>>();
            auto& per_topic = out[hotel];
            std::size_t topic = 0;
            for (const auto& t : block.at("topics")) {
                const auto phi = t.at("phi").get<std::vector<double>>();
                auto ranking = rank_terms(terms, phi, tf, topic++, lambda);
                std::vector<std::string> words;
                for (std::size_t i = 0; i < std::min(n, ranking.ranked_terms.size()); ++i) {
                    words.push_back(ranking.ranked_terms[i].term);
                }
                per_topic.push_back(std::move(words));
            }
        }
    } catch (const nlohmann::json::exception& e) {
        throw DataError(std::string("malformed topic payload: ") + e.what());
    }
    return out;
}

} // namespace servqual
