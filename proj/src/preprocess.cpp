// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 servqual contributors

#include "servqual/preprocess.hpp"

#include "servqual/error.hpp"
#include "servqual/porter.hpp"
#include "servqual/random.hpp"

#include "stopwords_en.inc"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

namespace servqual {

namespace {

bool is_ascii_letter(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); }

char to_lower_ascii(char c) { return (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : c; }

} // namespace

std::vector<std::string> tokenize(std::string_view text) {
    std::vector<std::string> tokens;
    std::string current;
    for (char c : text) {
        if (is_ascii_letter(c)) {
            current.push_back(to_lower_ascii(c));
        } else if (!current.empty()) {
            tokens.push_back(std::move(current));
            current.clear();
        }
    }
    if (!current.empty()) tokens.push_back(std::move(current));
    return tokens;
}

std::vector<std::string> remove_stopwords(std::vector<std::string> tokens, const StopList& stoplist) {
    std::erase_if(tokens, [&](const std::string& t) { return stoplist.contains(t); });
    return tokens;
}

StopList parse_stoplist(std::string_view content) {
    StopList words;
    std::istringstream in{std::string(content)};
    std::string line;
    while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::string word;
        for (char c : line) {
            if (!std::isspace(static_cast<unsigned char>(c))) word.push_back(to_lower_ascii(c));
        }
        if (!word.empty()) words.insert(std::move(word));
    }
    return words;
}

const StopList& default_stoplist() {
    static const StopList list = parse_stoplist(kDefaultStopwords);
    return list;
}

StopList load_stoplist(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot read stop-word list " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_stoplist(buf.str());
}

std::vector<std::string> TextPipeline::tokens(std::string_view text) const {
    auto toks = tokenize(text);
    if (filter_stopwords) toks = remove_stopwords(std::move(toks), stoplist);
    if (stem) {
        std::vector<std::string> stemmed;
        stemmed.reserve(toks.size());
        for (const auto& t : toks) {
            auto s = porter_stem(t);
            if (!s.empty()) stemmed.push_back(std::move(s));
        }
        toks = std::move(stemmed);
    }
    return toks;
}

TokenizedDocument TextPipeline::operator()(std::string doc_id, std::string_view text) const {
    return TokenizedDocument{std::move(doc_id), tokens(text)};
}

Vocabulary Vocabulary::build(std::span<const TokenizedDocument> docs) {
    if (docs.empty()) throw DataError("cannot build a vocabulary from zero documents");
    std::map<std::string, std::uint32_t> df;
    for (const auto& doc : docs) {
        std::vector<std::string_view> uniq(doc.tokens.begin(), doc.tokens.end());
        std::ranges::sort(uniq);
        auto [first, last] = std::ranges::unique(uniq);
        uniq.erase(first, last);
        for (auto t : uniq) ++df[std::string(t)];
    }
    Vocabulary v;
    v.n_docs_ = static_cast<std::uint32_t>(docs.size());
    v.terms_.reserve(df.size());
    v.df_.reserve(df.size());
    for (auto& [term, count] : df) {
        v.terms_.push_back(term);
        v.df_.push_back(count);
    }
    v.rebuild_index();
    return v;
}

Vocabulary Vocabulary::from_parts(std::vector<std::string> terms, std::vector<std::uint32_t> df,
                                  std::uint32_t n_docs) {
    if (terms.size() != df.size()) throw DataError("vocabulary: terms and df differ in length");
    for (std::size_t i = 0; i < terms.size(); ++i) {
        if (i > 0 && !(terms[i - 1] < terms[i])) throw DataError("vocabulary: terms not strictly sorted");
        if (df[i] < 1 || df[i] > n_docs) throw DataError("vocabulary: df out of range for '" + terms[i] + "'");
    }
    Vocabulary v;
    v.terms_ = std::move(terms);
    v.df_ = std::move(df);
    v.n_docs_ = n_docs;
    v.rebuild_index();
    return v;
}

void Vocabulary::rebuild_index() {
    index_.clear();
    index_.reserve(terms_.size());
    for (std::size_t i = 0; i < terms_.size(); ++i) index_.emplace(terms_[i], static_cast<std::uint32_t>(i));
}

std::optional<std::uint32_t> Vocabulary::find(std::string_view term) const {
    auto it = index_.find(std::string(term));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::uint64_t Vocabulary::fingerprint() const {
    std::uint64_t h = fnv1a(std::to_string(n_docs_));
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        h = fnv1a(terms_[i], h);
        h = fnv1a(":" + std::to_string(df_[i]) + ";", h);
    }
    return h;
}

nlohmann::json vocabulary_to_json(const Vocabulary& vocab) {
    nlohmann::json df = nlohmann::json::object();
    for (std::size_t i = 0; i < vocab.size(); ++i) df[vocab.term(i)] = vocab.df(i);
    return {{"terms", vocab.terms()}, {"df", std::move(df)}, {"n_docs", vocab.n_docs()}};
}

Vocabulary vocabulary_from_json(const nlohmann::json& j) {
    try {
        auto terms = j.at("terms").get<std::vector<std::string>>();
        const auto& dfj = j.at("df");
        std::vector<std::uint32_t> df;
        df.reserve(terms.size());
        for (const auto& t : terms) df.push_back(dfj.at(t).get<std::uint32_t>());
        return Vocabulary::from_parts(std::move(terms), std::move(df), j.at("n_docs").get<std::uint32_t>());
    } catch (const nlohmann::json::exception& e) {
        throw DataError(std::string("malformed vocabulary JSON: ") + e.what());
    }
}

Weighting parse_weighting(std::string_view name) {
    if (name == "tfidf") return Weighting::tfidf;
    if (name == "raw") return Weighting::raw_count;
    throw ConfigError("unknown weighting '" + std::string(name) + "' (expected tfidf or raw)");
}

std::string_view weighting_name(Weighting w) { return w == Weighting::tfidf ? "tfidf" : "raw"; }

namespace {

std::vector<std::pair<std::uint32_t, std::uint32_t>> term_counts(const TokenizedDocument& doc,
                                                                 const Vocabulary& vocab) {
    std::vector<std::uint32_t> ids;
    ids.reserve(doc.tokens.size());
    for (const auto& t : doc.tokens) {
        if (auto id = vocab.find(t)) ids.push_back(*id);
    }
    std::ranges::sort(ids);
    std::vector<std::pair<std::uint32_t, std::uint32_t>> counts;
    for (auto id : ids) {
        if (!counts.empty() && counts.back().first == id) {
            ++counts.back().second;
        } else {
            counts.emplace_back(id, 1);
        }
    }
    return counts;
}

} // namespace

WeightedVector tfidf_vectorize(const TokenizedDocument& doc, const Vocabulary& vocab) {
    WeightedVector v{doc.doc_id, {}};
    const double n_docs = vocab.n_docs();
    for (auto [id, tf] : term_counts(doc, vocab)) {
        const double w = static_cast<double>(tf) * std::log(n_docs / static_cast<double>(vocab.df(id)));
        if (w > 0.0) v.entries.emplace_back(id, w);
    }
    return v;
}

WeightedVector count_vectorize(const TokenizedDocument& doc, const Vocabulary& vocab) {
    WeightedVector v{doc.doc_id, {}};
    for (auto [id, tf] : term_counts(doc, vocab)) v.entries.emplace_back(id, static_cast<double>(tf));
    return v;
}

WeightedVector vectorize(const TokenizedDocument& doc, const Vocabulary& vocab, Weighting weighting) {
    return weighting == Weighting::tfidf ? tfidf_vectorize(doc, vocab) : count_vectorize(doc, vocab);
}

} // namespace servqual
