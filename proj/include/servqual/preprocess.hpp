// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 servqual contributors

#pragma once

#include "servqual/exec.hpp"

#include <nlohmann/json_fwd.hpp>

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

namespace servqual {

struct TokenizedDocument {
    std::string doc_id;
    std::vector<std::string> tokens; ///< each matches [a-z]+, in text order
};

using StopList = std::unordered_set<std::string>;

/// Lowercases and splits on anything that is not an ASCII letter.
std::vector<std::string> tokenize(std::string_view text);

std::vector<std::string> remove_stopwords(std::vector<std::string> tokens, const StopList& stoplist);

/// The bundled English list (data/stopwords_en.txt).
const StopList& default_stoplist();

/// One lowercase word per line; '#' starts a comment. Throws ConfigError
/// when the file cannot be read.
StopList load_stoplist(const std::filesystem::path& path);
StopList parse_stoplist(std::string_view content);

/// tokenize -> stop-filter -> stem. Either filter may be switched off.
struct TextPipeline {
    StopList stoplist = default_stoplist();
    bool filter_stopwords = true;
    bool stem = true;

    std::vector<std::string> tokens(std::string_view text) const;
    TokenizedDocument operator()(std::string doc_id, std::string_view text) const;
};

/// Sorted term list with document frequencies.
class Vocabulary {
public:
    Vocabulary() = default;

    /// Throws DataError when `docs` is empty.
    static Vocabulary build(std::span<const TokenizedDocument> docs);

    /// Rebuilds from explicit columns; validates sortedness and df bounds.
    static Vocabulary from_parts(std::vector<std::string> terms, std::vector<std::uint32_t> df,
                                 std::uint32_t n_docs);

    std::size_t size() const { return terms_.size(); }
    std::uint32_t n_docs() const { return n_docs_; }
    const std::vector<std::string>& terms() const { return terms_; }
    const std::string& term(std::size_t i) const { return terms_.at(i); }
    std::uint32_t df(std::size_t i) const { return df_.at(i); }
    const std::vector<std::uint32_t>& df() const { return df_; }
    std::optional<std::uint32_t> find(std::string_view term) const;

    /// FNV-1a over terms, document frequencies and n_docs.
    std::uint64_t fingerprint() const;

    friend bool operator==(const Vocabulary& a, const Vocabulary& b) {
        return a.terms_ == b.terms_ && a.df_ == b.df_ && a.n_docs_ == b.n_docs_;
    }

private:
    std::vector<std::string> terms_;
    std::vector<std::uint32_t> df_;
    std::unordered_map<std::string, std::uint32_t> index_;
    std::uint32_t n_docs_ = 0;

    void rebuild_index();
};

/// {"terms": [...], "df": {term: n}, "n_docs": N}
nlohmann::json vocabulary_to_json(const Vocabulary& vocab);
Vocabulary vocabulary_from_json(const nlohmann::json& j);

/// Sparse document vector; entries sorted by position, no zero weights.
struct WeightedVector {
    std::string doc_id;
    std::vector<std::pair<std::uint32_t, double>> entries;

    bool empty() const { return entries.empty(); }
};

enum class Weighting { tfidf, raw_count };

Weighting parse_weighting(std::string_view name);
std::string_view weighting_name(Weighting w);

/// weight(t) = tf(t) * ln(n_docs / df(t)) with tf the raw count. Tokens
/// outside the vocabulary are skipped, zero weights omitted.
WeightedVector tfidf_vectorize(const TokenizedDocument& doc, const Vocabulary& vocab);

/// weight(t) = tf(t).
WeightedVector count_vectorize(const TokenizedDocument& doc, const Vocabulary& vocab);

WeightedVector vectorize(const TokenizedDocument& doc, const Vocabulary& vocab, Weighting weighting);

/// Element-wise vectorize; order preserved.
std::vector<WeightedVector> vectorize_batch(std::span<const TokenizedDocument> docs, const Vocabulary& vocab,
                                            Weighting weighting, Exec exec = Exec::parallel);

} // namespace servqual
