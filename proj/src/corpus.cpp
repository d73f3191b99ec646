// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 servqual contributors

#include "servqual/corpus.hpp"

#include "servqual/error.hpp"
#include "servqual/random.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

namespace servqual {

namespace {

using json = nlohmann::json;

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

std::string_view trim(std::string_view s) {
    while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
    while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
    return s;
}

[[noreturn]] void record_error(std::size_t line, std::string_view field, std::string_view what) {
    std::ostringstream msg;
    msg << "line " << line << ": field '" << field << "': " << what;
    throw DataError(msg.str());
}

struct RawRecord {
    std::size_t line = 0;
    std::string hotel_id;
    std::string review_id;
    std::string text;
    std::optional<std::string> label;
};

Review finish_record(RawRecord&& raw, const DimensionSet& dimensions) {
    if (raw.hotel_id.empty()) record_error(raw.line, "hotel_id", "must not be empty");
    if (raw.review_id.empty()) record_error(raw.line, "review_id", "must not be empty");
    if (trim(raw.text).empty()) record_error(raw.line, "text", "must not be empty");
    Review r{std::move(raw.hotel_id), std::move(raw.review_id), std::move(raw.text), std::nullopt};
    if (raw.label && !trim(*raw.label).empty()) {
        auto d = dimensions.find(trim(*raw.label));
        if (!d) record_error(raw.line, "label", "unknown dimension '" + *raw.label + "'");
        r.label = *d;
    }
    return r;
}

std::string string_field(const json& obj, const char* name, std::size_t line) {
    auto it = obj.find(name);
    if (it == obj.end()) record_error(line, name, "missing");
    if (!it->is_string()) record_error(line, name, "expected a string");
    return it->get<std::string>();
}

std::vector<RawRecord> parse_jsonl(std::string_view content) {
    std::vector<RawRecord> out;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos < content.size()) {
        auto end = content.find('\n', pos);
        if (end == std::string_view::npos) end = content.size();
        auto line = trim(content.substr(pos, end - pos));
        pos = end + 1;
        ++line_no;
        if (line.empty()) continue;

        json obj;
        try {
            obj = json::parse(line);
        } catch (const json::parse_error& e) {
            record_error(line_no, "<record>", std::string("invalid JSON: ") + e.what());
        }
        if (!obj.is_object()) record_error(line_no, "<record>", "expected a JSON object");

        RawRecord raw;
        raw.line = line_no;
        raw.hotel_id = string_field(obj, "hotel_id", line_no);
        raw.review_id = string_field(obj, "review_id", line_no);
        raw.text = string_field(obj, "text", line_no);
        if (auto it = obj.find("label"); it != obj.end() && !it->is_null()) {
            if (!it->is_string()) record_error(line_no, "label", "expected a string");
            raw.label = it->get<std::string>();
        }
        out.push_back(std::move(raw));
    }
    return out;
}

// RFC 4180 reader. Each row carries the physical line it starts on.
struct CsvRow {
    std::size_t line;
    std::vector<std::string> cells;
};

std::vector<CsvRow> read_csv(std::string_view content) {
    std::vector<CsvRow> rows;
    std::size_t line = 1;
    std::size_t i = 0;
    const std::size_t n = content.size();
    while (i < n) {
        CsvRow row{line, {}};
        std::string cell;
        bool row_done = false;
        while (!row_done) {
            cell.clear();
            if (i < n && content[i] == '"') {
                const std::size_t open_line = line;
                ++i;
                bool closed = false;
                while (i < n) {
                    char c = content[i];
                    if (c == '"') {
                        if (i + 1 < n && content[i + 1] == '"') {
                            cell.push_back('"');
                            i += 2;
                            continue;
                        }
                        ++i;
                        closed = true;
                        break;
                    }
                    if (c == '\n') ++line;
                    cell.push_back(c);
                    ++i;
                }
                if (!closed) record_error(open_line, "<record>", "unterminated quoted field");
                if (i < n && content[i] != ',' && content[i] != '\n' && content[i] != '\r')
                    record_error(line, "<record>", "unexpected character after closing quote");
            } else {
                while (i < n && content[i] != ',' && content[i] != '\n' && content[i] != '\r') {
                    if (content[i] == '"') record_error(line, "<record>", "stray quote in unquoted field");
                    cell.push_back(content[i++]);
                }
            }
            row.cells.push_back(cell);
            if (i < n && content[i] == ',') {
                ++i;
            } else {
                if (i < n && content[i] == '\r') ++i;
                if (i < n && content[i] == '\n') {
                    ++i;
                    ++line;
                }
                row_done = true;
            }
        }
        const bool blank = row.cells.size() == 1 && trim(row.cells[0]).empty();
        if (!blank) rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<RawRecord> parse_csv(std::string_view content) {
    auto rows = read_csv(content);
    if (rows.empty()) return {};

    const auto& header = rows.front();
    auto column = [&](std::string_view name) -> std::optional<std::size_t> {
        for (std::size_t c = 0; c < header.cells.size(); ++c) {
            if (trim(header.cells[c]) == name) return c;
        }
        return std::nullopt;
    };
    auto hotel_col = column("hotel_id");
    auto review_col = column("review_id");
    auto text_col = column("text");
    auto label_col = column("label");
    if (!hotel_col) record_error(header.line, "hotel_id", "missing from CSV header");
    if (!review_col) record_error(header.line, "review_id", "missing from CSV header");
    if (!text_col) record_error(header.line, "text", "missing from CSV header");

    std::vector<RawRecord> out;
    for (std::size_t r = 1; r < rows.size(); ++r) {
        const auto& row = rows[r];
        if (row.cells.size() != header.cells.size()) {
            record_error(row.line, "<record>",
                         "expected " + std::to_string(header.cells.size()) + " cells, found " +
                             std::to_string(row.cells.size()));
        }
        RawRecord raw;
        raw.line = row.line;
        raw.hotel_id = std::string(trim(row.cells[*hotel_col]));
        raw.review_id = std::string(trim(row.cells[*review_col]));
        raw.text = row.cells[*text_col];
        if (label_col) raw.label = row.cells[*label_col];
        out.push_back(std::move(raw));
    }
    return out;
}

} // namespace

ReviewFormat parse_review_format(std::string_view name) {
    if (name == "jsonl") return ReviewFormat::jsonl;
    if (name == "csv") return ReviewFormat::csv;
    throw ConfigError("unknown corpus format '" + std::string(name) + "' (expected jsonl or csv)");
}

Granularity parse_granularity(std::string_view name) {
    if (name == "sentence") return Granularity::sentence;
    if (name == "review") return Granularity::review;
    throw ConfigError("unknown granularity '" + std::string(name) + "' (expected sentence or review)");
}

void SplitConfig::validate() const {
    if (!(train_fraction > 0.0 && train_fraction < 1.0))
        throw ConfigError("train fraction must lie strictly between 0 and 1");
}

std::vector<Review> parse_reviews(std::string_view content, ReviewFormat format,
                                  const DimensionSet& dimensions) {
    auto raw = format == ReviewFormat::jsonl ? parse_jsonl(content) : parse_csv(content);
    if (raw.empty()) throw DataError("empty corpus: no review records found");

    std::vector<Review> reviews;
    reviews.reserve(raw.size());
    std::set<std::pair<std::string, std::string>> seen;
    for (auto& r : raw) {
        const auto line = r.line;
        auto review = finish_record(std::move(r), dimensions);
        if (!seen.emplace(review.hotel_id, review.review_id).second) {
            throw DataError("line " + std::to_string(line) + ": duplicate key (" + review.hotel_id +
                            ", " + review.review_id + ")");
        }
        reviews.push_back(std::move(review));
    }
    return reviews;
}

std::vector<Review> load_reviews(const std::filesystem::path& path, ReviewFormat format,
                                 const DimensionSet& dimensions) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open corpus file " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return parse_reviews(buf.str(), format, dimensions);
    } catch (const DataError& e) {
        throw DataError(path.string() + ": " + e.what());
    }
}

std::vector<Document> segment_sentences(const Review& review) {
    std::vector<Document> out;
    const std::string_view text = review.text;
    std::size_t start = 0;
    auto emit = [&](std::size_t end) {
        auto fragment = trim(text.substr(start, end - start));
        if (fragment.empty()) return;
        out.push_back(Document{review.review_id + "#" + std::to_string(out.size()), review.hotel_id,
                               std::string(fragment), review.label});
    };
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        if (c != '.' && c != '!' && c != '?') continue;
        if (i + 1 == text.size() || is_space(text[i + 1])) {
            emit(i);
            start = i + 1;
        }
    }
    emit(text.size());
    // A review consisting only of separators still yields one document.
    if (out.empty()) {
        out.push_back(Document{review.review_id + "#0", review.hotel_id, std::string(trim(text)),
                               review.label});
    }
    return out;
}

Document review_document(const Review& review) {
    return Document{review.review_id, review.hotel_id, review.text, review.label};
}

std::vector<Document> to_documents(std::span<const Review> reviews, Granularity granularity) {
    std::vector<Document> out;
    for (const auto& r : reviews) {
        if (granularity == Granularity::review) {
            out.push_back(review_document(r));
        } else {
            auto sentences = segment_sentences(r);
            std::move(sentences.begin(), sentences.end(), std::back_inserter(out));
        }
    }
    return out;
}

std::vector<LabeledDocument> require_labels(std::span<const Document> docs) {
    std::vector<LabeledDocument> out;
    out.reserve(docs.size());
    for (const auto& d : docs) {
        if (!d.label) throw DataError("document " + d.doc_id + " (hotel " + d.hotel_id + ") has no label");
        out.push_back(LabeledDocument{d.doc_id, d.hotel_id, d.text, *d.label});
    }
    return out;
}

namespace {

void shuffle(std::vector<std::size_t>& v, Rng& rng) {
    for (std::size_t i = v.size(); i > 1; --i) {
        std::swap(v[i - 1], v[rng.uniform_index(i)]);
    }
}

} // namespace

Split split_train_test(std::span<const Document> docs, const SplitConfig& cfg,
                       const DimensionSet& dimensions) {
    cfg.validate();
    auto labeled = require_labels(docs);
    const std::size_t n = labeled.size();
    const auto n_train = static_cast<std::size_t>(std::llround(cfg.train_fraction * static_cast<double>(n)));

    Rng rng(cfg.seed);
    std::vector<bool> in_train(n, false);

    if (!cfg.stratified) {
        std::vector<std::size_t> order(n);
        std::iota(order.begin(), order.end(), 0);
        shuffle(order, rng);
        for (std::size_t i = 0; i < n_train; ++i) in_train[order[i]] = true;
    } else {
        std::vector<std::vector<std::size_t>> members(dimensions.size());
        for (std::size_t i = 0; i < n; ++i) {
            const auto idx = labeled[i].label.index;
            if (idx >= dimensions.size()) throw DataError("document " + labeled[i].doc_id + " has an out-of-range label");
            members[idx].push_back(i);
        }
        std::vector<std::size_t> quota(members.size(), 0);
        std::vector<double> remainder(members.size(), -1.0);
        std::size_t assigned = 0;
        for (std::size_t d = 0; d < members.size(); ++d) {
            if (members[d].empty()) continue;
            if (members[d].size() < 2) {
                throw DataError("stratified split needs at least 2 documents per label; label '" +
                                dimensions.label(Dimension{static_cast<std::uint32_t>(d)}) + "' has 1");
            }
            const double exact = cfg.train_fraction * static_cast<double>(members[d].size());
            quota[d] = static_cast<std::size_t>(std::floor(exact));
            remainder[d] = exact - static_cast<double>(quota[d]);
            assigned += quota[d];
        }
        std::vector<std::size_t> by_remainder;
        for (std::size_t d = 0; d < members.size(); ++d) {
            if (!members[d].empty()) by_remainder.push_back(d);
        }
        std::ranges::stable_sort(by_remainder, [&](std::size_t a, std::size_t b) { return remainder[a] > remainder[b]; });
        for (std::size_t j = 0; assigned < n_train && j < by_remainder.size(); ++j) {
            ++quota[by_remainder[j]];
            ++assigned;
        }
        for (std::size_t d = 0; d < members.size(); ++d) {
            auto order = members[d];
            shuffle(order, rng);
            for (std::size_t i = 0; i < quota[d]; ++i) in_train[order[i]] = true;
        }
    }

    Split split;
    for (std::size_t i = 0; i < n; ++i) {
        (in_train[i] ? split.train : split.test).push_back(std::move(labeled[i]));
    }
    return split;
}

} // namespace servqual
