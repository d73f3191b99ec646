// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 servqual contributors

#include "commands.hpp"

#include "servqual/classify.hpp"
#include "servqual/corpus.hpp"
#include "servqual/error.hpp"
#include "servqual/evaluate.hpp"
#include "servqual/io.hpp"
#include "servqual/preprocess.hpp"
#include "servqual/random.hpp"
#include "servqual/report.hpp"
#include "servqual/topicmodel.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>

namespace servqual::cli {

namespace fs = std::filesystem;
using json = nlohmann::json;

namespace {

/// Options shared by every subcommand.
struct CommonOptions {
    std::string input;
    std::string format = "jsonl";
    std::string stoplist;
    bool no_stopwords = false;
    bool no_stem = false;
    std::string labels;
    std::string granularity;
    std::string out;
};

struct TrainOptions {
    double train_fraction = 0.30;
    std::uint64_t seed = 0;
    double alpha = 1.0;
    std::string scope = "pooled";
    std::string weighting = "tfidf";
    bool no_stratify = false;
};

struct ClassifyOptions {
    std::string model;
    std::string scope = "pooled";
};

struct TopicOptions {
    std::size_t k = 5;
    double beta = 0.01;
    std::optional<double> lda_alpha;
    std::size_t iterations = 1000;
    std::size_t burn_in = 800;
    std::size_t thin = 10;
    std::uint64_t seed = 0;
    double lambda = 0.6;
    std::size_t top_n = 3;
};

struct ReportOptions {
    std::optional<double> lambda;
    std::size_t top_n = 3;
    bool gold = false;
};

void add_common(CLI::App& cmd, CommonOptions& o, bool input_required, const std::string& default_granularity) {
    o.granularity = default_granularity;
    auto* in = cmd.add_option("--input", o.input, "Review corpus file");
    if (input_required) in->required();
    cmd.add_option("--format", o.format, "Corpus format")->check(CLI::IsMember({"jsonl", "csv"}));
    cmd.add_option("--stoplist", o.stoplist, "Stop-word list file (default: bundled English list)");
    cmd.add_flag("--no-stopwords", o.no_stopwords, "Keep stop words");
    cmd.add_flag("--no-stem", o.no_stem, "Skip Porter stemming");
    cmd.add_option("--labels", o.labels, "Comma-separated dimension labels");
    cmd.add_option("--granularity", o.granularity, "Classification unit")
        ->check(CLI::IsMember({"sentence", "review"}));
    cmd.add_option("--out", o.out, "Output directory (default: $SERVQ_OUT or ./out)");
}

DimensionSet dimension_set(const CommonOptions& o) {
    return o.labels.empty() ? DimensionSet() : parse_dimension_list(o.labels);
}

fs::path output_dir(const CommonOptions& o) {
    fs::path dir = o.out;
    if (dir.empty()) {
        const char* env = std::getenv("SERVQ_OUT");
        dir = (env && *env) ? fs::path(env) : fs::path("out");
    }
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (!fs::is_directory(dir)) throw ConfigError("output directory " + dir.string() + " cannot be created");
    const auto probe = dir / ".servq-write-test";
    {
        std::ofstream f(probe);
        if (!f) throw ConfigError("output directory " + dir.string() + " is not writable");
    }
    fs::remove(probe, ec);
    return dir;
}

void require_input(const CommonOptions& o) {
    if (o.input.empty()) throw ConfigError("--input is required");
    if (!fs::is_regular_file(o.input)) throw ConfigError("input corpus not found: " + o.input);
    if (!o.stoplist.empty() && !fs::is_regular_file(o.stoplist))
        throw ConfigError("stop-word list not found: " + o.stoplist);
}

TextPipeline make_pipeline(const CommonOptions& o) {
    TextPipeline p;
    if (!o.stoplist.empty()) p.stoplist = load_stoplist(o.stoplist);
    p.filter_stopwords = !o.no_stopwords;
    p.stem = !o.no_stem;
    return p;
}

json pipeline_to_json(const TextPipeline& p) {
    std::vector<std::string> words(p.stoplist.begin(), p.stoplist.end());
    std::ranges::sort(words);
    return {{"filter_stopwords", p.filter_stopwords}, {"stem", p.stem}, {"stoplist", words}};
}

TextPipeline pipeline_from_json(const json& j) {
    TextPipeline p;
    try {
        p.filter_stopwords = j.at("filter_stopwords").get<bool>();
        p.stem = j.at("stem").get<bool>();
        const auto words = j.at("stoplist").get<std::vector<std::string>>();
        p.stoplist = StopList(words.begin(), words.end());
    } catch (const json::exception& e) {
        throw DataError(std::string("malformed preprocessing block in model: ") + e.what());
    }
    return p;
}

std::vector<TokenizedDocument> tokenize_all(const TextPipeline& pipeline, std::span<const LabeledDocument> docs) {
    std::vector<TokenizedDocument> out;
    out.reserve(docs.size());
    for (const auto& d : docs) out.push_back(pipeline(d.doc_id, d.text));
    return out;
}

std::vector<TokenizedDocument> tokenize_all(const TextPipeline& pipeline, std::span<const Document> docs) {
    std::vector<TokenizedDocument> out;
    out.reserve(docs.size());
    for (const auto& d : docs) out.push_back(pipeline(d.doc_id, d.text));
    return out;
}

std::string safe_name(const std::string& hotel) {
    std::string s;
    for (char c : hotel) {
        const bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '-' || c == '_';
        s.push_back(ok ? c : '_');
    }
    char hash[17];
    std::snprintf(hash, sizeof hash, "%016llx", static_cast<unsigned long long>(fnv1a(hotel)));
    return s + "-" + std::string(hash, 8);
}

std::uint64_t hotel_seed(std::uint64_t seed, const std::string& hotel) { return mix_seed(seed ^ fnv1a(hotel)); }

// ----------------------------------------------------------------------------
// train

struct TrainedUnit {
    NbcModel model;
    std::vector<LabeledDocument> test;
    std::vector<Prediction> predictions;
    std::size_t n_train = 0;
};

TrainedUnit train_unit(std::span<const Document> docs, const SplitConfig& split_cfg, const TextPipeline& pipeline,
                       const DimensionSet& dims, double alpha, Weighting weighting) {
    auto split = split_train_test(docs, split_cfg, dims);
    if (split.train.empty()) throw DataError("training split is empty; raise --train-fraction or add data");
    if (split.test.empty()) throw DataError("test split is empty; lower --train-fraction or add data");

    const auto train_tokens = tokenize_all(pipeline, split.train);
    auto vocab = std::make_shared<const Vocabulary>(Vocabulary::build(train_tokens));
    const auto train_vectors = vectorize_batch(train_tokens, *vocab, weighting);
    std::vector<LabeledVector> examples;
    examples.reserve(train_vectors.size());
    for (std::size_t i = 0; i < train_vectors.size(); ++i) examples.push_back({train_vectors[i], split.train[i].label});

    TrainedUnit unit;
    unit.n_train = split.train.size();
    unit.model = train_nbc(examples, vocab, dims, alpha, weighting);
    const auto test_vectors = vectorize_batch(tokenize_all(pipeline, split.test), *vocab, weighting);
    unit.predictions = predict_batch(unit.model, test_vectors);
    unit.test = std::move(split.test);
    return unit;
}

MetricsReport metrics_for(std::span<const Prediction> predictions, std::span<const LabeledDocument> test,
                          const DimensionSet& dims) {
    std::vector<std::pair<Dimension, Dimension>> pairs;
    for (std::size_t i = 0; i < test.size(); ++i) pairs.emplace_back(predictions[i].label, test[i].label);
    return compute_metrics(build_confusion_matrix(pairs, dims));
}

void write_model(const NbcModel& model, const TextPipeline& pipeline, const fs::path& model_path,
                 const std::string& vocab_file) {
    write_json_file(model_path.parent_path() / vocab_file, vocabulary_to_json(*model.vocab));
    auto j = model_to_json(model, vocab_file);
    j["preprocess"] = pipeline_to_json(pipeline);
    write_json_file(model_path, j);
}

int cmd_train(const CommonOptions& common, const TrainOptions& opts, std::ostream& out, std::ostream& err) {
    require_input(common);
    const auto dims = dimension_set(common);
    SplitConfig split_cfg{opts.train_fraction, opts.seed, !opts.no_stratify};
    split_cfg.validate();
    if (!(opts.alpha > 0.0)) throw ConfigError("--alpha must be positive");
    if (opts.scope != "pooled" && opts.scope != "per-hotel") throw ConfigError("--scope must be pooled or per-hotel");
    const auto weighting = parse_weighting(opts.weighting);
    const auto granularity = parse_granularity(common.granularity);
    const auto pipeline = make_pipeline(common);
    const auto dir = output_dir(common);

    const auto reviews = load_reviews(common.input, parse_review_format(common.format), dims);
    const auto docs = to_documents(reviews, granularity);

    json metrics_json;
    metrics_json["scope"] = opts.scope;
    metrics_json["split"] = {{"train_fraction", split_cfg.train_fraction},
                             {"seed", split_cfg.seed},
                             {"stratified", split_cfg.stratified}};
    json warnings = json::array();
    json hotels_json = json::object();
    std::vector<std::pair<std::string, MetricsReport>> rows;
    std::vector<Prediction> all_predictions;
    std::vector<LabeledDocument> all_test;
    std::size_t n_train = 0;

    auto record_hotel_metrics = [&](const std::map<std::string, std::vector<std::size_t>>& by_hotel,
                                    std::span<const Prediction> preds, std::span<const LabeledDocument> test) {
        for (const auto& [hotel, idx] : by_hotel) {
            std::vector<Prediction> p;
            std::vector<LabeledDocument> t;
            for (auto i : idx) {
                p.push_back(preds[i]);
                t.push_back(test[i]);
            }
            auto m = metrics_for(p, t, dims);
            hotels_json[hotel] = metrics_to_json(m);
            rows.emplace_back(hotel, std::move(m));
        }
    };

    if (opts.scope == "pooled") {
        auto unit = train_unit(docs, split_cfg, pipeline, dims, opts.alpha, weighting);
        for (const auto& w : unit.model.warnings) warnings.push_back(w);
        write_model(unit.model, pipeline, dir / "model.json", "vocab.json");
        std::map<std::string, std::vector<std::size_t>> by_hotel;
        for (std::size_t i = 0; i < unit.test.size(); ++i) by_hotel[unit.test[i].hotel_id].push_back(i);
        record_hotel_metrics(by_hotel, unit.predictions, unit.test);
        n_train = unit.n_train;
        all_predictions = std::move(unit.predictions);
        all_test = std::move(unit.test);
    } else {
        json index = json::object();
        fs::create_directories(dir / "models");
        for (const auto& [hotel, hotel_docs] : group_by_hotel(docs)) {
            SplitConfig cfg = split_cfg;
            cfg.seed = hotel_seed(split_cfg.seed, hotel);
            auto unit = train_unit(hotel_docs, cfg, pipeline, dims, opts.alpha, weighting);
            for (const auto& w : unit.model.warnings) warnings.push_back(hotel + ": " + w);
            const auto name = safe_name(hotel);
            write_model(unit.model, pipeline, dir / "models" / (name + ".model.json"), name + ".vocab.json");
            index[hotel] = "models/" + name + ".model.json";
            std::map<std::string, std::vector<std::size_t>> one{{hotel, {}}};
            for (std::size_t i = 0; i < unit.test.size(); ++i) one[hotel].push_back(i);
            record_hotel_metrics(one, unit.predictions, unit.test);
            n_train += unit.n_train;
            all_predictions.insert(all_predictions.end(), unit.predictions.begin(), unit.predictions.end());
            all_test.insert(all_test.end(), unit.test.begin(), unit.test.end());
        }
        write_json_file(dir / "models" / "index.json", index);
    }

    auto overall = metrics_for(all_predictions, all_test, dims);
    metrics_json["split"]["n_train"] = n_train;
    metrics_json["split"]["n_test"] = all_test.size();
    metrics_json["overall"] = metrics_to_json(overall);
    metrics_json["hotels"] = std::move(hotels_json);
    metrics_json["warnings"] = warnings;
    write_json_file(dir / "metrics.json", metrics_json);

    for (const auto& w : warnings) err << "warning: " << w.get<std::string>() << '\n';
    rows.emplace_back("overall", overall);
    out << format_metrics_table(rows);
    out << "kappa " << (overall.kappa_above_threshold ? "above" : "not above") << " the 0.75 quality threshold ("
        << band_name(overall.band) << ")\n";
    return kExitOk;
}

// ----------------------------------------------------------------------------
// classify

struct LoadedModel {
    NbcModel model;
    TextPipeline pipeline;
};

LoadedModel load_model_with_pipeline(const fs::path& path) {
    if (!fs::is_regular_file(path)) throw DataError("model file not found: " + path.string());
    LoadedModel lm{load_model(path), {}};
    const auto j = read_json_file(path);
    lm.pipeline = j.contains("preprocess") ? pipeline_from_json(j.at("preprocess")) : TextPipeline{};
    return lm;
}

std::string score_line(const Document& doc, const Prediction& p, const DimensionSet& dims) {
    json scores = json::object();
    for (auto d : dims.all()) {
        const double v = p.log_posterior[d.index];
        scores[dims.label(d)] = std::isfinite(v) ? json(v) : json(nullptr);
    }
    json line = {{"doc_id", doc.doc_id}, {"hotel_id", doc.hotel_id}, {"label", dims.label(p.label)},
                 {"log_posterior", std::move(scores)}};
    return line.dump();
}

int cmd_classify(const CommonOptions& common, const ClassifyOptions& opts, std::ostream& out, std::ostream& err) {
    require_input(common);
    if (opts.scope != "pooled" && opts.scope != "per-hotel") throw ConfigError("--scope must be pooled or per-hotel");
    const auto granularity = parse_granularity(common.granularity);
    const auto dir = output_dir(common);

    std::map<std::string, LoadedModel> per_hotel;
    std::optional<LoadedModel> pooled;
    if (opts.scope == "pooled") {
        pooled = load_model_with_pipeline(opts.model.empty() ? dir / "model.json" : fs::path(opts.model));
    } else {
        const fs::path index_path = opts.model.empty() ? dir / "models" / "index.json" : fs::path(opts.model);
        if (!fs::is_regular_file(index_path)) throw DataError("model index not found: " + index_path.string());
        const auto index = read_json_file(index_path);
        for (const auto& [hotel, rel] : index.items()) {
            per_hotel.emplace(hotel, load_model_with_pipeline(index_path.parent_path().parent_path() / rel.get<std::string>()));
        }
    }
    const DimensionSet dims = pooled ? pooled->model.dimensions : per_hotel.begin()->second.model.dimensions;
    if (!common.labels.empty() && !(dimension_set(common) == dims))
        throw DataError("vocabulary/model mismatch: --labels differ from the model's dimensions");

    // labels in the input are ignored on this path
    const auto reviews = load_reviews(common.input, parse_review_format(common.format), dims);
    const auto docs = to_documents(reviews, granularity);

    std::vector<Prediction> predictions(docs.size());
    if (pooled) {
        const auto vectors = vectorize_batch(tokenize_all(pooled->pipeline, docs), *pooled->model.vocab, pooled->model.weighting);
        predictions = predict_batch(pooled->model, vectors);
    } else {
        std::map<std::string, std::vector<std::size_t>> by_hotel;
        for (std::size_t i = 0; i < docs.size(); ++i) by_hotel[docs[i].hotel_id].push_back(i);
        for (const auto& [hotel, idx] : by_hotel) {
            auto it = per_hotel.find(hotel);
            if (it == per_hotel.end()) throw DataError("no trained model for hotel " + hotel);
            std::vector<Document> subset;
            for (auto i : idx) subset.push_back(docs[i]);
            const auto& lm = it->second;
            const auto vectors = vectorize_batch(tokenize_all(lm.pipeline, subset), *lm.model.vocab, lm.model.weighting);
            auto preds = predict_batch(lm.model, vectors);
            for (std::size_t j = 0; j < idx.size(); ++j) predictions[idx[j]] = std::move(preds[j]);
        }
    }

    std::string body;
    std::map<std::string, std::vector<Dimension>> labels_by_hotel;
    for (std::size_t i = 0; i < docs.size(); ++i) {
        body += score_line(docs[i], predictions[i], dims);
        body += '\n';
        labels_by_hotel[docs[i].hotel_id].push_back(predictions[i].label);
    }
    write_text_file(dir / "predictions.jsonl", body);

    std::vector<DimensionProfile> profiles;
    for (const auto& [hotel, labels] : labels_by_hotel) profiles.push_back(dimension_profile(hotel, std::span<const Dimension>(labels), dims));
    out << "classified " << docs.size() << " documents from " << labels_by_hotel.size() << " hotels -> "
        << (dir / "predictions.jsonl").string() << '\n';
    out << format_profile_table(profiles);
    (void)err;
    return kExitOk;
}

// ----------------------------------------------------------------------------
// topics

int cmd_topics(const CommonOptions& common, const TopicOptions& opts, std::ostream& out, std::ostream& err) {
    require_input(common);
    LdaConfig cfg;
    cfg.k = opts.k;
    cfg.alpha = opts.lda_alpha;
    cfg.beta = opts.beta;
    cfg.iterations = opts.iterations;
    cfg.burn_in = opts.burn_in;
    cfg.thin = opts.thin;
    cfg.seed = opts.seed;
    cfg.validate();
    if (!(opts.lambda >= 0.0 && opts.lambda <= 1.0)) throw ConfigError("--lambda must lie in [0, 1]");
    const auto dims = dimension_set(common);
    const auto granularity = parse_granularity(common.granularity);
    const auto pipeline = make_pipeline(common);
    const auto dir = output_dir(common);

    const auto reviews = load_reviews(common.input, parse_review_format(common.format), dims);
    const auto docs = to_documents(reviews, granularity);

    std::vector<std::string> hotels;
    std::vector<LdaJob> jobs;
    for (const auto& [hotel, hotel_docs] : group_by_hotel(docs)) {
        auto tokens = tokenize_all(pipeline, hotel_docs);
        std::erase_if(tokens, [&](const TokenizedDocument& t) {
            if (!t.tokens.empty()) return false;
            err << "warning: " << hotel << ": document " << t.doc_id << " is empty after preprocessing; dropped\n";
            return true;
        });
        if (tokens.empty()) {
            err << "warning: hotel " << hotel << " has no usable documents; skipped\n";
            continue;
        }
        LdaConfig hotel_cfg = cfg;
        hotel_cfg.seed = hotel_seed(cfg.seed, hotel);
        auto vocab = std::make_shared<const Vocabulary>(Vocabulary::build(tokens));
        hotels.push_back(hotel);
        jobs.push_back(LdaJob{std::move(tokens), std::move(vocab), hotel_cfg});
    }
    if (jobs.empty()) throw DataError("no hotel has usable documents for topic modelling");

    auto fitted = fit_lda_many(jobs);
    std::map<std::string, LdaModel> models;
    for (std::size_t i = 0; i < hotels.size(); ++i) models.emplace(hotels[i], std::move(fitted[i]));
    export_viz_data(models, opts.lambda, dir / "topics.json");

    std::ostringstream table;
    for (const auto& [hotel, model] : models) {
        for (std::size_t t = 0; t < model.k; ++t) {
            table << hotel << "\ttopic " << t << "\t";
            table.precision(3);
            table << std::fixed << model.topic_proportions[t] << '\t';
            const auto words = top_terms(model, t, opts.top_n, opts.lambda);
            for (std::size_t i = 0; i < words.size(); ++i) table << (i ? " " : "") << words[i];
            table << '\n';
        }
    }
    write_text_file(dir / "top_terms.txt", table.str());
    out << table.str();
    return kExitOk;
}

// ----------------------------------------------------------------------------
// report

fs::path upstream(const fs::path& dir, const char* name) {
    auto p = dir / name;
    if (!fs::is_regular_file(p)) throw DataError("missing upstream artifact: " + p.string());
    return p;
}

int cmd_report(const CommonOptions& common, const ReportOptions& opts, std::ostream& out, std::ostream& err) {
    const auto dir = output_dir(common);
    const auto metrics_path = upstream(dir, "metrics.json");
    const auto topics_path = upstream(dir, "topics.json");
    if (opts.lambda && !(*opts.lambda >= 0.0 && *opts.lambda <= 1.0)) throw ConfigError("--lambda must lie in [0, 1]");

    const auto metrics_json = read_json_file(metrics_path);
    std::map<std::string, MetricsReport> metrics;
    try {
        for (const auto& [hotel, m] : metrics_json.at("hotels").items()) metrics.emplace(hotel, metrics_from_json(m));
    } catch (const json::exception& e) {
        throw DataError(metrics_path.string() + ": " + e.what());
    }
    if (metrics.empty()) throw DataError(metrics_path.string() + ": no per-hotel metrics");
    const DimensionSet dims = common.labels.empty() ? metrics.begin()->second.dimensions : dimension_set(common);

    const auto payload = read_json_file(topics_path);
    double lambda = 0.6;
    try {
        lambda = opts.lambda.value_or(payload.at("lambda_default").get<double>());
    } catch (const json::exception& e) {
        throw DataError(topics_path.string() + ": " + e.what());
    }
    const auto topics = top_terms_from_payload(payload, opts.top_n, lambda);

    std::map<std::string, std::vector<Dimension>> labels_by_hotel;
    if (opts.gold) {
        require_input(common);
        const auto reviews = load_reviews(common.input, parse_review_format(common.format), dims);
        for (const auto& d : to_documents(reviews, parse_granularity(common.granularity))) {
            if (!d.label) throw DataError("--gold needs a fully labeled corpus; " + d.doc_id + " has no label");
            labels_by_hotel[d.hotel_id].push_back(*d.label);
        }
    } else {
        const auto pred_path = upstream(dir, "predictions.jsonl");
        std::istringstream lines(read_text_file(pred_path));
        std::string line;
        std::size_t line_no = 0;
        while (std::getline(lines, line)) {
            ++line_no;
            if (line.empty()) continue;
            try {
                const auto j = json::parse(line);
                labels_by_hotel[j.at("hotel_id").get<std::string>()].push_back(dims.parse(j.at("label").get<std::string>()));
            } catch (const json::exception& e) {
                throw DataError(pred_path.string() + ": line " + std::to_string(line_no) + ": " + e.what());
            }
        }
        if (labels_by_hotel.empty()) throw DataError(pred_path.string() + ": no predictions");
    }

    std::vector<DimensionProfile> profiles;
    for (const auto& [hotel, labels] : labels_by_hotel) {
        profiles.push_back(dimension_profile(hotel, std::span<const Dimension>(labels), dims));
    }
    const auto summary = summarize(profiles, metrics, topics);
    write_json_file(dir / "summary.json", summary_to_json(summary));
    const auto text = format_summary_text(summary);
    write_text_file(dir / "summary.txt", text);
    out << text;
    (void)err;
    return kExitOk;
}

} // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Service-quality analytics for hotel reviews"};
    app.require_subcommand(1);

    CommonOptions train_common, classify_common, topics_common, report_common;
    TrainOptions train_opts;
    ClassifyOptions classify_opts;
    TopicOptions topic_opts;
    ReportOptions report_opts;

    auto* train = app.add_subcommand("train", "Split, train and evaluate the classifier");
    add_common(*train, train_common, true, "sentence");
    train->add_option("--train-fraction", train_opts.train_fraction, "Share of documents used for training");
    train->add_option("--seed", train_opts.seed, "Split seed");
    train->add_option("--alpha", train_opts.alpha, "Laplace smoothing");
    train->add_option("--scope", train_opts.scope, "One pooled model or one per hotel")
        ->check(CLI::IsMember({"pooled", "per-hotel"}));
    train->add_option("--weighting", train_opts.weighting, "Feature weights")->check(CLI::IsMember({"tfidf", "raw"}));
    train->add_flag("--no-stratify", train_opts.no_stratify, "Plain random split");

    auto* classify = app.add_subcommand("classify", "Label an unlabeled corpus with a trained model");
    add_common(*classify, classify_common, true, "sentence");
    classify->add_option("--model", classify_opts.model, "Model file (pooled) or model index (per-hotel)");
    classify->add_option("--scope", classify_opts.scope, "Model scope used at training")
        ->check(CLI::IsMember({"pooled", "per-hotel"}));

    auto* topics = app.add_subcommand("topics", "Fit per-hotel topic models and export viewer data");
    add_common(*topics, topics_common, true, "review");
    topics->add_option("--k", topic_opts.k, "Topics per hotel");
    topics->add_option("--beta", topic_opts.beta, "Topic-term prior");
    topics->add_option("--lda-alpha", topic_opts.lda_alpha, "Document-topic prior (default 50/k)");
    topics->add_option("--iterations", topic_opts.iterations, "Gibbs sweeps");
    topics->add_option("--burn-in", topic_opts.burn_in, "Sweeps discarded before estimation");
    topics->add_option("--thin", topic_opts.thin, "Keep every n-th post-burn-in sweep");
    topics->add_option("--seed", topic_opts.seed, "Sampler seed");
    topics->add_option("--lambda", topic_opts.lambda, "Relevance weight for the term table and viewer default");
    topics->add_option("--top-n", topic_opts.top_n, "Terms listed per topic");

    auto* report = app.add_subcommand("report", "Summarize predictions, metrics and topics per hotel");
    add_common(*report, report_common, false, "sentence");
    report->add_option("--lambda", report_opts.lambda, "Relevance weight (default: payload lambda_default)");
    report->add_option("--top-n", report_opts.top_n, "Terms listed per topic");
    report->add_flag("--gold", report_opts.gold, "Profile the gold labels of --input instead of predictions");

    std::vector<std::string> argv_rev(args.rbegin(), args.rend());
    try {
        app.parse(argv_rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitConfig;
    }

    try {
        if (train->parsed()) return cmd_train(train_common, train_opts, out, err);
        if (classify->parsed()) return cmd_classify(classify_common, classify_opts, out, err);
        if (topics->parsed()) return cmd_topics(topics_common, topic_opts, out, err);
        if (report->parsed()) return cmd_report(report_common, report_opts, out, err);
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const DataError& e) {
        err << "error: " << e.what() << '\n';
        return kExitData;
    } catch (const std::filesystem::filesystem_error& e) {
        err << "error: " << e.what() << '\n';
        return kExitData;
    }
    return kExitConfig;
}

} // namespace servqual::cli
