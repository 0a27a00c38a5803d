#ifndef SCRIBEMATCH_CLI_HPP
#define SCRIBEMATCH_CLI_HPP

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "scribematch/classifiers.hpp"
#include "scribematch/corpus.hpp"
#include "scribematch/datasets.hpp"
#include "scribematch/features.hpp"
#include "scribematch/recommender.hpp"
#include "scribematch/stats.hpp"
#include "scribematch/stopwords.hpp"
#include "scribematch/text.hpp"

namespace scribematch::cli {

namespace fs = std::filesystem;

/// Process exit codes. Stable for scripting.
enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kInputError = 2,
  kTrainingPrecondition = 3,
  kMissingArtifact = 4,
  kSampleTooShort = 5,
};

struct RunConfig {
  std::string input;
  std::string format = "csv";
  std::string out;
  std::string corpus;
  std::string mbti_csv;
  std::string features;
  std::string index;
  std::string domain_model;
  std::string mbti_model;
  std::string lexicon;
  std::string stopwords;
  std::string sample;
  std::string target;
  std::string stats_format = "table";
  double alpha = 1.0;
  std::size_t top_n = 5;
  bool json = false;
  long seed = 0;  // unused: every stage is deterministic
};

/// Error carrying the exit code the command should terminate with.
class CommandError : public std::runtime_error {
 public:
  CommandError(int code, const std::string& what) : std::runtime_error(what), code_(code) {}
  int code() const noexcept { return code_; }

 private:
  int code_;
};

namespace detail {

/// `name` under $SCRIBEMATCH_DATA_DIR, or relative to the working directory.
inline std::string default_path(const std::string& name) {
  if (const char* root = std::getenv("SCRIBEMATCH_DATA_DIR"); root && *root) {
    return (fs::path(root) / name).string();
  }
  return name;
}

inline std::string read_file(const std::string& path, int missing_code, const char* what) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CommandError(missing_code, std::string("cannot read ") + what + " '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::string& path, const std::string& bytes) {
  const fs::path p(path);
  if (p.has_parent_path()) {
    std::error_code ec;
    fs::create_directories(p.parent_path(), ec);
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw CommandError(kInputError, "cannot write '" + path + "'");
  out << bytes;
  if (!out) throw CommandError(kInputError, "write failed for '" + path + "'");
}

inline NbClassifier load_model_file(const std::string& path, const char* what) {
  const std::string bytes = read_file(path, kMissingArtifact, what);
  try {
    return load_model(bytes);
  } catch (const LoadError& e) {
    throw CommandError(kMissingArtifact, std::string(what) + " '" + path + "': " + e.what());
  }
}

inline PolarityLexicon load_lexicon_file(const std::string& path) {
  const std::string bytes = read_file(path, kMissingArtifact, "lexicon");
  try {
    return parse_lexicon(bytes);
  } catch (const Error& e) {
    throw CommandError(kMissingArtifact, "lexicon '" + path + "': " + e.what());
  }
}

inline std::vector<CleanArticle> load_corpus_file(const std::string& path) {
  const std::string bytes = read_file(path, kInputError, "corpus");
  try {
    return read_corpus_jsonl(bytes);
  } catch (const Error& e) {
    throw CommandError(kInputError, "corpus '" + path + "': " + e.what());
  }
}

inline std::vector<ArticleFeatures> load_features_file(const std::string& path) {
  const std::string bytes = read_file(path, kMissingArtifact, "feature dump");
  try {
    return read_features_jsonl(bytes);
  } catch (const Error& e) {
    throw CommandError(kMissingArtifact, "feature dump '" + path + "': " + e.what());
  }
}

inline void print_report(std::ostream& out, const std::string& title, const EvalReport& r) {
  out << title << ": n=" << r.total << std::fixed << std::setprecision(4)
      << " accuracy=" << r.accuracy << " macro_f1=" << r.macro_f1 << '\n';
  std::size_t width = 9;
  for (const auto& l : r.labels) width = std::max(width, l.size());
  out << "  " << std::left << std::setw(static_cast<int>(width)) << "label"
      << "  precision  recall     f1\n";
  for (std::size_t c = 0; c < r.labels.size(); ++c) {
    out << "  " << std::left << std::setw(static_cast<int>(width)) << r.labels[c] << "  "
        << std::setw(9) << r.precision[c] << "  " << std::setw(9) << r.recall[c] << "  "
        << r.f1[c] << '\n';
  }
  out << "  confusion (rows = true, columns = predicted):\n";
  for (std::size_t c = 0; c < r.labels.size(); ++c) {
    out << "  " << std::left << std::setw(static_cast<int>(width)) << r.labels[c];
    for (auto v : r.confusion[c]) out << ' ' << std::right << std::setw(4) << v;
    out << '\n';
  }
  out.unsetf(std::ios::floatfield);
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Commands

inline int cmd_ingest(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const std::string bytes = detail::read_file(cfg.input, kInputError, "input");
  const CorpusFormat format = cfg.format == "jsonl" ? CorpusFormat::Jsonl : CorpusFormat::Csv;
  ParseResult parsed;
  try {
    parsed = parse_corpus_file(bytes, format);
  } catch (const Error& e) {
    throw CommandError(kInputError, "'" + cfg.input + "': " + e.what());
  }
  for (const auto& e : parsed.errors) err << "warning: " << e.message << '\n';

  auto [articles, report] = filter_and_dedup(parsed.articles);
  const fs::path dir(cfg.out);
  auto report_json = to_json(report);
  report_json["row_errors"] = nlohmann::ordered_json::array();
  for (const auto& e : parsed.errors) {
    report_json["row_errors"].push_back({{"row", e.row}, {"message", e.message}});
  }
  detail::write_file((dir / "corpus.jsonl").string(), write_corpus_jsonl(articles));
  detail::write_file((dir / "filter_report.json").string(), report_json.dump(2) + "\n");

  out << "kept " << report.kept << " of " << report.total() << " records (duplicate "
      << report.dropped_duplicate << ", short " << report.dropped_short << ", no author "
      << report.dropped_no_author << ", row errors " << parsed.errors.size() << ")\n";
  if (report.kept != report.total() || !parsed.errors.empty()) {
    err << "warning: some records were dropped; see " << (dir / "filter_report.json").string()
        << '\n';
  }
  return kOk;
}

inline int cmd_train(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  std::vector<SplitDoc> docs;
  if (cfg.target == "domain") {
    docs = domain_documents(detail::load_corpus_file(cfg.corpus));
  } else {
    const std::string bytes = detail::read_file(cfg.mbti_csv, kInputError, "MBTI CSV");
    MbtiDataset data;
    try {
      data = parse_mbti_csv(bytes);
    } catch (const Error& e) {
      throw CommandError(kInputError, "'" + cfg.mbti_csv + "': " + e.what());
    }
    for (const auto& e : data.errors) err << "warning: " << e.message << '\n';
    docs = std::move(data.docs);
  }

  StopwordSet stopwords = default_stopwords();
  if (!cfg.stopwords.empty()) {
    stopwords = parse_stopwords(detail::read_file(cfg.stopwords, kInputError, "stopwords"));
  }

  Split split = split_documents(docs);
  NbClassifier model;
  try {
    model = train_text_classifier(split.train, std::move(stopwords), cfg.alpha);
  } catch (const TrainingError& e) {
    throw CommandError(kTrainingPrecondition, e.what());
  }
  detail::write_file(cfg.out, save_model(model));
  out << "model written to " << cfg.out << " (" << model.labels.size() << " labels, "
      << model.vectorizer.size() << " terms)\n";

  detail::print_report(out, "train", evaluate(model, split.train));
  std::vector<LabeledDoc> held_out;
  for (auto& d : split.held_out) {
    if (model.label_index(d.label)) {
      held_out.push_back(std::move(d));
    } else {
      err << "warning: held-out label '" << d.label << "' absent from training split\n";
    }
  }
  if (held_out.empty()) {
    err << "warning: no held-out documents to evaluate\n";
  } else {
    detail::print_report(out, "held-out", evaluate(model, held_out));
  }
  return kOk;
}

inline int cmd_featurize(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto domain_model = detail::load_model_file(cfg.domain_model, "domain model");
  const auto mbti_model = detail::load_model_file(cfg.mbti_model, "MBTI model");
  const auto lexicon = detail::load_lexicon_file(cfg.lexicon);
  const auto articles = detail::load_corpus_file(cfg.corpus);

  std::vector<ArticleFeatures> features;
  features.reserve(articles.size());
  for (const auto& a : articles) {
    try {
      features.push_back(extract_features(a, domain_model, mbti_model, lexicon));
    } catch (const InvalidInput& e) {
      err << "warning: skipping article " << a.id << ": " << e.what() << '\n';
    }
  }
  detail::write_file(cfg.out, write_features_jsonl(features));
  out << "featurized " << features.size() << " of " << articles.size() << " articles\n";
  return kOk;
}

inline int cmd_index(const RunConfig& cfg, std::ostream& out, std::ostream& /*err*/) {
  const auto features = detail::load_features_file(cfg.features);
  const auto articles = detail::load_corpus_file(cfg.corpus);
  std::map<std::uint64_t, std::string> authors;
  for (const auto& a : articles) authors.emplace(a.id, a.author);
  OheIndex index;
  try {
    index = build_index(features, authors);
  } catch (const BuildError& e) {
    throw CommandError(kInputError, e.what());
  }
  detail::write_file(cfg.out, save_index(index));
  out << "indexed " << index.rows.size() << " articles over " << index.schema.width()
      << " columns\n";
  return kOk;
}

inline int cmd_recommend(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const std::string index_bytes = detail::read_file(cfg.index, kMissingArtifact, "index");
  OheIndex index;
  try {
    index = load_index(index_bytes);
  } catch (const LoadError& e) {
    throw CommandError(kMissingArtifact, "index '" + cfg.index + "': " + e.what());
  }
  const auto domain_model = detail::load_model_file(cfg.domain_model, "domain model");
  const auto mbti_model = detail::load_model_file(cfg.mbti_model, "MBTI model");
  const auto lexicon = detail::load_lexicon_file(cfg.lexicon);

  CleanArticle sample;
  try {
    sample.body = clean_text(detail::read_file(cfg.sample, kInputError, "sample"));
  } catch (const DecodeError& e) {
    throw CommandError(kInputError, "sample '" + cfg.sample + "': " + e.what());
  }
  sample.word_count = count_words(sample.body);
  if (sample.word_count < kMinArticleWords) {
    throw CommandError(kSampleTooShort, "sample has " + std::to_string(sample.word_count) +
                                            " words; at least " +
                                            std::to_string(kMinArticleWords) + " required");
  }

  ArticleFeatures features;
  try {
    features = extract_features(sample, domain_model, mbti_model, lexicon);
  } catch (const InvalidInput& e) {
    throw CommandError(kSampleTooShort, std::string("sample: ") + e.what());
  }
  const EncodedQuery query = encode_query(features, index.schema);
  for (const auto& w : query.warnings) err << "warning: " << w << '\n';
  if (index.rows.empty()) throw CommandError(kMissingArtifact, "index has no rows");
  const auto recs = recommend_bits(query.bits, index, cfg.top_n);

  if (!cfg.json) {
    out << "sample: " << to_string(features.mbti) << ", " << to_string(features.readability_class)
        << ", " << to_string(features.domain) << ", " << to_string(features.difficulty_class)
        << '\n';
    out << format_table(recs);
  }
  out << to_json(recs).dump(2) << '\n';
  return kOk;
}

inline int cmd_stats(const RunConfig& cfg, std::ostream& out, std::ostream& /*err*/) {
  const auto features = detail::load_features_file(cfg.features);
  const auto tabs = corpus_stats(features);
  if (cfg.stats_format == "json") {
    auto j = nlohmann::ordered_json::array();
    for (const auto& t : tabs) j.push_back(to_json(t));
    out << j.dump(2) << '\n';
  } else {
    out << "articles: " << features.size() << "\n\n";
    for (const auto& t : tabs) out << format_table(t) << '\n';
  }
  return kOk;
}

// ---------------------------------------------------------------------------
// Entry point

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Profile articles and recommend matching authors", "scribematch"};
  app.require_subcommand(1);
  RunConfig cfg;
  using detail::default_path;

  auto* ingest = app.add_subcommand("ingest", "clean, filter and deduplicate a scraped corpus");
  ingest->add_option("--in", cfg.input, "scraped corpus file")->required();
  ingest->add_option("--format", cfg.format, "input format")
      ->check(CLI::IsMember({"csv", "jsonl"}));
  ingest->add_option("--out", cfg.out, "output directory");

  auto* train = app.add_subcommand("train", "train a domain or MBTI classifier");
  train->add_option("--target", cfg.target, "label set")
      ->required()
      ->check(CLI::IsMember({"domain", "mbti"}));
  train->add_option("--corpus", cfg.corpus, "canonical corpus (domain target)");
  train->add_option("--mbti-csv", cfg.mbti_csv, "type,posts CSV (mbti target)");
  train->add_option("--alpha", cfg.alpha, "additive smoothing")->check(CLI::PositiveNumber);
  train->add_option("--stopwords", cfg.stopwords, "stopword list (default: built-in English)");
  train->add_option("--out", cfg.out, "model file");
  train->add_option("--seed", cfg.seed, "accepted for compatibility; unused");

  auto* featurize = app.add_subcommand("featurize", "compute per-article features");
  featurize->add_option("--corpus", cfg.corpus, "canonical corpus");
  featurize->add_option("--domain-model", cfg.domain_model, "domain model file");
  featurize->add_option("--mbti-model", cfg.mbti_model, "MBTI model file");
  featurize->add_option("--lexicon", cfg.lexicon, "polarity lexicon (TSV)");
  featurize->add_option("--out", cfg.out, "feature dump");

  auto* index = app.add_subcommand("index", "build the author one-hot index");
  index->add_option("--features", cfg.features, "feature dump");
  index->add_option("--corpus", cfg.corpus, "canonical corpus (for author names)");
  index->add_option("--out", cfg.out, "index file");

  auto* recommend = app.add_subcommand("recommend", "rank authors for a sample text");
  recommend->add_option("--sample", cfg.sample, "UTF-8 text file")->required();
  recommend->add_option("--index", cfg.index, "index file");
  recommend->add_option("--domain-model", cfg.domain_model, "domain model file");
  recommend->add_option("--mbti-model", cfg.mbti_model, "MBTI model file");
  recommend->add_option("--lexicon", cfg.lexicon, "polarity lexicon (TSV)");
  recommend->add_option("--top", cfg.top_n, "number of authors")->check(CLI::PositiveNumber);
  recommend->add_flag("--json", cfg.json, "print only the JSON result");

  auto* stats = app.add_subcommand("stats", "corpus cross-tabulations");
  stats->add_option("--features", cfg.features, "feature dump");
  stats->add_option("--format", cfg.stats_format, "table or json")->check(CLI::IsMember({"table", "json"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream help, error;
    const int code = app.exit(e, help, error);
    out << help.str();
    err << error.str();
    return code == 0 ? kOk : kUsage;
  }

  auto fill = [](std::string& value, const char* name) {
    if (value.empty()) value = default_path(name);
  };
  try {
    if (ingest->parsed()) {
      if (cfg.out.empty()) cfg.out = default_path(".");
      return cmd_ingest(cfg, out, err);
    }
    if (train->parsed()) {
      if (cfg.target == "domain") {
        fill(cfg.corpus, "corpus.jsonl");
      } else if (cfg.mbti_csv.empty()) {
        cfg.mbti_csv = default_path("mbti.csv");
      }
      fill(cfg.out, cfg.target == "domain" ? "domain_model.json" : "mbti_model.json");
      return cmd_train(cfg, out, err);
    }
    fill(cfg.domain_model, "domain_model.json");
    fill(cfg.mbti_model, "mbti_model.json");
    fill(cfg.lexicon, "lexicon.tsv");
    fill(cfg.corpus, "corpus.jsonl");
    fill(cfg.features, "features.jsonl");
    fill(cfg.index, "index.json");
    if (featurize->parsed()) {
      fill(cfg.out, "features.jsonl");
      return cmd_featurize(cfg, out, err);
    }
    if (index->parsed()) {
      fill(cfg.out, "index.json");
      return cmd_index(cfg, out, err);
    }
    if (recommend->parsed()) return cmd_recommend(cfg, out, err);
    return cmd_stats(cfg, out, err);
  } catch (const CommandError& e) {
    err << "error: " << e.what() << '\n';
    return e.code();
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
}

inline int run(int argc, char** argv, std::ostream& out = std::cout,
               std::ostream& err = std::cerr) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, out, err);
}

}  // namespace scribematch::cli

#endif  // SCRIBEMATCH_CLI_HPP
