#ifndef SCRIBEMATCH_CLASSIFIERS_HPP
#define SCRIBEMATCH_CLASSIFIERS_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "scribematch/error.hpp"
#include "scribematch/stopwords.hpp"
#include "scribematch/utf8.hpp"

namespace scribematch {

// ---------------------------------------------------------------------------
// TF-IDF

struct SparseEntry {
  std::size_t column = 0;
  double weight = 0.0;

  bool operator==(const SparseEntry&) const = default;
};

/// Non-zero entries, ascending by column.
using SparseVector = std::vector<SparseEntry>;

struct TfidfVectorizer {
  std::vector<std::string> terms;  // column -> token, sorted
  std::vector<double> idf;         // per column
  std::size_t doc_count = 0;
  StopwordSet stopwords;

  std::size_t size() const noexcept { return terms.size(); }

  std::optional<std::size_t> column(std::string_view token) const {
    const auto it = std::lower_bound(terms.begin(), terms.end(), token);
    if (it == terms.end() || *it != token) return std::nullopt;
    return static_cast<std::size_t>(it - terms.begin());
  }
};

/// Smoothed inverse document frequency, ln((1+N)/(1+df)) + 1.
inline double smoothed_idf(std::size_t doc_count, std::size_t df) {
  return std::log((1.0 + static_cast<double>(doc_count)) / (1.0 + static_cast<double>(df))) +
         1.0;
}

namespace detail {
inline std::size_t codepoint_length(std::string_view s) {
  std::size_t n = 0;
  for (unsigned char c : s) n += (c & 0xC0) != 0x80;
  return n;
}
}  // namespace detail

/// True when `token` may become a vocabulary term.
inline bool is_vocabulary_candidate(std::string_view token, const StopwordSet& stopwords) {
  return detail::codepoint_length(token) >= 2 && !stopwords.contains(token);
}

/// Vocabulary is every non-stopword token of two or more letters seen in any
/// document, sorted. Throws TrainingError when that set is empty.
inline TfidfVectorizer fit_tfidf(std::span<const std::vector<std::string>> docs,
                                 StopwordSet stopwords) {
  if (docs.empty()) throw TrainingError("fit_tfidf: no documents");
  std::map<std::string, std::size_t, std::less<>> df;
  for (const auto& doc : docs) {
    std::vector<std::string_view> unique;
    for (const auto& tok : doc) {
      if (is_vocabulary_candidate(tok, stopwords)) unique.push_back(tok);
    }
    std::sort(unique.begin(), unique.end());
    unique.erase(std::unique(unique.begin(), unique.end()), unique.end());
    for (auto tok : unique) {
      auto it = df.find(tok);
      if (it == df.end()) it = df.emplace(std::string(tok), 0).first;
      ++it->second;
    }
  }
  if (df.empty()) throw TrainingError("fit_tfidf: empty vocabulary after stopword removal");

  TfidfVectorizer v;
  v.doc_count = docs.size();
  v.stopwords = std::move(stopwords);
  v.terms.reserve(df.size());
  v.idf.reserve(df.size());
  for (const auto& [term, count] : df) {
    v.terms.push_back(term);
    v.idf.push_back(smoothed_idf(v.doc_count, count));
  }
  return v;
}

/// Raw term count times idf, L2-normalized. Unknown tokens are ignored; a
/// document with no known token maps to the empty (zero) vector.
inline SparseVector transform(const TfidfVectorizer& vectorizer,
                              std::span<const std::string> doc) {
  std::map<std::size_t, double> counts;
  for (const auto& tok : doc) {
    if (auto col = vectorizer.column(tok)) counts[*col] += 1.0;
  }
  SparseVector out;
  out.reserve(counts.size());
  double norm2 = 0.0;
  for (const auto& [col, tf] : counts) {
    const double w = tf * vectorizer.idf[col];
    out.push_back({col, w});
    norm2 += w * w;
  }
  if (norm2 > 0.0) {
    const double norm = std::sqrt(norm2);
    for (auto& e : out) e.weight /= norm;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Multinomial Naive Bayes

struct NbClassifier {
  std::vector<std::string> labels;                   // sorted
  std::vector<double> log_prior;                     // per label
  std::vector<std::vector<double>> log_likelihood;  // [label][column]
  double alpha = 1.0;
  TfidfVectorizer vectorizer;

  std::optional<std::size_t> label_index(std::string_view label) const {
    const auto it = std::lower_bound(labels.begin(), labels.end(), label);
    if (it == labels.end() || *it != label) return std::nullopt;
    return static_cast<std::size_t>(it - labels.begin());
  }
};

/// Fits class priors and Laplace/Lidstone-smoothed per-class term
/// distributions over fractional (tf-idf) counts:
///   log_prior(c)        = ln(n_c / n)
///   log_likelihood(c,j) = ln((S_cj + alpha) / (S_c + alpha * V))
/// where S_cj sums column j over class c and S_c sums all of class c.
inline NbClassifier train_nb(TfidfVectorizer vectorizer, std::span<const SparseVector> vectors,
                             std::span<const std::string> labels, double alpha = 1.0) {
  if (vectors.size() != labels.size()) {
    throw InvalidInput("train_nb: vectors and labels differ in length");
  }
  if (!(alpha > 0.0) || !std::isfinite(alpha)) {
    throw InvalidInput("train_nb: alpha must be positive");
  }
  NbClassifier m;
  m.alpha = alpha;
  m.labels.assign(labels.begin(), labels.end());
  std::sort(m.labels.begin(), m.labels.end());
  m.labels.erase(std::unique(m.labels.begin(), m.labels.end()), m.labels.end());
  if (m.labels.size() < 2) {
    throw TrainingError("train_nb: need at least two distinct labels, got " +
                        std::to_string(m.labels.size()));
  }

  const std::size_t k = m.labels.size();
  const std::size_t vocab = vectorizer.size();
  std::vector<std::size_t> class_docs(k, 0);
  std::vector<std::vector<double>> sums(k, std::vector<double>(vocab, 0.0));
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    const std::size_t c = *m.label_index(labels[i]);
    ++class_docs[c];
    for (const auto& e : vectors[i]) {
      if (e.column >= vocab) throw InvalidInput("train_nb: column outside vocabulary");
      if (e.weight < 0.0) throw InvalidInput("train_nb: negative feature weight");
      sums[c][e.column] += e.weight;
    }
  }

  const double total = static_cast<double>(vectors.size());
  m.log_prior.resize(k);
  m.log_likelihood.assign(k, std::vector<double>(vocab, 0.0));
  for (std::size_t c = 0; c < k; ++c) {
    m.log_prior[c] = std::log(static_cast<double>(class_docs[c]) / total);
    double class_total = 0.0;
    for (double s : sums[c]) class_total += s;
    const double denom = std::log(class_total + alpha * static_cast<double>(vocab));
    for (std::size_t j = 0; j < vocab; ++j) {
      m.log_likelihood[c][j] = std::log(sums[c][j] + alpha) - denom;
    }
  }
  m.vectorizer = std::move(vectorizer);
  return m;
}

struct Prediction {
  std::string label;
  std::vector<double> log_posterior;  // unnormalized, aligned with model labels
};

/// argmax_c log_prior(c) + sum_j x_j log_likelihood(c, j). Ties go to the
/// lexicographically smallest label.
inline Prediction predict_vector(const NbClassifier& model, const SparseVector& x) {
  Prediction p;
  p.log_posterior = model.log_prior;
  for (std::size_t c = 0; c < model.labels.size(); ++c) {
    for (const auto& e : x) p.log_posterior[c] += e.weight * model.log_likelihood[c][e.column];
  }
  std::size_t best = 0;
  for (std::size_t c = 1; c < p.log_posterior.size(); ++c) {
    if (p.log_posterior[c] > p.log_posterior[best]) best = c;
  }
  p.label = model.labels[best];
  return p;
}

inline Prediction predict(const NbClassifier& model, std::span<const std::string> doc) {
  return predict_vector(model, transform(model.vectorizer, doc));
}

// ---------------------------------------------------------------------------
// Training entry point shared by every label set

struct LabeledDoc {
  std::vector<std::string> tokens;
  std::string label;
};

/// Fits the vectorizer on the documents, vectorizes them and trains NB.
/// Domain and MBTI models are both produced here.
inline NbClassifier train_text_classifier(std::span<const LabeledDoc> docs,
                                          StopwordSet stopwords, double alpha = 1.0) {
  std::vector<std::vector<std::string>> token_lists;
  std::vector<std::string> labels;
  token_lists.reserve(docs.size());
  labels.reserve(docs.size());
  for (const auto& d : docs) {
    token_lists.push_back(d.tokens);
    labels.push_back(d.label);
  }
  TfidfVectorizer vectorizer = fit_tfidf(token_lists, std::move(stopwords));
  std::vector<SparseVector> vectors;
  vectors.reserve(docs.size());
  for (const auto& t : token_lists) vectors.push_back(transform(vectorizer, t));
  return train_nb(std::move(vectorizer), vectors, labels, alpha);
}

// ---------------------------------------------------------------------------
// Evaluation

struct EvalReport {
  std::vector<std::string> labels;
  double accuracy = 0.0;
  std::vector<double> precision;
  std::vector<double> recall;
  std::vector<double> f1;
  double macro_f1 = 0.0;
  std::vector<std::vector<std::size_t>> confusion;  // [true][predicted]
  std::size_t total = 0;
};

/// Precision, recall and F1 are 0 for a class whose denominator is 0.
inline EvalReport evaluate(const NbClassifier& model, std::span<const LabeledDoc> docs) {
  if (docs.empty()) throw InvalidInput("evaluate: empty evaluation set");
  const std::size_t k = model.labels.size();
  EvalReport r;
  r.labels = model.labels;
  r.confusion.assign(k, std::vector<std::size_t>(k, 0));
  for (const auto& d : docs) {
    const auto truth = model.label_index(d.label);
    if (!truth) throw EvaluationError("evaluate: label '" + d.label + "' unknown to model");
    const std::size_t guess = *model.label_index(predict(model, d.tokens).label);
    ++r.confusion[*truth][guess];
  }
  r.total = docs.size();

  std::size_t correct = 0;
  r.precision.assign(k, 0.0);
  r.recall.assign(k, 0.0);
  r.f1.assign(k, 0.0);
  for (std::size_t c = 0; c < k; ++c) {
    correct += r.confusion[c][c];
    std::size_t predicted = 0;
    std::size_t actual = 0;
    for (std::size_t o = 0; o < k; ++o) {
      predicted += r.confusion[o][c];
      actual += r.confusion[c][o];
    }
    const double tp = static_cast<double>(r.confusion[c][c]);
    if (predicted > 0) r.precision[c] = tp / static_cast<double>(predicted);
    if (actual > 0) r.recall[c] = tp / static_cast<double>(actual);
    const double pr = r.precision[c] + r.recall[c];
    if (pr > 0.0) r.f1[c] = 2.0 * r.precision[c] * r.recall[c] / pr;
  }
  r.accuracy = static_cast<double>(correct) / static_cast<double>(r.total);
  double f1_sum = 0.0;
  for (double f : r.f1) f1_sum += f;
  r.macro_f1 = f1_sum / static_cast<double>(k);
  return r;
}

inline nlohmann::ordered_json to_json(const EvalReport& r) {
  nlohmann::ordered_json j;
  j["total"] = r.total;
  j["accuracy"] = r.accuracy;
  j["macro_f1"] = r.macro_f1;
  j["per_class"] = nlohmann::ordered_json::array();
  for (std::size_t c = 0; c < r.labels.size(); ++c) {
    j["per_class"].push_back({{"label", r.labels[c]},
                              {"precision", r.precision[c]},
                              {"recall", r.recall[c]},
                              {"f1", r.f1[c]}});
  }
  j["labels"] = r.labels;
  j["confusion"] = r.confusion;
  return j;
}

// ---------------------------------------------------------------------------
// Persistence

inline constexpr int kModelFormatVersion = 1;

/// Canonical JSON: object keys sorted, shortest round-trip doubles, so equal
/// models give equal bytes and reloading reproduces every weight exactly.
inline std::string save_model(const NbClassifier& model) {
  nlohmann::json j;
  j["format_version"] = kModelFormatVersion;
  j["labels"] = model.labels;
  j["log_prior"] = model.log_prior;
  j["vocabulary"] = model.vectorizer.terms;
  j["idf"] = model.vectorizer.idf;
  j["doc_count"] = model.vectorizer.doc_count;
  j["log_likelihood"] = model.log_likelihood;
  j["alpha"] = model.alpha;
  return j.dump() + "\n";
}

inline NbClassifier load_model(std::string_view bytes) {
  nlohmann::json j = nlohmann::json::parse(bytes, nullptr, false);
  if (j.is_discarded() || !j.is_object()) throw LoadError("model: malformed JSON payload");
  NbClassifier m;
  try {
    const int version = j.at("format_version").get<int>();
    if (version != kModelFormatVersion) {
      throw LoadError("model: unsupported format_version " + std::to_string(version));
    }
    m.labels = j.at("labels").get<std::vector<std::string>>();
    m.log_prior = j.at("log_prior").get<std::vector<double>>();
    m.vectorizer.terms = j.at("vocabulary").get<std::vector<std::string>>();
    m.vectorizer.idf = j.at("idf").get<std::vector<double>>();
    m.vectorizer.doc_count = j.at("doc_count").get<std::size_t>();
    m.log_likelihood = j.at("log_likelihood").get<std::vector<std::vector<double>>>();
    m.alpha = j.at("alpha").get<double>();
  } catch (const nlohmann::json::exception& e) {
    throw LoadError(std::string("model: ") + e.what());
  }

  const auto strictly_sorted = [](const std::vector<std::string>& v) {
    return std::adjacent_find(v.begin(), v.end(), std::greater_equal<>()) == v.end();
  };
  const std::size_t vocab = m.vectorizer.terms.size();
  if (m.labels.size() < 2 || !strictly_sorted(m.labels)) {
    throw LoadError("model: labels must be at least two, sorted and unique");
  }
  if (!strictly_sorted(m.vectorizer.terms)) throw LoadError("model: vocabulary not sorted");
  if (m.vectorizer.idf.size() != vocab) throw LoadError("model: idf length mismatch");
  if (m.log_prior.size() != m.labels.size() || m.log_likelihood.size() != m.labels.size()) {
    throw LoadError("model: per-label arrays do not match labels");
  }
  for (const auto& row : m.log_likelihood) {
    if (row.size() != vocab) throw LoadError("model: log_likelihood row length mismatch");
  }
  if (!(m.alpha > 0.0)) throw LoadError("model: alpha must be positive");
  return m;
}

}  // namespace scribematch

#endif  // SCRIBEMATCH_CLASSIFIERS_HPP
