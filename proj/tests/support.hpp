// Test-only helpers and independent oracles. Nothing here calls into the
// code paths the oracles are used to check.
#ifndef SCRIBEMATCH_TESTS_SUPPORT_HPP
#define SCRIBEMATCH_TESTS_SUPPORT_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "scribematch/classifiers.hpp"
#include "scribematch/corpus.hpp"
#include "scribematch/features.hpp"
#include "scribematch/recommender.hpp"

namespace scribematch::testing {

namespace fs = std::filesystem;

inline fs::path fixture(const std::string& name) {
  return fs::path(SCRIBEMATCH_FIXTURE_DIR) / name;
}

inline fs::path bundled(const std::string& name) {
  return fs::path(SCRIBEMATCH_BUNDLED_DATA_DIR) / name;
}

inline std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void spit(const fs::path& p, const std::string& bytes) {
  std::ofstream out(p, std::ios::binary | std::ios::trunc);
  out << bytes;
}

/// Unique scratch directory removed on destruction.
class TempDir {
 public:
  TempDir() {
    static std::mt19937_64 rng(std::random_device{}());
    path_ = fs::temp_directory_path() / ("scribematch-" + std::to_string(rng()));
    fs::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const fs::path& path() const { return path_; }
  std::string operator/(const std::string& name) const { return (path_ / name).string(); }

 private:
  fs::path path_;
};

inline RawArticle raw_article(std::string body, std::optional<std::string> author,
                              std::size_t row, std::optional<std::string> domain = {}) {
  RawArticle a;
  a.url = "https://example.com/" + std::to_string(row);
  a.headline = "Headline " + std::to_string(row);
  a.body = std::move(body);
  a.author = std::move(author);
  a.domain = std::move(domain);
  a.source_row = row;
  return a;
}

/// `n` space-separated distinct-ish words with a seed-dependent prefix.
inline std::string words(std::size_t n, const std::string& stem = "word") {
  std::string s;
  for (std::size_t i = 0; i < n; ++i) {
    if (i) s += ' ';
    s += stem + std::string(1, char('a' + i % 26));
  }
  return s;
}

// ---------------------------------------------------------------------------
// Syllable fixture

inline std::vector<std::pair<std::string, std::size_t>> syllable_oracle() {
  std::vector<std::pair<std::string, std::size_t>> out;
  std::istringstream in(slurp(fixture("syllable_oracle.tsv")));
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    const auto tab = line.find('\t');
    out.emplace_back(line.substr(0, tab), std::stoul(line.substr(tab + 1)));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Reading ease

/// Reading ease in extended precision, grouped differently from the library.
inline double fres_reference(std::size_t words, std::size_t sentences, std::size_t syllables) {
  const long double w = words, s = sentences, y = syllables;
  return static_cast<double>((206.835L * s * w - 1.015L * w * w - 84.6L * y * s) / (s * w));
}

/// Band table as (inclusive lower bound, class), hardest last.
inline ReadabilityClass readability_reference(double fres) {
  static const std::pair<double, ReadabilityClass> bands[] = {
      {90, ReadabilityClass::Grade_5}, {80, ReadabilityClass::Grade_6},
      {70, ReadabilityClass::Grade_7}, {60, ReadabilityClass::Grade_8},
      {50, ReadabilityClass::Grade_10}, {30, ReadabilityClass::College},
      {10, ReadabilityClass::Graduate}};
  for (const auto& [lo, cls] : bands) {
    if (!(fres < lo)) return cls;
  }
  return ReadabilityClass::Professional;
}

// ---------------------------------------------------------------------------
// Naive Bayes in probability space

/// Trains from dense vectors and scores with products of probabilities
/// (no logarithms). Returns the argmax label, ties (to a relative 1e-12) to
/// the smallest label.
inline std::string nb_brute_force(const std::vector<std::vector<double>>& train_x,
                                  const std::vector<std::string>& train_y,
                                  const std::vector<double>& query, double alpha) {
  std::map<std::string, std::vector<std::size_t>> members;
  for (std::size_t i = 0; i < train_y.size(); ++i) members[train_y[i]].push_back(i);
  const std::size_t vocab = query.size();

  std::string best;
  long double best_score = -1.0L;
  for (const auto& [label, rows] : members) {  // std::map: ascending labels
    std::vector<long double> sums(vocab, 0.0L);
    long double total = 0.0L;
    for (auto r : rows) {
      for (std::size_t j = 0; j < vocab; ++j) {
        sums[j] += train_x[r][j];
        total += train_x[r][j];
      }
    }
    long double score = static_cast<long double>(rows.size()) / train_y.size();
    for (std::size_t j = 0; j < vocab; ++j) {
      const long double theta = (sums[j] + alpha) / (total + alpha * vocab);
      score *= std::pow(theta, static_cast<long double>(query[j]));
    }
    // Scores within a relative 1e-12 count as equal.
    if (score > best_score * (1.0L + 1e-12L)) {
      best_score = score;
      best = label;
    }
  }
  return best;
}

/// Dense copy of a sparse vector.
inline std::vector<double> densify(const SparseVector& v, std::size_t width) {
  std::vector<double> out(width, 0.0);
  for (const auto& e : v) out[e.column] = e.weight;
  return out;
}

// ---------------------------------------------------------------------------
// Recommendation by exhaustive scoring

/// Scores rows by matching-bit counts, stable-sorts in row order (rows are
/// in ascending id order), then keeps first occurrence per author.
inline std::vector<Recommendation> recommend_brute_force(const BitVector& query,
                                                         const std::vector<OheRow>& rows,
                                                         std::size_t n) {
  std::size_t q_ones = 0;
  for (auto b : query) q_ones += b;
  std::vector<std::pair<double, const OheRow*>> scored;
  for (const auto& r : rows) {
    std::size_t both = 0, r_ones = 0;
    for (std::size_t i = 0; i < query.size(); ++i) {
      both += query[i] && r.bits[i];
      r_ones += r.bits[i];
    }
    const double sim = (q_ones == 0 || r_ones == 0)
                           ? 0.0
                           : both / (std::sqrt(double(q_ones)) * std::sqrt(double(r_ones)));
    scored.emplace_back(sim, &r);
  }
  std::stable_sort(scored.begin(), scored.end(),
                   [](const auto& a, const auto& b) { return a.first > b.first; });
  std::vector<Recommendation> out;
  std::vector<std::string> seen;
  for (const auto& [sim, row] : scored) {
    if (out.size() == n) break;
    if (std::find(seen.begin(), seen.end(), row->author) != seen.end()) continue;
    seen.push_back(row->author);
    out.push_back({out.size() + 1, row->author, sim, row->article_id});
  }
  return out;
}

/// Features with chosen OHE classes; the remaining fields are consistent
/// placeholders.
inline ArticleFeatures features_with(std::uint64_t id, Mbti mbti, ReadabilityClass r, Domain d,
                                     DifficultyClass diff) {
  ArticleFeatures f;
  f.article_id = id;
  f.word_count = 600;
  f.size_class = SizeClass::Medium;
  f.fres = 40.0;
  f.mbti = mbti;
  f.readability_class = r;
  f.domain = d;
  f.difficulty_class = diff;
  f.sentiment = Sentiment::Neutral;
  return f;
}

template <typename E>
E random_label(std::mt19937& rng, std::size_t limit = label_count<E>()) {
  return label_at<E>(std::uniform_int_distribution<std::size_t>(0, limit - 1)(rng));
}

}  // namespace scribematch::testing

#endif  // SCRIBEMATCH_TESTS_SUPPORT_HPP
