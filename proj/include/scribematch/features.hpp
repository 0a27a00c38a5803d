#ifndef SCRIBEMATCH_FEATURES_HPP
#define SCRIBEMATCH_FEATURES_HPP

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "scribematch/classifiers.hpp"
#include "scribematch/corpus.hpp"
#include "scribematch/error.hpp"
#include "scribematch/labels.hpp"
#include "scribematch/text.hpp"

namespace scribematch {

struct ArticleFeatures {
  std::uint64_t article_id = 0;
  std::size_t word_count = 0;
  SizeClass size_class = SizeClass::Small;
  double fres = 0.0;
  ReadabilityClass readability_class = ReadabilityClass::College;
  std::size_t difficult_count = 0;
  double difficult_density = 0.0;
  DifficultyClass difficulty_class = DifficultyClass::Basic;
  double polarity = 0.0;
  Sentiment sentiment = Sentiment::Neutral;
  Domain domain = Domain::Finance;
  Mbti mbti = Mbti::INTJ;

  bool operator==(const ArticleFeatures&) const = default;
};

/// Flesch reading ease: 206.835 - 1.015 (words/sentences) - 84.6 (syllables/words).
/// Unclamped.
inline double fres_score(std::size_t total_words, std::size_t total_sentences,
                         std::size_t total_syllables) {
  if (total_words == 0 || total_sentences == 0 || total_syllables == 0) {
    throw InvalidInput("fres_score: counts must be positive");
  }
  const double words = static_cast<double>(total_words);
  return 206.835 - 1.015 * (words / static_cast<double>(total_sentences)) -
         84.6 * (static_cast<double>(total_syllables) / words);
}

/// Standard Flesch score-to-grade bands. Lower bounds are inclusive.
inline ReadabilityClass readability_class(double fres) noexcept {
  if (fres >= 90.0) return ReadabilityClass::Grade_5;
  if (fres >= 80.0) return ReadabilityClass::Grade_6;
  if (fres >= 70.0) return ReadabilityClass::Grade_7;
  if (fres >= 60.0) return ReadabilityClass::Grade_8;
  if (fres >= 50.0) return ReadabilityClass::Grade_10;
  if (fres >= 30.0) return ReadabilityClass::College;
  if (fres >= 10.0) return ReadabilityClass::Graduate;
  return ReadabilityClass::Professional;
}

/// Small up to 500 words inclusive, Medium 501-1000, Large above 1000.
inline SizeClass size_class(std::size_t word_count) noexcept {
  if (word_count <= 500) return SizeClass::Small;
  if (word_count <= 1000) return SizeClass::Medium;
  return SizeClass::Large;
}

inline constexpr double kElementaryDensity = 0.15;
inline constexpr double kIntermediateDensity = 0.25;
inline constexpr double kAdvancedDensity = 0.35;

inline DifficultyClass difficulty_class(double density) noexcept {
  if (density < kElementaryDensity) return DifficultyClass::Basic;
  if (density < kIntermediateDensity) return DifficultyClass::Elementary;
  if (density < kAdvancedDensity) return DifficultyClass::Intermediate;
  return DifficultyClass::Advanced;
}

struct Difficulty {
  std::size_t difficult_count = 0;
  double density = 0.0;
  DifficultyClass cls = DifficultyClass::Basic;
};

/// A difficult word has two or more syllables.
inline Difficulty difficulty(std::span<const Token> tokens) {
  if (tokens.empty()) throw InvalidInput("difficulty: no tokens");
  Difficulty d;
  for (const auto& t : tokens) d.difficult_count += count_syllables(t.surface) >= 2;
  d.density = static_cast<double>(d.difficult_count) / static_cast<double>(tokens.size());
  d.cls = difficulty_class(d.density);
  return d;
}

inline Sentiment sentiment_class(double polarity) {
  if (!(polarity >= -1.0 && polarity <= 1.0)) {
    throw InvalidInput("sentiment_class: polarity outside [-1, 1]");
  }
  if (polarity > 0.0) return Sentiment::Positive;
  if (polarity < 0.0) return Sentiment::Negative;
  return Sentiment::Neutral;
}

/// Computes every feature of one article. Word counts, syllables and
/// difficulty are taken over letter tokens of the body. A labeled domain
/// wins over the domain model; MBTI always comes from the MBTI model.
inline ArticleFeatures extract_features(const CleanArticle& article,
                                        const NbClassifier& domain_model,
                                        const NbClassifier& mbti_model,
                                        const PolarityLexicon& lexicon) {
  const std::vector<Token> tokens = tokenize(article.body);
  if (tokens.empty()) {
    throw InvalidInput("article " + std::to_string(article.id) + " has no words");
  }
  ArticleFeatures f;
  f.article_id = article.id;
  f.word_count = tokens.size();
  f.size_class = size_class(f.word_count);

  std::size_t syllables = 0;
  for (const auto& t : tokens) syllables += count_syllables(t.surface);
  f.fres = fres_score(f.word_count, split_sentences(article.body), syllables);
  f.readability_class = readability_class(f.fres);

  const Difficulty d = difficulty(tokens);
  f.difficult_count = d.difficult_count;
  f.difficult_density = d.density;
  f.difficulty_class = d.cls;

  f.polarity = polarity(tokens, lexicon);
  f.sentiment = sentiment_class(f.polarity);

  const std::vector<std::string> words = surfaces(tokens);
  f.domain = article.domain ? *article.domain : parse<Domain>(predict(domain_model, words).label);
  f.mbti = parse<Mbti>(predict(mbti_model, words).label);
  return f;
}

// ---------------------------------------------------------------------------
// Feature dump (JSONL)

inline nlohmann::ordered_json to_json(const ArticleFeatures& f) {
  nlohmann::ordered_json j;
  j["article_id"] = f.article_id;
  j["word_count"] = f.word_count;
  j["size_class"] = to_string(f.size_class);
  j["fres"] = f.fres;
  j["readability_class"] = to_string(f.readability_class);
  j["difficult_count"] = f.difficult_count;
  j["difficult_density"] = f.difficult_density;
  j["difficulty_class"] = to_string(f.difficulty_class);
  j["polarity"] = f.polarity;
  j["sentiment"] = to_string(f.sentiment);
  j["domain"] = to_string(f.domain);
  j["mbti"] = to_string(f.mbti);
  return j;
}

inline ArticleFeatures features_from_json(const nlohmann::json& j) {
  ArticleFeatures f;
  f.article_id = j.at("article_id").get<std::uint64_t>();
  f.word_count = j.at("word_count").get<std::size_t>();
  f.size_class = parse<SizeClass>(j.at("size_class").get<std::string>());
  f.fres = j.at("fres").get<double>();
  f.readability_class = parse<ReadabilityClass>(j.at("readability_class").get<std::string>());
  f.difficult_count = j.at("difficult_count").get<std::size_t>();
  f.difficult_density = j.at("difficult_density").get<double>();
  f.difficulty_class = parse<DifficultyClass>(j.at("difficulty_class").get<std::string>());
  f.polarity = j.at("polarity").get<double>();
  f.sentiment = parse<Sentiment>(j.at("sentiment").get<std::string>());
  f.domain = parse<Domain>(j.at("domain").get<std::string>());
  f.mbti = parse<Mbti>(j.at("mbti").get<std::string>());
  return f;
}

inline std::string write_features_jsonl(std::span<const ArticleFeatures> features) {
  std::string out;
  for (const auto& f : features) {
    out += to_json(f).dump();
    out += '\n';
  }
  return out;
}

inline std::vector<ArticleFeatures> read_features_jsonl(std::string_view text) {
  std::vector<ArticleFeatures> out;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string_view::npos) continue;
    try {
      out.push_back(features_from_json(nlohmann::json::parse(line)));
    } catch (const nlohmann::json::exception& e) {
      throw FormatError("features line " + std::to_string(line_no) + ": " + e.what());
    } catch (const InvalidInput& e) {
      throw FormatError("features line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return out;
}

}  // namespace scribematch

#endif  // SCRIBEMATCH_FEATURES_HPP
