#ifndef SCRIBEMATCH_LABELS_HPP
#define SCRIBEMATCH_LABELS_HPP

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "scribematch/error.hpp"

namespace scribematch {

// Categorical feature values. Each enum has a parallel name table through
// LabelTraits; enumerators are listed in the order noted on each type.

/// Alphabetical.
enum class Domain { Finance, Leadership, Marketing, Strategy, Technology };

/// Alphabetical, which is also the order of the four-letter codes.
enum class Mbti {
  ENFJ, ENFP, ENTJ, ENTP, ESFJ, ESFP, ESTJ, ESTP,
  INFJ, INFP, INTJ, INTP, ISFJ, ISFP, ISTJ, ISTP
};

/// Easiest to hardest.
enum class ReadabilityClass {
  Grade_5, Grade_6, Grade_7, Grade_8, Grade_10, College, Graduate, Professional
};

enum class SizeClass { Small, Medium, Large };

/// Lowest to highest density of difficult words.
enum class DifficultyClass { Basic, Elementary, Intermediate, Advanced };

enum class Sentiment { Negative, Neutral, Positive };

template <typename E>
struct LabelTraits;

template <>
struct LabelTraits<Domain> {
  static constexpr std::string_view group = "Domain";
  static constexpr std::array<std::string_view, 5> names = {
      "Finance", "Leadership", "Marketing", "Strategy", "Technology"};
};

template <>
struct LabelTraits<Mbti> {
  static constexpr std::string_view group = "MBTI";
  static constexpr std::array<std::string_view, 16> names = {
      "ENFJ", "ENFP", "ENTJ", "ENTP", "ESFJ", "ESFP", "ESTJ", "ESTP",
      "INFJ", "INFP", "INTJ", "INTP", "ISFJ", "ISFP", "ISTJ", "ISTP"};
};

template <>
struct LabelTraits<ReadabilityClass> {
  static constexpr std::string_view group = "Readability";
  static constexpr std::array<std::string_view, 8> names = {
      "Grade_5", "Grade_6", "Grade_7",  "Grade_8",
      "Grade_10", "College", "Graduate", "Professional"};
};

template <>
struct LabelTraits<SizeClass> {
  static constexpr std::string_view group = "Size";
  static constexpr std::array<std::string_view, 3> names = {"Small", "Medium", "Large"};
};

template <>
struct LabelTraits<DifficultyClass> {
  static constexpr std::string_view group = "Difficulty";
  static constexpr std::array<std::string_view, 4> names = {
      "Basic", "Elementary", "Intermediate", "Advanced"};
};

template <>
struct LabelTraits<Sentiment> {
  static constexpr std::string_view group = "Sentiment";
  static constexpr std::array<std::string_view, 3> names = {
      "Negative", "Neutral", "Positive"};
};

template <typename E>
constexpr std::size_t label_count() noexcept {
  return LabelTraits<E>::names.size();
}

template <typename E>
constexpr std::string_view to_string(E value) noexcept {
  return LabelTraits<E>::names[static_cast<std::size_t>(value)];
}

template <typename E>
constexpr E label_at(std::size_t i) noexcept {
  return static_cast<E>(i);
}

/// Exact-name lookup.
template <typename E>
constexpr std::optional<E> try_parse(std::string_view name) noexcept {
  const auto& names = LabelTraits<E>::names;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (names[i] == name) return static_cast<E>(i);
  }
  return std::nullopt;
}

template <typename E>
E parse(std::string_view name) {
  if (auto v = try_parse<E>(name)) return *v;
  throw InvalidInput("unknown " + std::string(LabelTraits<E>::group) + " label '" +
                     std::string(name) + "'");
}

/// ASCII case-insensitive lookup with surrounding spaces ignored
/// ("  marketing " -> Marketing, "intj" -> INTJ).
template <typename E>
std::optional<E> parse_loose(std::string_view name) {
  const auto first = name.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return std::nullopt;
  name = name.substr(first, name.find_last_not_of(" \t\r\n") - first + 1);
  const auto& names = LabelTraits<E>::names;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (names[i].size() != name.size()) continue;
    bool same = true;
    for (std::size_t k = 0; k < name.size() && same; ++k) {
      auto lower = [](char c) { return (c >= 'A' && c <= 'Z') ? char(c + 32) : c; };
      same = lower(names[i][k]) == lower(name[k]);
    }
    if (same) return static_cast<E>(i);
  }
  return std::nullopt;
}

}  // namespace scribematch

#endif  // SCRIBEMATCH_LABELS_HPP
