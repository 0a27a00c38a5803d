#ifndef SCRIBEMATCH_TEXT_HPP
#define SCRIBEMATCH_TEXT_HPP

#include <cmath>
#include <cstddef>
#include <map>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "scribematch/error.hpp"
#include "scribematch/utf8.hpp"

namespace scribematch {

struct Token {
  std::string surface;     // lowercased letters only
  std::size_t char_offset;  // code point offset into the source text

  bool operator==(const Token&) const = default;
};

/// Maximal runs of letters, lowercased. Everything else separates tokens.
inline std::vector<Token> tokenize(std::string_view text) {
  const std::u32string cps = utf8::decode(text);
  std::vector<Token> tokens;
  std::u32string word;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= cps.size(); ++i) {
    if (i < cps.size() && utf8::is_letter(cps[i])) {
      if (word.empty()) start = i;
      word.push_back(utf8::to_lower(cps[i]));
      continue;
    }
    if (!word.empty()) {
      tokens.push_back({utf8::encode(word), start});
      word.clear();
    }
  }
  return tokens;
}

inline std::vector<std::string> surfaces(std::span<const Token> tokens) {
  std::vector<std::string> out;
  out.reserve(tokens.size());
  for (const auto& t : tokens) out.push_back(t.surface);
  return out;
}

/// Sentence count: text is cut after '.', '!' or '?' when followed by
/// whitespace or end of text. Pieces without any letter are not sentences;
/// the result is never below 1.
inline std::size_t split_sentences(std::string_view text) {
  const std::u32string cps = utf8::decode(text);
  bool any_visible = false;
  for (char32_t cp : cps) any_visible = any_visible || !utf8::is_space(cp);
  if (!any_visible) throw InvalidInput("split_sentences: empty text");

  std::size_t count = 0;
  bool has_letter = false;
  for (std::size_t i = 0; i < cps.size(); ++i) {
    has_letter = has_letter || utf8::is_letter(cps[i]);
    const bool terminator = cps[i] == U'.' || cps[i] == U'!' || cps[i] == U'?';
    const bool boundary = i + 1 == cps.size() || utf8::is_space(cps[i + 1]);
    if (terminator && boundary) {
      if (has_letter) ++count;
      has_letter = false;
    }
  }
  if (has_letter) ++count;
  return count == 0 ? 1 : count;
}

namespace detail {
constexpr bool is_syllable_vowel(char32_t c) noexcept {
  return c == U'a' || c == U'e' || c == U'i' || c == U'o' || c == U'u' || c == U'y';
}
}  // namespace detail

/// Vowel-group syllable estimate (vowels a e i o u y). A final silent 'e'
/// is discounted unless the word ends in "le", is at most two letters, or
/// has a single vowel group. Never returns less than 1.
inline std::size_t count_syllables(std::string_view word) {
  if (word.empty()) throw InvalidInput("count_syllables: empty word");
  std::u32string cps = utf8::decode(word);
  for (char32_t& c : cps) {
    if (!utf8::is_letter(c)) {
      throw InvalidInput("count_syllables: non-letter in '" + std::string(word) + "'");
    }
    c = utf8::to_lower(c);
  }

  std::size_t groups = 0;
  bool in_group = false;
  for (char32_t c : cps) {
    const bool v = detail::is_syllable_vowel(c);
    if (v && !in_group) ++groups;
    in_group = v;
  }
  const std::size_t n = cps.size();
  if (n > 2 && cps[n - 1] == U'e' && cps[n - 2] != U'l' && groups >= 2) --groups;
  return groups == 0 ? 1 : groups;
}

// ---------------------------------------------------------------------------
// Polarity

struct PolarityLexicon {
  std::map<std::string, double, std::less<>> entries;
  std::set<std::string, std::less<>> negators;

  /// Throws InvalidInput if a score leaves [-1, 1] or a negator is scored.
  void validate() const {
    for (const auto& [token, score] : entries) {
      if (!(score >= -1.0 && score <= 1.0)) {
        throw InvalidInput("lexicon score out of [-1, 1] for '" + token + "'");
      }
      if (negators.contains(token)) {
        throw InvalidInput("lexicon token '" + token + "' is both scored and a negator");
      }
    }
  }
};

/// Reads the TSV lexicon format: `token<TAB>score` lines, `#` comments, and
/// after a `#NEGATORS` line one negator token per line. Tokens are
/// lowercased. Throws FormatError on malformed lines, InvalidInput on
/// semantic violations.
inline PolarityLexicon parse_lexicon(std::string_view text) {
  utf8::validate(text);
  PolarityLexicon lex;
  bool negator_section = false;
  std::size_t line_no = 0;
  std::size_t pos = 0;

  auto lower = [](std::string_view s) {
    std::string out;
    for (char32_t c : utf8::decode(s)) utf8::append(out, utf8::to_lower(c));
    return out;
  };
  auto trim = [](std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return std::string_view{};
    return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
  };

  while (pos <= text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = trim(text.substr(pos, end - pos));
    pos = end + 1;
    ++line_no;
    if (line.empty()) continue;
    if (line == "#NEGATORS") {
      negator_section = true;
      continue;
    }
    if (line.front() == '#') continue;

    const auto fail = [&](const std::string& what) {
      return FormatError("lexicon line " + std::to_string(line_no) + ": " + what);
    };
    if (negator_section) {
      if (line.find('\t') != std::string_view::npos) throw fail("negator line has a score");
      lex.negators.insert(lower(line));
      continue;
    }
    const auto tab = line.find('\t');
    if (tab == std::string_view::npos) throw fail("expected token<TAB>score");
    const std::string token = lower(trim(line.substr(0, tab)));
    const std::string score_text(trim(line.substr(tab + 1)));
    if (token.empty()) throw fail("empty token");
    std::size_t used = 0;
    double score = 0.0;
    try {
      score = std::stod(score_text, &used);
    } catch (const std::exception&) {
      throw fail("bad score '" + score_text + "'");
    }
    if (used != score_text.size()) throw fail("bad score '" + score_text + "'");
    lex.entries[token] = score;
  }
  lex.validate();
  return lex;
}

/// Mean score of lexicon hits; a hit directly after a negator counts with
/// flipped sign. No hits gives 0.
inline double polarity(std::span<const Token> tokens, const PolarityLexicon& lexicon) {
  double sum = 0.0;
  std::size_t hits = 0;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    const auto it = lexicon.entries.find(tokens[i].surface);
    if (it == lexicon.entries.end()) continue;
    const bool negated = i > 0 && lexicon.negators.contains(tokens[i - 1].surface);
    sum += negated ? -it->second : it->second;
    ++hits;
  }
  if (hits == 0) return 0.0;
  const double mean = sum / static_cast<double>(hits);
  return std::fmin(1.0, std::fmax(-1.0, mean));
}

}  // namespace scribematch

#endif  // SCRIBEMATCH_TEXT_HPP
