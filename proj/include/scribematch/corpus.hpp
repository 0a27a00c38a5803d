#ifndef SCRIBEMATCH_CORPUS_HPP
#define SCRIBEMATCH_CORPUS_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include <json.hpp>

#include "scribematch/csv.hpp"
#include "scribematch/error.hpp"
#include "scribematch/labels.hpp"
#include "scribematch/utf8.hpp"

namespace scribematch {

/// Minimum cleaned-body length, in whitespace-separated words, for an
/// article to enter the corpus.
inline constexpr std::size_t kMinArticleWords = 50;

/// One record exactly as scraped. `source_row` is the 1-based record number
/// within the source file (data rows for CSV, lines for JSONL).
struct RawArticle {
  std::string url;
  std::string headline;
  std::string body;
  std::optional<std::string> sub_domain;
  std::optional<std::string> domain;
  std::optional<std::string> author;
  std::size_t source_row = 0;

  bool operator==(const RawArticle&) const = default;
};

struct CleanArticle {
  std::uint64_t id = 0;
  std::string author;
  std::string headline;
  std::string body;
  std::optional<Domain> domain;
  std::size_t word_count = 0;

  bool operator==(const CleanArticle&) const = default;
};

enum class DropReason { Duplicate, Short, NoAuthor };

constexpr std::string_view to_string(DropReason r) noexcept {
  switch (r) {
    case DropReason::Duplicate: return "duplicate";
    case DropReason::Short: return "short";
    case DropReason::NoAuthor: return "no_author";
  }
  return "";
}

struct DroppedRecord {
  std::size_t source_row = 0;
  DropReason reason = DropReason::Short;

  bool operator==(const DroppedRecord&) const = default;
};

struct FilterReport {
  std::size_t kept = 0;
  std::size_t dropped_duplicate = 0;
  std::size_t dropped_short = 0;
  std::size_t dropped_no_author = 0;
  std::vector<DroppedRecord> dropped_ids;

  std::size_t total() const noexcept {
    return kept + dropped_duplicate + dropped_short + dropped_no_author;
  }
};

/// A source record that was skipped during parsing.
struct RowError {
  std::size_t row = 0;
  std::string message;
};

struct ParseResult {
  std::vector<RawArticle> articles;
  std::vector<RowError> errors;
};

enum class CorpusFormat { Csv, Jsonl };

// ---------------------------------------------------------------------------
// Text cleaning

namespace detail {

inline bool is_apostrophe(char32_t cp) { return cp == U'\'' || cp == 0x2018 || cp == 0x2019; }

/// Replaces typographic punctuation by its ASCII counterpart.
inline void append_normalized(std::u32string& out, char32_t cp) {
  switch (cp) {
    case 0x2018: case 0x2019: case 0x201A: case 0x201B: case 0x2032:
      out.push_back(U'\'');
      return;
    case 0x201C: case 0x201D: case 0x201E: case 0x201F: case 0x2033:
      out.push_back(U'"');
      return;
    case 0x2010: case 0x2011: case 0x2012: case 0x2013: case 0x2014: case 0x2015:
    case 0x2212:
      out.push_back(U'-');
      return;
    case 0x2026:
      out.append(U"...");
      return;
    case 0x00A0: case 0x2007: case 0x202F:
      out.push_back(U' ');
      return;
    default:
      out.push_back(cp);
  }
}

inline std::u32string collapse_whitespace(const std::u32string& in) {
  std::u32string out;
  out.reserve(in.size());
  bool pending_space = false;
  for (char32_t cp : in) {
    if (utf8::is_space(cp)) {
      pending_space = true;
      continue;
    }
    if (pending_space && !out.empty()) out.push_back(U' ');
    pending_space = false;
    out.push_back(cp);
  }
  return out;
}

}  // namespace detail

/// Normalizes scraped text:
///   1. curly quotes, dashes, ellipsis and no-break spaces become ASCII;
///   2. control characters other than whitespace, and U+FFFD, are removed;
///   3. an apostrophe between two letters is deleted ("you've" -> "youve");
///   4. whitespace runs collapse to one space;
///   5. leading and trailing whitespace is trimmed.
/// Idempotent. Throws DecodeError on invalid UTF-8.
inline std::string clean_text(std::string_view raw) {
  const std::u32string in = utf8::decode(raw);

  std::u32string step;
  step.reserve(in.size());
  for (char32_t cp : in) {
    if (cp == 0xFFFD) continue;
    if (utf8::is_control(cp) && !utf8::is_space(cp)) continue;
    detail::append_normalized(step, cp);
  }

  std::u32string no_apostrophes;
  no_apostrophes.reserve(step.size());
  for (std::size_t i = 0; i < step.size(); ++i) {
    if (detail::is_apostrophe(step[i]) && i > 0 && i + 1 < step.size() &&
        utf8::is_letter(step[i - 1]) && utf8::is_letter(step[i + 1])) {
      continue;
    }
    no_apostrophes.push_back(step[i]);
  }

  return utf8::encode(detail::collapse_whitespace(no_apostrophes));
}

/// Whitespace collapse and trim only; apostrophes in names survive.
inline std::string normalize_author(std::string_view raw) {
  std::u32string kept;
  for (char32_t cp : utf8::decode(raw)) {
    if (cp == 0xFFFD) continue;
    if (utf8::is_control(cp) && !utf8::is_space(cp)) continue;
    detail::append_normalized(kept, cp);
  }
  return utf8::encode(detail::collapse_whitespace(kept));
}

/// Number of space-separated tokens in already-cleaned text.
inline std::size_t count_words(std::string_view cleaned) {
  std::size_t n = 0;
  bool in_word = false;
  for (char c : cleaned) {
    const bool space = c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' || c == '\f';
    if (!space && !in_word) ++n;
    in_word = !space;
  }
  return n;
}

// ---------------------------------------------------------------------------
// Parsing

namespace detail {

inline std::optional<std::string> non_empty(std::string s) {
  if (s.empty()) return std::nullopt;
  return s;
}

inline ParseResult parse_csv(std::string_view text) {
  ParseResult result;
  const auto records = csv::read(text);
  if (records.empty()) return result;

  const auto& header = records.front().fields;
  auto column = [&](std::string_view name) -> std::optional<std::size_t> {
    for (std::size_t i = 0; i < header.size(); ++i) {
      if (header[i] == name) return i;
    }
    return std::nullopt;
  };
  const auto url = column("url");
  const auto headline = column("headline");
  const auto body = column("body");
  const auto sub_domain = column("sub_domain");
  const auto domain = column("domain");
  const auto author = column("author");

  for (std::size_t r = 1; r < records.size(); ++r) {
    const auto& fields = records[r].fields;
    auto get = [&](std::optional<std::size_t> col) -> std::optional<std::string> {
      if (!col || *col >= fields.size()) return std::nullopt;
      return fields[*col];
    };
    std::vector<std::string> missing;
    auto h = get(headline);
    auto b = get(body);
    if (!h) missing.emplace_back("headline");
    if (!b) missing.emplace_back("body");
    if (!missing.empty()) {
      std::string msg = "row " + std::to_string(r) + " (line " +
                        std::to_string(records[r].line) + "): missing required column";
      for (const auto& m : missing) msg += " " + m;
      result.errors.push_back({r, std::move(msg)});
      continue;
    }
    RawArticle a;
    a.url = get(url).value_or("");
    a.headline = std::move(*h);
    a.body = std::move(*b);
    a.sub_domain = non_empty(get(sub_domain).value_or(""));
    a.domain = non_empty(get(domain).value_or(""));
    a.author = non_empty(get(author).value_or(""));
    a.source_row = r;
    result.articles.push_back(std::move(a));
  }
  return result;
}

inline ParseResult parse_jsonl(std::string_view text) {
  ParseResult result;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (line_no == 1 && line.starts_with("\xEF\xBB\xBF")) line.remove_prefix(3);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.find_first_not_of(" \t") == std::string_view::npos) continue;

    const auto row_error = [&](const std::string& what) {
      result.errors.push_back({line_no, "line " + std::to_string(line_no) + ": " + what});
    };
    nlohmann::json j = nlohmann::json::parse(line, nullptr, false);
    if (j.is_discarded() || !j.is_object()) {
      row_error("not a JSON object");
      continue;
    }
    auto text_field = [&](const char* key) -> std::optional<std::string> {
      auto it = j.find(key);
      if (it == j.end() || !it->is_string()) return std::nullopt;
      return it->get<std::string>();
    };
    auto h = text_field("headline");
    auto b = text_field("body");
    if (!h || !b) {
      std::string msg = "missing required column";
      if (!h) msg += " headline";
      if (!b) msg += " body";
      row_error(msg);
      continue;
    }
    RawArticle a;
    a.url = text_field("url").value_or("");
    a.headline = std::move(*h);
    a.body = std::move(*b);
    a.sub_domain = non_empty(text_field("sub_domain").value_or(""));
    a.domain = non_empty(text_field("domain").value_or(""));
    a.author = non_empty(text_field("author").value_or(""));
    a.source_row = line_no;
    result.articles.push_back(std::move(a));
  }
  return result;
}

}  // namespace detail

/// Parses a scraped corpus file. The whole input must be valid UTF-8
/// (DecodeError otherwise); records lacking headline or body are skipped
/// and listed in ParseResult::errors.
inline ParseResult parse_corpus_file(std::string_view bytes, CorpusFormat format) {
  utf8::validate(bytes);
  return format == CorpusFormat::Csv ? detail::parse_csv(bytes) : detail::parse_jsonl(bytes);
}

// ---------------------------------------------------------------------------
// Filtering

/// Cleans every record, then drops (in this precedence) records with no
/// author, with fewer than kMinArticleWords words, or whose cleaned body
/// equals that of an earlier kept record. Survivors are numbered from 0.
inline std::pair<std::vector<CleanArticle>, FilterReport> filter_and_dedup(
    const std::vector<RawArticle>& articles) {
  std::vector<CleanArticle> kept;
  FilterReport report;
  std::unordered_set<std::string> seen_bodies;

  for (const auto& raw : articles) {
    auto drop = [&](DropReason reason, std::size_t& counter) {
      ++counter;
      report.dropped_ids.push_back({raw.source_row, reason});
    };
    std::string author = normalize_author(raw.author.value_or(""));
    if (author.empty()) {
      drop(DropReason::NoAuthor, report.dropped_no_author);
      continue;
    }
    std::string body = clean_text(raw.body);
    const std::size_t words = count_words(body);
    if (words < kMinArticleWords) {
      drop(DropReason::Short, report.dropped_short);
      continue;
    }
    if (seen_bodies.contains(body)) {
      drop(DropReason::Duplicate, report.dropped_duplicate);
      continue;
    }
    seen_bodies.insert(body);

    CleanArticle a;
    a.id = kept.size();
    a.author = std::move(author);
    a.headline = clean_text(raw.headline);
    a.body = std::move(body);
    a.domain = raw.domain ? parse_loose<Domain>(*raw.domain) : std::nullopt;
    a.word_count = words;
    kept.push_back(std::move(a));
  }
  report.kept = kept.size();
  return {std::move(kept), std::move(report)};
}

// ---------------------------------------------------------------------------
// Persistence

inline nlohmann::ordered_json to_json(const CleanArticle& a) {
  nlohmann::ordered_json j;
  j["id"] = a.id;
  j["author"] = a.author;
  j["headline"] = a.headline;
  j["body"] = a.body;
  j["domain"] = a.domain ? nlohmann::ordered_json(std::string(to_string(*a.domain)))
                         : nlohmann::ordered_json(nullptr);
  j["word_count"] = a.word_count;
  return j;
}

/// Canonical corpus: one article per line, fixed key order, '\n' endings.
inline std::string write_corpus_jsonl(const std::vector<CleanArticle>& articles) {
  std::string out;
  for (const auto& a : articles) {
    out += to_json(a).dump();
    out += '\n';
  }
  return out;
}

/// Reads a canonical corpus back. Throws FormatError on malformed lines or
/// records that break the CleanArticle invariants.
inline std::vector<CleanArticle> read_corpus_jsonl(std::string_view text) {
  utf8::validate(text);
  std::vector<CleanArticle> articles;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string_view::npos) continue;
    const auto fail = [&](const std::string& what) {
      return FormatError("corpus line " + std::to_string(line_no) + ": " + what);
    };
    try {
      const auto j = nlohmann::json::parse(line);
      CleanArticle a;
      a.id = j.at("id").get<std::uint64_t>();
      a.author = j.at("author").get<std::string>();
      a.headline = j.at("headline").get<std::string>();
      a.body = j.at("body").get<std::string>();
      const auto& d = j.at("domain");
      if (!d.is_null()) {
        a.domain = try_parse<Domain>(d.get<std::string>());
        if (!a.domain) throw fail("unknown domain '" + d.get<std::string>() + "'");
      }
      a.word_count = j.at("word_count").get<std::size_t>();
      if (a.author.empty()) throw fail("empty author");
      if (a.word_count < kMinArticleWords) throw fail("word_count below minimum");
      articles.push_back(std::move(a));
    } catch (const nlohmann::json::exception& e) {
      throw fail(e.what());
    }
  }
  return articles;
}

inline nlohmann::ordered_json to_json(const FilterReport& r) {
  nlohmann::ordered_json j;
  j["kept"] = r.kept;
  j["dropped_duplicate"] = r.dropped_duplicate;
  j["dropped_short"] = r.dropped_short;
  j["dropped_no_author"] = r.dropped_no_author;
  j["dropped_ids"] = nlohmann::ordered_json::array();
  for (const auto& d : r.dropped_ids) {
    j["dropped_ids"].push_back({{"row", d.source_row}, {"reason", to_string(d.reason)}});
  }
  return j;
}

}  // namespace scribematch

#endif  // SCRIBEMATCH_CORPUS_HPP
