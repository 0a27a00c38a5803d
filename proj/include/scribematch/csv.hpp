#ifndef SCRIBEMATCH_CSV_HPP
#define SCRIBEMATCH_CSV_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "scribematch/error.hpp"

namespace scribematch::csv {

struct Record {
  std::size_t line = 0;  // 1-based physical line the record starts on
  std::vector<std::string> fields;
};

/// RFC 4180 reader: comma separated, double-quoted fields with "" escapes,
/// quoted fields may span lines, CRLF or LF record endings. Blank lines are
/// skipped. A leading UTF-8 BOM is ignored.
inline std::vector<Record> read(std::string_view text) {
  if (text.starts_with("\xEF\xBB\xBF")) text.remove_prefix(3);

  std::vector<Record> records;
  Record current;
  std::string field;
  std::size_t line = 1;
  bool in_quotes = false;
  bool field_quoted = false;
  bool record_open = false;

  auto end_field = [&] {
    current.fields.push_back(std::move(field));
    field.clear();
    field_quoted = false;
  };
  auto end_record = [&] {
    end_field();
    const bool blank = current.fields.size() == 1 && current.fields[0].empty();
    if (!blank) records.push_back(std::move(current));
    current = Record{};
    record_open = false;
  };

  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (!record_open) {
      current.line = line;
      record_open = true;
    }
    if (in_quotes) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field.push_back('"');
          ++i;
        } else {
          in_quotes = false;
        }
      } else {
        if (c == '\n') ++line;
        field.push_back(c);
      }
      continue;
    }
    switch (c) {
      case '"':
        if (!field.empty() || field_quoted) {
          throw FormatError("CSV line " + std::to_string(line) +
                            ": quote inside unquoted field");
        }
        in_quotes = true;
        field_quoted = true;
        break;
      case ',':
        end_field();
        break;
      case '\r':
        if (i + 1 < text.size() && text[i + 1] == '\n') break;
        [[fallthrough]];
      case '\n':
        end_record();
        ++line;
        break;
      default:
        if (field_quoted) {
          throw FormatError("CSV line " + std::to_string(line) +
                            ": text after closing quote");
        }
        field.push_back(c);
    }
  }
  if (in_quotes) {
    throw FormatError("CSV line " + std::to_string(current.line) + ": unterminated quote");
  }
  if (record_open) end_record();
  return records;
}

inline std::string quote(std::string_view value) {
  if (value.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(value);
  std::string out = "\"";
  for (char c : value) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

}  // namespace scribematch::csv

#endif  // SCRIBEMATCH_CSV_HPP
