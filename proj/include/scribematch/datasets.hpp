#ifndef SCRIBEMATCH_DATASETS_HPP
#define SCRIBEMATCH_DATASETS_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "scribematch/classifiers.hpp"
#include "scribematch/corpus.hpp"
#include "scribematch/csv.hpp"
#include "scribematch/labels.hpp"
#include "scribematch/text.hpp"

namespace scribematch {

/// Classifier input for a piece of cleaned text.
inline std::vector<std::string> document_tokens(std::string_view cleaned) {
  return surfaces(tokenize(cleaned));
}

/// A labeled document together with the id used for the held-out split.
struct SplitDoc {
  std::size_t id = 0;
  LabeledDoc doc;
};

/// Articles carrying a domain label, keyed by article id.
inline std::vector<SplitDoc> domain_documents(const std::vector<CleanArticle>& articles) {
  std::vector<SplitDoc> docs;
  for (const auto& a : articles) {
    if (!a.domain) continue;
    docs.push_back({static_cast<std::size_t>(a.id),
                    {document_tokens(a.body), std::string(to_string(*a.domain))}});
  }
  return docs;
}

struct MbtiDataset {
  std::vector<SplitDoc> docs;  // id = 0-based data row
  std::vector<RowError> errors;
};

/// Reads a `type,posts` CSV. Posts are '|||'-separated; each separator
/// becomes a space before cleaning and tokenization. Rows with an unknown
/// type or missing posts are reported and skipped.
inline MbtiDataset parse_mbti_csv(std::string_view bytes) {
  utf8::validate(bytes);
  MbtiDataset out;
  const auto records = csv::read(bytes);
  if (records.empty()) return out;
  const auto& header = records.front().fields;
  std::size_t type_col = header.size();
  std::size_t posts_col = header.size();
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (header[i] == "type") type_col = i;
    if (header[i] == "posts") posts_col = i;
  }
  if (type_col == header.size() || posts_col == header.size()) {
    throw FormatError("MBTI CSV: header must contain 'type' and 'posts'");
  }

  for (std::size_t r = 1; r < records.size(); ++r) {
    const auto& f = records[r].fields;
    if (type_col >= f.size() || posts_col >= f.size()) {
      out.errors.push_back({r, "row " + std::to_string(r) + ": missing column"});
      continue;
    }
    const auto type = parse_loose<Mbti>(f[type_col]);
    if (!type) {
      out.errors.push_back({r, "row " + std::to_string(r) + ": unknown MBTI type '" +
                                   f[type_col] + "'"});
      continue;
    }
    std::string posts = f[posts_col];
    for (auto at = posts.find("|||"); at != std::string::npos; at = posts.find("|||", at)) {
      posts.replace(at, 3, " ");
    }
    out.docs.push_back(
        {r - 1, {document_tokens(clean_text(posts)), std::string(to_string(*type))}});
  }
  return out;
}

/// Every fifth id (id % 5 == 0) is held out.
inline bool is_held_out(std::size_t id) noexcept { return id % 5 == 0; }

struct Split {
  std::vector<LabeledDoc> train;
  std::vector<LabeledDoc> held_out;
};

inline Split split_documents(const std::vector<SplitDoc>& docs) {
  Split s;
  for (const auto& d : docs) (is_held_out(d.id) ? s.held_out : s.train).push_back(d.doc);
  return s;
}

}  // namespace scribematch

#endif  // SCRIBEMATCH_DATASETS_HPP
