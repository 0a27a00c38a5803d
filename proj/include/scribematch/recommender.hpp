#ifndef SCRIBEMATCH_RECOMMENDER_HPP
#define SCRIBEMATCH_RECOMMENDER_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <iomanip>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "scribematch/error.hpp"
#include "scribematch/features.hpp"
#include "scribematch/labels.hpp"

namespace scribematch {

/// Feature groups entering the one-hot encoding, in column order.
enum class OheGroup { Mbti, Readability, Domain, Difficulty };

inline constexpr std::array<OheGroup, 4> kOheGroups = {
    OheGroup::Mbti, OheGroup::Readability, OheGroup::Domain, OheGroup::Difficulty};

constexpr std::string_view to_string(OheGroup g) noexcept {
  switch (g) {
    case OheGroup::Mbti: return LabelTraits<Mbti>::group;
    case OheGroup::Readability: return LabelTraits<ReadabilityClass>::group;
    case OheGroup::Domain: return LabelTraits<Domain>::group;
    case OheGroup::Difficulty: return LabelTraits<DifficultyClass>::group;
  }
  return "";
}

inline std::string_view category_of(const ArticleFeatures& f, OheGroup g) noexcept {
  switch (g) {
    case OheGroup::Mbti: return to_string(f.mbti);
    case OheGroup::Readability: return to_string(f.readability_class);
    case OheGroup::Domain: return to_string(f.domain);
    case OheGroup::Difficulty: return to_string(f.difficulty_class);
  }
  return "";
}

struct OheColumn {
  OheGroup group;
  std::string category;

  bool operator==(const OheColumn&) const = default;
};

/// Columns grouped in kOheGroups order; categories sorted within a group.
struct OheSchema {
  std::vector<OheColumn> columns;

  std::size_t width() const noexcept { return columns.size(); }

  std::optional<std::size_t> find(OheGroup g, std::string_view category) const {
    for (std::size_t i = 0; i < columns.size(); ++i) {
      if (columns[i].group == g && columns[i].category == category) return i;
    }
    return std::nullopt;
  }

  bool operator==(const OheSchema&) const = default;
};

using BitVector = std::vector<std::uint8_t>;

struct OheRow {
  std::uint64_t article_id = 0;
  std::string author;
  BitVector bits;

  bool operator==(const OheRow&) const = default;
};

struct OheIndex {
  OheSchema schema;
  std::vector<OheRow> rows;  // ascending article_id

  bool operator==(const OheIndex&) const = default;
};

struct Recommendation {
  std::size_t rank = 0;
  std::string author;
  double similarity = 0.0;
  std::uint64_t supporting_article_id = 0;

  bool operator==(const Recommendation&) const = default;
};

/// dot(a, b) / (|a| |b|); 0 when either vector is all zeros.
template <typename T, typename U>
double cosine(std::span<const T> a, std::span<const U> b) {
  if (a.size() != b.size()) {
    throw InvalidInput("cosine: length mismatch (" + std::to_string(a.size()) + " vs " +
                       std::to_string(b.size()) + ")");
  }
  double dot = 0.0, na = 0.0, nb = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double x = static_cast<double>(a[i]);
    const double y = static_cast<double>(b[i]);
    dot += x * y;
    na += x * x;
    nb += y * y;
  }
  if (na == 0.0 || nb == 0.0) return 0.0;
  return dot / (std::sqrt(na) * std::sqrt(nb));
}

template <typename T, typename U>
double cosine(const std::vector<T>& a, const std::vector<U>& b) {
  return cosine(std::span<const T>(a), std::span<const U>(b));
}

/// One-hot encodes `f`; categories the schema lacks leave their group at zero.
inline BitVector encode(const ArticleFeatures& f, const OheSchema& schema,
                        std::vector<std::string>* warnings = nullptr) {
  BitVector bits(schema.width(), 0);
  for (OheGroup g : kOheGroups) {
    const auto category = category_of(f, g);
    if (auto col = schema.find(g, category)) {
      bits[*col] = 1;
    } else if (warnings) {
      warnings->push_back(std::string(to_string(g)) + " category '" + std::string(category) +
                          "' not present in the index; group left empty");
    }
  }
  return bits;
}

struct EncodedQuery {
  BitVector bits;
  std::vector<std::string> warnings;
};

inline EncodedQuery encode_query(const ArticleFeatures& f, const OheSchema& schema) {
  EncodedQuery q;
  q.bits = encode(f, schema, &q.warnings);
  return q;
}

/// Schema from the categories observed in `features`; one row per article in
/// ascending article_id order.
inline OheIndex build_index(std::span<const ArticleFeatures> features,
                            const std::map<std::uint64_t, std::string>& authors) {
  if (features.empty()) throw BuildError("build_index: no articles");

  OheIndex index;
  for (OheGroup g : kOheGroups) {
    std::set<std::string, std::less<>> seen;
    for (const auto& f : features) seen.emplace(category_of(f, g));
    for (const auto& c : seen) index.schema.columns.push_back({g, c});
  }

  std::vector<const ArticleFeatures*> order;
  order.reserve(features.size());
  for (const auto& f : features) order.push_back(&f);
  std::sort(order.begin(), order.end(),
            [](const auto* a, const auto* b) { return a->article_id < b->article_id; });

  index.rows.reserve(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    const auto& f = *order[i];
    if (i > 0 && order[i - 1]->article_id == f.article_id) {
      throw BuildError("build_index: duplicate article id " + std::to_string(f.article_id));
    }
    const auto author = authors.find(f.article_id);
    if (author == authors.end()) {
      throw BuildError("build_index: no author for article " + std::to_string(f.article_id));
    }
    index.rows.push_back({f.article_id, author->second, encode(f, index.schema)});
  }
  return index;
}

/// Scores every row against `query`, orders by (similarity desc, article_id
/// asc), keeps each author's best row and returns the first `n` authors.
inline std::vector<Recommendation> recommend_bits(const BitVector& query, const OheIndex& index,
                                                  std::size_t n) {
  if (index.rows.empty()) throw QueryError("recommend: empty index");
  if (n == 0) throw InvalidInput("recommend: n must be at least 1");
  if (query.size() != index.schema.width()) {
    throw InvalidInput("recommend: query width does not match schema");
  }

  struct Scored {
    double similarity;
    const OheRow* row;
  };
  std::vector<Scored> scored;
  scored.reserve(index.rows.size());
  for (const auto& row : index.rows) scored.push_back({cosine(query, row.bits), &row});
  std::sort(scored.begin(), scored.end(), [](const Scored& a, const Scored& b) {
    if (a.similarity != b.similarity) return a.similarity > b.similarity;
    return a.row->article_id < b.row->article_id;
  });

  std::vector<Recommendation> out;
  std::set<std::string_view> authors;
  for (const auto& s : scored) {
    if (out.size() == n) break;
    if (!authors.insert(s.row->author).second) continue;
    out.push_back({out.size() + 1, s.row->author, s.similarity, s.row->article_id});
  }
  return out;
}

inline std::vector<Recommendation> recommend(const ArticleFeatures& query, const OheIndex& index,
                                             std::size_t n) {
  return recommend_bits(encode(query, index.schema), index, n);
}

// ---------------------------------------------------------------------------
// Persistence and output

inline constexpr int kIndexFormatVersion = 1;

inline std::string bits_to_string(const BitVector& bits) {
  std::string s(bits.size(), '0');
  for (std::size_t i = 0; i < bits.size(); ++i) s[i] = bits[i] ? '1' : '0';
  return s;
}

/// Canonical JSON (sorted keys); rows carry their bits as a '0'/'1' string.
inline std::string save_index(const OheIndex& index) {
  nlohmann::json j;
  j["format_version"] = kIndexFormatVersion;
  j["schema"] = nlohmann::json::array();
  for (const auto& c : index.schema.columns) {
    j["schema"].push_back({{"group", to_string(c.group)}, {"category", c.category}});
  }
  j["rows"] = nlohmann::json::array();
  for (const auto& r : index.rows) {
    j["rows"].push_back(
        {{"article_id", r.article_id}, {"author", r.author}, {"bits", bits_to_string(r.bits)}});
  }
  return j.dump() + "\n";
}

inline OheIndex load_index(std::string_view bytes) {
  nlohmann::json j = nlohmann::json::parse(bytes, nullptr, false);
  if (j.is_discarded() || !j.is_object()) throw LoadError("index: malformed JSON payload");
  OheIndex index;
  try {
    if (j.at("format_version").get<int>() != kIndexFormatVersion) {
      throw LoadError("index: unsupported format_version");
    }
    for (const auto& c : j.at("schema")) {
      const auto group = c.at("group").get<std::string>();
      std::optional<OheGroup> g;
      for (OheGroup candidate : kOheGroups) {
        if (to_string(candidate) == group) g = candidate;
      }
      if (!g) throw LoadError("index: unknown group '" + group + "'");
      index.schema.columns.push_back({*g, c.at("category").get<std::string>()});
    }
    for (const auto& r : j.at("rows")) {
      OheRow row;
      row.article_id = r.at("article_id").get<std::uint64_t>();
      row.author = r.at("author").get<std::string>();
      for (char c : r.at("bits").get<std::string>()) {
        if (c != '0' && c != '1') throw LoadError("index: bits must be '0' or '1'");
        row.bits.push_back(c == '1');
      }
      index.rows.push_back(std::move(row));
    }
  } catch (const nlohmann::json::exception& e) {
    throw LoadError(std::string("index: ") + e.what());
  }

  // Schema: groups contiguous in canonical order, each non-empty, categories
  // strictly increasing inside a group.
  const auto& cols = index.schema.columns;
  std::size_t pos = 0;
  for (OheGroup g : kOheGroups) {
    const std::size_t start = pos;
    while (pos < cols.size() && cols[pos].group == g) {
      if (pos > start && !(cols[pos - 1].category < cols[pos].category)) {
        throw LoadError("index: categories out of order in group " + std::string(to_string(g)));
      }
      ++pos;
    }
    if (pos == start) throw LoadError("index: group " + std::string(to_string(g)) + " empty");
  }
  if (pos != cols.size()) throw LoadError("index: schema groups out of order");

  for (std::size_t i = 0; i < index.rows.size(); ++i) {
    const auto& row = index.rows[i];
    if (row.bits.size() != cols.size()) throw LoadError("index: row width mismatch");
    if (i > 0 && !(index.rows[i - 1].article_id < row.article_id)) {
      throw LoadError("index: rows not in ascending article_id order");
    }
    std::map<OheGroup, int> ones;
    for (std::size_t c = 0; c < cols.size(); ++c) ones[cols[c].group] += row.bits[c];
    for (const auto& [g, count] : ones) {
      if (count > 1) throw LoadError("index: row has more than one bit set in a group");
    }
  }
  return index;
}

inline nlohmann::ordered_json to_json(const std::vector<Recommendation>& recs) {
  auto j = nlohmann::ordered_json::array();
  for (const auto& r : recs) {
    nlohmann::ordered_json e;
    e["rank"] = r.rank;
    e["author"] = r.author;
    e["similarity"] = r.similarity;
    e["supporting_article_id"] = r.supporting_article_id;
    j.push_back(std::move(e));
  }
  return j;
}

inline std::string format_table(const std::vector<Recommendation>& recs) {
  std::size_t author_width = 6;
  for (const auto& r : recs) author_width = std::max(author_width, r.author.size());
  std::ostringstream os;
  os << std::left << std::setw(6) << "rank" << std::setw(static_cast<int>(author_width) + 2)
     << "author" << std::setw(12) << "similarity" << "article" << '\n';
  for (const auto& r : recs) {
    os << std::left << std::setw(6) << r.rank << std::setw(static_cast<int>(author_width) + 2)
       << r.author << std::setw(12) << std::fixed << std::setprecision(4) << r.similarity
       << r.supporting_article_id << '\n';
  }
  return os.str();
}

}  // namespace scribematch

#endif  // SCRIBEMATCH_RECOMMENDER_HPP
