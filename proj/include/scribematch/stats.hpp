#ifndef SCRIBEMATCH_STATS_HPP
#define SCRIBEMATCH_STATS_HPP

#include <algorithm>
#include <cstddef>
#include <iomanip>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "scribematch/features.hpp"
#include "scribematch/labels.hpp"

namespace scribematch {

struct CrossTab {
  std::string title;
  std::vector<std::string> row_labels;
  std::vector<std::string> col_labels;
  std::vector<std::vector<std::size_t>> counts;  // [row][col]

  std::size_t total() const {
    std::size_t t = 0;
    for (const auto& r : counts)
      for (auto c : r) t += c;
    return t;
  }
};

namespace detail {

template <typename E>
std::vector<std::string> names_in(std::span<const std::size_t> order) {
  std::vector<std::string> out;
  for (auto i : order) out.emplace_back(to_string(label_at<E>(i)));
  return out;
}

template <typename E>
std::vector<std::size_t> natural_order() {
  std::vector<std::size_t> v(label_count<E>());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = i;
  return v;
}

template <typename RowE, typename ColE, typename RowOf, typename ColOf>
CrossTab tabulate(std::string title, std::span<const ArticleFeatures> features,
                  std::vector<std::size_t> row_order, std::vector<std::size_t> col_order,
                  RowOf row_of, ColOf col_of) {
  CrossTab t;
  t.title = std::move(title);
  t.row_labels = names_in<RowE>(row_order);
  t.col_labels = names_in<ColE>(col_order);
  t.counts.assign(row_order.size(), std::vector<std::size_t>(col_order.size(), 0));
  auto position = [](const std::vector<std::size_t>& order, std::size_t value) {
    return static_cast<std::size_t>(std::find(order.begin(), order.end(), value) - order.begin());
  };
  for (const auto& f : features) {
    const auto r = position(row_order, static_cast<std::size_t>(row_of(f)));
    const auto c = position(col_order, static_cast<std::size_t>(col_of(f)));
    ++t.counts[r][c];
  }
  return t;
}

}  // namespace detail

/// Domain rows against Large / Medium / Small columns.
inline CrossTab size_by_domain(std::span<const ArticleFeatures> features) {
  using enum SizeClass;
  return detail::tabulate<Domain, SizeClass>(
      "Size by domain", features, detail::natural_order<Domain>(),
      {static_cast<std::size_t>(Large), static_cast<std::size_t>(Medium),
       static_cast<std::size_t>(Small)},
      [](const ArticleFeatures& f) { return f.domain; },
      [](const ArticleFeatures& f) { return f.size_class; });
}

/// Sentiment rows against domain columns.
inline CrossTab sentiment_by_domain(std::span<const ArticleFeatures> features) {
  return detail::tabulate<Sentiment, Domain>(
      "Sentiment by domain", features, detail::natural_order<Sentiment>(),
      detail::natural_order<Domain>(), [](const ArticleFeatures& f) { return f.sentiment; },
      [](const ArticleFeatures& f) { return f.domain; });
}

/// Domain rows against readability columns, hardest (Professional) first.
inline CrossTab readability_by_domain(std::span<const ArticleFeatures> features) {
  auto cols = detail::natural_order<ReadabilityClass>();
  std::reverse(cols.begin(), cols.end());
  return detail::tabulate<Domain, ReadabilityClass>(
      "Readability by domain", features, detail::natural_order<Domain>(), std::move(cols),
      [](const ArticleFeatures& f) { return f.domain; },
      [](const ArticleFeatures& f) { return f.readability_class; });
}

inline std::vector<CrossTab> corpus_stats(std::span<const ArticleFeatures> features) {
  return {size_by_domain(features), sentiment_by_domain(features),
          readability_by_domain(features)};
}

inline std::string format_table(const CrossTab& t) {
  std::size_t first = t.title.size();
  for (const auto& r : t.row_labels) first = std::max(first, r.size());
  std::vector<std::size_t> widths;
  for (std::size_t c = 0; c < t.col_labels.size(); ++c) {
    std::size_t w = t.col_labels[c].size();
    for (const auto& row : t.counts) w = std::max(w, std::to_string(row[c]).size());
    widths.push_back(w);
  }
  std::ostringstream os;
  os << std::left << std::setw(static_cast<int>(first)) << t.title;
  for (std::size_t c = 0; c < widths.size(); ++c) {
    os << "  " << std::right << std::setw(static_cast<int>(widths[c])) << t.col_labels[c];
  }
  os << '\n';
  for (std::size_t r = 0; r < t.row_labels.size(); ++r) {
    os << std::left << std::setw(static_cast<int>(first)) << t.row_labels[r];
    for (std::size_t c = 0; c < widths.size(); ++c) {
      os << "  " << std::right << std::setw(static_cast<int>(widths[c])) << t.counts[r][c];
    }
    os << '\n';
  }
  return os.str();
}

inline nlohmann::ordered_json to_json(const CrossTab& t) {
  nlohmann::ordered_json j;
  j["title"] = t.title;
  j["rows"] = t.row_labels;
  j["columns"] = t.col_labels;
  j["counts"] = t.counts;
  j["total"] = t.total();
  return j;
}

}  // namespace scribematch

#endif  // SCRIBEMATCH_STATS_HPP
