#include <gtest/gtest.h>

#include <random>

#include "scribematch/stats.hpp"
#include "support.hpp"

namespace sm = scribematch;

TEST(Stats, SingleSmallFinanceArticle) {
  auto f = sm::testing::features_with(0, sm::Mbti::INTJ, sm::ReadabilityClass::College,
                                      sm::Domain::Finance, sm::DifficultyClass::Basic);
  f.word_count = 400;
  f.size_class = sm::size_class(400);
  const std::vector<sm::ArticleFeatures> fs = {f};
  const auto size = sm::size_by_domain(fs);
  EXPECT_EQ(size.col_labels, (std::vector<std::string>{"Large", "Medium", "Small"}));
  EXPECT_EQ(size.row_labels[0], "Finance");
  EXPECT_EQ(size.counts[0][2], 1u);
  EXPECT_EQ(size.total(), 1u);
}

TEST(Stats, TableShapesAndConservation) {
  std::mt19937 rng(71);
  std::vector<sm::ArticleFeatures> fs;
  for (std::uint64_t i = 0; i < 137; ++i) {
    auto f = sm::testing::features_with(i, sm::testing::random_label<sm::Mbti>(rng),
                                        sm::testing::random_label<sm::ReadabilityClass>(rng),
                                        sm::testing::random_label<sm::Domain>(rng),
                                        sm::testing::random_label<sm::DifficultyClass>(rng));
    f.size_class = sm::testing::random_label<sm::SizeClass>(rng);
    f.sentiment = sm::testing::random_label<sm::Sentiment>(rng);
    fs.push_back(f);
  }
  const auto tabs = sm::corpus_stats(fs);
  ASSERT_EQ(tabs.size(), 3u);
  for (const auto& t : tabs) EXPECT_EQ(t.total(), fs.size()) << t.title;

  EXPECT_EQ(tabs[1].row_labels, (std::vector<std::string>{"Negative", "Neutral", "Positive"}));
  EXPECT_EQ(tabs[1].col_labels.size(), 5u);
  EXPECT_EQ(tabs[2].col_labels.front(), "Professional");
  EXPECT_EQ(tabs[2].col_labels.back(), "Grade_5");

  // Each cell equals a direct count.
  for (std::size_t r = 0; r < 5; ++r) {
    for (std::size_t c = 0; c < 8; ++c) {
      std::size_t n = 0;
      for (const auto& f : fs) {
        n += sm::to_string(f.domain) == tabs[2].row_labels[r] &&
             sm::to_string(f.readability_class) == tabs[2].col_labels[c];
      }
      ASSERT_EQ(tabs[2].counts[r][c], n);
    }
  }
  const auto text = sm::format_table(tabs[0]);
  EXPECT_NE(text.find("Technology"), std::string::npos);
  EXPECT_EQ(sm::to_json(tabs[0])["total"], fs.size());
}
