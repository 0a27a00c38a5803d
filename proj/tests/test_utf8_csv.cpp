#include <gtest/gtest.h>

#include "scribematch/csv.hpp"
#include "scribematch/utf8.hpp"

namespace sm = scribematch;

TEST(Utf8, DecodesMultibyteSequences) {
  const auto cps = sm::utf8::decode("a\xC3\xA9\xE2\x80\x94\xF0\x9F\x98\x80");
  ASSERT_EQ(cps.size(), 4u);
  EXPECT_EQ(cps[1], U'é');
  EXPECT_EQ(cps[2], U'—');
  EXPECT_EQ(cps[3], U'\U0001F600');
  EXPECT_EQ(sm::utf8::encode(cps), "a\xC3\xA9\xE2\x80\x94\xF0\x9F\x98\x80");
}

TEST(Utf8, ReportsOffsetOfFirstBadByte) {
  try {
    sm::utf8::decode("abc\xFFxyz");
    FAIL() << "expected DecodeError";
  } catch (const sm::DecodeError& e) {
    EXPECT_EQ(e.offset(), 3u);
  }
  EXPECT_THROW(sm::utf8::decode("\xC0\xAF"), sm::DecodeError);       // overlong '/'
  EXPECT_THROW(sm::utf8::decode("\xED\xA0\x80"), sm::DecodeError);   // surrogate
  EXPECT_THROW(sm::utf8::decode("ok\xE2\x80"), sm::DecodeError);      // truncated
}

TEST(Utf8, LetterAndCaseTables) {
  EXPECT_TRUE(sm::utf8::is_letter(U'É'));
  EXPECT_FALSE(sm::utf8::is_letter(U'×'));  // multiplication sign
  EXPECT_TRUE(sm::utf8::is_letter(U'Ж'));
  EXPECT_FALSE(sm::utf8::is_letter(U'7'));
  EXPECT_EQ(sm::utf8::to_lower(U'É'), U'é');
  EXPECT_EQ(sm::utf8::to_lower(U'Ж'), U'ж');
  EXPECT_EQ(sm::utf8::to_lower(U'Α'), U'α');
  EXPECT_EQ(sm::utf8::to_lower(U'Ł'), U'ł');
}

TEST(Csv, QuotedFieldsEscapesAndEmbeddedNewlines) {
  const auto recs = sm::csv::read("a,b,c\r\n\"x, y\",\"say \"\"hi\"\"\",\"two\nlines\"\n\nlast,,\n");
  ASSERT_EQ(recs.size(), 3u);
  EXPECT_EQ(recs[1].fields, (std::vector<std::string>{"x, y", "say \"hi\"", "two\nlines"}));
  EXPECT_EQ(recs[1].line, 2u);
  EXPECT_EQ(recs[2].fields, (std::vector<std::string>{"last", "", ""}));
  EXPECT_EQ(recs[2].line, 5u);
}

TEST(Csv, RejectsUnterminatedQuote) {
  EXPECT_THROW(sm::csv::read("a,b\n\"open,1\n"), sm::FormatError);
}

TEST(Csv, QuoteRoundTrips) {
  const std::string tricky = "he said \"no\", twice\n";
  const auto recs = sm::csv::read("h\n" + sm::csv::quote(tricky) + "\n");
  ASSERT_EQ(recs.size(), 2u);
  EXPECT_EQ(recs[1].fields[0], tricky);
}
