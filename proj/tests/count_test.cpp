#include <gtest/gtest.h>

#include <limits>

#include "polycube/count.hpp"

using polycube::Count;
using polycube::DomainError;
using polycube::OverflowError;

TEST(Count, ArithmeticAndPrinting) {
  Count a = 27263453288LL;
  Count b = 257707;
  EXPECT_EQ((a + b).to_string(), "27263710995");
  EXPECT_EQ((a - b).to_string(), "27263195581");
  EXPECT_EQ((Count(-12) * 7).to_string(), "-84");
  EXPECT_EQ(Count().to_string(), "0");
  EXPECT_LT(Count(-3), Count(2));
  EXPECT_EQ(Count(5).sign(), 1);
  EXPECT_EQ(Count(-5).sign(), -1);
}

TEST(Count, ParseRoundTrip) {
  for (const char* s : {"0", "1", "-1", "27521161352", "-170141183460469231731687303715884105728",
                        "170141183460469231731687303715884105727"})
    EXPECT_EQ(Count::parse(s).to_string(), s);
  EXPECT_EQ(Count::parse("+42"), Count(42));
  EXPECT_THROW(Count::parse(""), std::invalid_argument);
  EXPECT_THROW(Count::parse("12a"), std::invalid_argument);
  EXPECT_THROW(Count::parse("-"), std::invalid_argument);
  EXPECT_THROW(Count::parse("170141183460469231731687303715884105728"), OverflowError);
}

TEST(Count, OverflowIsReported) {
  Count big = Count::parse("170141183460469231731687303715884105727");
  EXPECT_THROW(big + 1, OverflowError);
  EXPECT_THROW(-big - 2, OverflowError);
  EXPECT_THROW(big * 2, OverflowError);
  EXPECT_THROW(polycube::pow_count(2, 127), OverflowError);
  EXPECT_NO_THROW(polycube::pow_count(2, 126));
}

TEST(Count, ToInt64) {
  EXPECT_EQ(Count(std::numeric_limits<std::int64_t>::max()).to_int64(), std::numeric_limits<std::int64_t>::max());
  EXPECT_THROW((Count(std::numeric_limits<std::int64_t>::max()) + 1).to_int64(), OverflowError);
}

TEST(Count, ExactDivision) {
  EXPECT_EQ(polycube::exact_div(84, -7), Count(-12));
  EXPECT_THROW(polycube::exact_div(85, 7), DomainError);
  EXPECT_THROW(polycube::exact_div(1, 0), DomainError);
  EXPECT_EQ(polycube::pow_count(3, 0), Count(1));
  EXPECT_EQ(polycube::pow_count(-2, 5), Count(-32));
}
