#include <gtest/gtest.h>

#include "stepwise/stepwise.hpp"

using namespace stepwise;

TEST(ParseFamily, SimpleFamilies) {
  const auto a = parse_family("complete_bipartite:2,3");
  EXPECT_EQ(a.family, "complete_bipartite");
  EXPECT_EQ(a.params, (std::vector<std::size_t>{2, 3}));
  EXPECT_EQ(a.to_string(), "complete_bipartite:2,3");
  EXPECT_EQ(parse_family("gamma:3,4").params, (std::vector<std::size_t>{3, 4}));
  EXPECT_EQ(parse_family("h:2,2").family, "h");
  EXPECT_EQ(parse_family("diam:2,5").params, (std::vector<std::size_t>{2, 5}));
}

TEST(ParseFamily, Products) {
  const auto c = parse_family("prod:cartesian:complete_bipartite:2,4:gamma:2,3");
  EXPECT_EQ(c.family, "cartesian");
  ASSERT_EQ(c.factors.size(), 2u);
  EXPECT_EQ(c.factors[1].to_string(), "gamma:2,3");
  EXPECT_EQ(c.to_string(), "prod:cartesian:complete_bipartite:2,4:gamma:2,3");
  const auto l = parse_family("prod:lex:prod:cartesian:h:2,2:h:2,2:3");
  EXPECT_EQ(l.family, "lex");
  EXPECT_EQ(l.params, (std::vector<std::size_t>{3}));
  EXPECT_EQ(l.factors[0].family, "cartesian");
}

TEST(ParseFamily, Errors) {
  for (const char* bad : {"", "gamma", "gamma:3", "gamma:3,4,5", "gamma:x,4", "gamma:3,4:1",
                          "petersen:1,2", "prod:tensor:gamma:2,3:gamma:2,3", "prod:lex:gamma:2,3",
                          "gamma:-1,3", "gamma:3,"})
    EXPECT_THROW(parse_family(bad), std::invalid_argument) << bad;
}

TEST(BuildValidated, ClaimsAreChecked) {
  EXPECT_EQ(build_validated(parse_family("complete_bipartite:2,3")), complete_bipartite(2, 3));
  const auto d = build_validated(parse_family("diam:2,5"));
  EXPECT_TRUE(is_k_si(d, 2));
  EXPECT_EQ(diameter(d), 5u);
  const auto p = build_validated(parse_family("prod:cartesian:gamma:2,3:gamma:2,4"));
  EXPECT_EQ(si_step(p), 2u);
  EXPECT_EQ(diameter(p), 7u);
  const auto l = build_validated(parse_family("prod:lex:complete_bipartite:2,3:3"));
  EXPECT_EQ(si_step(l), 3u);
  EXPECT_EQ(diameter(l), 2u);
  const auto mixed = build_validated(parse_family("prod:cartesian:complete_bipartite:2,3:complete_bipartite:2,4"));
  EXPECT_EQ(si_step(mixed), std::nullopt);
  EXPECT_THROW(build_validated(parse_family("gamma:1,3")), std::invalid_argument);
}

TEST(FamilyClaims, MatchGenerators) {
  for (const char* text : {"complete_bipartite:1,4", "complete_bipartite:3,3", "gamma:4,5", "h:3,3",
                           "diam:3,6", "prod:cartesian:h:2,2:complete_bipartite:2,4",
                           "prod:lex:gamma:2,4:2"}) {
    const auto spec = parse_family(text);
    const auto claims = family_claims(spec);
    const auto g = build_family(spec);
    if (claims.step) EXPECT_EQ(si_step(g), claims.step) << text;
    if (claims.diameter) EXPECT_EQ(diameter(g), *claims.diameter) << text;
  }
}
