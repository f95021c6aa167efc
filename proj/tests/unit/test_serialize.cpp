#include <gtest/gtest.h>

#include <random>

#include "affhecke/error.hpp"
#include "affhecke/serialize.hpp"
#include "oracles.hpp"

using namespace affhecke;

TEST(Serialize, ElementJson) {
  auto g = AffineWeylGroup::create("A1");
  Json j = to_json(*g, g->generator(0));
  EXPECT_EQ(j.dump(), R"({"finite_word":[1],"translation":[1]})");
  EXPECT_EQ(element_from_json(*g, j), g->generator(0));
}

TEST(Serialize, ElementRoundTrip) {
  std::mt19937 rng(71);
  for (const char* label : {"A2", "B2", "G2"}) {
    auto g = AffineWeylGroup::create(label);
    for (int trial = 0; trial < 50; ++trial) {
      AffineElement x = oracle::random_element(*g, 12, rng);
      EXPECT_EQ(element_from_json(*g, Json::parse(to_json(*g, x).dump())), x);
      EXPECT_EQ(parse_element(*g, g->format(x)), x);
      EXPECT_EQ(parse_element_any(*g, to_json(*g, x).dump()), x);
    }
  }
}

TEST(Serialize, ElementGrammar) {
  auto g = AffineWeylGroup::create("A2");
  EXPECT_EQ(parse_element(*g, "e"), g->identity());
  EXPECT_EQ(parse_element(*g, "s0"), g->generator(0));
  EXPECT_EQ(parse_element(*g, "s1 s2"), g->from_word(std::vector<int>{1, 2}));
  EXPECT_EQ(parse_element(*g, "t(1,-1)*s1"), g->multiply(g->translation(Weight{1, -1}), g->generator(1)));
  for (const char* bad : {"s3", "t(1)", "x", "s1**s2", "t(1,2", "s1*", "*s1", "s1s2"}) {
    try {
      parse_element(*g, bad);
      ADD_FAILURE() << bad;
    } catch (const Error& e) {
      EXPECT_TRUE(e.code() == ErrorCode::ParseError || e.code() == ErrorCode::DimensionMismatch ||
                  e.code() == ErrorCode::InvalidArgument)
          << bad;
    }
  }
  EXPECT_THROW(parse_element_any(*g, R"({"finite_word":[3],"translation":[0,0]})"), Error);
  EXPECT_THROW(parse_element_any(*g, R"({"finite_word":[1})"), Error);
}

TEST(Serialize, LaurentAndHecke) {
  auto g = AffineWeylGroup::create("A1");
  LaurentPoly q = LaurentPoly::v_minus_vinv();
  EXPECT_EQ(to_json(q).dump(), "[[-1,-1],[1,1]]");
  EXPECT_EQ(laurent_from_json(to_json(q)), q);
  HeckeElement d = braid_neg(g, g->generator(1));
  EXPECT_EQ(hecke_from_json(g, Json::parse(to_json(d).dump())), d);
}

TEST(Serialize, HyperplaneAndExt) {
  HyperplaneForm f = HyperplaneForm::make(Weight{1, 1}, -2);
  EXPECT_EQ(to_json(f).dump(), R"({"coroot":[1,1],"k":-2})");
  EXPECT_EQ(hyperplane_from_json(to_json(f)), f);
}

TEST(Serialize, Lists) {
  auto g = AffineWeylGroup::create("A2");
  EXPECT_EQ(parse_int_list("(1, -2 3)"), (std::vector<Int>{1, -2, 3}));
  EXPECT_EQ(parse_weight(g->roots(), "0,1"), (Weight{0, 1}));
  EXPECT_THROW(parse_weight(g->roots(), "0"), Error);
  EXPECT_EQ(parse_word(*g, "0 1,2"), (std::vector<int>{0, 1, 2}));
  EXPECT_THROW(parse_word(*g, "3"), Error);
  EXPECT_EQ(parse_generator_set(*g, "0,2"), GeneratorSet(0b101));
  EXPECT_THROW(parse_int_list("1,x"), Error);
}

TEST(Serialize, QuiverCsvIsDeterministic) {
  auto g = AffineWeylGroup::create("A1");
  HeckeQuiver q = hecke_quiver(*g, GeneratorSet(), {2, 2});
  std::string a = to_csv(*g, q), b = to_csv(*g, hecke_quiver(*g, GeneratorSet(), {2, 2}));
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.substr(0, a.find('\n')), "src,dst,walls");
  EXPECT_EQ(to_json(*g, q).dump(), to_json(*g, hecke_quiver(*g, GeneratorSet(), {2, 2})).dump());
}
