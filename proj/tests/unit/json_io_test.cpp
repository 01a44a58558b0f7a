#include "bellhopf/json_io.hpp"

#include <gtest/gtest.h>

#include <random>

#include "bellhopf/boson.hpp"
#include "bellhopf/errors.hpp"
#include "bellhopf/hopf_axioms.hpp"
#include "bellhopf/hopf_text.hpp"

namespace bellhopf {
namespace {

TEST(EgfJson, ShapeAndRoundTrip) {
  const auto s = bell_egf(4);
  const auto doc = to_json(s);
  EXPECT_EQ(doc.at("order"), 4);
  EXPECT_EQ(doc.at("coefficients"), nlohmann::json::array({"1", "1", "2", "5", "15"}));
  EXPECT_EQ(egf_from_json(doc), s);

  Rational huge(Integer("123456789012345678901234567891"), Integer(7));
  huge.canonicalize();
  std::vector<Rational> big{Rational(1), huge};
  EXPECT_EQ(egf_from_json(to_json(EGFSeries(big))), EGFSeries(big));
}

TEST(EgfJson, Malformed) {
  EXPECT_THROW(egf_from_json(nlohmann::json::parse(R"({"order": 2})")), DomainError);
  EXPECT_THROW(egf_from_json(nlohmann::json::parse(R"({"order": 2, "coefficients": ["1"]})")), DomainError);
  EXPECT_THROW(egf_from_json(nlohmann::json::parse(R"({"order": 0, "coefficients": ["1/x"]})")), ParseError);
}

TEST(HopfJson, RoundTrip) {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 50; ++i) {
    const auto a = random_element(rng, 6, 4);
    const auto doc = to_json(a);
    EXPECT_EQ(doc.at("text"), to_string(a));
    EXPECT_EQ(hopf_from_json(doc), a);
    EXPECT_EQ(hopf_from_json(nlohmann::json::parse(doc.dump())), a);
    const auto t = coproduct(a);
    EXPECT_EQ(tensor_from_json(nlohmann::json::parse(to_json(t).dump())), t);
  }
}

TEST(HopfJson, Shape) {
  const auto doc = to_json(parse_hopf_element("3/2*y1^2*y3"));
  ASSERT_EQ(doc.at("terms").size(), 1u);
  EXPECT_EQ(doc.at("terms")[0].at("monomial"), nlohmann::json::array({1, 1, 3}));
  EXPECT_EQ(doc.at("terms")[0].at("coefficient"), "3/2");
}

TEST(NormalFormJson, Shape) {
  const auto doc = to_json(normal_order(BosonWord::number_power(2)));
  EXPECT_EQ(doc.at("text"), "ad^2 a^2 + ad a");
  ASSERT_EQ(doc.at("terms").size(), 2u);
  EXPECT_EQ(doc.at("terms")[0].at("create"), 2);
  EXPECT_EQ(doc.at("terms")[0].at("coefficient"), "1");
}

TEST(CensusJson, Shape) {
  const auto doc = to_json(diagram_census(3));
  EXPECT_EQ(doc.at("n"), 3);
  EXPECT_EQ(doc.at("total"), "5");
  ASSERT_EQ(doc.at("census").size(), 3u);
  EXPECT_EQ(doc.at("census")[0].at("monomial"), "y1^3");
  EXPECT_EQ(doc.at("census")[1].at("count"), "3");
}

}  // namespace
}  // namespace bellhopf
