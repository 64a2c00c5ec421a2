#include "support.hpp"

#include "tautring/json_io.hpp"

#include <gtest/gtest.h>

#include <stdexcept>
#include <string>

using namespace tautring;
using testing_support::MI;
using testing_support::Q;

namespace {

void expect_pair(const CheckResult &c, const Rational &both) {
  EXPECT_EQ(c.lhs, both) << c.id;
  EXPECT_EQ(c.rhs, both) << c.id;
  EXPECT_TRUE(c.pass) << c.id;
}

// The tautological sum with every Fab taken from the direct formula.
Rational tautological_sum_direct(ConstantTable &t, long g) {
  Rational s = 0;
  for (long i = 0; i <= g - 4; ++i) {
    MultiIndex m = MultiIndex::ones(i) + MultiIndex::delta(g - 2 - i);
    s += t.d(g, MultiIndex::ones(g - 2 - i)) / Rational(factorial(i)) * fab_direct(g, m);
  }
  const Rational top = fab_direct(g, MultiIndex::ones(g - 2));
  s += t.d(g, MI("1^1")) / Rational(factorial(g - 3)) * top;
  s += t.d(g, MultiIndex{}) / Rational(factorial(g - 2)) * Rational(2 * g - 2) * top;
  return s;
}

} // namespace

TEST(FaberZagier, Examples) {
  FaberEngine e;
  expect_pair(verify_faber_zagier(e, 3), 1);
  expect_pair(verify_faber_zagier(e, 4), Q("32/3"));
  expect_pair(verify_faber_zagier(e, 6), Q("73728/5"));
  EXPECT_TRUE(verify_faber_zagier_f(e, 4).pass);
  EXPECT_EQ(verify_faber_zagier_f(e, 4).lhs, Q("32/15"));
  EXPECT_THROW(verify_faber_zagier(e, 2), std::invalid_argument);
}

TEST(Tautological, VanishesAndMatchesDirectRoute) {
  FaberEngine e;
  for (long g = 3; g <= 9; ++g) {
    auto c = verify_tautological(e, g);
    EXPECT_TRUE(c.pass) << g;
    EXPECT_EQ(c.lhs, 0) << g;
    EXPECT_EQ(tautological_sum_direct(e.constants(), g), 0) << g;
  }
}

TEST(Tautological, GenusThreeTerms) {
  // D_{3,1} Fab_3(1^1) + D_{3,0} kappa_0 Fab_3(1^1) = 4 - 4
  ConstantTable t;
  EXPECT_EQ(t.d(3, MI("1^1")), 4);
  EXPECT_EQ(t.d(3, MultiIndex{}) * Rational(4), -4);
}

TEST(ExampleG6, Coefficients) {
  FaberEngine e;
  auto r = verify_example_g6(e);
  ASSERT_EQ(r.size(), 4u);
  EXPECT_EQ(r[0].rhs, Q("-5161/41472"));
  EXPECT_EQ(r[1].rhs, Q("49/24"));
  EXPECT_EQ(r[2].rhs, Q("395/72"));
  for (const auto &c : r)
    EXPECT_TRUE(c.pass) << c.id << ": " << c.lhs << " vs " << c.rhs;
  EXPECT_EQ(Q("-5161/41472") + Q("49/24") * Q("127/2304") + Q("395/72") * Q("5/2304"), 0);
}

TEST(Bernoulli, SumExamples) {
  expect_pair(verify_bernoulli_sum(1), Q("1/3"));
  expect_pair(verify_bernoulli_sum(2), Q("2/15"));
  EXPECT_TRUE(verify_bernoulli_sum(8).pass);
  expect_pair(verify_bernoulli_signed(1), Q("1/6"));
  expect_pair(verify_bernoulli_signed(2), Q("1/90"));
  EXPECT_TRUE(verify_bernoulli_signed(8).pass);
  EXPECT_THROW(verify_bernoulli_sum(0), std::invalid_argument);
}

TEST(Bernoulli, PowerIdentityExamples) {
  expect_pair(verify_bernoulli_power(2), 3);
  expect_pair(verify_bernoulli_power(3), 0);
  EXPECT_TRUE(verify_bernoulli_power(12).pass);
  EXPECT_THROW(verify_bernoulli_power(1), std::invalid_argument);
}

TEST(Zhou, Examples) {
  expect_pair(verify_zhou(1), -4);
  expect_pair(verify_zhou(2), 64);
  EXPECT_TRUE(verify_zhou(6).pass);
}

TEST(FFamily, GridExamples) {
  FaberEngine e;
  for (auto [g, n, d] : {std::tuple{4L, 2L, 3L}, std::tuple{6L, 1L, 4L}}) {
    auto rs = verify_f_family_lemmas(e, g, n, d);
    EXPECT_FALSE(rs.empty());
    for (const auto &c : rs)
      EXPECT_TRUE(c.pass) << to_json(c).dump();
  }
}

TEST(FFamily, EmptyIndexRowsAreTrivial) {
  FaberEngine e;
  auto c = check_psi_beta_inv(e, 5, 1, MultiIndex{});
  expect_pair(c, 1);
}

TEST(FFamily, BridgeOnlyAtTopDegree) {
  FaberEngine e;
  std::size_t bridges = 0;
  for (const auto &c : verify_f_family_lemmas(e, 5, 0, 4))
    if (c.id == "f1_bridge")
      ++bridges;
  EXPECT_EQ(bridges, 3u); // p(3)
  EXPECT_THROW(check_f1_bridge(e, 5, MI("1^2")), std::invalid_argument);
}

TEST(Positivity, DefaultScanIsClean) {
  ConstantTable t;
  auto r = positivity_scan(t, 6, 8);
  EXPECT_TRUE(r.violations.empty());
  EXPECT_GT(r.checked, 0u);
  EXPECT_THROW(positivity_scan(t, 0, 8), std::invalid_argument);
}

TEST(Suites, Parse) {
  EXPECT_EQ(parse_suite("fz"), Suite::fz);
  EXPECT_EQ(parse_suite("positivity"), Suite::positivity);
  EXPECT_FALSE(parse_suite("everything").has_value());
}

TEST(Suites, DefaultRunAllPass) {
  FaberEngine e;
  auto rs = run_checks(e, Suite::all, SuiteBounds{}, 4);
  EXPECT_GT(rs.size(), 500u);
  for (const auto &c : rs)
    EXPECT_TRUE(c.pass) << to_json(c).dump();
}

TEST(Suites, ThreadCountDoesNotChangeOutput) {
  FaberEngine a, b;
  auto bounds = SuiteBounds::with_gmax(8);
  auto r1 = run_checks(a, Suite::all, bounds, 1);
  auto r8 = run_checks(b, Suite::all, bounds, 8);
  ASSERT_EQ(r1.size(), r8.size());
  for (std::size_t i = 0; i < r1.size(); ++i)
    EXPECT_EQ(to_json(r1[i]).dump(), to_json(r8[i]).dump());
}

TEST(Json, CheckResultSchema) {
  CheckResult c("zhou", {1L}, Rational(-4), Rational(-4));
  EXPECT_EQ(to_json(c).dump(),
            R"({"id":"zhou","params":[1],"lhs":"-4","rhs":"-4","pass":true})");
  CheckResult d("psi_gamma", {4L, 0L, std::string("1^2")}, Rational(1), Rational(2));
  EXPECT_EQ(to_json(d).dump(),
            R"({"id":"psi_gamma","params":[4,0,"1^2"],"lhs":"1","rhs":"2","pass":false})");
}
