#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "legh/duppoly.hpp"
#include "legh/error.hpp"
#include "sample_points.hpp"

using namespace legh;

namespace {

const DuplicationTriple& level(int n) {
  static const DuplicationTriple l1 = triple_at_level(1);
  if (n == 1) return l1;
  static const DuplicationTriple l2 = lift_triple(l1);
  if (n == 2) return l2;
  static const DuplicationTriple l3 = lift_triple(l2);
  return l3;
}

// Level-2 term lists written by an independent symbolic expansion.
std::array<IntPolynomial, 3> fixture_level2() {
  std::ifstream in(std::string(LEGH_FIXTURE_DIR) + "/duplication_level2.txt");
  std::array<IntPolynomial, 3> out{IntPolynomial(duplication_variables()), IntPolynomial(duplication_variables()),
                                   IntPolynomial(duplication_variables())};
  std::string line;
  int index = -1;
  while (std::getline(in, line)) {
    if (line.rfind("# G", 0) == 0) {
      index = std::stoi(line.substr(line.find("index=") + 6));
      continue;
    }
    if (line.empty() || line[0] == '#') continue;
    std::istringstream is(line);
    std::vector<std::uint32_t> e(4);
    std::string c;
    is >> e[0] >> e[1] >> e[2] >> e[3] >> c;
    out.at(static_cast<std::size_t>(index)).add_term(e, BigInt(c));
  }
  return out;
}

}  // namespace

TEST(BaseTriple, PrintedPolynomials) {
  const auto& t = level(1);
  const auto x1 = IntPolynomial::variable(duplication_variables(), 1);
  const auto x2 = IntPolynomial::variable(duplication_variables(), 2);
  EXPECT_EQ(t.g[2], (x1 * x1 * x1 * x2).scaled(BigInt(8)));
  EXPECT_EQ(t.g[0].term_count(), 5u);
  EXPECT_EQ(t.g[1].degree_in(3), 3);
  EXPECT_EQ(t.level, 1);
}

TEST(BaseTriple, DoublesOnTheCurve) {
  const std::array<BigRational, 4> args{BigRational(0), BigRational(1), BigRational(1), BigRational(5)};
  EXPECT_EQ(poly_eval(level(1).g[2], args), 8);
}

TEST(LiftTriple, LevelTwoMatchesIndependentExpansion) {
  const auto expected = fixture_level2();
  const auto& t = level(2);
  EXPECT_EQ(t.level, 2);
  for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(t.g[i], expected[i]) << "index " << i;
  EXPECT_EQ(t.g[0].term_count(), 324u);
}

TEST(LiftTriple, ExactDegreesUpToLevelThree) {
  for (int n = 1; n <= 3; ++n) {
    const long four_n = n == 1 ? 4 : n == 2 ? 16 : 64;
    for (const auto& r : degree_report(level(n))) {
      EXPECT_EQ(r.level, n);
      EXPECT_EQ(r.point_degree_min, four_n);
      EXPECT_EQ(r.point_degree_max, four_n);
      EXPECT_LE(r.lambda_degree_max, four_n - 1);
      EXPECT_LE(r.total_degree_max, 2 * four_n);
      EXPECT_TRUE(r.satisfies_bounds());
    }
    for (const auto& g : level(n).g) {
      const std::array<std::size_t, 3> pv{0, 1, 2};
      EXPECT_EQ(g.homogeneous_degree(pv), four_n);
    }
  }
}

TEST(DegreeEnvelope, AgreesWithExactDegrees) {
  const auto env = degree_envelope(3);
  ASSERT_EQ(env.size(), 3u);
  for (int n = 1; n <= 3; ++n) {
    const auto exact = degree_report(level(n));
    for (std::size_t i = 0; i < 3; ++i) {
      const auto& e = env[static_cast<std::size_t>(n - 1)][i];
      EXPECT_EQ(e.point_degree_min, exact[i].point_degree_min);
      EXPECT_EQ(e.point_degree_max, exact[i].point_degree_max);
      EXPECT_EQ(e.lambda_degree_max, exact[i].lambda_degree_max);
      EXPECT_EQ(e.total_degree_max, exact[i].total_degree_max);
    }
  }
}

TEST(DegreeEnvelope, LevelFourSatisfiesBounds) {
  const auto env = degree_envelope(4);
  ASSERT_EQ(env.size(), 4u);
  for (const auto& r : env[3]) {
    EXPECT_EQ(r.level, 4);
    EXPECT_EQ(r.point_degree_min, 256);
    EXPECT_EQ(r.point_degree_max, 256);
    EXPECT_LE(r.lambda_degree_max, 255);
    EXPECT_LE(r.total_degree_max, 512);
    EXPECT_TRUE(r.satisfies_bounds());
  }
}

TEST(DupApply, Examples) {
  for (const BigRational& lambda : {BigRational(-6), BigRational(3, 7), BigRational(100)}) {
    EXPECT_TRUE(dup_apply(LegendreFiberPoint::affine(0, 0, lambda), 1).is_identity());
    EXPECT_TRUE(dup_apply(LegendreFiberPoint::identity(lambda), 1).is_identity());
  }
  const auto p = legh::testing::x2_point(2);
  EXPECT_EQ(dup_apply(p, 1), mul_n(p, 2));
  EXPECT_EQ(dup_apply(p, 1), dbl(p));
}

TEST(DupApply, AgreesWithGroupLaw) {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 40; ++trial) {
    const auto p = legh::testing::random_point(rng, 2 + trial % 10, 4);
    for (int n = 1; n <= 3; ++n) EXPECT_EQ(dup_apply(p, n), mul_n(p, 1L << n)) << trial << " " << n;
  }
}

TEST(EvalTriple, AgreesWithIteratedEvaluation) {
  std::mt19937_64 rng(67);
  for (int trial = 0; trial < 10; ++trial) {
    const auto p = legh::testing::random_point(rng, 2 + trial, 3);
    EXPECT_EQ(eval_triple(level(2), p), dup_apply(p, 2));
    if (trial < 3) {
      EXPECT_EQ(eval_triple(level(3), p), dup_apply(p, 3));
    }
  }
}

TEST(DupApply, RejectsNonPositiveLevel) {
  try {
    dup_apply(legh::testing::x2_point(2), 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidInput);
  }
}

TEST(WriteTerms, HeaderAndRowFormat) {
  std::ostringstream os;
  write_terms(os, level(1));
  std::istringstream is(os.str());
  std::string line;
  int headers = 0;
  std::size_t rows = 0;
  while (std::getline(is, line)) {
    if (line.rfind("# G level=1 index=", 0) == 0) {
      ++headers;
      continue;
    }
    std::istringstream r(line);
    std::vector<std::string> f;
    for (std::string w; r >> w;) f.push_back(w);
    EXPECT_EQ(f.size(), 5u) << line;
    ++rows;
  }
  EXPECT_EQ(headers, 3);
  EXPECT_EQ(rows, level(1).g[0].term_count() + level(1).g[1].term_count() + level(1).g[2].term_count());
  EXPECT_NE(os.str().find("# G level=1 index=2 terms=1\n0 3 1 0 8\n"), std::string::npos);
}
