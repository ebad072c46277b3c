#include <gtest/gtest.h>

#include <cmath>

#include "legh/error.hpp"
#include "legh/heights.hpp"
#include "sample_points.hpp"

using namespace legh;
using legh::testing::random_point;
using legh::testing::random_product_point;
using legh::testing::read_fixture;
using legh::testing::x2_point;

namespace {

RationalProjectivePoint pt(std::initializer_list<long> xs) { return RationalProjectivePoint::from_integers(xs); }

ProductFiberPoint single(const LegendreFiberPoint& p) { return ProductFiberPoint({p}); }

}  // namespace

TEST(WeilHeight, Examples) {
  EXPECT_DOUBLE_EQ(weil_height(pt({1, 2})).value(), std::log(2.0));
  EXPECT_EQ(weil_height(pt({1, 1})).value(), 0.0);
  EXPECT_DOUBLE_EQ(weil_height(pt({4, 6})).value(), std::log(3.0));
  EXPECT_EQ(weil_height(pt({4, 6})).argument(), 3);
}

TEST(TotalHeight, Examples) {
  const auto o2 = LegendreFiberPoint::identity(BigRational(2));
  EXPECT_DOUBLE_EQ(total_height(single(o2)).value(), std::log(2.0));

  const auto oh = LegendreFiberPoint::identity(BigRational(1, 2));
  EXPECT_DOUBLE_EQ(total_height(ProductFiberPoint({oh, oh})).value(), std::log(2.0));

  EXPECT_EQ(total_height(single(x2_point(2))).argument(), 24);
}

TEST(SegreHeight, Examples) {
  const auto o2 = LegendreFiberPoint::identity(BigRational(2));
  EXPECT_DOUBLE_EQ(segre_height(single(o2)).value(), std::log(2.0));
  EXPECT_EQ(segre_height(single(x2_point(2))).argument(), 24);
}

TEST(SegreHeight, ImageDimension) {
  std::mt19937_64 rng(2);
  for (std::size_t g = 1; g <= 3; ++g) {
    const auto p = random_product_point(rng, g, 3);
    EXPECT_EQ(segre_image(p).dimension(), 2 * static_cast<std::size_t>(std::pow(3, g)) - 1);
  }
}

TEST(SegreHeight, EqualsTotalHeightExactly) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 60; ++trial) {
    const auto p = random_product_point(rng, 1 + trial % 3, 2 + trial % 7, 4);
    EXPECT_EQ(segre_height(p), total_height(p)) << trial;
  }
}

TEST(DoublingBounds, CertifyOneStepOnRandomInputs) {
  // One x-doubling step computed here from its definition, checked against
  // the certified bounds: -lower <= h([F:G]) - 4 h([X:Z]) <= upper and
  // gcd(F, G) | gcd_modulus.
  std::mt19937_64 rng(29);
  std::uniform_int_distribution<long> coord(-5000, 5000);
  for (const BigRational& lambda : {BigRational(-6), BigRational(1, 2), BigRational(-7198), BigRational(9, 4)}) {
    const auto bd = doubling_bounds(lambda);
    const BigInt a = lambda.get_num(), b = lambda.get_den();
    for (int trial = 0; trial < 300; ++trial) {
      BigInt x(coord(rng)), z(coord(rng));
      if (x == 0 && z == 0) continue;
      BigInt g0;
      mpz_gcd(g0.get_mpz_t(), x.get_mpz_t(), z.get_mpz_t());
      x /= g0;
      z /= g0;
      const BigInt t = b * x * x - a * z * z;
      const BigInt f = t * t;
      const BigInt g = 4 * b * x * z * (x - z) * (b * x - a * z);
      BigInt d;
      mpz_gcd(d.get_mpz_t(), f.get_mpz_t(), g.get_mpz_t());
      ASSERT_NE(d, 0);
      EXPECT_EQ(BigInt(bd.gcd_modulus % d), 0);
      const double h_in = log_abs(cmpabs(x, z) >= 0 ? x : z);
      const BigInt fr = f / d, gr = g / d;
      const double h_out = log_abs(cmpabs(fr, gr) >= 0 ? fr : gr);
      EXPECT_LE(h_out - 4 * h_in, bd.upper + 1e-9);
      EXPECT_GE(h_out - 4 * h_in, -bd.lower - 1e-9);
    }
  }
}

TEST(TatePartial, MatchesIndependentFixture) {
  const auto rows = read_fixture("tate_partials.txt");
  ASSERT_FALSE(rows.empty());
  for (const auto& r : rows) {
    const BigRational lambda = parse_rational(r[0]);
    const auto p = LegendreFiberPoint::affine(parse_rational(r[1]), parse_rational(r[2]), lambda);
    const int depth = std::stoi(r[4]);
    const double expected = std::stod(r[5]);
    EXPECT_NEAR(tate_partial_exact(p, depth), expected, 1e-12 * std::max(1.0, expected)) << r[0] << " " << depth;
    EXPECT_NEAR(tate_partial_split(p, depth), expected, 1e-12 * std::max(1.0, expected)) << r[0] << " " << depth;
  }
}

TEST(TatePartial, SplitAgreesWithExactOnRandomPoints) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    const auto p = random_point(rng, 2 + trial % 9, 3);
    for (int depth : {0, 3, 7}) {
      const double e = tate_partial_exact(p, depth);
      EXPECT_NEAR(tate_partial_split(p, depth), e, 1e-11 * std::max(1.0, e));
    }
  }
}

TEST(NeronTate, IdentityIsExactlyZero) {
  const auto e = neron_tate(LegendreFiberPoint::identity(BigRational(-6)));
  EXPECT_EQ(e.value, 0.0);
  EXPECT_EQ(e.error_bound, 0.0);
}

TEST(NeronTate, VanishesOnRationalTorsion) {
  for (const BigRational& lambda : {BigRational(-6), BigRational(1, 2), BigRational(-3), BigRational(-1000000)}) {
    for (const auto& t : legh::testing::two_torsion(lambda)) EXPECT_NEAR(neron_tate(t).value, 0.0, 1e-8);
  }
  // 4-torsion on lambda = 1 - s^2.
  for (long s : {2, 3, 7}) {
    const BigRational lambda(1 - s * s);
    const auto p = LegendreFiberPoint::affine(1 + s, s * (1 + s), lambda);
    ASSERT_EQ(rational_torsion_order(p), 4);
    EXPECT_NEAR(neron_tate(p).value, 0.0, 1e-8);
  }
}

TEST(NeronTate, ErrorBoundWithinToleranceAndStableAcrossDepths) {
  const auto p = x2_point(2);
  const auto e = neron_tate(p);
  EXPECT_GT(e.value, 0.4);
  EXPECT_LE(e.error_bound, 1e-8);
  const double deeper = tate_partial_split(p, e.depth + 1);
  EXPECT_NEAR(deeper, e.value, 1e-8);
  const auto bd = doubling_bounds(p.lambda());
  EXPECT_DOUBLE_EQ(bd.tail_bound(e.depth + 1), bd.tail_bound(e.depth) / 4);
}

TEST(NeronTate, TighterToleranceAgrees) {
  const auto p = x2_point(5);
  NeronTateOptions tight;
  tight.tolerance = 1e-11;
  const auto a = neron_tate(p), b = neron_tate(p, tight);
  EXPECT_GT(b.depth, a.depth);
  EXPECT_NEAR(a.value, b.value, 1e-8 + 1e-11);
}

TEST(NeronTate, ExactRouteAgreesWhereFeasible) {
  // The exact route carries the full x-coordinate; give it room.
  NeronTateOptions loose;
  loose.tolerance = 1e-4;
  loose.bit_budget = std::uint64_t{1} << 24;
  for (long k : {2, 3}) {
    const auto p = x2_point(k);
    EXPECT_NEAR(neron_tate_exact(p, loose).value, neron_tate(p, loose).value, 1e-10);
  }
}

TEST(NeronTate, BitBudgetExhaustionIsReported) {
  NeronTateOptions starved;
  starved.bit_budget = 8;
  try {
    neron_tate(x2_point(2), starved);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NonConvergence);
  }
  try {
    neron_tate_exact(x2_point(2), starved);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NonConvergence);
  }
}

TEST(NeronTate, QuadraticAndEven) {
  const double tol = 1e-8;
  for (long k = 2; k <= 8; ++k) {
    const auto p = x2_point(k);
    const double h = neron_tate(p).value;
    EXPECT_NEAR(neron_tate(neg(p)).value, h, 2 * tol);
    EXPECT_NEAR(neron_tate(dbl(p)).value, 4 * h, 5 * tol);
    for (long m = -5; m <= 5; ++m) {
      EXPECT_NEAR(neron_tate(mul_n(p, m)).value, static_cast<double>(m * m) * h, (1 + m * m) * tol) << k << " " << m;
    }
  }
}

TEST(NeronTate, TranslationByTorsionInvariant) {
  const auto p = x2_point(4);
  const double h = neron_tate(p).value;
  for (const auto& t : legh::testing::two_torsion(p.lambda())) EXPECT_NEAR(neron_tate(add(p, t)).value, h, 2e-8);
}

TEST(NeronTateProduct, Examples) {
  const auto p = x2_point(3);
  const auto o = LegendreFiberPoint::identity(p.lambda());
  const auto t = LegendreFiberPoint::affine(0, 0, p.lambda());
  const double h = neron_tate(p).value;
  EXPECT_NEAR(neron_tate_product(ProductFiberPoint({t, o})).value, 0.0, 2e-8);
  EXPECT_DOUBLE_EQ(neron_tate_product(ProductFiberPoint({p, o})).value, h);
  EXPECT_NEAR(neron_tate_product(ProductFiberPoint({p, p})).value, 2 * h, 2e-8);
}

TEST(SilvermanTateRatio, Examples) {
  EXPECT_DOUBLE_EQ(silverman_tate_ratio(single(LegendreFiberPoint::identity(BigRational(2)))), std::log(2.0));
  const auto t = LegendreFiberPoint::affine(0, 0, BigRational(1000000));
  EXPECT_NEAR(silverman_tate_ratio(single(t)), 1.0, 1e-8);
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 10; ++trial) {
    EXPECT_GE(silverman_tate_ratio(random_product_point(rng, 1 + trial % 2, 2 + trial, 3)), 0.0);
  }
}

TEST(SzpiroUllmo, Examples) {
  EXPECT_DOUBLE_EQ(szpiro_ullmo_bound(1, 2.5, 0.75), 1.75);
  EXPECT_NEAR(szpiro_ullmo_bound(2, 0, 0), std::log(2.0) / 6, 1e-15);
  EXPECT_NEAR(szpiro_ullmo_bound(4, 0, 0), std::log(2.0) / 2, 1e-15);
}

TEST(SzpiroUllmo, MatchesSymbolicFixture) {
  const auto rows = read_fixture("szpiro_ullmo.txt");
  ASSERT_EQ(rows.size(), 24u);
  for (const auto& r : rows) {
    const auto n = std::stoull(r[0]);
    EXPECT_NEAR(szpiro_ullmo_bound(n, std::stod(r[1]), std::stod(r[2])), std::stod(r[3]), 1e-12) << n;
  }
}

TEST(SzpiroUllmo, NondecreasingAlongPrimePowers) {
  for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 97}) {
    double prev = -1e300;
    for (std::uint64_t n = p; n <= 10000; n *= p) {
      const double v = szpiro_ullmo_bound(n, 0, 0);
      if (n > 3) {
        EXPECT_GE(v, prev) << p << "^k = " << n;
      }
      prev = v;
    }
  }
}

TEST(SzpiroUllmo, RejectsZero) {
  try {
    szpiro_ullmo_bound(0, 0, 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidInput);
  }
}
