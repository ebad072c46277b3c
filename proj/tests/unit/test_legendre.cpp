#include <gtest/gtest.h>

#include "legh/error.hpp"
#include "legh/legendre.hpp"
#include "sample_points.hpp"

using namespace legh;
using legh::testing::random_point;
using legh::testing::x2_point;

namespace {

RationalProjectivePoint pt(std::initializer_list<long> xs) { return RationalProjectivePoint::from_integers(xs); }

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorCode::InvalidInput;
}

}  // namespace

TEST(OnCurve, Examples) {
  const BigRational lam(-6);
  EXPECT_TRUE(on_curve(pt({0, 1, 0}), lam));
  EXPECT_TRUE(on_curve(pt({2, 4, 1}), lam));
  EXPECT_FALSE(on_curve(pt({1, 1, 1}), lam));
}

TEST(OnCurve, Errors) {
  EXPECT_EQ(code_of([] { on_curve(pt({0, 1, 0}), BigRational(0)); }), ErrorCode::BadLambda);
  EXPECT_EQ(code_of([] { on_curve(pt({0, 1, 0}), BigRational(1)); }), ErrorCode::BadLambda);
  EXPECT_EQ(code_of([] { on_curve(pt({0, 1}), BigRational(2)); }), ErrorCode::ArityMismatch);
  EXPECT_EQ(code_of([] { LegendreFiberPoint(pt({1, 1, 1}), BigRational(-6)); }), ErrorCode::InvalidInput);
}

TEST(GroupLaw, Examples) {
  const BigRational lam(-6);
  const auto o = LegendreFiberPoint::identity(lam);
  const auto p = x2_point(2);
  EXPECT_EQ(add(p, o), p);
  EXPECT_EQ(add(o, p), p);
  const auto t = LegendreFiberPoint::affine(0, 0, lam);
  EXPECT_EQ(add(t, t), o);
  EXPECT_EQ(add(p, LegendreFiberPoint::affine(2, -4, lam)), o);
}

TEST(GroupLaw, KnownDouble) {
  // Tangent at (2, 4) on y^2 = x^3 + 5x^2 - 6x: slope 9/4, so 2P = (25/16, -165/64).
  EXPECT_EQ(dbl(x2_point(2)), LegendreFiberPoint::affine(BigRational(25, 16), BigRational(-165, 64), BigRational(-6)));
}

TEST(GroupLaw, LambdaMismatch) {
  EXPECT_EQ(code_of([] { add(x2_point(2), x2_point(3)); }), ErrorCode::LambdaMismatch);
  EXPECT_EQ(code_of([] { ProductFiberPoint({x2_point(2), x2_point(3)}); }), ErrorCode::LambdaMismatch);
  EXPECT_EQ(code_of([] { ProductFiberPoint(std::vector<LegendreFiberPoint>{}); }), ErrorCode::InvalidInput);
}

TEST(MulN, Examples) {
  const auto p = x2_point(2);
  EXPECT_TRUE(mul_n(p, 0).is_identity());
  EXPECT_TRUE(mul_n(LegendreFiberPoint::affine(0, 0, BigRational(7, 3)), 2).is_identity());
  EXPECT_EQ(mul_n(p, -3), neg(mul_n(p, 3)));
}

TEST(GroupLaw, AxiomsOnSamples) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 30; ++trial) {
    const long k = 2 + trial % 6;
    const auto p = random_point(rng, k, 4), q = random_point(rng, k, 4), r = random_point(rng, k, 4);
    EXPECT_EQ(add(add(p, q), r), add(p, add(q, r)));
    EXPECT_EQ(add(p, q), add(q, p));
    EXPECT_TRUE(add(p, neg(p)).is_identity());
    for (const auto& s : {add(p, q), neg(p), dbl(q)}) EXPECT_TRUE(on_curve(s.point(), s.lambda()));
  }
}

TEST(MulN, LinearityInN) {
  const auto p = x2_point(3);
  for (long m = -8; m <= 8; m += 3) {
    for (long n = -8; n <= 8; n += 2) {
      EXPECT_EQ(mul_n(p, m + n), add(mul_n(p, m), mul_n(p, n)));
      EXPECT_EQ(mul_n(p, m * n), mul_n(mul_n(p, n), m));
    }
  }
}

TEST(RationalTorsion, Orders) {
  const BigRational lam(-6);
  EXPECT_EQ(rational_torsion_order(LegendreFiberPoint::affine(0, 0, lam)), 2);
  EXPECT_EQ(rational_torsion_order(LegendreFiberPoint::identity(lam)), 1);
  EXPECT_EQ(rational_torsion_order(x2_point(2)), std::nullopt);
  // lambda = 1 - s^2 carries the 4-torsion point (1 + s, s(1 + s)).
  EXPECT_EQ(rational_torsion_order(LegendreFiberPoint::affine(3, 6, BigRational(-3))), 4);
}
