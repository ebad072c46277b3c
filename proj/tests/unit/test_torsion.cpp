#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "legh/error.hpp"
#include "legh/family.hpp"
#include "legh/torsion.hpp"

using namespace legh;
using Cd = std::complex<double>;

namespace {

BigRational q(long n, long d = 1) { return BigRational(n, d); }

TorusBox random_box(std::mt19937_64& rng, std::size_t g) {
  std::uniform_int_distribution<long> num(0, 59), eps(1, g > 2 ? 15 : 30);
  std::vector<BigRational> c;
  for (std::size_t i = 0; i < 2 * g; ++i) c.push_back(make_rational(BigInt(num(rng)), BigInt(60)));
  return TorusBox(std::move(c), make_rational(BigInt(eps(rng)), BigInt(60)));
}

std::vector<BigRational> random_xi0(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<long> num(0, 23);
  std::vector<BigRational> v;
  for (std::size_t i = 0; i < n; ++i) v.push_back(make_rational(BigInt(num(rng)), BigInt(24)));
  return v;
}

// Every tuple (xi0 + k) / N with k in [0, N)^{2g}, filtered by membership.
std::vector<std::vector<BigRational>> brute_force(const TorusBox& box, const std::vector<BigRational>& xi0,
                                                  std::uint64_t n) {
  const std::size_t d = xi0.size();
  std::vector<std::uint64_t> k(d, 0);
  std::vector<std::vector<BigRational>> out;
  while (true) {
    std::vector<BigRational> xi(d);
    for (std::size_t i = 0; i < d; ++i) {
      BigRational v = (xi0[i] + BigRational(static_cast<long>(k[i]))) / BigRational(static_cast<long>(n));
      v -= BigRational(BigInt(mpz_class(v.get_num() / v.get_den())));
      if (v < 0) v += 1;
      v.canonicalize();
      xi[i] = v;
    }
    if (box.contains(xi)) out.push_back(xi);
    std::size_t i = d;
    while (i > 0 && ++k[i - 1] == n) k[--i] = 0;
    if (i == 0) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

Cd residual_point(const analytic::ComplexFiberPoint<double>& p, std::uint64_t order) {
  auto acc = p;
  for (std::uint64_t i = 1; i < order; ++i) acc = analytic::add(acc, p);
  return acc.coords[2] / (std::abs(acc.coords[1]) > std::abs(acc.coords[0]) ? acc.coords[1] : acc.coords[0]);
}

}  // namespace

TEST(TorusBox, Validation) {
  EXPECT_THROW(TorusBox({q(0), q(0)}, q(0)), Error);
  EXPECT_THROW(TorusBox({q(0), q(0)}, q(3, 4)), Error);
  EXPECT_THROW(TorusBox({q(0)}, q(1, 4)), Error);
  EXPECT_TRUE(TorusBox({q(0), q(0)}, q(1, 2)).is_whole_torus());
}

TEST(TorusBox, OpenMembershipModOne) {
  const TorusBox box({q(1, 10), q(9, 10)}, q(1, 5));
  const std::vector<BigRational> inside{q(19, 20), q(1, 20)};
  const std::vector<BigRational> edge{q(3, 10), q(9, 10)};
  EXPECT_TRUE(box.contains(inside));
  EXPECT_FALSE(box.contains(edge));
}

TEST(CountRoots, Example) {
  const TorusBox box({q(1, 4), q(1, 4)}, q(1, 10));
  const std::vector<BigRational> xi0{q(0), q(1, 2)};
  const auto roots = count_roots_in_box(box, xi0, 10);
  EXPECT_EQ(count_roots_closed_form(box, xi0, 10), BigInt(roots.size()));
  for (const auto& r : roots) {
    for (std::size_t i = 0; i < 2; ++i) {
      const BigRational m = r[i] * 10 - xi0[i];
      EXPECT_EQ(m.get_den(), 1);
    }
  }
}

TEST(CountRoots, WholeTorusHasAllRoots) {
  const TorusBox box({q(0), q(0), q(0), q(0)}, q(1, 2));
  const std::vector<BigRational> xi0{q(1, 3), q(0), q(2, 5), q(1, 7)};
  EXPECT_EQ(count_roots_closed_form(box, xi0, 6), BigInt(6 * 6 * 6 * 6));
  EXPECT_EQ(count_roots_in_box(box, xi0, 6).size(), 1296u);
}

TEST(CountRoots, EnumerationMatchesBruteForce) {
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t g = 1 + trial % 2;
    const auto box = random_box(rng, g);
    const auto xi0 = random_xi0(rng, 2 * g);
    const std::uint64_t n = 1 + static_cast<std::uint64_t>(trial % 13);
    EXPECT_EQ(count_roots_in_box(box, xi0, n), brute_force(box, xi0, n)) << trial;
  }
}

TEST(CountRoots, ClosedFormMatchesAndMeetsVolumeBound) {
  std::mt19937_64 rng(73);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t g = 1 + trial % 3;
    const auto box = random_box(rng, g);
    const auto xi0 = random_xi0(rng, 2 * g);
    const std::uint64_t n = 1 + static_cast<std::uint64_t>(trial * 7 % (g > 2 ? 12 : 29));
    const auto roots = count_roots_in_box(box, xi0, n);
    const BigInt closed = count_roots_closed_form(box, xi0, n);
    EXPECT_EQ(closed, BigInt(roots.size())) << trial;
    const BigRational eps_n = box.half_width() * BigRational(static_cast<long>(n));
    if (eps_n >= 1) {
      BigRational bound = 1;
      for (std::size_t i = 0; i < 2 * g; ++i) bound *= eps_n;
      EXPECT_GE(BigRational(closed), bound) << trial;
    }
  }
}

TEST(CountRoots, RejectsZeroMultiplier) {
  const TorusBox box({q(0), q(0)}, q(1, 4));
  const std::vector<BigRational> xi0{q(0), q(0)};
  EXPECT_THROW(count_roots_in_box(box, xi0, 0), Error);
  const std::vector<BigRational> wrong{q(0)};
  EXPECT_THROW(count_roots_in_box(box, wrong, 3), Error);
}

TEST(FiberTorsion, CountsNegationAndOrder) {
  for (const Cd l : {Cd(0.5, 0), Cd(0.3, 0.2)}) {
    for (std::uint64_t t = 1; t <= 5; ++t) {
      const auto pts = fiber_torsion_points(l, t);
      ASSERT_EQ(pts.size(), t * t);
      for (const auto& p : pts) {
        EXPECT_LT(p.point.curve_residual(), 1e-8);
        const auto neg = p.point.negated();
        const bool found = std::any_of(pts.begin(), pts.end(), [&](const TorsionPoint& o) {
          return (o.point.is_identity() && neg.is_identity()) ||
                 (!o.point.is_identity() && !neg.is_identity() && analytic::chart_distance(o.point, neg) < 1e-8);
        });
        EXPECT_TRUE(found) << t << " " << p.a << "," << p.b;
        if (!p.point.is_identity()) {
          EXPECT_LT(std::abs(residual_point(p.point, t)), 1e-6);
        }
      }
    }
  }
}

TEST(FiberTorsion, TwoTorsionIsTheRootsOfTheCubic) {
  const Cd l(0.35, -0.1);
  const auto pts = fiber_torsion_points(l, 2);
  int affine = 0;
  for (const auto& p : pts) {
    if (p.point.is_identity()) continue;
    ++affine;
    const Cd x = p.point.coords[0] / p.point.coords[2];
    const Cd y = p.point.coords[1] / p.point.coords[2];
    EXPECT_LT(std::abs(y), 1e-9);
    EXPECT_LT(std::min({std::abs(x), std::abs(x - 1.0), std::abs(x - l)}), 1e-9);
  }
  EXPECT_EQ(affine, 3);
}

TEST(FiberTorsion, Errors) {
  EXPECT_THROW(fiber_torsion_points(Cd(0.5, 0), 0), Error);
  try {
    fiber_torsion_points(Cd(-3, 0), 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DomainError);
  }
}

TEST(Kronecker, RationalOrbit) {
  // 2k/4 mod 1 visits {0, 1/2}; the covering radius is 1/4.
  const std::array<double, 1> xi{0.25};
  EXPECT_NEAR(kronecker_orbit_gap(xi, 50), 0.25, 1e-12);
  const std::array<double, 1> xi3{1.0 / 6};
  EXPECT_NEAR(kronecker_orbit_gap(xi3, 50), 1.0 / 6, 1e-12);
}

TEST(Kronecker, IrrationalOrbitBecomesDense) {
  const std::array<double, 1> xi{std::sqrt(2.0) - 1};
  double prev = 1;
  for (std::uint64_t k : {10, 100, 1000}) {
    const double gap = kronecker_orbit_gap(xi, k);
    EXPECT_LE(gap, prev + 1e-15);
    EXPECT_GE(gap, 0.5 / static_cast<double>(k) - 1e-15);
    prev = gap;
  }
  EXPECT_LT(prev, 0.01);
}

TEST(Kronecker, HigherGenusOnGrid) {
  const std::array<double, 2> dense{std::sqrt(2.0) - 1, std::sqrt(3.0) - 1};
  const std::array<double, 2> rational{0.25, 0.5};
  EXPECT_LT(kronecker_orbit_gap(dense, 3000, 32), 0.1);
  EXPECT_GE(kronecker_orbit_gap(rational, 3000, 32), 0.2);
}

TEST(SectionTorsion, ZeroSectionIsTorsionEverywhere) {
  SectionSearchOptions opts;
  opts.t_min = 0.72;
  opts.t_max = 0.92;
  opts.grid = 20;
  const auto c = torsion_on_section(builtin_family_zero(), 3, opts);
  EXPECT_EQ(c.size(), 21u);
}

TEST(SectionTorsion, FindsFiveTorsionOnTheX2Family) {
  SectionSearchOptions opts;
  opts.t_min = 0.78;
  opts.t_max = 0.81;
  opts.grid = 30;
  const auto c = torsion_on_section(builtin_family_x2(), 5, opts);
  ASSERT_EQ(c.size(), 1u);
  EXPECT_NEAR(c[0].t, 0.7967577662, 1e-8);
  EXPECT_LE(c[0].residual, 1e-6);
  // Independent confirmation through the group law on the fiber.
  const double t = c[0].t;
  const Cd l(2 - 2 * t * t, 0);
  const auto p = analytic::ComplexFiberPoint<double>::affine(2.0, 2 * t, l);
  EXPECT_LT(std::abs(residual_point(p, 5)), 1e-6);
}

TEST(SectionTorsion, RequiresGenusOne) {
  FamilySpec f = builtin_family_x2();
  f.components.push_back(f.components.front());
  EXPECT_THROW(torsion_on_section(f, 2), Error);
}
