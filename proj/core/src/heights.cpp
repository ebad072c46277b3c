#include "legh/heights.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "legh/error.hpp"

namespace legh {

HeightValue::HeightValue(BigInt argument) : argument_(std::move(argument)) {
  if (argument_ <= 0) throw Error(ErrorCode::InvalidInput, "height argument must be a positive integer");
}

HeightValue weil_height(const RationalProjectivePoint& p) { return HeightValue(p.max_abs()); }

HeightValue lambda_height(const BigRational& lambda) {
  const BigInt& a = lambda.get_num();
  const BigInt& b = lambda.get_den();
  return HeightValue(cmpabs(a, b) > 0 ? BigInt(abs(a)) : b);
}

HeightValue total_height(const ProductFiberPoint& p) {
  HeightValue h = lambda_height(p.lambda());
  for (const auto& c : p.components()) h += weil_height(c.point());
  return h;
}

RationalProjectivePoint segre_image(const ProductFiberPoint& p) {
  std::vector<BigInt> coords{BigInt(1)};
  for (const auto& c : p.components()) {
    std::vector<BigInt> next;
    next.reserve(coords.size() * 3);
    for (const auto& s : coords) {
      for (const auto& t : c.point().coords()) next.push_back(s * t);
    }
    coords = std::move(next);
  }
  const std::array<BigInt, 2> line{p.lambda().get_num(), p.lambda().get_den()};
  std::vector<BigInt> out;
  out.reserve(coords.size() * 2);
  for (const auto& s : coords) {
    for (const auto& t : line) out.push_back(s * t);
  }
  return RationalProjectivePoint::from_integers(out);
}

HeightValue segre_height(const ProductFiberPoint& p) { return weil_height(segre_image(p)); }

// ---------------------------------------------------------------------------
// Doubling map bounds

namespace {

// Binary quartic forms as coefficient arrays, index i <-> X^(4-i) Z^i.
using Quartic = std::array<BigInt, 5>;

Quartic doubling_numerator(const BigInt& a, const BigInt& b) {
  return {b * b, 0, -2 * a * b, 0, a * a};
}

Quartic doubling_denominator(const BigInt& a, const BigInt& b) {
  return {0, 4 * b * b, -4 * b * (a + b), 4 * a * b, 0};
}

BigInt eval_quartic(const Quartic& f, const BigInt& x, const BigInt& z) {
  // Homogeneous Horner.
  BigInt acc = f[0];
  BigInt zp = z;
  for (std::size_t i = 1; i < f.size(); ++i) {
    acc = acc * x + f[i] * zp;
    zp *= z;
  }
  return acc;
}

// Solves the square system m * u = rhs over Q. Returns nullopt if singular.
std::optional<std::vector<BigRational>> solve(std::vector<std::vector<BigRational>> m, std::vector<BigRational> rhs) {
  const std::size_t n = m.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv][col] == 0) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(m[piv], m[col]);
    std::swap(rhs[piv], rhs[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || m[r][col] == 0) continue;
      const BigRational f = m[r][col] / m[col][col];
      for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
      rhs[r] -= f * rhs[col];
    }
  }
  std::vector<BigRational> u(n);
  for (std::size_t i = 0; i < n; ++i) u[i] = rhs[i] / m[i][i];
  return u;
}

double log_sum_abs(std::span<const BigInt> coeffs) {
  BigInt s = 0;
  for (const auto& c : coeffs) s += abs(c);
  return log_abs(s);
}

}  // namespace

double DoublingBounds::tail_bound(int depth) const { return defect() / (6.0 * std::pow(4.0, depth)); }

DoublingBounds doubling_bounds(const BigRational& lambda) {
  require_valid_lambda(lambda);
  DoublingBounds out;
  out.a = lambda.get_num();
  out.b = lambda.get_den();
  const Quartic f = doubling_numerator(out.a, out.b);
  const Quartic g = doubling_denominator(out.a, out.b);
  out.upper = std::max(log_sum_abs(f), log_sum_abs(g));

  // Cubic cofactors with f1*F + g1*G = X^7 and f2*F + g2*G = Z^7. Unknown
  // layout: f coefficients (X^3 .. Z^3) then g coefficients.
  std::vector<std::vector<BigRational>> m(8, std::vector<BigRational>(8));
  for (std::size_t j = 0; j < 4; ++j) {
    for (std::size_t i = 0; i < 5; ++i) {
      m[i + j][j] = f[i];
      m[i + j][4 + j] = g[i];
    }
  }
  double worst = 0;
  BigInt denominators = 1;
  for (std::size_t target : {std::size_t{0}, std::size_t{7}}) {
    std::vector<BigRational> rhs(8);
    rhs[target] = 1;
    const auto u = solve(m, rhs);
    if (!u) throw Error(ErrorCode::BadLambda, "doubling map degenerates at lambda = " + lambda.get_str());
    BigRational l1 = 0;
    for (const auto& c : *u) {
      l1 += abs(c);
      mpz_lcm(denominators.get_mpz_t(), denominators.get_mpz_t(), c.get_den_mpz_t());
    }
    worst = std::max(worst, std::log(l1.get_d()));
  }
  out.gcd_modulus = denominators;
  out.lower = std::max(0.0, worst + log_abs(denominators));
  return out;
}

RationalProjectivePoint x_line_point(const LegendreFiberPoint& p) {
  if (p.is_identity()) return RationalProjectivePoint::from_integers({1, 0});
  const std::array<BigInt, 2> c{p.point()[0], p.point()[2]};
  return RationalProjectivePoint::from_integers(c);
}

namespace {

double height_of_line_point(const BigInt& x, const BigInt& z) {
  return log_abs(cmpabs(x, z) >= 0 ? x : z);
}

}  // namespace

double tate_partial_exact(const LegendreFiberPoint& p, int depth, std::uint64_t bit_budget) {
  const auto bounds = doubling_bounds(p.lambda());
  const Quartic f = doubling_numerator(bounds.a, bounds.b);
  const Quartic g = doubling_denominator(bounds.a, bounds.b);
  const auto start = x_line_point(p);
  BigInt x = start[0], z = start[1];
  for (int k = 0; k < depth; ++k) {
    BigInt fx = eval_quartic(f, x, z);
    BigInt gx = eval_quartic(g, x, z);
    BigInt d;
    mpz_gcd(d.get_mpz_t(), fx.get_mpz_t(), gx.get_mpz_t());
    mpz_divexact(x.get_mpz_t(), fx.get_mpz_t(), d.get_mpz_t());
    mpz_divexact(z.get_mpz_t(), gx.get_mpz_t(), d.get_mpz_t());
    const auto bits = std::max(mpz_sizeinbase(x.get_mpz_t(), 2), mpz_sizeinbase(z.get_mpz_t(), 2));
    if (bits > bit_budget) {
      throw Error(ErrorCode::NonConvergence, "x-coordinate of [2^" + std::to_string(k + 1) + "]P needs " +
                                                 std::to_string(bits) + " bits, budget " +
                                                 std::to_string(bit_budget));
    }
  }
  return height_of_line_point(x, z) / (2.0 * std::pow(4.0, depth));
}

namespace {

// Telescoped Tate iteration. Returns (h_0 + sum_{k<depth} delta_k / 4^(k+1)) / 2.
double split_iteration(const LegendreFiberPoint& p, const DoublingBounds& bounds, int depth) {
  const auto start = x_line_point(p);
  const BigInt& x0 = start[0];
  const BigInt& z0 = start[1];
  const double h0 = height_of_line_point(x0, z0);
  if (depth == 0) return h0 / 2;

  const BigInt& a = bounds.a;
  const BigInt& b = bounds.b;
  const BigInt& r = bounds.gcd_modulus;
  const Quartic f = doubling_numerator(a, b);
  const Quartic g = doubling_denominator(a, b);
  const double lam = BigRational(a, b).get_d();
  const double log_b2 = 2 * log_abs(b);

  // Floating copy of x(2^k P), scaled to max(|u|, |v|) = 1.
  const BigInt& big = cmpabs(x0, z0) >= 0 ? x0 : z0;
  double u = BigRational(x0, abs(big)).get_d();
  double v = BigRational(z0, abs(big)).get_d();

  // Exact copy of x(2^k P) modulo `mod`; each step divides mod by gcd_k | r.
  BigInt mod;
  mpz_pow_ui(mod.get_mpz_t(), r.get_mpz_t(), static_cast<unsigned long>(depth) + 1);
  BigInt xm = x0 % mod, zm = z0 % mod;

  double sum = h0;
  double scale = 1.0;
  for (int k = 0; k < depth; ++k) {
    scale /= 4.0;
    const double t = u * u - lam * v * v;
    const double fu = t * t;
    const double gu = 4.0 * u * v * (u - v) * (u - lam * v);
    const double m = std::max(std::fabs(fu), std::fabs(gu));
    const double arch = log_b2 + std::log(m);
    u = fu / m;
    v = gu / m;

    BigInt fm = eval_quartic(f, xm, zm) % mod;
    BigInt gm = eval_quartic(g, xm, zm) % mod;
    BigInt d;
    mpz_gcd(d.get_mpz_t(), fm.get_mpz_t(), r.get_mpz_t());
    mpz_gcd(d.get_mpz_t(), d.get_mpz_t(), gm.get_mpz_t());
    mpz_divexact(mod.get_mpz_t(), mod.get_mpz_t(), d.get_mpz_t());
    mpz_divexact(fm.get_mpz_t(), fm.get_mpz_t(), d.get_mpz_t());
    mpz_divexact(gm.get_mpz_t(), gm.get_mpz_t(), d.get_mpz_t());
    mpz_mod(xm.get_mpz_t(), fm.get_mpz_t(), mod.get_mpz_t());
    mpz_mod(zm.get_mpz_t(), gm.get_mpz_t(), mod.get_mpz_t());

    sum += (arch - log_abs(d)) * scale;
  }
  return sum / 2;
}

int depth_for(const DoublingBounds& bounds, const NeronTateOptions& opts) {
  if (!(opts.tolerance > 0)) throw Error(ErrorCode::InvalidInput, "tolerance must be positive");
  int depth = 0;
  while (bounds.tail_bound(depth) > opts.tolerance) {
    if (++depth > opts.max_depth) {
      throw Error(ErrorCode::NonConvergence, "tolerance needs more than " + std::to_string(opts.max_depth) +
                                                 " doublings");
    }
  }
  return depth;
}

}  // namespace

double tate_partial_split(const LegendreFiberPoint& p, int depth) {
  return split_iteration(p, doubling_bounds(p.lambda()), depth);
}

NTEstimate neron_tate(const LegendreFiberPoint& p, const NeronTateOptions& opts) {
  if (p.is_identity()) return {0.0, 0, 0.0};
  const auto bounds = doubling_bounds(p.lambda());
  const int depth = depth_for(bounds, opts);
  const auto carried_bits = static_cast<std::uint64_t>(depth + 1) * mpz_sizeinbase(bounds.gcd_modulus.get_mpz_t(), 2);
  if (carried_bits > opts.bit_budget) {
    throw Error(ErrorCode::NonConvergence, "modulus for depth " + std::to_string(depth) + " needs " +
                                               std::to_string(carried_bits) + " bits");
  }
  const double v = split_iteration(p, bounds, depth);
  // h_hat >= 0; a negative partial sum is rounding on a torsion point.
  return {std::max(0.0, v), depth, bounds.tail_bound(depth)};
}

NTEstimate neron_tate_exact(const LegendreFiberPoint& p, const NeronTateOptions& opts) {
  if (p.is_identity()) return {0.0, 0, 0.0};
  const auto bounds = doubling_bounds(p.lambda());
  const int depth = depth_for(bounds, opts);
  const double v = tate_partial_exact(p, depth, opts.bit_budget);
  return {std::max(0.0, v), depth, bounds.tail_bound(depth)};
}

NTEstimate neron_tate_product(const ProductFiberPoint& p, const NeronTateOptions& opts) {
  NTEstimate total;
  for (const auto& c : p.components()) {
    const auto e = neron_tate(c, opts);
    total.value += e.value;
    total.error_bound += e.error_bound;
    total.depth = std::max(total.depth, e.depth);
  }
  return total;
}

double silverman_tate_ratio(const ProductFiberPoint& p, const NeronTateOptions& opts) {
  const double h_total = total_height(p).value();
  const double h_hat = neron_tate_product(p, opts).value;
  const double h_lambda = lambda_height(p.lambda()).value();
  return std::fabs(h_total - h_hat) / std::max(1.0, h_lambda);
}

double szpiro_ullmo_bound(std::uint64_t n, double faltings_h, double c) {
  if (n == 0) throw Error(ErrorCode::InvalidInput, "N must be positive");
  double correction = 0;
  std::uint64_t rest = n;
  for (std::uint64_t p = 2; p * p <= rest; ++p) {
    if (rest % p) continue;
    unsigned e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    const double pd = static_cast<double>(p);
    const double pe = std::pow(pd, e);
    correction += (pe - 1) / ((pd * pd - 1) * std::pow(pd, e - 1)) * std::log(pd);
  }
  if (rest > 1) {
    // Remaining prime with exponent 1: (p - 1) / (p^2 - 1) = 1 / (p + 1).
    const double pd = static_cast<double>(rest);
    correction += std::log(pd) / (pd + 1);
  }
  return faltings_h + 0.5 * std::log(static_cast<double>(n)) - correction - c;
}

}  // namespace legh
