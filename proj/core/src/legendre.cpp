#include "legh/legendre.hpp"

#include <array>

#include "legh/error.hpp"

namespace legh {

void require_valid_lambda(const BigRational& lambda) {
  if (lambda == 0 || lambda == 1) {
    throw Error(ErrorCode::BadLambda, "lambda = " + lambda.get_str() + " is a cusp of the Legendre family");
  }
}

LegendreCurve::LegendreCurve(BigRational lambda) : lambda_(std::move(lambda)) { require_valid_lambda(lambda_); }

bool on_curve(const RationalProjectivePoint& p, const BigRational& lambda) {
  require_valid_lambda(lambda);
  if (p.size() != 3) throw Error(ErrorCode::ArityMismatch, "Legendre points live in P^2");
  const BigRational x(p[0]), y(p[1]), z(p[2]);
  const BigRational lhs = z * y * y;
  const BigRational rhs = x * (x - z) * (x - lambda * z);
  return lhs == rhs;
}

LegendreFiberPoint::LegendreFiberPoint(RationalProjectivePoint point, BigRational lambda)
    : point_(std::move(point)), lambda_(std::move(lambda)) {
  if (!on_curve(point_, lambda_)) {
    throw Error(ErrorCode::InvalidInput, point_.to_string() + " is not on E_" + lambda_.get_str());
  }
}

LegendreFiberPoint LegendreFiberPoint::identity(const BigRational& lambda) {
  require_valid_lambda(lambda);
  return LegendreFiberPoint(RationalProjectivePoint::from_integers({0, 1, 0}), lambda, Unchecked{});
}

LegendreFiberPoint LegendreFiberPoint::affine(const BigRational& x, const BigRational& y, const BigRational& lambda) {
  const std::array<BigRational, 3> c{x, y, BigRational(1)};
  return LegendreFiberPoint(normalize_projective(c), lambda);
}

BigRational LegendreFiberPoint::x() const { return make_rational(point_[0], point_[2]); }
BigRational LegendreFiberPoint::y() const { return make_rational(point_[1], point_[2]); }

std::string LegendreFiberPoint::to_string() const { return "(" + point_.to_string() + ", " + lambda_.get_str() + ")"; }

ProductFiberPoint::ProductFiberPoint(std::vector<LegendreFiberPoint> components) : components_(std::move(components)) {
  if (components_.empty()) throw Error(ErrorCode::InvalidInput, "product point needs g >= 1 components");
  for (const auto& c : components_) {
    if (c.lambda() != components_.front().lambda()) {
      throw Error(ErrorCode::LambdaMismatch, "components of a product point must share lambda");
    }
  }
}

LegendreFiberPoint neg(const LegendreFiberPoint& p) {
  if (p.is_identity()) return p;
  const auto& c = p.point();
  std::array<BigInt, 3> v{c[0], -c[1], c[2]};
  return LegendreFiberPoint(RationalProjectivePoint::from_integers(v), p.lambda(), LegendreFiberPoint::Unchecked{});
}

LegendreFiberPoint add(const LegendreFiberPoint& p, const LegendreFiberPoint& q) {
  if (p.lambda() != q.lambda()) throw Error(ErrorCode::LambdaMismatch, "cannot add points on different fibers");
  if (p.is_identity()) return q;
  if (q.is_identity()) return p;
  const BigRational& lam = p.lambda();
  // y^2 = x^3 + a2*x^2 + a4*x with a2 = -(1 + lambda), a4 = lambda.
  const BigRational a2 = -(1 + lam);
  const BigRational& a4 = lam;
  const BigRational x1 = p.x(), y1 = p.y(), x2 = q.x(), y2 = q.y();
  BigRational m;
  if (x1 == x2) {
    if (y1 + y2 == 0) return LegendreFiberPoint::identity(lam);
    m = (3 * x1 * x1 + 2 * a2 * x1 + a4) / (2 * y1);
  } else {
    m = (y2 - y1) / (x2 - x1);
  }
  const BigRational x3 = m * m - a2 - x1 - x2;
  const BigRational y3 = -(y1 + m * (x3 - x1));
  const std::array<BigRational, 3> c{x3, y3, BigRational(1)};
  return LegendreFiberPoint(normalize_projective(c), lam, LegendreFiberPoint::Unchecked{});
}

LegendreFiberPoint dbl(const LegendreFiberPoint& p) { return add(p, p); }

LegendreFiberPoint mul_n(const LegendreFiberPoint& p, long n) {
  if (n < 0) return mul_n(neg(p), -n);
  LegendreFiberPoint result = LegendreFiberPoint::identity(p.lambda());
  LegendreFiberPoint base = p;
  auto k = static_cast<unsigned long>(n);
  while (k) {
    if (k & 1ul) result = add(result, base);
    k >>= 1;
    if (k) base = dbl(base);
  }
  return result;
}

std::optional<int> rational_torsion_order(const LegendreFiberPoint& p) {
  LegendreFiberPoint q = p;
  for (int n = 1; n <= kMaxRationalTorsionOrder; ++n) {
    if (q.is_identity()) return n;
    q = add(q, p);
  }
  return std::nullopt;
}

}  // namespace legh
