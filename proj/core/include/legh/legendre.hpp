#pragma once

#include <optional>
#include <string>
#include <vector>

#include "legh/projective.hpp"
#include "legh/rational.hpp"

namespace legh {

/// Legendre curve E_lambda : z*y^2 = x*(x - z)*(x - lambda*z), lambda not in {0, 1}.
class LegendreCurve {
 public:
  explicit LegendreCurve(BigRational lambda);
  const BigRational& lambda() const noexcept { return lambda_; }

 private:
  BigRational lambda_;
};

/// Throws BadLambda for lambda in {0, 1}.
void require_valid_lambda(const BigRational& lambda);

/// True iff p in P^2 satisfies z*y^2 = x*(x - z)*(x - lambda*z) exactly.
/// Throws BadLambda for lambda in {0, 1}, ArityMismatch unless p is in P^2.
bool on_curve(const RationalProjectivePoint& p, const BigRational& lambda);

/// A Q-rational point of the fiber E_lambda.
class LegendreFiberPoint {
 public:
  /// Throws BadLambda, or InvalidInput if the point is not on the curve.
  LegendreFiberPoint(RationalProjectivePoint point, BigRational lambda);

  static LegendreFiberPoint identity(const BigRational& lambda);
  static LegendreFiberPoint affine(const BigRational& x, const BigRational& y, const BigRational& lambda);

  const RationalProjectivePoint& point() const noexcept { return point_; }
  const BigRational& lambda() const noexcept { return lambda_; }
  bool is_identity() const { return point_[2] == 0; }

  /// Affine coordinates; only valid when !is_identity().
  BigRational x() const;
  BigRational y() const;

  std::string to_string() const;

  friend bool operator==(const LegendreFiberPoint&, const LegendreFiberPoint&) = default;

 private:
  struct Unchecked {};
  LegendreFiberPoint(RationalProjectivePoint point, BigRational lambda, Unchecked)
      : point_(std::move(point)), lambda_(std::move(lambda)) {}

  RationalProjectivePoint point_;
  BigRational lambda_;

  friend LegendreFiberPoint add(const LegendreFiberPoint&, const LegendreFiberPoint&);
  friend LegendreFiberPoint neg(const LegendreFiberPoint&);
};

/// g points on fibers over one common lambda (a point of the g-fold fibered power).
class ProductFiberPoint {
 public:
  /// Throws LambdaMismatch if components disagree on lambda, InvalidInput if empty.
  explicit ProductFiberPoint(std::vector<LegendreFiberPoint> components);

  std::size_t genus() const noexcept { return components_.size(); }
  const std::vector<LegendreFiberPoint>& components() const noexcept { return components_; }
  const LegendreFiberPoint& operator[](std::size_t i) const { return components_[i]; }
  const BigRational& lambda() const noexcept { return components_.front().lambda(); }

 private:
  std::vector<LegendreFiberPoint> components_;
};

/// Chord-tangent sum with identity [0:1:0]. Throws LambdaMismatch.
LegendreFiberPoint add(const LegendreFiberPoint& p, const LegendreFiberPoint& q);
LegendreFiberPoint neg(const LegendreFiberPoint& p);
LegendreFiberPoint dbl(const LegendreFiberPoint& p);
/// [n]P by double-and-add; negative n goes through neg.
LegendreFiberPoint mul_n(const LegendreFiberPoint& p, long n);

/// Mazur's bound for torsion of Q-points.
inline constexpr int kMaxRationalTorsionOrder = 12;

/// Smallest n <= 12 with [n]P = O, or nullopt.
std::optional<int> rational_torsion_order(const LegendreFiberPoint& p);

}  // namespace legh
