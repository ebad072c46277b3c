#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "legh/analytic.hpp"
#include "legh/legendre.hpp"
#include "legh/polynomial.hpp"

namespace legh {

/// p(t) / q(t) with integer coefficients.
class RationalFunction {
 public:
  RationalFunction();
  RationalFunction(IntPolynomial numerator, IntPolynomial denominator);

  /// Grammar: poly ["/" poly], where a poly is an optionally parenthesized
  /// sum of terms [int][*]t[^k] or int. Throws InvalidInput.
  static RationalFunction parse(const std::string& text);
  static RationalFunction constant(long c);

  const IntPolynomial& numerator() const noexcept { return num_; }
  const IntPolynomial& denominator() const noexcept { return den_; }

  /// nullopt where the denominator vanishes.
  std::optional<BigRational> eval(const BigRational& t) const;
  std::optional<std::complex<double>> eval(std::complex<double> t) const;

  std::string to_string() const;

 private:
  IntPolynomial num_;
  IntPolynomial den_;
};

struct FamilyComponent {
  RationalFunction x;
  RationalFunction y;
  RationalFunction z = RationalFunction::constant(1);
};

/// A curve in the g-fold fibered power of the Legendre family, given by one
/// rational parameter t: P(t) = ([x_1 : y_1 : z_1], ..., [x_g : y_g : z_g]) over lambda(t).
struct FamilySpec {
  std::string name;
  std::vector<FamilyComponent> components;
  RationalFunction lambda;

  std::size_t genus() const noexcept { return components.size(); }

  /// lambda(t); nullopt where undefined.
  std::optional<BigRational> lambda_at(const BigRational& t) const;

  /// P(t), checked on the curve exactly. Throws InvalidInput where a
  /// coordinate is undefined or off the curve, BadLambda if lambda(t) is 0 or 1.
  ProductFiberPoint point_at(const BigRational& t) const;

  /// Complex evaluation for the analytic layer; nullopt where undefined.
  std::optional<analytic::ComplexProductPoint<double>> complex_point_at(std::complex<double> t) const;
  std::optional<std::complex<double>> complex_lambda_at(std::complex<double> t) const;
};

/// x = 2, y = 2t, lambda = 2 - 2t^2.
FamilySpec builtin_family_x2();
/// The zero section over the x2 base curve.
FamilySpec builtin_family_zero();
/// The 2-torsion section (0, 0) over the x2 base curve.
FamilySpec builtin_family_two_torsion();

/// Throws InvalidInput for malformed documents.
FamilySpec parse_family_json(const std::string& text, const std::string& name = "file");
std::string family_to_json(const FamilySpec& f);

/// "builtin:x2", "builtin:zero", "builtin:two-torsion", or a path to a JSON file.
FamilySpec load_family(const std::string& ref);

}  // namespace legh
