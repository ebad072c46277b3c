#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "legh/analytic.hpp"
#include "legh/rational.hpp"

namespace legh {

struct FamilySpec;

/// Open box prod (c_i - eps, c_i + eps) in (R/Z)^{2g}, with exact rational
/// center and half-width. eps = 1/2 is the whole torus.
class TorusBox {
 public:
  /// Throws InvalidInput unless 0 < eps <= 1/2 and the center has even length.
  TorusBox(std::vector<BigRational> center, BigRational half_width);

  const std::vector<BigRational>& center() const noexcept { return center_; }
  const BigRational& half_width() const noexcept { return half_width_; }
  std::size_t size() const noexcept { return center_.size(); }
  bool is_whole_torus() const { return half_width_ * 2 == 1; }

  /// Open-interval membership, coordinates taken mod 1.
  bool contains(std::span<const BigRational> xi) const;

 private:
  std::vector<BigRational> center_;
  BigRational half_width_;
};

/// All xi in the box with N xi = xi0 (mod 1), each coordinate in [0, 1),
/// listed in lexicographic order. N >= 1, else InvalidInput.
std::vector<std::vector<BigRational>> count_roots_in_box(const TorusBox& box, std::span<const BigRational> xi0,
                                                         std::uint64_t n);

/// Number of such roots from the per-coordinate lattice count, without enumerating.
BigInt count_roots_closed_form(const TorusBox& box, std::span<const BigRational> xi0, std::uint64_t n);

struct TorsionPoint {
  /// xi = (a / T, b / T).
  std::uint64_t a = 0;
  std::uint64_t b = 0;
  analytic::ComplexFiberPoint<double> point;
};

/// The T^2 points exp(Omega(lambda) xi) for xi in ((1/T) Z / Z)^2, ordered by
/// (a, b). Each is checked against the curve equation and against
/// [T]P = O under the analytic group law; a failure throws NonConvergence.
/// DomainError outside Sigma, InvalidInput for T = 0.
std::vector<TorsionPoint> fiber_torsion_points(std::complex<double> lambda, std::uint64_t order);

/// Covering radius (sup norm on (R/Z)^g) of {2k xi : k = 1..K}: exact for
/// g = 1, measured on a uniform grid for g > 1.
double kronecker_orbit_gap(std::span<const double> xi_even, std::uint64_t k_max, int grid = 64);

struct TorsionCandidate {
  double t = 0;
  std::complex<double> lambda;
  analytic::TorusCoordinate xi;
  double residual = 0;  // max distance of T xi to Z^2
};

struct SectionSearchOptions {
  double t_min = 0;
  double t_max = 1;
  int grid = 400;
  double bisection_tol = 1e-10;
  double accept_tol = 1e-6;
};

/// Parameter values t in the window at which the section of a g = 1 family
/// is T-torsion in its fiber, i.e. T * Xi(section(t)) = 0 in (R/Z)^2.
/// Only t with lambda(t) in Sigma are used. If every grid sample is
/// torsion, all of them are returned.
std::vector<TorsionCandidate> torsion_on_section(const FamilySpec& family, std::uint64_t order,
                                                 const SectionSearchOptions& opts = {});

}  // namespace legh
