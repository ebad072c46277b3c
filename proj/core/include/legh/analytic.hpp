#pragma once

// Complex-analytic layer of the Legendre family: hypergeometric periods, the
// period ratio T(lambda), Weierstrass p on Z + tau Z, the modular lambda
// function, the fiberwise exponential map, its inverse (torus coordinates),
// and the monodromy of torus coordinates around the cusps 0 and 1.
//
// Kernels are templates over the real type and are instantiated for double
// and long double. Tolerances scale with std::numeric_limits<Real>::epsilon().

#include <array>
#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace legh::analytic {

template <class Real>
using Complex = std::complex<Real>;

/// Strict margin used for membership in Sigma = {|l| < 1, |1 - l| < 1}.
inline constexpr double kSigmaMargin = 1e-6;

template <class Real>
bool in_sigma(Complex<Real> lambda, double margin = kSigmaMargin);

/// 2F1(1/2, 1/2; 1; lambda) by its power series; the truncation is stopped
/// by a certified geometric tail bound. Throws DomainError if
/// |lambda| >= 1 - kSigmaMargin.
template <class Real>
Complex<Real> hyper_F(Complex<Real> lambda);

template <class Real>
struct PeriodPair {
  Complex<Real> omega1;
  Complex<Real> omega2;
};

/// omega1 = pi F(lambda), omega2 = pi i F(1 - lambda). Throws DomainError outside Sigma.
template <class Real>
PeriodPair<Real> periods(Complex<Real> lambda);

/// T(lambda) = omega2 / omega1, in the upper half plane on Sigma.
template <class Real>
Complex<Real> tau_of_lambda(Complex<Real> lambda);

/// (theta_2^2, theta_3^2, theta_4^2) at tau (nome e^{pi i tau}), any tau in H.
/// Reduces tau to the standard fundamental domain with the branch-free
/// transformation laws of the squared theta constants.
template <class Real>
std::array<Complex<Real>, 3> theta_squares(Complex<Real> tau);

template <class Real>
struct WeierstrassValues {
  Complex<Real> p;
  Complex<Real> dp;
};

/// p and p' on Z + tau Z from the q-series (q = e^{2 pi i tau}) with z first
/// reduced to the fundamental parallelogram. Requires Im tau >= 0.5
/// (LowImaginaryPart otherwise); PoleError at lattice points.
template <class Real>
WeierstrassValues<Real> weierstrass_qseries(Complex<Real> z, Complex<Real> tau);

/// p(z; tau) for any tau in H: tau is moved into the fundamental domain by
/// SL2(Z) and the homogeneity p(a z; a tau) = a^-2 p(z; tau) carries the value
/// back. DomainError if Im tau <= 0, PoleError at lattice points.
template <class Real>
Complex<Real> weierstrass_p(Complex<Real> z, Complex<Real> tau);

template <class Real>
Complex<Real> weierstrass_p_prime(Complex<Real> z, Complex<Real> tau);

template <class Real>
WeierstrassValues<Real> weierstrass(Complex<Real> z, Complex<Real> tau);

/// e1 = p(tau/2), e2 = p(1/2), e3 = p((1 + tau)/2).
template <class Real>
std::array<Complex<Real>, 3> e_values(Complex<Real> tau);

/// Lambda(tau) = (e3 - e1) / (e2 - e1).
template <class Real>
Complex<Real> lambda_of_tau(Complex<Real> tau);

/// r(tau) = pi prod (1 - e^{2 pi i n tau})^2 (1 + e^{2 pi i (n - 1/2) tau})^4,
/// evaluated on all of H as pi theta_3(tau)^2.
template <class Real>
Complex<Real> r_of_tau(Complex<Real> tau);

/// The literal truncated product; Im tau >= 0.5 (LowImaginaryPart otherwise).
template <class Real>
Complex<Real> r_product(Complex<Real> tau);

/// 2^8 (l^2 - l + 1)^3 / (l^2 (l - 1)^2).
template <class Real>
Complex<Real> j_invariant(Complex<Real> lambda);

/// A point of some fiber E_lambda(C) in projective coordinates [x : y : z].
template <class Real>
struct ComplexFiberPoint {
  std::array<Complex<Real>, 3> coords;
  Complex<Real> lambda;

  static ComplexFiberPoint identity(Complex<Real> lambda) { return {{Complex<Real>(0), Complex<Real>(1), Complex<Real>(0)}, lambda}; }
  static ComplexFiberPoint affine(Complex<Real> x, Complex<Real> y, Complex<Real> lambda) {
    return {{x, y, Complex<Real>(1)}, lambda};
  }

  /// True if z vanishes relative to the largest coordinate (up to `tol`).
  bool is_identity(Real tol = Real(1e-10)) const;
  /// |z y^2 - x (x - z)(x - lambda z)| in the chart where the largest coordinate is 1.
  Real curve_residual() const;
  ComplexFiberPoint negated() const { return {{coords[0], -coords[1], coords[2]}, lambda}; }
};

/// max_j |p_j/p_i - q_j/q_i| with i the index of p's largest coordinate.
template <class Real>
Real chart_distance(const ComplexFiberPoint<Real>& p, const ComplexFiberPoint<Real>& q);

/// Chord-tangent sum on E_lambda(C); coincidences (equal x, opposite y) are
/// decided with relative tolerance `tol`.
template <class Real>
ComplexFiberPoint<Real> add(const ComplexFiberPoint<Real>& p, const ComplexFiberPoint<Real>& q, Real tol = Real(1e-9));

template <class Real>
using ComplexProductPoint = std::vector<ComplexFiberPoint<Real>>;

/// Coordinates in (R/Z)^{2g}, each entry reduced into [0, 1).
class TorusCoordinate {
 public:
  TorusCoordinate() = default;
  /// Throws InvalidInput for odd length.
  explicit TorusCoordinate(std::vector<double> entries);

  static TorusCoordinate zero(std::size_t g) { return TorusCoordinate(std::vector<double>(2 * g, 0.0)); }

  std::size_t size() const noexcept { return entries_.size(); }
  std::size_t genus() const noexcept { return entries_.size() / 2; }
  double operator[](std::size_t i) const { return entries_[i]; }
  const std::vector<double>& entries() const noexcept { return entries_; }

  TorusCoordinate operator+(const TorusCoordinate& o) const;
  TorusCoordinate scaled(long n) const;

  /// Largest circular distance |a_i - b_i| mod 1 over the entries.
  static double distance(const TorusCoordinate& a, const TorusCoordinate& b);

 private:
  std::vector<double> entries_;
};

double wrap_unit(double x);

/// Omega(lambda) xi^T: entry i is omega1 xi_{2i} + omega2 xi_{2i+1} (0-based).
template <class Real>
std::vector<Complex<Real>> period_combination(const PeriodPair<Real>& w, const TorusCoordinate& xi);

/// Fiberwise exponential map C^g x Sigma -> A_L. Lattice points
/// omega1 Z + omega2 Z map to [0:1:0]. Throws DomainError outside Sigma.
template <class Real>
ComplexProductPoint<Real> exp_map(std::span<const Complex<Real>> z, Complex<Real> lambda);

/// rho~_xi(tau), the product of the per-pair points on the fiber over Lambda(tau).
template <class Real>
ComplexProductPoint<Real> rho_tilde(const TorusCoordinate& xi, Complex<Real> tau);

struct XiOptions {
  int grid = 64;
  int max_newton = 100;
  int restarts = 6;
  /// Accepted chart residual after refinement.
  double residual_tol = 1e-9;
};

/// Torus coordinates of a point on E_lambda: the xi with exp(Omega xi^T) = P.
/// Starts from a coarse grid search and refines by damped Gauss-Newton in
/// the chart of P's largest coordinate. Throws NoConvergence.
template <class Real>
TorusCoordinate xi_map(const ComplexProductPoint<Real>& p, Complex<Real> lambda, const XiOptions& opts = {});

/// Monodromy around lambda = 0: xi + 2 (xi_2, 0, xi_4, 0, ...).
TorusCoordinate monodromy_shift_0(const TorusCoordinate& xi);
/// Monodromy around lambda = 1: xi - 4 (0, xi_1, 0, xi_3, ...).
TorusCoordinate monodromy_shift_1(const TorusCoordinate& xi);

}  // namespace legh::analytic
