#pragma once

#include <cstdint>

#include "legh/legendre.hpp"
#include "legh/projective.hpp"

namespace legh {

/// A Weil height over Q: log of a positive integer kept exactly, so sums of
/// heights compare exactly and the logarithm is taken only in value().
class HeightValue {
 public:
  HeightValue() : argument_(1) {}
  explicit HeightValue(BigInt argument);

  /// The integer A with height = log A.
  const BigInt& argument() const noexcept { return argument_; }
  double value() const { return log_abs(argument_); }

  HeightValue& operator+=(const HeightValue& o) {
    argument_ *= o.argument_;
    return *this;
  }
  friend HeightValue operator+(HeightValue a, const HeightValue& b) { return a += b; }
  friend bool operator==(const HeightValue& a, const HeightValue& b) { return a.argument_ == b.argument_; }

 private:
  BigInt argument_;
};

/// log max_i |c_i| over the canonical coprime representative.
HeightValue weil_height(const RationalProjectivePoint& p);

/// h([lambda : 1]).
HeightValue lambda_height(const BigRational& lambda);

/// h(P_1) + ... + h(P_g) + h(lambda).
HeightValue total_height(const ProductFiberPoint& p);

/// Image of P under (P^2)^g x P^1 -> P^n, n = 2*3^g - 1: all products
/// c_1[i_1] * ... * c_g[i_g] * l[j] with the lambda coordinate varying fastest.
RationalProjectivePoint segre_image(const ProductFiberPoint& p);
HeightValue segre_height(const ProductFiberPoint& p);

struct NeronTateOptions {
  double tolerance = 1e-8;
  /// Largest integer (in bits) the iteration may carry before giving up.
  std::uint64_t bit_budget = std::uint64_t{1} << 20;
  int max_depth = 64;
};

struct NTEstimate {
  double value = 0;
  int depth = 0;
  double error_bound = 0;
};

/// Explicit size bounds for one step of the x-coordinate doubling map
/// [X:Z] -> [F:G] with F = (bX^2 - aZ^2)^2, G = 4bXZ(X - Z)(bX - aZ),
/// lambda = a/b. For every primitive [X:Z],
///   -lower <= h([F:G]) - 4 h([X:Z]) <= upper,
/// and gcd(F(X,Z), G(X,Z)) divides gcd_modulus.
struct DoublingBounds {
  BigInt a, b;
  double upper = 0;
  double lower = 0;
  BigInt gcd_modulus;

  double defect() const { return upper > lower ? upper : lower; }
  /// Certified |h_hat - h_N / (2 * 4^N)| after N doublings.
  double tail_bound(int depth) const;
};

DoublingBounds doubling_bounds(const BigRational& lambda);

/// Primitive representative of x(P) in P^1; [1:0] for the identity.
RationalProjectivePoint x_line_point(const LegendreFiberPoint& p);

/// h(x(2^N P)) / (2 * 4^N) by exact doubling of x(P). Throws NonConvergence
/// once a coordinate exceeds `bit_budget` bits.
double tate_partial_exact(const LegendreFiberPoint& p, int depth, std::uint64_t bit_budget = std::uint64_t{1} << 20);

/// The same quantity through the telescoped decomposition
///   h_{k+1} = 4 h_k + arch_k - log gcd_k,
/// with arch_k from a floating normalized copy of x(2^k P) and gcd_k from an
/// exact copy of x(2^k P) reduced modulo a power of gcd_modulus.
double tate_partial_split(const LegendreFiberPoint& p, int depth);

/// Neron-Tate height via Tate's limit, stopped once the certified tail bound
/// drops below the tolerance. Uses the telescoped iteration, whose carried
/// integers stay bounded by a fixed power of gcd_modulus.
NTEstimate neron_tate(const LegendreFiberPoint& p, const NeronTateOptions& opts = {});

/// Same limit by plain exact doubling; coordinate size quadruples per step,
/// so this runs out of bit budget at modest depth. Reference route.
NTEstimate neron_tate_exact(const LegendreFiberPoint& p, const NeronTateOptions& opts = {});

/// Sum of the componentwise Neron-Tate heights.
NTEstimate neron_tate_product(const ProductFiberPoint& p, const NeronTateOptions& opts = {});

/// |h_total(P) - h_hat(P)| / max{1, h(lambda)}.
double silverman_tate_ratio(const ProductFiberPoint& p, const NeronTateOptions& opts = {});

/// faltings_h + log(N)/2 - sum_{p | N} (p^e - 1) / ((p^2 - 1) p^(e-1)) log p - c.
double szpiro_ullmo_bound(std::uint64_t n, double faltings_h, double c);

}  // namespace legh
