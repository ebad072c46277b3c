#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "legh/rational.hpp"

namespace legh {

/// A point of P^n(Q) stored as its canonical integer representative:
/// coordinates coprime, not all zero, first nonzero coordinate positive.
/// Two points are equal iff their representatives are equal.
class RationalProjectivePoint {
 public:
  /// Canonicalizes; throws AllZero if every coordinate vanishes.
  static RationalProjectivePoint from_rationals(std::span<const BigRational> coords);
  static RationalProjectivePoint from_integers(std::span<const BigInt> coords);
  static RationalProjectivePoint from_integers(std::initializer_list<long> coords);

  std::size_t size() const noexcept { return coords_.size(); }
  std::size_t dimension() const noexcept { return coords_.size() - 1; }
  const BigInt& operator[](std::size_t i) const { return coords_[i]; }
  const std::vector<BigInt>& coords() const noexcept { return coords_; }

  /// max_i |coord_i| of the canonical representative.
  BigInt max_abs() const;

  std::string to_string() const;

  friend bool operator==(const RationalProjectivePoint&, const RationalProjectivePoint&) = default;

 private:
  explicit RationalProjectivePoint(std::vector<BigInt> coords) : coords_(std::move(coords)) {}
  std::vector<BigInt> coords_;
};

RationalProjectivePoint normalize_projective(std::span<const BigRational> raw_coords);

}  // namespace legh
