#include "legh/projective.hpp"

#include <sstream>

#include "legh/error.hpp"

namespace legh {

RationalProjectivePoint RationalProjectivePoint::from_integers(std::span<const BigInt> coords) {
  if (coords.empty()) throw Error(ErrorCode::AllZero, "empty coordinate list");
  BigInt g = 0;
  for (const auto& c : coords) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (g == 0) throw Error(ErrorCode::AllZero, "every projective coordinate is zero");

  std::vector<BigInt> out(coords.begin(), coords.end());
  for (auto& c : out) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  for (const auto& c : out) {
    if (c == 0) continue;
    if (c < 0) {
      for (auto& d : out) d = -d;
    }
    break;
  }
  return RationalProjectivePoint(std::move(out));
}

RationalProjectivePoint RationalProjectivePoint::from_integers(std::initializer_list<long> coords) {
  std::vector<BigInt> v;
  v.reserve(coords.size());
  for (long c : coords) v.emplace_back(c);
  return from_integers(v);
}

RationalProjectivePoint RationalProjectivePoint::from_rationals(std::span<const BigRational> coords) {
  BigInt common = 1;
  for (const auto& c : coords) {
    mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), c.get_den_mpz_t());
  }
  std::vector<BigInt> ints;
  ints.reserve(coords.size());
  for (const auto& c : coords) {
    BigInt v = c.get_num() * (common / c.get_den());
    ints.push_back(std::move(v));
  }
  return from_integers(ints);
}

BigInt RationalProjectivePoint::max_abs() const {
  BigInt m = 0;
  for (const auto& c : coords_) {
    if (cmpabs(c, m) > 0) m = abs(c);
  }
  return m;
}

std::string RationalProjectivePoint::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) os << ':';
    os << coords_[i].get_str();
  }
  os << ']';
  return os.str();
}

RationalProjectivePoint normalize_projective(std::span<const BigRational> raw_coords) {
  return RationalProjectivePoint::from_rationals(raw_coords);
}

}  // namespace legh
