#pragma once

#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "legh/legendre.hpp"

namespace legh::testing {

inline BigRational x2_lambda(long k) { return BigRational(2 - 2 * k * k); }

/// ([2 : 2k : 1], 2 - 2k^2), a point of infinite order.
inline LegendreFiberPoint x2_point(long k) { return LegendreFiberPoint::affine(2, 2 * k, x2_lambda(k)); }

inline std::vector<LegendreFiberPoint> two_torsion(const BigRational& lambda) {
  return {LegendreFiberPoint::identity(lambda), LegendreFiberPoint::affine(0, 0, lambda),
          LegendreFiberPoint::affine(1, 0, lambda), LegendreFiberPoint::affine(lambda, 0, lambda)};
}

/// [m](2, 2k) + T on E_{2 - 2k^2} with m in [-m_max, m_max] and T 2-torsion.
inline LegendreFiberPoint random_point(std::mt19937_64& rng, long k, long m_max = 5) {
  std::uniform_int_distribution<long> m(-m_max, m_max);
  std::uniform_int_distribution<int> t(0, 3);
  const auto base = x2_point(k);
  return add(mul_n(base, m(rng)), two_torsion(base.lambda())[static_cast<std::size_t>(t(rng))]);
}

inline ProductFiberPoint random_product_point(std::mt19937_64& rng, std::size_t g, long k, long m_max = 5) {
  std::vector<LegendreFiberPoint> comps;
  for (std::size_t i = 0; i < g; ++i) comps.push_back(random_point(rng, k, m_max));
  return ProductFiberPoint(std::move(comps));
}

/// Non-comment lines of a fixture file, split on whitespace.
inline std::vector<std::vector<std::string>> read_fixture(const std::string& name) {
  std::ifstream in(std::string(LEGH_FIXTURE_DIR) + "/" + name);
  std::vector<std::vector<std::string>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line.front() == '#') continue;
    std::istringstream is(line);
    std::vector<std::string> row;
    for (std::string w; is >> w;) row.push_back(w);
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace legh::testing
