#include "legh/torsion.hpp"

#include <algorithm>
#include <cmath>

#include "legh/error.hpp"
#include "legh/family.hpp"

namespace legh {

namespace {

// x - floor(x), in [0, 1).
BigRational frac(const BigRational& x) {
  BigInt f;
  mpz_fdiv_q(f.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  BigRational r = x - BigRational(f);
  r.canonicalize();
  return r;
}

BigInt floor_of(const BigRational& x) {
  BigInt f;
  mpz_fdiv_q(f.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return f;
}

BigInt ceil_of(const BigRational& x) {
  BigInt c;
  mpz_cdiv_q(c.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return c;
}

// Circular distance on R/Z.
BigRational circle_distance(const BigRational& a, const BigRational& b) {
  const BigRational d = frac(a - b);
  const BigRational e = BigRational(1) - d;
  return d < e ? d : e;
}

void check_box_args(const TorusBox& box, std::span<const BigRational> xi0, std::uint64_t n) {
  if (n == 0) throw Error(ErrorCode::InvalidInput, "N must be at least 1");
  if (xi0.size() != box.size()) throw Error(ErrorCode::ArityMismatch, "xi0 and box dimensions differ");
}

// Signed representative of x mod 1 in [-1/2, 1/2).
double signed_wrap(double x) { return x - std::floor(x + 0.5); }

}  // namespace

TorusBox::TorusBox(std::vector<BigRational> center, BigRational half_width)
    : center_(std::move(center)), half_width_(std::move(half_width)) {
  half_width_.canonicalize();
  if (center_.empty() || center_.size() % 2) throw Error(ErrorCode::InvalidInput, "box center needs 2g coordinates");
  if (half_width_ <= 0 || half_width_ * 2 > 1) throw Error(ErrorCode::InvalidInput, "half width must lie in (0, 1/2]");
}

bool TorusBox::contains(std::span<const BigRational> xi) const {
  if (xi.size() != center_.size()) throw Error(ErrorCode::ArityMismatch, "point and box dimensions differ");
  if (is_whole_torus()) return true;
  for (std::size_t i = 0; i < xi.size(); ++i) {
    if (!(circle_distance(xi[i], center_[i]) < half_width_)) return false;
  }
  return true;
}

std::vector<std::vector<BigRational>> count_roots_in_box(const TorusBox& box, std::span<const BigRational> xi0,
                                                         std::uint64_t n) {
  check_box_args(box, xi0, n);
  const BigRational bn{BigInt(std::to_string(n))};
  std::vector<std::vector<BigRational>> per_coord(box.size());
  for (std::size_t i = 0; i < box.size(); ++i) {
    for (std::uint64_t k = 0; k < n; ++k) {
      BigRational c = frac((xi0[i] + BigRational(BigInt(std::to_string(k)))) / bn);
      if (box.is_whole_torus() || circle_distance(c, box.center()[i]) < box.half_width()) {
        per_coord[i].push_back(std::move(c));
      }
    }
    std::sort(per_coord[i].begin(), per_coord[i].end());
  }
  std::vector<std::vector<BigRational>> out;
  for (const auto& pc : per_coord) {
    if (pc.empty()) return out;
  }
  std::vector<std::size_t> idx(box.size(), 0);
  while (true) {
    std::vector<BigRational> xi(box.size());
    for (std::size_t i = 0; i < box.size(); ++i) xi[i] = per_coord[i][idx[i]];
    out.push_back(std::move(xi));
    std::size_t j = box.size();
    while (j > 0) {
      --j;
      if (++idx[j] < per_coord[j].size()) break;
      idx[j] = 0;
      if (j == 0) return out;
    }
  }
}

BigInt count_roots_closed_form(const TorusBox& box, std::span<const BigRational> xi0, std::uint64_t n) {
  check_box_args(box, xi0, n);
  const BigInt bn(std::to_string(n));
  BigInt total = 1;
  for (std::size_t i = 0; i < box.size(); ++i) {
    if (box.is_whole_torus()) {
      total *= bn;
      continue;
    }
    // Integers j in the open interval (N(c - e) - xi0, N(c + e) - xi0).
    const BigRational lo = BigRational(bn) * (box.center()[i] - box.half_width()) - xi0[i];
    const BigRational hi = BigRational(bn) * (box.center()[i] + box.half_width()) - xi0[i];
    total *= ceil_of(hi) - floor_of(lo) - 1;
  }
  return total;
}

std::vector<TorsionPoint> fiber_torsion_points(std::complex<double> lambda, std::uint64_t order) {
  using analytic::ComplexFiberPoint;
  if (order == 0) throw Error(ErrorCode::InvalidInput, "torsion order must be at least 1");
  if (!analytic::in_sigma(lambda)) throw Error(ErrorCode::DomainError, "lambda outside Sigma");
  const auto w = analytic::periods(lambda);
  const double t = static_cast<double>(order);
  std::vector<TorsionPoint> out;
  out.reserve(order * order);
  for (std::uint64_t a = 0; a < order; ++a) {
    for (std::uint64_t b = 0; b < order; ++b) {
      const std::array<std::complex<double>, 1> z{w.omega1 * (static_cast<double>(a) / t) +
                                                  w.omega2 * (static_cast<double>(b) / t)};
      const auto p = analytic::exp_map<double>(z, lambda).front();
      if (!p.is_identity() && p.curve_residual() > 1e-7) {
        throw Error(ErrorCode::NonConvergence, "torsion point off the curve");
      }
      auto q = p;
      for (std::uint64_t k = 1; k < order; ++k) q = analytic::add(q, p);
      if (!q.is_identity(1e-6)) throw Error(ErrorCode::NonConvergence, "point fails the torsion check");
      out.push_back({a, b, p});
    }
  }
  return out;
}

double kronecker_orbit_gap(std::span<const double> xi_even, std::uint64_t k_max, int grid) {
  if (xi_even.empty()) throw Error(ErrorCode::InvalidInput, "need at least one coordinate");
  if (k_max == 0) throw Error(ErrorCode::InvalidInput, "K must be at least 1");
  const std::size_t g = xi_even.size();
  std::vector<std::vector<double>> orbit(k_max, std::vector<double>(g));
  for (std::uint64_t k = 1; k <= k_max; ++k) {
    for (std::size_t i = 0; i < g; ++i) {
      orbit[k - 1][i] = analytic::wrap_unit(std::fmod(2.0 * static_cast<double>(k) * xi_even[i], 1.0));
    }
  }
  if (g == 1) {
    std::vector<double> pts(k_max);
    for (std::uint64_t k = 0; k < k_max; ++k) pts[k] = orbit[k][0];
    std::sort(pts.begin(), pts.end());
    double gap = pts.front() + 1.0 - pts.back();
    for (std::size_t k = 1; k < pts.size(); ++k) gap = std::max(gap, pts[k] - pts[k - 1]);
    return gap / 2;
  }
  if (grid < 1) throw Error(ErrorCode::InvalidInput, "grid must be positive");
  std::vector<std::size_t> idx(g, 0);
  double radius = 0;
  while (true) {
    double nearest = 1.0;
    for (const auto& o : orbit) {
      double d = 0;
      for (std::size_t i = 0; i < g; ++i) {
        const double x = static_cast<double>(idx[i]) / grid;
        d = std::max(d, std::abs(signed_wrap(x - o[i])));
      }
      nearest = std::min(nearest, d);
    }
    radius = std::max(radius, nearest);
    std::size_t j = g;
    while (j > 0) {
      --j;
      if (++idx[j] < static_cast<std::size_t>(grid)) break;
      idx[j] = 0;
      if (j == 0) return radius;
    }
  }
}

namespace {

struct SectionSample {
  bool valid = false;
  double t = 0;
  std::complex<double> lambda;
  analytic::TorusCoordinate xi;
  std::array<double, 2> residue{};  // signed T xi mod 1
};

SectionSample sample_section(const FamilySpec& family, std::uint64_t order, double t) {
  SectionSample s;
  s.t = t;
  const auto lam = family.complex_lambda_at(t);
  if (!lam || !analytic::in_sigma(*lam)) return s;
  const auto p = family.complex_point_at(t);
  if (!p) return s;
  try {
    s.xi = analytic::xi_map(*p, *lam);
  } catch (const Error&) {
    return s;
  }
  s.lambda = *lam;
  for (std::size_t i = 0; i < 2; ++i) s.residue[i] = signed_wrap(static_cast<double>(order) * s.xi[i]);
  s.valid = true;
  return s;
}

double residual_of(const SectionSample& s) { return std::max(std::abs(s.residue[0]), std::abs(s.residue[1])); }

bool member_of_torsion(const SectionSample& s, const FamilySpec& family, std::uint64_t order) {
  const auto p = family.complex_point_at(s.t);
  if (!p) return false;
  const auto pts = fiber_torsion_points(s.lambda, order);
  for (const auto& tp : pts) {
    if (p->front().is_identity() && tp.point.is_identity()) return true;
    if (!tp.point.is_identity() && analytic::chart_distance(tp.point, p->front()) < 1e-6) return true;
  }
  return false;
}

}  // namespace

std::vector<TorsionCandidate> torsion_on_section(const FamilySpec& family, std::uint64_t order,
                                                 const SectionSearchOptions& opts) {
  if (family.genus() != 1) throw Error(ErrorCode::InvalidInput, "section search needs a g = 1 family");
  if (order == 0) throw Error(ErrorCode::InvalidInput, "torsion order must be at least 1");
  if (opts.grid < 2 || !(opts.t_max > opts.t_min)) throw Error(ErrorCode::InvalidInput, "bad parameter window");

  std::vector<SectionSample> samples;
  for (int j = 0; j <= opts.grid; ++j) {
    const double t = opts.t_min + (opts.t_max - opts.t_min) * j / opts.grid;
    auto s = sample_section(family, order, t);
    if (s.valid) samples.push_back(std::move(s));
  }
  auto to_candidate = [](const SectionSample& s) { return TorsionCandidate{s.t, s.lambda, s.xi, residual_of(s)}; };

  std::vector<TorsionCandidate> out;
  if (samples.empty()) return out;
  if (std::all_of(samples.begin(), samples.end(), [&](const auto& s) { return residual_of(s) <= opts.accept_tol; })) {
    for (const auto& s : samples) out.push_back(to_candidate(s));
    return out;
  }

  for (std::size_t j = 0; j + 1 < samples.size(); ++j) {
    for (std::size_t c = 0; c < 2; ++c) {
      SectionSample a = samples[j], b = samples[j + 1];
      const double ra = a.residue[c], rb = b.residue[c];
      // A root of the residue, not its jump across +-1/2.
      if (!(ra == 0 || (ra < 0) != (rb < 0)) || std::abs(ra) > 0.25 || std::abs(rb) > 0.25) continue;
      while (b.t - a.t > opts.bisection_tol) {
        auto m = sample_section(family, order, 0.5 * (a.t + b.t));
        if (!m.valid) break;
        if ((m.residue[c] < 0) == (a.residue[c] < 0)) {
          a = std::move(m);
        } else {
          b = std::move(m);
        }
      }
      const SectionSample& best = residual_of(a) <= residual_of(b) ? a : b;
      if (residual_of(best) > opts.accept_tol) continue;
      if (!member_of_torsion(best, family, order)) continue;
      const bool dup = std::any_of(out.begin(), out.end(), [&](const auto& o) {
        return std::abs(o.t - best.t) < 100 * opts.bisection_tol;
      });
      if (!dup) out.push_back(to_candidate(best));
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.t < y.t; });
  return out;
}

}  // namespace legh
