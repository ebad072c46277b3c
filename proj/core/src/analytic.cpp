#include "legh/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <utility>

#include "legh/error.hpp"

namespace legh::analytic {

namespace {

template <class Real>
constexpr Real kPi = std::numbers::pi_v<Real>;

template <class Real>
constexpr Real eps() {
  return std::numeric_limits<Real>::epsilon();
}

template <class Real>
Complex<Real> I() {
  return Complex<Real>(0, 1);
}

template <class Real>
void require_upper_half_plane(Complex<Real> tau) {
  if (!(tau.imag() > 0)) throw Error(ErrorCode::DomainError, "tau must lie in the upper half plane");
}

// Reduces z modulo Z + tau Z into the parallelogram centred at 0.
template <class Real>
Complex<Real> reduce_mod_lattice(Complex<Real> z, Complex<Real> tau) {
  const Real n2 = std::round(z.imag() / tau.imag());
  z -= n2 * tau;
  const Real n1 = std::round(z.real());
  z -= n1;
  return z;
}

struct Modular {
  long long a = 1, b = 0, c = 0, d = 1;
};

// gamma with gamma(tau) in the standard fundamental domain.
template <class Real>
Modular reduce_tau(Complex<Real> tau) {
  Modular m;
  Complex<Real> t = tau;
  for (int it = 0; it < 10000; ++it) {
    const long long n = std::llround(t.real());
    t -= static_cast<Real>(n);
    m = {m.a - n * m.c, m.b - n * m.d, m.c, m.d};
    if (std::norm(t) < Real(1) - 16 * eps<Real>()) {
      t = Real(-1) / t;
      m = {-m.c, -m.d, m.a, m.b};
    } else {
      break;
    }
  }
  return m;
}

template <class Real>
Complex<Real> apply(const Modular& m, Complex<Real> tau) {
  return (static_cast<Real>(m.a) * tau + static_cast<Real>(m.b)) /
         (static_cast<Real>(m.c) * tau + static_cast<Real>(m.d));
}

// Squared theta constants for Im tau >= sqrt(3)/2 (nome q = e^{pi i tau}).
template <class Real>
std::array<Complex<Real>, 3> theta_squares_direct(Complex<Real> tau) {
  const Complex<Real> q = std::exp(I<Real>() * kPi<Real> * tau);
  Complex<Real> t3 = 1, t4 = 1, t2 = 0;
  for (int n = 1;; ++n) {
    const Complex<Real> qn2 = std::pow(q, static_cast<Real>(n * n));
    t3 += Real(2) * qn2;
    t4 += (n % 2 ? Real(-2) : Real(2)) * qn2;
    if (std::abs(qn2) < eps<Real>() / 8) break;
  }
  for (int n = 0;; ++n) {
    const Complex<Real> term = std::pow(q, static_cast<Real>(n * (n + 1)));
    t2 += term;
    if (std::abs(term) < eps<Real>() / 8) break;
  }
  t2 *= Real(2) * std::exp(I<Real>() * kPi<Real> * tau / Real(4));
  return {t2 * t2, t3 * t3, t4 * t4};
}

// Weierstrass p and p' for Im tau >= 0.5 and z already reduced.
template <class Real>
WeierstrassValues<Real> qseries_reduced(Complex<Real> z, Complex<Real> tau) {
  const Real pi = kPi<Real>;
  if (std::abs(z) < 16 * eps<Real>()) throw Error(ErrorCode::PoleError, "z is a lattice point");
  const Complex<Real> s = std::sin(pi * z);
  const Complex<Real> c = std::cos(pi * z);
  Complex<Real> p = pi * pi / (s * s) - pi * pi / Real(3);
  Complex<Real> dp = Real(-2) * pi * pi * pi * c / (s * s * s);

  const Complex<Real> two_pi_i = Real(2) * pi * I<Real>();
  const Complex<Real> q = std::exp(two_pi_i * tau);
  const Complex<Real> u = std::exp(two_pi_i * z);
  const Complex<Real> ui = Real(1) / u;
  const Real spread = std::max(std::abs(u), std::abs(ui));
  Complex<Real> sp = 0, sdp = 0;
  Complex<Real> qn = q;
  for (int n = 1; n < 100000; ++n) {
    const Complex<Real> a = qn * u;
    const Complex<Real> b = qn * ui;
    const Complex<Real> one_a = Real(1) - a, one_b = Real(1) - b, one_q = Real(1) - qn;
    sp += a / (one_a * one_a) + b / (one_b * one_b) - Real(2) * qn / (one_q * one_q);
    sdp += a * (Real(1) + a) / (one_a * one_a * one_a) - b * (Real(1) + b) / (one_b * one_b * one_b);
    if (std::abs(qn) * spread < eps<Real>() / 16) break;
    qn *= q;
  }
  p += two_pi_i * two_pi_i * sp;
  dp += two_pi_i * two_pi_i * two_pi_i * sdp;
  return {p, dp};
}

// Per-fiber constants for tau: e_k, e2 - e1, 2 r^3, g2 and Lambda.
template <class Real>
struct Frame {
  Complex<Real> tau;
  std::array<Complex<Real>, 3> e;
  Complex<Real> scale;   // e2 - e1
  Complex<Real> two_r3;  // 2 r(tau)^3
  Complex<Real> g2;
  Complex<Real> lambda;

  explicit Frame(Complex<Real> t) : tau(t), e(e_values(t)) {
    scale = e[1] - e[0];
    const Complex<Real> r = r_of_tau(t);
    two_r3 = Real(2) * r * r * r;
    g2 = Real(2) * (e[0] * e[0] + e[1] * e[1] + e[2] * e[2]);
    lambda = (e[2] - e[0]) / scale;
  }

  Real lattice_tol() const { return Real(1e4) * eps<Real>() * (Real(1) + std::abs(tau)); }

  // Point of E_{lambda_out} for u in C / (Z + tau Z).
  ComplexFiberPoint<Real> point_at(Complex<Real> u, Complex<Real> lambda_out) const {
    const Complex<Real> ur = reduce_mod_lattice(u, tau);
    if (std::abs(ur) < lattice_tol()) return ComplexFiberPoint<Real>::identity(lambda_out);
    const auto w = weierstrass(ur, tau);
    return ComplexFiberPoint<Real>::affine((w.p - e[0]) / scale, w.dp / two_r3, lambda_out);
  }
};

}  // namespace

template <class Real>
bool in_sigma(Complex<Real> lambda, double margin) {
  const Real m = static_cast<Real>(margin);
  return std::abs(lambda) < Real(1) - m && std::abs(Real(1) - lambda) < Real(1) - m;
}

template <class Real>
Complex<Real> hyper_F(Complex<Real> lambda) {
  const Real radius = std::abs(lambda);
  if (!(radius < Real(1) - static_cast<Real>(kSigmaMargin))) {
    throw Error(ErrorCode::DomainError, "hypergeometric series needs |lambda| < 1");
  }
  Complex<Real> sum = 0;
  Complex<Real> power = 1;
  Real coeff = 1;
  Real radius_pow = 1;
  for (long n = 0;; ++n) {
    sum += coeff * power;
    const Real ratio = (Real(2 * n + 1) / Real(2 * n + 2));
    coeff *= ratio * ratio;
    power *= lambda;
    radius_pow *= radius;
    // Coefficients decrease, so the tail is below coeff_{n+1} |l|^{n+1} / (1 - |l|).
    const Real tail = coeff * radius_pow / (Real(1) - radius);
    if (tail <= eps<Real>() * std::abs(sum) / 4) break;
  }
  return sum;
}

template <class Real>
PeriodPair<Real> periods(Complex<Real> lambda) {
  if (!in_sigma(lambda)) throw Error(ErrorCode::DomainError, "lambda outside Sigma");
  const Real pi = kPi<Real>;
  return {pi * hyper_F(lambda), pi * I<Real>() * hyper_F(Complex<Real>(1) - lambda)};
}

template <class Real>
Complex<Real> tau_of_lambda(Complex<Real> lambda) {
  const auto w = periods(lambda);
  return w.omega2 / w.omega1;
}

template <class Real>
std::array<Complex<Real>, 3> theta_squares(Complex<Real> tau) {
  require_upper_half_plane(tau);
  struct Step {
    long long shift;
    Complex<Real> inverted_from;  // s' with the next tau = -1/s'
    bool inverted;
  };
  std::vector<Step> steps;
  Complex<Real> t = tau;
  for (int it = 0; it < 10000; ++it) {
    const long long n = std::llround(t.real());
    t -= static_cast<Real>(n);
    if (std::norm(t) < Real(1) - 16 * eps<Real>()) {
      steps.push_back({n, t, true});
      t = Real(-1) / t;
    } else {
      steps.push_back({n, t, false});
      break;
    }
  }
  auto v = theta_squares_direct(t);
  const Complex<Real> unit_i = I<Real>();
  for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
    if (it->inverted) {
      // theta(-1/w) from theta(w), with w = -1/s'.
      const Complex<Real> w = Real(-1) / it->inverted_from;
      const Complex<Real> f = -unit_i * w;
      v = {f * v[2], f * v[1], f * v[0]};
    }
    const long long n = it->shift;
    const int k = static_cast<int>(((n % 4) + 4) % 4);
    Complex<Real> rot = 1;
    for (int j = 0; j < k; ++j) rot *= unit_i;
    v[0] *= rot;
    if (n % 2) std::swap(v[1], v[2]);
  }
  return v;
}

template <class Real>
WeierstrassValues<Real> weierstrass_qseries(Complex<Real> z, Complex<Real> tau) {
  if (!(tau.imag() >= Real(0.5))) throw Error(ErrorCode::LowImaginaryPart, "q-series kernel needs Im tau >= 0.5");
  return qseries_reduced(reduce_mod_lattice(z, tau), tau);
}

template <class Real>
WeierstrassValues<Real> weierstrass(Complex<Real> z, Complex<Real> tau) {
  require_upper_half_plane(tau);
  const Modular m = reduce_tau(tau);
  const Complex<Real> factor = static_cast<Real>(m.c) * tau + static_cast<Real>(m.d);
  const Complex<Real> tau_r = apply(m, tau);
  const auto w = qseries_reduced(reduce_mod_lattice(z / factor, tau_r), tau_r);
  const Complex<Real> f2 = factor * factor;
  return {w.p / f2, w.dp / (f2 * factor)};
}

template <class Real>
Complex<Real> weierstrass_p(Complex<Real> z, Complex<Real> tau) {
  return weierstrass(z, tau).p;
}

template <class Real>
Complex<Real> weierstrass_p_prime(Complex<Real> z, Complex<Real> tau) {
  return weierstrass(z, tau).dp;
}

template <class Real>
std::array<Complex<Real>, 3> e_values(Complex<Real> tau) {
  const Real half = Real(0.5);
  return {weierstrass_p(tau * half, tau), weierstrass_p(Complex<Real>(half), tau),
          weierstrass_p((Real(1) + tau) * half, tau)};
}

template <class Real>
Complex<Real> lambda_of_tau(Complex<Real> tau) {
  const auto e = e_values(tau);
  return (e[2] - e[0]) / (e[1] - e[0]);
}

template <class Real>
Complex<Real> r_of_tau(Complex<Real> tau) {
  return kPi<Real> * theta_squares(tau)[1];
}

template <class Real>
Complex<Real> r_product(Complex<Real> tau) {
  if (!(tau.imag() >= Real(0.5))) throw Error(ErrorCode::LowImaginaryPart, "product formula needs Im tau >= 0.5");
  const Complex<Real> q = std::exp(I<Real>() * kPi<Real> * tau);
  Complex<Real> prod = 1;
  Complex<Real> q_odd = q;  // q^{2n-1}
  const Complex<Real> q2 = q * q;
  Complex<Real> q_even = q2;  // q^{2n}
  for (int n = 1; n < 100000; ++n) {
    const Complex<Real> a = Real(1) - q_even;
    const Complex<Real> b = Real(1) + q_odd;
    const Complex<Real> b2 = b * b;
    prod *= a * a * b2 * b2;
    if (std::abs(q_odd) < eps<Real>() / 16) break;
    q_odd *= q2;
    q_even *= q2;
  }
  return kPi<Real> * prod;
}

template <class Real>
Complex<Real> j_invariant(Complex<Real> lambda) {
  const Complex<Real> t = lambda * lambda - lambda + Real(1);
  const Complex<Real> d = lambda * (lambda - Real(1));
  return Real(256) * t * t * t / (d * d);
}

// ---------------------------------------------------------------------------
// Complex fiber points

template <class Real>
bool ComplexFiberPoint<Real>::is_identity(Real tol) const {
  const Real m = std::max({std::abs(coords[0]), std::abs(coords[1]), std::abs(coords[2])});
  return std::abs(coords[2]) <= tol * m;
}

namespace {

template <class Real>
std::size_t largest_index(const std::array<Complex<Real>, 3>& c) {
  std::size_t i = 0;
  for (std::size_t j = 1; j < 3; ++j) {
    if (std::abs(c[j]) > std::abs(c[i])) i = j;
  }
  return i;
}

}  // namespace

template <class Real>
Real ComplexFiberPoint<Real>::curve_residual() const {
  const auto i = largest_index(coords);
  const Complex<Real> x = coords[0] / coords[i], y = coords[1] / coords[i], z = coords[2] / coords[i];
  return std::abs(z * y * y - x * (x - z) * (x - lambda * z));
}

template <class Real>
Real chart_distance(const ComplexFiberPoint<Real>& p, const ComplexFiberPoint<Real>& q) {
  const auto i = largest_index(p.coords);
  if (std::abs(q.coords[i]) == Real(0)) return std::numeric_limits<Real>::infinity();
  Real d = 0;
  for (std::size_t j = 0; j < 3; ++j) {
    d = std::max(d, std::abs(p.coords[j] / p.coords[i] - q.coords[j] / q.coords[i]));
  }
  return d;
}

template <class Real>
ComplexFiberPoint<Real> add(const ComplexFiberPoint<Real>& p, const ComplexFiberPoint<Real>& q, Real tol) {
  if (p.is_identity(tol)) return q;
  if (q.is_identity(tol)) return p;
  const Complex<Real> lam = p.lambda;
  const Complex<Real> a2 = -(Real(1) + lam);
  const Complex<Real> a4 = lam;
  const Complex<Real> x1 = p.coords[0] / p.coords[2], y1 = p.coords[1] / p.coords[2];
  const Complex<Real> x2 = q.coords[0] / q.coords[2], y2 = q.coords[1] / q.coords[2];
  Complex<Real> m;
  if (std::abs(x1 - x2) <= tol * (Real(1) + std::abs(x1))) {
    if (std::abs(y1 + y2) <= tol * (Real(1) + std::abs(y1))) return ComplexFiberPoint<Real>::identity(lam);
    m = (Real(3) * x1 * x1 + Real(2) * a2 * x1 + a4) / (Real(2) * y1);
  } else {
    m = (y2 - y1) / (x2 - x1);
  }
  const Complex<Real> x3 = m * m - a2 - x1 - x2;
  const Complex<Real> y3 = -(y1 + m * (x3 - x1));
  return ComplexFiberPoint<Real>::affine(x3, y3, lam);
}

// ---------------------------------------------------------------------------
// Torus coordinates

double wrap_unit(double x) {
  double w = x - std::floor(x);
  if (w >= 1.0) w = 0.0;
  return w;
}

TorusCoordinate::TorusCoordinate(std::vector<double> entries) : entries_(std::move(entries)) {
  if (entries_.size() % 2) throw Error(ErrorCode::InvalidInput, "torus coordinates come in pairs");
  for (auto& e : entries_) e = wrap_unit(e);
}

TorusCoordinate TorusCoordinate::operator+(const TorusCoordinate& o) const {
  if (o.size() != size()) throw Error(ErrorCode::ArityMismatch, "torus coordinates of different length");
  std::vector<double> v(size());
  for (std::size_t i = 0; i < size(); ++i) v[i] = entries_[i] + o.entries_[i];
  return TorusCoordinate(std::move(v));
}

TorusCoordinate TorusCoordinate::scaled(long n) const {
  std::vector<double> v(size());
  for (std::size_t i = 0; i < size(); ++i) v[i] = static_cast<double>(n) * entries_[i];
  return TorusCoordinate(std::move(v));
}

double TorusCoordinate::distance(const TorusCoordinate& a, const TorusCoordinate& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::ArityMismatch, "torus coordinates of different length");
  double d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double w = wrap_unit(a[i] - b[i]);
    d = std::max(d, std::min(w, 1.0 - w));
  }
  return d;
}

TorusCoordinate monodromy_shift_0(const TorusCoordinate& xi) {
  std::vector<double> v = xi.entries();
  for (std::size_t i = 0; i + 1 < v.size(); i += 2) v[i] += 2 * xi[i + 1];
  return TorusCoordinate(std::move(v));
}

TorusCoordinate monodromy_shift_1(const TorusCoordinate& xi) {
  std::vector<double> v = xi.entries();
  for (std::size_t i = 0; i + 1 < v.size(); i += 2) v[i + 1] -= 4 * xi[i];
  return TorusCoordinate(std::move(v));
}

template <class Real>
std::vector<Complex<Real>> period_combination(const PeriodPair<Real>& w, const TorusCoordinate& xi) {
  std::vector<Complex<Real>> z;
  z.reserve(xi.genus());
  for (std::size_t i = 0; i < xi.genus(); ++i) {
    z.push_back(w.omega1 * static_cast<Real>(xi[2 * i]) + w.omega2 * static_cast<Real>(xi[2 * i + 1]));
  }
  return z;
}

// ---------------------------------------------------------------------------
// Exponential map and its inverse

template <class Real>
ComplexProductPoint<Real> exp_map(std::span<const Complex<Real>> z, Complex<Real> lambda) {
  const auto w = periods(lambda);
  const Frame<Real> frame(w.omega2 / w.omega1);
  ComplexProductPoint<Real> out;
  out.reserve(z.size());
  for (const auto& zi : z) out.push_back(frame.point_at(zi / w.omega1, lambda));
  return out;
}

template <class Real>
ComplexProductPoint<Real> rho_tilde(const TorusCoordinate& xi, Complex<Real> tau) {
  require_upper_half_plane(tau);
  const Frame<Real> frame(tau);
  ComplexProductPoint<Real> out;
  out.reserve(xi.genus());
  for (std::size_t i = 0; i < xi.genus(); ++i) {
    const Real x1 = static_cast<Real>(xi[2 * i]);
    const Real x2 = static_cast<Real>(xi[2 * i + 1]);
    if (x1 == 0 && x2 == 0) {
      out.push_back(ComplexFiberPoint<Real>::identity(frame.lambda));
    } else {
      out.push_back(frame.point_at(x1 + tau * x2, frame.lambda));
    }
  }
  return out;
}

namespace {

template <class Real>
struct ChartResidual {
  Complex<Real> r0, r1;  // residuals
  Complex<Real> j0, j1;  // derivatives in u
  Real norm() const { return std::sqrt(std::norm(r0) + std::norm(r1)); }
};

// Residual of the point at u against the target point, in the affine chart
// where the target's coordinate `chart` equals 1.
template <class Real>
ChartResidual<Real> chart_residual(const Frame<Real>& f, Complex<Real> u, std::size_t chart,
                                   const std::array<Complex<Real>, 2>& target) {
  const auto w = weierstrass(u, f.tau);
  const Complex<Real> x = (w.p - f.e[0]) / f.scale;
  const Complex<Real> y = w.dp / f.two_r3;
  const Complex<Real> xp = w.dp / f.scale;
  const Complex<Real> ypp = (Real(6) * w.p * w.p - f.g2 / Real(2)) / f.two_r3;
  Complex<Real> v0, v1, d0, d1;
  switch (chart) {
    case 2:
      v0 = x, v1 = y, d0 = xp, d1 = ypp;
      break;
    case 1:
      v0 = x / y, v1 = Real(1) / y;
      d0 = (xp * y - x * ypp) / (y * y);
      d1 = -ypp / (y * y);
      break;
    default:
      v0 = y / x, v1 = Real(1) / x;
      d0 = (ypp * x - y * xp) / (x * x);
      d1 = -xp / (x * x);
      break;
  }
  return {v0 - target[0], v1 - target[1], d0, d1};
}

template <class Real>
bool finite(const ChartResidual<Real>& r) {
  return std::isfinite(r.norm()) && std::isfinite(std::abs(r.j0)) && std::isfinite(std::abs(r.j1));
}

// Torus coordinates of one fiber point.
template <class Real>
std::array<double, 2> solve_fiber(const Frame<Real>& f, const ComplexFiberPoint<Real>& p, const XiOptions& opts) {
  if (p.is_identity(Real(1e-12))) return {0.0, 0.0};
  const auto chart = largest_index(p.coords);
  std::array<Complex<Real>, 2> target;
  {
    std::size_t k = 0;
    for (std::size_t j = 0; j < 3; ++j) {
      if (j != chart) target[k++] = p.coords[j] / p.coords[chart];
    }
    // Chart orderings used by chart_residual: z-chart (x, y), y-chart
    // (x/y, z/y), x-chart (y/x, z/x) -- exactly the remaining coordinates in order.
  }

  auto safe = [&](Complex<Real> u) -> std::pair<Real, ChartResidual<Real>> {
    try {
      auto r = chart_residual(f, u, chart, target);
      if (!finite(r)) return {std::numeric_limits<Real>::infinity(), r};
      return {r.norm(), r};
    } catch (const Error&) {
      return {std::numeric_limits<Real>::infinity(), {}};
    }
  };

  std::vector<std::pair<Real, Complex<Real>>> seeds;
  const int g = opts.grid;
  seeds.reserve(static_cast<std::size_t>(g * g));
  for (int i = 0; i < g; ++i) {
    for (int j = 0; j < g; ++j) {
      if (i == 0 && j == 0) continue;
      const Complex<Real> u = Real(i) / Real(g) + f.tau * (Real(j) / Real(g));
      seeds.emplace_back(safe(u).first, u);
    }
  }
  const auto take = std::min<std::size_t>(static_cast<std::size_t>(std::max(1, opts.restarts)), seeds.size());
  std::partial_sort(seeds.begin(), seeds.begin() + static_cast<std::ptrdiff_t>(take), seeds.end(),
                    [](const auto& a, const auto& b) { return a.first < b.first; });

  Real best_norm = std::numeric_limits<Real>::infinity();
  Complex<Real> best_u = seeds.front().second;
  for (std::size_t s = 0; s < take; ++s) {
    Complex<Real> u = seeds[s].second;
    auto [norm, res] = safe(u);
    for (int it = 0; it < opts.max_newton && std::isfinite(norm); ++it) {
      if (norm < 8 * eps<Real>()) break;
      const Real denom = std::norm(res.j0) + std::norm(res.j1);
      if (!(denom > 0)) break;
      const Complex<Real> delta = -(std::conj(res.j0) * res.r0 + std::conj(res.j1) * res.r1) / denom;
      Real step = 1;
      bool improved = false;
      for (int h = 0; h < 40; ++h) {
        const auto trial = safe(u + step * delta);
        if (trial.first < norm) {
          u += step * delta;
          norm = trial.first;
          res = trial.second;
          improved = true;
          break;
        }
        step /= 2;
      }
      if (!improved || std::abs(step * delta) < 4 * eps<Real>() * (Real(1) + std::abs(u))) break;
    }
    if (norm < best_norm) {
      best_norm = norm;
      best_u = u;
    }
    if (best_norm <= static_cast<Real>(opts.residual_tol)) break;
  }
  if (!(best_norm <= static_cast<Real>(opts.residual_tol))) {
    throw Error(ErrorCode::NoConvergence, "elliptic logarithm did not converge (residual " +
                                              std::to_string(static_cast<double>(best_norm)) + ")");
  }
  const Real x2 = best_u.imag() / f.tau.imag();
  const Real x1 = best_u.real() - x2 * f.tau.real();
  return {wrap_unit(static_cast<double>(x1)), wrap_unit(static_cast<double>(x2))};
}

}  // namespace

template <class Real>
TorusCoordinate xi_map(const ComplexProductPoint<Real>& p, Complex<Real> lambda, const XiOptions& opts) {
  if (!in_sigma(lambda)) throw Error(ErrorCode::DomainError, "lambda outside Sigma");
  const Frame<Real> frame(tau_of_lambda(lambda));
  std::vector<double> out;
  out.reserve(2 * p.size());
  for (const auto& c : p) {
    const auto xi = solve_fiber(frame, c, opts);
    out.push_back(xi[0]);
    out.push_back(xi[1]);
  }
  return TorusCoordinate(std::move(out));
}

#define LEGH_INSTANTIATE(Real)                                                                          \
  template bool in_sigma<Real>(Complex<Real>, double);                                                  \
  template Complex<Real> hyper_F<Real>(Complex<Real>);                                                  \
  template PeriodPair<Real> periods<Real>(Complex<Real>);                                               \
  template Complex<Real> tau_of_lambda<Real>(Complex<Real>);                                            \
  template std::array<Complex<Real>, 3> theta_squares<Real>(Complex<Real>);                             \
  template WeierstrassValues<Real> weierstrass_qseries<Real>(Complex<Real>, Complex<Real>);             \
  template WeierstrassValues<Real> weierstrass<Real>(Complex<Real>, Complex<Real>);                     \
  template Complex<Real> weierstrass_p<Real>(Complex<Real>, Complex<Real>);                             \
  template Complex<Real> weierstrass_p_prime<Real>(Complex<Real>, Complex<Real>);                       \
  template std::array<Complex<Real>, 3> e_values<Real>(Complex<Real>);                                  \
  template Complex<Real> lambda_of_tau<Real>(Complex<Real>);                                            \
  template Complex<Real> r_of_tau<Real>(Complex<Real>);                                                 \
  template Complex<Real> r_product<Real>(Complex<Real>);                                                \
  template Complex<Real> j_invariant<Real>(Complex<Real>);                                              \
  template struct ComplexFiberPoint<Real>;                                                              \
  template Real chart_distance<Real>(const ComplexFiberPoint<Real>&, const ComplexFiberPoint<Real>&);   \
  template ComplexFiberPoint<Real> add<Real>(const ComplexFiberPoint<Real>&, const ComplexFiberPoint<Real>&, Real); \
  template std::vector<Complex<Real>> period_combination<Real>(const PeriodPair<Real>&, const TorusCoordinate&); \
  template ComplexProductPoint<Real> exp_map<Real>(std::span<const Complex<Real>>, Complex<Real>);      \
  template ComplexProductPoint<Real> rho_tilde<Real>(const TorusCoordinate&, Complex<Real>);            \
  template TorusCoordinate xi_map<Real>(const ComplexProductPoint<Real>&, Complex<Real>, const XiOptions&);

LEGH_INSTANTIATE(double)
LEGH_INSTANTIATE(long double)

#undef LEGH_INSTANTIATE

}  // namespace legh::analytic
