// legh: command line front end for heights, periods, duplication polynomials,
// torsion and family experiments on the Legendre family.

#include <CLI11.hpp>

#include <cmath>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

#include "legh/analytic.hpp"
#include "legh/duppoly.hpp"
#include "legh/error.hpp"
#include "legh/experiments.hpp"
#include "legh/heights.hpp"
#include "legh/torsion.hpp"

namespace {

using namespace legh;
using Cd = std::complex<double>;

constexpr int kExitFailedCheck = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitNonConvergence = 3;

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep)) out.push_back(cur);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

std::vector<BigRational> rationals(const std::string& csv) {
  std::vector<BigRational> v;
  for (const auto& p : split(csv, ',')) v.push_back(parse_rational(p));
  return v;
}

std::string fmt(double v, int prec = 12) {
  std::ostringstream os;
  os << std::setprecision(prec) << v;
  return os.str();
}

std::string fmt(Cd z, int prec = 15) {
  std::ostringstream os;
  os << std::setprecision(prec) << z.real() << (z.imag() < 0 ? " - " : " + ") << std::abs(z.imag()) << "i";
  return os.str();
}

LegendreFiberPoint parse_point(const std::string& text, const BigRational& lambda) {
  const auto c = rationals(text);
  if (c.size() != 3) throw Error(ErrorCode::InvalidInput, "point needs three coordinates x,y,z");
  return LegendreFiberPoint(normalize_projective(c), lambda);
}

int cmd_weil(const std::vector<std::string>& coords) {
  std::vector<BigRational> c;
  for (const auto& s : coords) {
    for (auto& r : rationals(s)) c.push_back(std::move(r));
  }
  const auto p = RationalProjectivePoint::from_rationals(c);
  const auto h = weil_height(p);
  std::cout << "point  " << p.to_string() << "\n"
            << "height " << fmt(h.value(), 17) << " = log " << h.argument().get_str() << "\n";
  return 0;
}

int cmd_nt(const std::string& lambda_text, const std::string& point_text, double tol) {
  const BigRational lambda = parse_rational(lambda_text);
  const auto p = parse_point(point_text, lambda);
  NeronTateOptions opts;
  opts.tolerance = tol;
  const auto est = neron_tate(p, opts);
  const ProductFiberPoint pp({p});
  std::cout << "point        " << p.to_string() << "\n"
            << "nt_height    " << fmt(est.value, 15) << "\n"
            << "error_bound  " << fmt(est.error_bound, 3) << "\n"
            << "depth        " << est.depth << "\n"
            << "total_height " << fmt(total_height(pp).value(), 15) << "\n";
  return 0;
}

int cmd_periods(const std::string& lambda_text, double lambda_im) {
  const Cd lambda(to_double(parse_rational(lambda_text)), lambda_im);
  const auto w = analytic::periods(lambda);
  const Cd tau = w.omega2 / w.omega1;
  std::cout << "omega1 " << fmt(w.omega1) << "\n"
            << "omega2 " << fmt(w.omega2) << "\n"
            << "tau    " << fmt(tau) << "\n"
            << "Lambda(tau) - lambda  " << fmt(std::abs(analytic::lambda_of_tau(tau) - lambda), 3) << "\n";
  return 0;
}

int cmd_lambda_check(int grid) {
  if (grid < 1) throw Error(ErrorCode::InvalidInput, "grid must be positive");
  double worst = 0;
  int points = 0;
  for (int i = 0; i < grid; ++i) {
    const double x = (i + 0.5) / grid;
    const double half = 0.95 * std::min(std::sqrt(1 - x * x), std::sqrt(1 - (1 - x) * (1 - x)));
    for (int j = 0; j < grid; ++j) {
      const double y = grid == 1 ? 0.0 : half * (2.0 * j / (grid - 1) - 1.0);
      const Cd lambda(x, y);
      if (!analytic::in_sigma(lambda)) continue;
      worst = std::max(worst, std::abs(analytic::lambda_of_tau(analytic::tau_of_lambda(lambda)) - lambda));
      ++points;
    }
  }
  std::cout << "points " << points << "\nmax |Lambda(T(l)) - l| " << fmt(worst, 3) << "\n";
  return worst < 1e-10 ? 0 : kExitFailedCheck;
}

double product_chart_distance(const analytic::ComplexProductPoint<double>& a,
                              const analytic::ComplexProductPoint<double>& b) {
  double d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_identity() && b[i].is_identity()) continue;
    d = std::max(d, analytic::chart_distance(a[i], b[i]));
  }
  return d;
}

int cmd_monodromy_check(int samples, std::uint64_t seed, int genus) {
  if (samples < 1 || genus < 1) throw Error(ErrorCode::InvalidInput, "samples and genus must be positive");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  double worst0 = 0, worst1 = 0;
  for (int s = 0; s < samples; ++s) {
    std::vector<double> xi(2 * static_cast<std::size_t>(genus));
    for (auto& v : xi) v = unit(rng);
    const analytic::TorusCoordinate x(xi);
    const Cd tau(unit(rng) * 2 - 1, 0.7 + unit(rng));
    worst0 = std::max(worst0, product_chart_distance(analytic::rho_tilde(x, tau + 2.0),
                                                     analytic::rho_tilde(analytic::monodromy_shift_0(x), tau)));
    worst1 = std::max(worst1, product_chart_distance(analytic::rho_tilde(x, tau / (-4.0 * tau + 1.0)),
                                                     analytic::rho_tilde(analytic::monodromy_shift_1(x), tau)));
  }
  std::cout << "samples " << samples << "\n"
            << "loop around 0: max deviation " << fmt(worst0, 3) << "\n"
            << "loop around 1: max deviation " << fmt(worst1, 3) << "\n";
  return worst0 < 1e-8 && worst1 < 1e-8 ? 0 : kExitFailedCheck;
}

int cmd_duppoly(int level, bool emit, bool verify, int points) {
  if (level < 1 || level > 4) throw Error(ErrorCode::InvalidInput, "level must lie in 1..4");
  if (!emit && !verify) verify = true;
  if (emit) {
    if (level > 3) throw Error(ErrorCode::InvalidInput, "explicit term lists are available up to level 3");
    write_terms(std::cout, triple_at_level(level));
  }
  if (!verify) return 0;
  bool ok = true;
  const auto envelope = degree_envelope(level);
  for (const auto& r : envelope.back()) {
    std::cout << "envelope G_" << r.level << "," << r.index << ": degree in X0..X2 " << r.point_degree_min << ".."
              << r.point_degree_max << ", in X3 <= " << r.lambda_degree_max << ", total <= " << r.total_degree_max
              << (r.satisfies_bounds() ? "  ok" : "  VIOLATED") << "\n";
    ok = ok && r.satisfies_bounds();
  }
  std::optional<DuplicationTriple> triple;
  if (level <= 3) {
    triple = triple_at_level(level);
    for (const auto& r : degree_report(*triple)) {
      std::cout << "exact    G_" << r.level << "," << r.index << ": degree in X0..X2 " << r.point_degree_min
                << ".." << r.point_degree_max << ", in X3 " << r.lambda_degree_max << ", total "
                << r.total_degree_max << (r.satisfies_bounds() ? "  ok" : "  VIOLATED") << "\n";
      ok = ok && r.satisfies_bounds();
    }
  }
  const long n = 1L << level;
  int agree = 0;
  for (int k = 2; k < 2 + points; ++k) {
    const BigRational lambda(2 - 2 * k * k);
    const auto p = LegendreFiberPoint::affine(2, 2 * k, lambda);
    const auto expected = mul_n(p, n);
    bool same = dup_apply(p, level) == expected;
    if (triple) same = same && eval_triple(*triple, p) == expected;
    agree += same;
  }
  std::cout << "[2^" << level << "]P by duplication polynomials matches the group law on " << agree << "/" << points
            << " points\n";
  ok = ok && agree == points;
  return ok ? 0 : kExitFailedCheck;
}

int cmd_torsion(const std::string& lambda_text, double lambda_im, std::uint64_t order) {
  const Cd lambda(to_double(parse_rational(lambda_text)), lambda_im);
  const auto pts = fiber_torsion_points(lambda, order);
  std::cout << pts.size() << " points of order dividing " << order << "\n";
  for (const auto& p : pts) {
    std::cout << "xi=(" << p.a << "/" << order << ", " << p.b << "/" << order << ")  ";
    if (p.point.is_identity()) {
      std::cout << "O\n";
    } else {
      std::cout << "x=" << fmt(p.point.coords[0] / p.point.coords[2]) << "  y=" << fmt(p.point.coords[1] / p.point.coords[2])
                << "\n";
    }
  }
  return 0;
}

int cmd_section_torsion(const std::string& family_ref, std::uint64_t order, double t_min, double t_max, int grid) {
  const auto family = load_family(family_ref);
  SectionSearchOptions opts;
  opts.t_min = t_min;
  opts.t_max = t_max;
  opts.grid = grid;
  const auto found = torsion_on_section(family, order, opts);
  std::cout << found.size() << " parameter values with " << order << "-torsion section point\n";
  for (const auto& c : found) {
    std::cout << "t=" << fmt(c.t, 14) << "  lambda=" << fmt(c.lambda, 12) << "  xi=(" << fmt(c.xi[0], 12) << ", "
              << fmt(c.xi[1], 12) << ")  residual=" << fmt(c.residual, 3) << "\n";
  }
  return 0;
}

int cmd_count_roots(const std::string& box_text, const std::string& xi0_text, std::uint64_t n, bool list) {
  const auto colon = box_text.rfind(':');
  if (colon == std::string::npos) throw Error(ErrorCode::InvalidInput, "box format is c1,...,c2g:eps");
  const TorusBox box(rationals(box_text.substr(0, colon)), parse_rational(box_text.substr(colon + 1)));
  const auto xi0 = xi0_text.empty() ? std::vector<BigRational>(box.size()) : rationals(xi0_text);
  const auto roots = count_roots_in_box(box, xi0, n);
  const auto closed = count_roots_closed_form(box, xi0, n);
  std::cout << "roots " << roots.size() << "\nclosed form " << closed.get_str() << "\n";
  if (list) {
    for (const auto& r : roots) {
      for (std::size_t i = 0; i < r.size(); ++i) std::cout << (i ? " " : "") << to_string(r[i]);
      std::cout << "\n";
    }
  }
  return BigInt(roots.size()) == closed ? 0 : kExitFailedCheck;
}

int cmd_kronecker(const std::string& xi_text, std::uint64_t k) {
  std::vector<double> xi;
  for (const auto& s : split(xi_text, ',')) xi.push_back(std::stod(s));
  std::cout << "gap " << fmt(kronecker_orbit_gap(xi, k), 12) << "\n";
  return 0;
}

int cmd_experiment(const std::string& kind, const std::string& family_ref, const std::string& samples_text,
                   const std::string& out_dir, double tol, unsigned threads) {
  RunDocument run;
  run.family = load_family(family_ref);
  run.samples = parse_samples(samples_text);
  run.options.nt.tolerance = tol;
  run.options.threads = threads;
  if (kind == "height-ineq") {
    auto r = run_height_inequality(run.family, run.samples, run.options);
    run.data = std::move(r.data);
    run.diagnostics = {{"empirical_c", r.empirical_c}};
    run.labels = {{"degenerate", r.degenerate ? "torsion section" : "no"}};
    if (r.quarter_bound_from) run.labels.emplace_back("quarter_bound_from_t", to_string(run.data.records[*r.quarter_bound_from].t));
    std::cout << "empirical_c " << fmt(r.empirical_c) << (r.degenerate ? "  (degenerate: torsion section)" : "") << "\n";
  } else if (kind == "silverman-tate") {
    auto r = run_silverman_tate(run.family, run.samples, run.options);
    run.data = std::move(r.data);
    run.diagnostics = {{"max_ratio", r.max_ratio},
                       {"first_quartile_max", r.first_quartile_max},
                       {"last_quartile_max", r.last_quartile_max}};
    std::cout << "max_ratio " << fmt(r.max_ratio) << "  first quartile " << fmt(r.first_quartile_max)
              << "  last quartile " << fmt(r.last_quartile_max) << "\n";
  } else if (kind == "specialization") {
    auto r = run_specialization_ratio(run.family, run.samples, run.options);
    run.data = std::move(r.data);
    run.diagnostics = {{"top_quartile_spread", r.top_quartile_spread}, {"limit_estimate", r.limit_estimate}};
    std::cout << "top quartile spread " << fmt(r.top_quartile_spread) << "  limit estimate " << fmt(r.limit_estimate)
              << "\n";
  } else {
    throw Error(ErrorCode::InvalidInput, "unknown experiment " + kind);
  }
  run.experiment = kind;
  for (const auto& s : run.data.skipped) std::cerr << "skipped t=" << to_string(s.t) << ": " << s.reason << "\n";
  std::cout << run.data.records.size() << " records, " << run.data.skipped.size() << " skipped\n";
  if (!out_dir.empty()) {
    write_run(out_dir, run);
    std::cout << "wrote " << out_dir << "/" << kind << ".json and .csv\n";
  }
  return 0;
}

int exit_code_for(ErrorCode c) {
  switch (c) {
    case ErrorCode::NonConvergence:
    case ErrorCode::NoConvergence:
      return kExitNonConvergence;
    default:
      return kExitInvalid;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Heights, periods and torsion on the Legendre family"};
  app.require_subcommand(1);
  std::function<int()> action;

  std::vector<std::string> weil_coords;
  auto* weil = app.add_subcommand("weil", "Weil height of a point of P^n(Q)");
  weil->add_option("coords", weil_coords, "coordinates (rationals, space or comma separated)")->required();
  weil->callback([&] { action = [&] { return cmd_weil(weil_coords); }; });

  std::string lambda_text, point_text;
  double tol = 1e-8, lambda_im = 0;
  auto* nt = app.add_subcommand("nt", "Neron-Tate height of a rational fiber point");
  nt->add_option("--lambda", lambda_text, "lambda (rational)")->required();
  nt->add_option("--point", point_text, "x,y,z")->required();
  nt->add_option("--tol", tol, "target accuracy");
  nt->callback([&] { action = [&] { return cmd_nt(lambda_text, point_text, tol); }; });

  auto* per = app.add_subcommand("periods", "periods omega1, omega2 and tau = omega2/omega1");
  per->add_option("--lambda", lambda_text, "real part of lambda (rational)")->required();
  per->add_option("--lambda-im", lambda_im, "imaginary part of lambda");
  per->callback([&] { action = [&] { return cmd_periods(lambda_text, lambda_im); }; });

  int grid = 10;
  auto* lc = app.add_subcommand("lambda-check", "check Lambda(T(lambda)) = lambda on a grid in Sigma");
  lc->add_option("--grid", grid, "grid points per axis");
  lc->callback([&] { action = [&] { return cmd_lambda_check(grid); }; });

  int samples = 20, genus = 1;
  std::uint64_t seed = 1;
  auto* mc = app.add_subcommand("monodromy-check", "check the monodromy of torus coordinates");
  mc->add_option("--samples", samples, "random (xi, tau) samples");
  mc->add_option("--seed", seed, "random seed");
  mc->add_option("--genus", genus, "number of fiber factors");
  mc->callback([&] { action = [&] { return cmd_monodromy_check(samples, seed, genus); }; });

  int level = 1, points = 10;
  bool emit = false, verify = false;
  auto* dp = app.add_subcommand("duppoly", "duplication polynomials G_{N,i}");
  dp->add_option("--level", level, "N in 1..4")->required();
  dp->add_flag("--emit", emit, "print the term lists (N <= 3)");
  dp->add_flag("--verify", verify, "check degree bounds and agreement with the group law");
  dp->add_option("--points", points, "test points for --verify");
  dp->callback([&] { action = [&] { return cmd_duppoly(level, emit, verify, points); }; });

  std::uint64_t order = 2;
  auto* tor = app.add_subcommand("torsion", "torsion points of one fiber");
  tor->add_option("--lambda", lambda_text, "real part of lambda (rational)")->required();
  tor->add_option("--lambda-im", lambda_im, "imaginary part of lambda");
  tor->add_option("--order", order, "T")->required();
  tor->callback([&] { action = [&] { return cmd_torsion(lambda_text, lambda_im, order); }; });

  std::string family_ref = "builtin:x2";
  double t_min = 0, t_max = 1;
  int section_grid = 400;
  auto* st = app.add_subcommand("section-torsion", "parameters where a family section is torsion");
  st->add_option("--family", family_ref, "builtin:<name> or JSON file");
  st->add_option("--order", order, "T")->required();
  st->add_option("--tmin", t_min, "window start");
  st->add_option("--tmax", t_max, "window end");
  st->add_option("--grid", section_grid, "grid intervals");
  st->callback([&] { action = [&] { return cmd_section_torsion(family_ref, order, t_min, t_max, section_grid); }; });

  std::string box_text, xi0_text;
  std::uint64_t n = 1;
  bool list = false;
  auto* cr = app.add_subcommand("count-roots", "N-th roots of xi0 in an open box of the torus");
  cr->add_option("--box", box_text, "c1,...,c2g:eps")->required();
  cr->add_option("--xi0", xi0_text, "x1,...,x2g (default 0)");
  cr->add_option("--n", n, "N")->required();
  cr->add_flag("--list", list, "print the roots");
  cr->callback([&] { action = [&] { return cmd_count_roots(box_text, xi0_text, n, list); }; });

  std::string xi_text;
  std::uint64_t k_max = 1000;
  auto* kr = app.add_subcommand("kronecker", "covering radius of the orbit {2k xi}");
  kr->add_option("--xi", xi_text, "xi_2,xi_4,...")->required();
  kr->add_option("--k", k_max, "K");
  kr->callback([&] { action = [&] { return cmd_kronecker(xi_text, k_max); }; });

  std::string kind, samples_text = "2..60", out_dir;
  unsigned threads = 1;
  auto* ex = app.add_subcommand("experiment", "height experiments over a family");
  ex->add_option("kind", kind, "height-ineq | silverman-tate | specialization")
      ->required()
      ->check(CLI::IsMember({"height-ineq", "silverman-tate", "specialization"}));
  ex->add_option("--family", family_ref, "builtin:<name> or JSON file");
  ex->add_option("--samples", samples_text, "a..b, a..b:step or a,b,c");
  ex->add_option("--out", out_dir, "output directory");
  ex->add_option("--tol", tol, "Neron-Tate accuracy");
  ex->add_option("--threads", threads, "worker threads (0 = all cores)");
  ex->callback([&] {
    action = [&] { return cmd_experiment(kind, family_ref, samples_text, out_dir, tol, threads); };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitInvalid;
  }
  try {
    return action();
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  }
}
