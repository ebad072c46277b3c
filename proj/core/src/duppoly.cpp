#include "legh/duppoly.hpp"

#include <algorithm>
#include <ostream>

#include "legh/error.hpp"

namespace legh {

namespace {

using Monomial = std::pair<IntPolynomial::Exponents, BigInt>;

IntPolynomial make(const std::vector<Monomial>& terms) { return IntPolynomial::from_terms(duplication_variables(), terms); }

Monomial m(long c, std::uint32_t e0, std::uint32_t e1, std::uint32_t e2, std::uint32_t e3) {
  return {{e0, e1, e2, e3}, BigInt(c)};
}

const DuplicationTriple& cached_base() {
  static const DuplicationTriple base = [] {
    DuplicationTriple t;
    t.level = 1;
    t.g[0] = make({
        m(2, 0, 1, 3, 2),
        m(2, 3, 1, 0, 1),
        m(-6, 2, 1, 1, 1),
        m(2, 3, 1, 0, 0),
        m(2, 1, 3, 0, 0),
    });
    t.g[1] = make({
        m(-4, 2, 0, 2, 3), m(6, 1, 0, 3, 3), m(-1, 0, 0, 4, 3),
        m(-1, 4, 0, 0, 2), m(9, 3, 0, 1, 2), m(-17, 2, 0, 2, 2), m(6, 1, 0, 3, 2), m(-4, 0, 2, 2, 2),
        m(-2, 4, 0, 0, 1), m(9, 3, 0, 1, 1), m(-4, 2, 0, 2, 1), m(3, 1, 2, 1, 1), m(-4, 0, 2, 2, 1),
        m(-1, 4, 0, 0, 0), m(1, 0, 4, 0, 0),
    });
    t.g[2] = make({m(8, 0, 3, 1, 0)});
    return t;
  }();
  return base;
}

LegendreFiberPoint normalized_point(const std::array<BigRational, 3>& v, const BigRational& lambda) {
  if (v[0] == 0 && v[1] == 0 && v[2] == 0) {
    throw Error(ErrorCode::AllZero, "duplication polynomials vanish simultaneously");
  }
  return LegendreFiberPoint(normalize_projective(v), lambda);
}

}  // namespace

const std::vector<std::string>& duplication_variables() {
  static const std::vector<std::string> vars{"X0", "X1", "X2", "X3"};
  return vars;
}

DuplicationTriple base_triple() { return cached_base(); }

DuplicationTriple lift_triple(const DuplicationTriple& t) {
  const auto& base = cached_base();
  const std::array<IntPolynomial, 4> inner{t.g[0], t.g[1], t.g[2], IntPolynomial::variable(duplication_variables(), 3)};
  DuplicationTriple out;
  out.level = t.level + 1;
  for (std::size_t i = 0; i < 3; ++i) out.g[i] = poly_compose(base.g[i], inner);
  return out;
}

DuplicationTriple triple_at_level(int level) {
  if (level < 1) throw Error(ErrorCode::InvalidInput, "duplication level must be at least 1");
  DuplicationTriple t = base_triple();
  while (t.level < level) t = lift_triple(t);
  return t;
}

LegendreFiberPoint dup_apply(const LegendreFiberPoint& p, int n) {
  if (n < 1) throw Error(ErrorCode::InvalidInput, "duplication level must be at least 1");
  const auto& base = cached_base();
  const BigRational& lambda = p.lambda();
  LegendreFiberPoint current = p;
  for (int step = 0; step < n; ++step) {
    std::array<BigRational, 4> q{BigRational(current.point()[0]), BigRational(current.point()[1]),
                                 BigRational(current.point()[2]), lambda};
    std::array<BigRational, 3> v;
    for (std::size_t i = 0; i < 3; ++i) v[i] = base.g[i].eval(std::span<const BigRational>(q));
    current = normalized_point(v, lambda);
  }
  return current;
}

LegendreFiberPoint eval_triple(const DuplicationTriple& t, const LegendreFiberPoint& p) {
  std::array<BigRational, 4> q{BigRational(p.point()[0]), BigRational(p.point()[1]), BigRational(p.point()[2]),
                               p.lambda()};
  std::array<BigRational, 3> v;
  for (std::size_t i = 0; i < 3; ++i) v[i] = t.g[i].eval(std::span<const BigRational>(q));
  return normalized_point(v, p.lambda());
}

bool DegreeReport::satisfies_bounds() const {
  long four_n = 1;
  for (int k = 0; k < level; ++k) four_n *= 4;
  return point_degree_min == four_n && point_degree_max == four_n && lambda_degree_max <= four_n - 1 &&
         total_degree_max <= 2 * four_n;
}

std::array<DegreeReport, 3> degree_report(const DuplicationTriple& t) {
  static constexpr std::array<std::size_t, 3> point_vars{0, 1, 2};
  std::array<DegreeReport, 3> out;
  for (std::size_t i = 0; i < 3; ++i) {
    auto& r = out[i];
    r.level = t.level;
    r.index = static_cast<int>(i);
    const auto range = t.g[i].degree_range(point_vars);
    if (!range) throw Error(ErrorCode::AllZero, "duplication polynomial is zero");
    r.point_degree_min = range->first;
    r.point_degree_max = range->second;
    r.lambda_degree_max = t.g[i].degree_in(3);
    r.total_degree_max = t.g[i].total_degree();
  }
  return out;
}

std::vector<std::array<DegreeReport, 3>> degree_envelope(int max_level) {
  if (max_level < 1) throw Error(ErrorCode::InvalidInput, "duplication level must be at least 1");
  const auto& base = cached_base();
  std::vector<std::array<DegreeReport, 3>> levels{degree_report(base)};
  while (static_cast<int>(levels.size()) < max_level) {
    const auto& prev = levels.back();
    std::array<DegreeReport, 3> next;
    for (std::size_t i = 0; i < 3; ++i) {
      auto& r = next[i];
      r.level = prev[0].level + 1;
      r.index = static_cast<int>(i);
      bool first = true;
      for (const auto& term : base.g[i].raw_terms()) {
        const auto e = base.g[i].exponents(term.key);
        long dmin = 0, dmax = 0, lmax = e[3], tmax = e[3];
        for (std::size_t k = 0; k < 3; ++k) {
          dmin += e[k] * prev[k].point_degree_min;
          dmax += e[k] * prev[k].point_degree_max;
          lmax += e[k] * prev[k].lambda_degree_max;
          tmax += e[k] * prev[k].total_degree_max;
        }
        if (first) {
          r.point_degree_min = dmin;
          r.point_degree_max = dmax;
          r.lambda_degree_max = lmax;
          r.total_degree_max = tmax;
          first = false;
        } else {
          r.point_degree_min = std::min(r.point_degree_min, dmin);
          r.point_degree_max = std::max(r.point_degree_max, dmax);
          r.lambda_degree_max = std::max(r.lambda_degree_max, lmax);
          r.total_degree_max = std::max(r.total_degree_max, tmax);
        }
      }
    }
    levels.push_back(next);
  }
  return levels;
}

void write_terms(std::ostream& os, const DuplicationTriple& t) {
  for (std::size_t i = 0; i < 3; ++i) {
    const auto& p = t.g[i];
    os << "# G level=" << t.level << " index=" << i << " terms=" << p.term_count() << '\n';
    for (const auto& term : p.raw_terms()) {
      const auto e = p.exponents(term.key);
      os << e[0] << ' ' << e[1] << ' ' << e[2] << ' ' << e[3] << ' ' << term.coeff.get_str() << '\n';
    }
  }
}

}  // namespace legh
