#pragma once

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

#include "legh/legendre.hpp"
#include "legh/polynomial.hpp"

namespace legh {

/// Variable names X0, X1, X2 (the point) and X3 (lambda).
const std::vector<std::string>& duplication_variables();

/// Polynomials G_{N,0}, G_{N,1}, G_{N,2} in Z[X0, X1, X2, X3] with
/// [2^N]([x:y:z], lambda) = [G_{N,0} : G_{N,1} : G_{N,2}] evaluated at (x, y, z, lambda).
struct DuplicationTriple {
  int level = 1;
  std::array<IntPolynomial, 3> g{IntPolynomial(duplication_variables()), IntPolynomial(duplication_variables()),
                                 IntPolynomial(duplication_variables())};
};

/// The level-1 duplication polynomials.
DuplicationTriple base_triple();

/// G_{N+1,i} = G_{1,i}(G_{N,0}, G_{N,1}, G_{N,2}, X3).
DuplicationTriple lift_triple(const DuplicationTriple& t);

/// Triple of the given level, built by repeated lifting (level >= 1).
DuplicationTriple triple_at_level(int level);

/// [2^N]P by evaluating the level-1 polynomials N times. Throws AllZero if
/// all three values vanish at some step.
LegendreFiberPoint dup_apply(const LegendreFiberPoint& p, int n);

/// Values of a triple at P, normalized. Throws AllZero.
LegendreFiberPoint eval_triple(const DuplicationTriple& t, const LegendreFiberPoint& p);

struct DegreeReport {
  int level = 0;
  int index = 0;
  /// Range of the degree in X0, X1, X2 over the support.
  long point_degree_min = 0;
  long point_degree_max = 0;
  long lambda_degree_max = 0;
  long total_degree_max = 0;

  bool satisfies_bounds() const;
};

/// Exact degree data of an explicit triple.
std::array<DegreeReport, 3> degree_report(const DuplicationTriple& t);

/// Support bounds for G_{N,i} propagated through the lift recursion without
/// expanding it. Every monomial of G_{N,i} lies in the Minkowski sums of
/// the lower-level supports, so each reported range contains the true one.
std::vector<std::array<DegreeReport, 3>> degree_envelope(int max_level);

/// Plain-text term list: a header line "# G level=N index=i terms=K"
/// followed by one line "e0 e1 e2 e3 coeff" per term.
void write_terms(std::ostream& os, const DuplicationTriple& t);

}  // namespace legh
