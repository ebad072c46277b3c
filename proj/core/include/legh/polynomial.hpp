#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "legh/rational.hpp"

namespace legh {

/// Sparse multivariate polynomial with arbitrary-precision integer
/// coefficients over an ordered list of named variables.
///
/// Exponent vectors are packed into one 64-bit key (64 / nvars bits per
/// variable, variable 0 most significant), so at most 16 variables are
/// supported and each exponent must fit its field. Terms are kept sorted by
/// key with no zero coefficients.
class IntPolynomial {
 public:
  using Exponents = std::vector<std::uint32_t>;

  struct Term {
    std::uint64_t key;
    BigInt coeff;
  };

  explicit IntPolynomial(std::vector<std::string> variables);

  static IntPolynomial zero(std::vector<std::string> variables) { return IntPolynomial(std::move(variables)); }
  static IntPolynomial constant(std::vector<std::string> variables, const BigInt& c);
  static IntPolynomial variable(std::vector<std::string> variables, std::size_t index);
  static IntPolynomial from_terms(std::vector<std::string> variables,
                                  const std::vector<std::pair<Exponents, BigInt>>& terms);

  const std::vector<std::string>& variables() const noexcept { return vars_; }
  std::size_t arity() const noexcept { return vars_.size(); }
  std::size_t term_count() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  const std::vector<Term>& raw_terms() const noexcept { return terms_; }

  Exponents exponents(std::uint64_t key) const;
  std::uint64_t pack(std::span<const std::uint32_t> exps) const;
  std::uint32_t max_exponent() const noexcept { return field_mask_; }

  /// Coefficient of the given monomial (0 if absent).
  BigInt coefficient(std::span<const std::uint32_t> exps) const;

  /// Adds c * monomial in place.
  void add_term(std::span<const std::uint32_t> exps, const BigInt& c);

  /// Total degree; -1 for the zero polynomial.
  long total_degree() const;
  /// Degree in one variable; -1 for the zero polynomial.
  long degree_in(std::size_t var) const;
  /// Minimum and maximum of sum(exps[v] for v in subset) over the support.
  std::optional<std::pair<long, long>> degree_range(std::span<const std::size_t> subset) const;
  /// Degree d if every term has degree d in `subset`; nullopt otherwise
  /// (also for the zero polynomial).
  std::optional<long> homogeneous_degree(std::span<const std::size_t> subset) const;

  BigRational eval(std::span<const BigRational> args) const;
  BigInt eval(std::span<const BigInt> args) const;

  IntPolynomial& operator+=(const IntPolynomial& o);
  IntPolynomial& operator-=(const IntPolynomial& o);
  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  IntPolynomial operator-() const;
  IntPolynomial scaled(const BigInt& c) const;
  IntPolynomial pow(unsigned n) const;

  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b);

  /// Human-readable form, e.g. "8*X1^3*X2 - X0^4".
  std::string to_string() const;

 private:
  void require_same_variables(const IntPolynomial& o) const;
  std::vector<long> degree_per_variable() const;
  void combine(const IntPolynomial& o, int sign);

  std::vector<std::string> vars_;
  unsigned bits_ = 0;
  std::uint32_t field_mask_ = 0;
  std::vector<Term> terms_;

  friend IntPolynomial schoolbook_multiply(const IntPolynomial&, const IntPolynomial&);
  friend IntPolynomial kronecker_multiply(const IntPolynomial&, const IntPolynomial&);
};

/// Exact value of p at args. Throws ArityMismatch.
BigRational poly_eval(const IntPolynomial& p, std::span<const BigRational> args);

/// outer(inner[0], ..., inner[k-1]). All inner polynomials must share one
/// variable list; the result lives over that list. Horner scheme in each
/// outer variable. Throws ArityMismatch.
IntPolynomial poly_compose(const IntPolynomial& outer, std::span<const IntPolynomial> inner);

}  // namespace legh
