#ifndef ODRA_POLYNOMIAL_HPP
#define ODRA_POLYNOMIAL_HPP

#include "odra/rational.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace odra {

/// Graded lexicographic order on exponent vectors (total degree first,
/// then lexicographic on the exponents).
struct GrlexLess {
  bool operator()(const std::vector<unsigned>& a, const std::vector<unsigned>& b) const;
};

/// Sparse multivariate polynomial with exact rational coefficients.
///
/// Invariants: the variable list is sorted and duplicate-free, every stored
/// coefficient is nonzero, every exponent vector has length == #variables,
/// and every variable occurs in at least one term (unused variables are
/// dropped so that structurally equal polynomials compare equal).
class Polynomial {
 public:
  using Terms = std::map<std::vector<unsigned>, Rational, GrlexLess>;

  Polynomial() = default;
  explicit Polynomial(const Rational& constant);
  static Polynomial variable(const std::string& name);
  static Polynomial constant(const Rational& value) { return Polynomial(value); }

  const std::vector<std::string>& variables() const { return vars_; }
  const Terms& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && vars_.empty()); }
  /// Constant value; only meaningful when is_constant().
  Rational constant_value() const;

  /// Total degree (0 for constants, including the zero polynomial).
  unsigned total_degree() const;
  /// Highest power of one variable across all terms (0 if absent).
  unsigned degree_in(const std::string& var) const;

  /// Leading coefficient under grlex (0 for the zero polynomial).
  Rational leading_coefficient() const;

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& rhs) const;
  Polynomial operator-(const Polynomial& rhs) const;
  Polynomial operator*(const Polynomial& rhs) const;
  Polynomial& operator+=(const Polynomial& rhs) { return *this = *this + rhs; }
  Polynomial& operator-=(const Polynomial& rhs) { return *this = *this - rhs; }
  Polynomial& operator*=(const Polynomial& rhs) { return *this = *this * rhs; }
  bool operator==(const Polynomial& rhs) const = default;

  Polynomial scaled(const Rational& factor) const;
  Polynomial pow(unsigned exponent) const;

  /// Exact substitution of every variable. Throws std::invalid_argument
  /// when an assignment is missing.
  Rational evaluate(const std::map<std::string, Rational>& point) const;

  /// Exact division: returns the quotient iff divisor divides *this with
  /// zero remainder, std::nullopt otherwise. Division by zero throws.
  std::optional<Polynomial> divided_by(const Polynomial& divisor) const;

  /// Elementwise-minimum exponent vector over all terms (the largest
  /// common monomial factor); zero vector for constants.
  std::vector<unsigned> common_monomial() const;
  /// Divides every term by x^mono; mono must divide every term.
  Polynomial without_monomial(const std::vector<unsigned>& mono) const;

  /// gcd of numerators / lcm of denominators over all coefficients;
  /// always nonnegative, 0 for the zero polynomial.
  Rational content() const;

  /// Re-expresses the polynomial over a superset of its variables.
  Polynomial on_variables(const std::vector<std::string>& vars) const;
  /// Merged sorted variable union of two polynomials.
  static std::vector<std::string> merged_variables(const Polynomial& a, const Polynomial& b);

  /// Stable infix rendering, terms in descending grlex order,
  /// e.g. "2*pc*pn - 1/2*pn + 1".
  std::string str() const;

 private:
  void add_term(const std::vector<unsigned>& exps, const Rational& coeff);
  void shrink_variables();

  std::vector<std::string> vars_;
  Terms terms_;

  friend class RationalFunction;
};

}  // namespace odra

#endif  // ODRA_POLYNOMIAL_HPP
