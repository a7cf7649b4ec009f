#ifndef ODRA_RATIONAL_FUNCTION_HPP
#define ODRA_RATIONAL_FUNCTION_HPP

#include "odra/polynomial.hpp"

#include <map>
#include <string>

namespace odra {

/// Quotient of two sparse multivariate polynomials; the value domain for
/// parametric transition rates and parametric reachability results.
///
/// Canonical form maintained by every constructor and operation:
///   - denominator not identically zero (else std::domain_error),
///   - zero numerator stored as 0/1,
///   - all coefficients integers with joint content 1 across numerator
///     and denominator,
///   - leading denominator coefficient positive.
/// Common polynomial factors are NOT guaranteed to be cancelled; reduce()
/// removes the ones it can find and equivalence is decided by
/// cross-multiplication, so canonicity of factors is never relied upon.
class RationalFunction {
 public:
  RationalFunction() : num_(), den_(Rational(1)) {}
  RationalFunction(const Rational& constant) : num_(constant), den_(Rational(1)) {}
  RationalFunction(Polynomial num, Polynomial den);
  explicit RationalFunction(const Polynomial& num) : RationalFunction(num, Polynomial(Rational(1))) {}

  static RationalFunction variable(const std::string& name) {
    return RationalFunction(Polynomial::variable(name));
  }

  const Polynomial& numerator() const { return num_; }
  const Polynomial& denominator() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  /// Constant value; only meaningful when is_constant().
  Rational constant_value() const { return num_.constant_value() / den_.constant_value(); }

  /// Union of numerator and denominator variables.
  std::vector<std::string> variables() const;

  RationalFunction operator-() const;
  RationalFunction operator+(const RationalFunction& rhs) const;
  RationalFunction operator-(const RationalFunction& rhs) const;
  RationalFunction operator*(const RationalFunction& rhs) const;
  /// Throws std::domain_error when rhs is the zero function.
  RationalFunction operator/(const RationalFunction& rhs) const;
  RationalFunction& operator+=(const RationalFunction& rhs) { return *this = *this + rhs; }
  RationalFunction& operator-=(const RationalFunction& rhs) { return *this = *this - rhs; }
  RationalFunction& operator*=(const RationalFunction& rhs) { return *this = *this * rhs; }
  RationalFunction& operator/=(const RationalFunction& rhs) { return *this = *this / rhs; }
  bool operator==(const RationalFunction& rhs) const = default;

  /// Exact substitution; throws std::domain_error on a pole and
  /// std::invalid_argument when an assignment is missing.
  Rational evaluate(const std::map<std::string, Rational>& point) const;

  /// Cancels the factors it can find: joint content, common monomial,
  /// and exact trial division of numerator by denominator (and vice versa).
  /// Always exactly equivalent to the input.
  RationalFunction reduce() const;

  /// Stable parse-able rendering "(num)/(den)", e.g. "(pc*pn)/(1)".
  std::string str() const;

 private:
  void normalize();

  Polynomial num_;
  Polynomial den_;
};

/// True iff f - g is identically zero, decided exactly by
/// cross-multiplication after a randomized-evaluation pre-filter.
bool equivalent(const RationalFunction& f, const RationalFunction& g);

enum class ArithOp { Add, Sub, Mul, Div };

/// Dispatching wrapper over the four field operations.
RationalFunction arith(const RationalFunction& a, const RationalFunction& b, ArithOp op);

}  // namespace odra

#endif  // ODRA_RATIONAL_FUNCTION_HPP
