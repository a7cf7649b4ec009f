#include "odra/rational_function.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace odra {

RationalFunction::RationalFunction(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
  normalize();
}

void RationalFunction::normalize() {
  if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
  if (num_.is_zero()) {
    den_ = Polynomial(Rational(1));
    return;
  }
  // joint scaling to integer coefficients with content 1
  Integer den_lcm = 1;
  Integer num_gcd = 0;
  for (const auto* p : {&num_, &den_}) {
    for (const auto& [e, c] : p->terms()) {
      den_lcm = boost::multiprecision::lcm(den_lcm, denominator(c));
      num_gcd = boost::multiprecision::gcd(num_gcd, boost::multiprecision::abs(numerator(c)));
    }
  }
  Rational scale(den_lcm, num_gcd);
  if (den_.leading_coefficient() < 0) scale = -scale;
  if (scale != 1) {
    num_ = num_.scaled(scale);
    den_ = den_.scaled(scale);
  }
}

std::vector<std::string> RationalFunction::variables() const {
  std::vector<std::string> merged;
  std::set_union(num_.variables().begin(), num_.variables().end(), den_.variables().begin(),
                 den_.variables().end(), std::back_inserter(merged));
  return merged;
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction out = *this;
  out.num_ = -out.num_;
  return out;
}

RationalFunction RationalFunction::operator+(const RationalFunction& rhs) const {
  if (den_ == rhs.den_) return RationalFunction(num_ + rhs.num_, den_);
  return RationalFunction(num_ * rhs.den_ + rhs.num_ * den_, den_ * rhs.den_);
}

RationalFunction RationalFunction::operator-(const RationalFunction& rhs) const {
  return *this + (-rhs);
}

RationalFunction RationalFunction::operator*(const RationalFunction& rhs) const {
  if (is_zero() || rhs.is_zero()) return RationalFunction();
  // cross-cancel before multiplying to curb growth in elimination chains
  const Polynomial* a_num = &num_;
  const Polynomial* b_den = &rhs.den_;
  std::optional<Polynomial> q1;
  if (!b_den->is_constant() && (q1 = num_.divided_by(*b_den))) {
    a_num = &*q1;
    static const Polynomial kOne{Rational(1)};
    b_den = &kOne;
  }
  const Polynomial* b_num = &rhs.num_;
  const Polynomial* a_den = &den_;
  std::optional<Polynomial> q2;
  if (!a_den->is_constant() && (q2 = rhs.num_.divided_by(*a_den))) {
    b_num = &*q2;
    static const Polynomial kOne{Rational(1)};
    a_den = &kOne;
  }
  return RationalFunction(*a_num * *b_num, *a_den * *b_den);
}

RationalFunction RationalFunction::operator/(const RationalFunction& rhs) const {
  if (rhs.is_zero()) throw std::domain_error("division by the zero function");
  return *this * RationalFunction(rhs.den_, rhs.num_);
}

Rational RationalFunction::evaluate(const std::map<std::string, Rational>& point) const {
  const Rational den_value = den_.evaluate(point);
  if (den_value == 0) throw std::domain_error("pole: denominator vanishes at the given point");
  return num_.evaluate(point) / den_value;
}

RationalFunction RationalFunction::reduce() const {
  if (num_.is_zero()) return *this;
  Polynomial num = num_;
  Polynomial den = den_;

  if (!num.is_constant() && !den.is_constant()) {
    // shared monomial factor, computed on the harmonized variable set
    const auto vars = Polynomial::merged_variables(num, den);
    Polynomial n = num.on_variables(vars);
    Polynomial d = den.on_variables(vars);
    auto mono_n = n.common_monomial();
    const auto mono_d = d.common_monomial();
    for (size_t i = 0; i < mono_n.size(); ++i) mono_n[i] = std::min(mono_n[i], mono_d[i]);
    if (std::any_of(mono_n.begin(), mono_n.end(), [](unsigned e) { return e > 0; })) {
      num = n.without_monomial(mono_n);
      den = d.without_monomial(mono_n);
    }
  }

  if (!den.is_constant()) {
    if (auto q = num.divided_by(den)) return RationalFunction(std::move(*q));
  }
  if (!num.is_constant()) {
    if (auto q = den.divided_by(num))
      return RationalFunction(Polynomial(Rational(1)), std::move(*q));
  }
  return RationalFunction(std::move(num), std::move(den));
}

std::string RationalFunction::str() const {
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

bool equivalent(const RationalFunction& f, const RationalFunction& g) {
  // randomized pre-filter: a mismatch at any non-pole point is a definite "no"
  std::vector<std::string> vars;
  std::set_union(f.variables().begin(), f.variables().end(), g.variables().begin(),
                 g.variables().end(), std::back_inserter(vars));
  std::mt19937_64 rng(0x0d7a5eedULL);
  std::uniform_int_distribution<int> num_dist(-97, 97);
  for (int round = 0; round < 4 && !vars.empty(); ++round) {
    std::map<std::string, Rational> point;
    for (const auto& v : vars) point[v] = Rational(num_dist(rng), 89);
    try {
      if (f.evaluate(point) != g.evaluate(point)) return false;
    } catch (const std::domain_error&) {
      // pole at the sample point; fall through to the exact check
    }
  }
  // exact verdict by cross-multiplication
  return (f.numerator() * g.denominator()) == (g.numerator() * f.denominator());
}

RationalFunction arith(const RationalFunction& a, const RationalFunction& b, ArithOp op) {
  switch (op) {
    case ArithOp::Add: return a + b;
    case ArithOp::Sub: return a - b;
    case ArithOp::Mul: return a * b;
    case ArithOp::Div: return a / b;
  }
  throw std::logic_error("unreachable");
}

}  // namespace odra
