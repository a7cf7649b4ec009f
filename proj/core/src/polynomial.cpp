#include "odra/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace odra {

bool GrlexLess::operator()(const std::vector<unsigned>& a, const std::vector<unsigned>& b) const {
  unsigned da = std::accumulate(a.begin(), a.end(), 0u);
  unsigned db = std::accumulate(b.begin(), b.end(), 0u);
  if (da != db) return da < db;
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

Polynomial::Polynomial(const Rational& constant) {
  if (constant != 0) terms_.emplace(std::vector<unsigned>{}, constant);
}

Polynomial Polynomial::variable(const std::string& name) {
  Polynomial p;
  p.vars_ = {name};
  p.terms_.emplace(std::vector<unsigned>{1}, Rational(1));
  return p;
}

Rational Polynomial::constant_value() const {
  if (terms_.empty()) return Rational(0);
  return terms_.begin()->second;
}

unsigned Polynomial::total_degree() const {
  unsigned deg = 0;
  for (const auto& [e, c] : terms_)
    deg = std::max(deg, std::accumulate(e.begin(), e.end(), 0u));
  return deg;
}

unsigned Polynomial::degree_in(const std::string& var) const {
  auto it = std::find(vars_.begin(), vars_.end(), var);
  if (it == vars_.end()) return 0;
  const size_t idx = static_cast<size_t>(it - vars_.begin());
  unsigned deg = 0;
  for (const auto& [e, c] : terms_) deg = std::max(deg, e[idx]);
  return deg;
}

Rational Polynomial::leading_coefficient() const {
  if (terms_.empty()) return Rational(0);
  return terms_.rbegin()->second;
}

void Polynomial::add_term(const std::vector<unsigned>& exps, const Rational& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.emplace(exps, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

void Polynomial::shrink_variables() {
  if (vars_.empty()) return;
  std::vector<bool> used(vars_.size(), false);
  for (const auto& [e, c] : terms_)
    for (size_t i = 0; i < e.size(); ++i)
      if (e[i] > 0) used[i] = true;
  if (std::all_of(used.begin(), used.end(), [](bool b) { return b; })) return;

  std::vector<std::string> vars;
  for (size_t i = 0; i < vars_.size(); ++i)
    if (used[i]) vars.push_back(vars_[i]);
  Terms terms;
  for (const auto& [e, c] : terms_) {
    std::vector<unsigned> ne;
    ne.reserve(vars.size());
    for (size_t i = 0; i < e.size(); ++i)
      if (used[i]) ne.push_back(e[i]);
    terms.emplace(std::move(ne), c);
  }
  vars_ = std::move(vars);
  terms_ = std::move(terms);
}

Polynomial Polynomial::on_variables(const std::vector<std::string>& vars) const {
  std::vector<size_t> pos(vars_.size());
  for (size_t i = 0; i < vars_.size(); ++i) {
    auto it = std::lower_bound(vars.begin(), vars.end(), vars_[i]);
    if (it == vars.end() || *it != vars_[i])
      throw std::invalid_argument("on_variables: target set does not cover " + vars_[i]);
    pos[i] = static_cast<size_t>(it - vars.begin());
  }
  Polynomial out;
  out.vars_ = vars;
  for (const auto& [e, c] : terms_) {
    std::vector<unsigned> ne(vars.size(), 0);
    for (size_t i = 0; i < e.size(); ++i) ne[pos[i]] = e[i];
    out.terms_.emplace(std::move(ne), c);
  }
  return out;
}

std::vector<std::string> Polynomial::merged_variables(const Polynomial& a, const Polynomial& b) {
  std::vector<std::string> merged;
  std::set_union(a.vars_.begin(), a.vars_.end(), b.vars_.begin(), b.vars_.end(),
                 std::back_inserter(merged));
  return merged;
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

Polynomial Polynomial::operator+(const Polynomial& rhs) const {
  const auto vars = merged_variables(*this, rhs);
  Polynomial a = on_variables(vars);
  const Polynomial b = rhs.on_variables(vars);
  for (const auto& [e, c] : b.terms_) a.add_term(e, c);
  a.shrink_variables();
  return a;
}

Polynomial Polynomial::operator-(const Polynomial& rhs) const { return *this + (-rhs); }

Polynomial Polynomial::operator*(const Polynomial& rhs) const {
  const auto vars = merged_variables(*this, rhs);
  const Polynomial a = on_variables(vars);
  const Polynomial b = rhs.on_variables(vars);
  Polynomial out;
  out.vars_ = vars;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      std::vector<unsigned> e(vars.size());
      for (size_t i = 0; i < vars.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  out.shrink_variables();
  return out;
}

Polynomial Polynomial::scaled(const Rational& factor) const {
  if (factor == 0) return Polynomial();
  Polynomial out = *this;
  for (auto& [e, c] : out.terms_) c *= factor;
  return out;
}

Polynomial Polynomial::pow(unsigned exponent) const {
  Polynomial result(Rational(1));
  Polynomial base = *this;
  while (exponent > 0) {
    if (exponent & 1u) result *= base;
    base *= base;
    exponent >>= 1u;
  }
  return result;
}

Rational Polynomial::evaluate(const std::map<std::string, Rational>& point) const {
  std::vector<Rational> values(vars_.size());
  for (size_t i = 0; i < vars_.size(); ++i) {
    auto it = point.find(vars_[i]);
    if (it == point.end())
      throw std::invalid_argument("evaluate: no assignment for variable " + vars_[i]);
    values[i] = it->second;
  }
  Rational sum = 0;
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (size_t i = 0; i < e.size(); ++i)
      for (unsigned k = 0; k < e[i]; ++k) term *= values[i];
    sum += term;
  }
  return sum;
}

std::optional<Polynomial> Polynomial::divided_by(const Polynomial& divisor) const {
  if (divisor.is_zero()) throw std::invalid_argument("polynomial division by zero");
  if (is_zero()) return Polynomial();
  if (divisor.is_constant()) return scaled(Rational(1) / divisor.constant_value());

  const auto vars = merged_variables(*this, divisor);
  Polynomial rem = on_variables(vars);
  const Polynomial div = divisor.on_variables(vars);
  const auto& lead_d = *div.terms_.rbegin();

  Polynomial quot;
  quot.vars_ = vars;
  // Leading-term reduction; since we only accept zero remainders this is a
  // complete divisibility test.
  while (!rem.terms_.empty()) {
    const auto& lead_r = *rem.terms_.rbegin();
    std::vector<unsigned> e(vars.size());
    for (size_t i = 0; i < vars.size(); ++i) {
      if (lead_r.first[i] < lead_d.first[i]) return std::nullopt;
      e[i] = lead_r.first[i] - lead_d.first[i];
    }
    const Rational c = lead_r.second / lead_d.second;
    quot.add_term(e, c);
    Polynomial mono;
    mono.vars_ = vars;
    mono.terms_.emplace(std::move(e), c);
    rem = rem - mono * div;
  }
  quot.shrink_variables();
  return quot;
}

std::vector<unsigned> Polynomial::common_monomial() const {
  if (terms_.empty()) return {};
  std::vector<unsigned> mono = terms_.begin()->first;
  for (const auto& [e, c] : terms_)
    for (size_t i = 0; i < mono.size(); ++i) mono[i] = std::min(mono[i], e[i]);
  return mono;
}

Polynomial Polynomial::without_monomial(const std::vector<unsigned>& mono) const {
  if (mono.empty() || std::all_of(mono.begin(), mono.end(), [](unsigned e) { return e == 0; }))
    return *this;
  Polynomial out;
  out.vars_ = vars_;
  for (const auto& [e, c] : terms_) {
    std::vector<unsigned> ne(e.size());
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] < mono[i]) throw std::invalid_argument("without_monomial: monomial does not divide");
      ne[i] = e[i] - mono[i];
    }
    out.terms_.emplace(std::move(ne), c);
  }
  out.shrink_variables();
  return out;
}

Rational Polynomial::content() const {
  Integer num_gcd = 0;
  Integer den_lcm = 1;
  for (const auto& [e, c] : terms_) {
    num_gcd = boost::multiprecision::gcd(num_gcd, boost::multiprecision::abs(numerator(c)));
    den_lcm = boost::multiprecision::lcm(den_lcm, denominator(c));
  }
  if (num_gcd == 0) return Rational(0);
  return Rational(num_gcd, den_lcm);
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  // descending grlex: leading term first
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    Rational c = it->second;
    if (first) {
      if (c < 0) {
        out << "-";
        c = -c;
      }
    } else {
      out << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    }
    first = false;

    std::vector<std::string> factors;
    for (size_t i = 0; i < vars_.size(); ++i) {
      const unsigned e = it->first[i];
      if (e == 1)
        factors.push_back(vars_[i]);
      else if (e > 1)
        factors.push_back(vars_[i] + "^" + std::to_string(e));
    }
    if (factors.empty()) {
      out << to_string(c);
    } else {
      if (c != 1) out << to_string(c) << "*";
      for (size_t i = 0; i < factors.size(); ++i) {
        if (i) out << "*";
        out << factors[i];
      }
    }
  }
  return out.str();
}

}  // namespace odra
