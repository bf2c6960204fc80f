#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "negforms/error.hpp"
#include "negforms/rational.hpp"

namespace negforms {

/// One non-negative exponent per declared variable.
using Exponents = std::vector<unsigned>;

/// Sparse multivariate polynomial with rational coefficients over an explicit,
/// ordered variable list. Zero coefficients are never stored, so two
/// polynomials over the same list are equal iff their term maps are equal.
class Poly {
 public:
  using Terms = std::map<Exponents, Rational>;

  Poly() = default;
  explicit Poly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

  static Poly constant(std::vector<std::string> vars, const Rational& c) {
    Poly p(std::move(vars));
    p.add_term(Exponents(p.vars_.size(), 0), c);
    return p;
  }

  static Poly variable(std::vector<std::string> vars, const std::string& name) {
    Poly p(std::move(vars));
    Exponents e(p.vars_.size(), 0);
    e[p.index_of(name)] = 1;
    p.add_term(std::move(e), Rational(1));
    return p;
  }

  static Poly monomial(std::vector<std::string> vars, Exponents exps, const Rational& c) {
    Poly p(std::move(vars));
    if (exps.size() != p.vars_.size())
      throw MismatchError("exponent vector length does not match variable list");
    p.add_term(std::move(exps), c);
    return p;
  }

  const std::vector<std::string>& vars() const { return vars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  std::size_t index_of(const std::string& name) const {
    const auto it = std::find(vars_.begin(), vars_.end(), name);
    if (it == vars_.end()) throw DomainError("unknown variable '" + name + "'");
    return static_cast<std::size_t>(it - vars_.begin());
  }

  unsigned degree_in(std::size_t var) const {
    unsigned d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
    return d;
  }

  unsigned total_degree() const {
    unsigned d = 0;
    for (const auto& [e, c] : terms_) {
      unsigned s = 0;
      for (unsigned x : e) s += x;
      d = std::max(d, s);
    }
    return d;
  }

  /// Accumulates c * x^exps; drops the entry when it cancels.
  void add_term(Exponents exps, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(std::move(exps), c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  Poly operator-() const {
    Poly r(vars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
  }

  Poly& operator+=(const Poly& o) {
    require_same_vars(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    require_same_vars(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  Poly& operator*=(const Rational& s) {
    if (s.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [e, c] : terms_) c *= s;
    return *this;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Rational& s) { return a *= s; }
  friend Poly operator*(const Rational& s, Poly a) { return a *= s; }

  friend Poly operator*(const Poly& a, const Poly& b) {
    a.require_same_vars(b);
    Poly r(a.vars_);
    Exponents e(a.vars_.size());
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
        r.add_term(e, ca * cb);
      }
    }
    return r;
  }

  friend bool operator==(const Poly& a, const Poly& b) {
    return a.vars_ == b.vars_ && a.terms_ == b.terms_;
  }

  void require_same_vars(const Poly& o) const {
    if (vars_ != o.vars_) throw MismatchError("polynomials over different variable lists");
  }

 private:
  std::vector<std::string> vars_;
  Terms terms_;
};

/// Exact partial derivative with respect to the variable at position `var`.
inline Poly pderiv(const Poly& p, std::size_t var) {
  if (var >= p.vars().size()) throw DomainError("variable index out of range");
  Poly r(p.vars());
  for (const auto& [e, c] : p.terms()) {
    if (e[var] == 0) continue;
    Exponents ne = e;
    --ne[var];
    r.add_term(std::move(ne), c * Rational(static_cast<long>(e[var])));
  }
  return r;
}

inline Poly pderiv(const Poly& p, const std::string& var) { return pderiv(p, p.index_of(var)); }

/// Substitutes images[i] for the i-th variable of p. All images must live over
/// `target_vars`; the result does too.
inline Poly compose(const Poly& p, const std::vector<Poly>& images,
                    const std::vector<std::string>& target_vars) {
  if (images.size() != p.vars().size())
    throw DomainError("substitution must cover every variable");
  for (const auto& img : images)
    if (img.vars() != target_vars)
      throw MismatchError("substituted polynomials over different variable lists");

  // powers[i][j] = images[i]^j, built lazily up to the degree needed.
  std::vector<std::vector<Poly>> powers(images.size());
  for (std::size_t i = 0; i < images.size(); ++i) {
    const unsigned top = p.degree_in(i);
    powers[i].reserve(top + 1);
    powers[i].push_back(Poly::constant(target_vars, Rational(1)));
    for (unsigned j = 1; j <= top; ++j) powers[i].push_back(powers[i].back() * images[i]);
  }

  Poly r(target_vars);
  for (const auto& [e, c] : p.terms()) {
    Poly term = Poly::constant(target_vars, c);
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] != 0) term = term * powers[i][e[i]];
    r += term;
  }
  return r;
}

/// Name-keyed substitution; every variable of p needs an entry.
inline Poly compose(const Poly& p, const std::map<std::string, Poly>& subst) {
  std::vector<Poly> images;
  images.reserve(p.vars().size());
  for (const auto& v : p.vars()) {
    const auto it = subst.find(v);
    if (it == subst.end()) throw DomainError("missing substitution for '" + v + "'");
    images.push_back(it->second);
  }
  if (images.empty()) {
    if (subst.empty()) return p;
    const auto& target = subst.begin()->second.vars();
    return compose(p, images, target);
  }
  const auto target = images.front().vars();
  return compose(p, images, target);
}

namespace detail {

inline std::vector<std::string> erase_var(const std::vector<std::string>& vars, std::size_t i) {
  std::vector<std::string> r = vars;
  r.erase(r.begin() + static_cast<std::ptrdiff_t>(i));
  return r;
}

}  // namespace detail

/// Definite integral over var in [0,1]: x^n m -> m/(n+1). The integrated
/// variable is removed from the result's variable list.
inline Poly integrate_unit_interval(const Poly& p, std::size_t var) {
  if (var >= p.vars().size()) throw DomainError("variable index out of range");
  Poly r(detail::erase_var(p.vars(), var));
  for (const auto& [e, c] : p.terms()) {
    Exponents ne = e;
    ne.erase(ne.begin() + static_cast<std::ptrdiff_t>(var));
    r.add_term(std::move(ne), c / Rational(static_cast<long>(e[var]) + 1));
  }
  return r;
}

inline Poly integrate_unit_interval(const Poly& p, const std::string& var) {
  return integrate_unit_interval(p, p.index_of(var));
}

/// Sets var to a constant and removes it from the variable list.
inline Poly substitute(const Poly& p, std::size_t var, const Rational& value) {
  if (var >= p.vars().size()) throw DomainError("variable index out of range");
  Poly r(detail::erase_var(p.vars(), var));
  for (const auto& [e, c] : p.terms()) {
    Exponents ne = e;
    ne.erase(ne.begin() + static_cast<std::ptrdiff_t>(var));
    Rational scale(1);
    for (unsigned j = 0; j < e[var]; ++j) scale *= value;
    r.add_term(std::move(ne), c * scale);
  }
  return r;
}

inline Poly substitute(const Poly& p, const std::string& var, const Rational& value) {
  return substitute(p, p.index_of(var), value);
}

}  // namespace negforms
