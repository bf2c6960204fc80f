#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "negforms/forms.hpp"
#include "negforms/poly.hpp"
#include "negforms/rational.hpp"

namespace testing {

using negforms::Exponents;
using negforms::Poly;
using negforms::Rational;

inline Poly poly(const std::vector<std::string>& vars,
                 std::initializer_list<std::pair<Exponents, Rational>> terms) {
  Poly p(vars);
  for (const auto& [e, c] : terms) p.add_term(e, c);
  return p;
}

inline Rational q(long n, long d = 1) { return Rational(n, d); }

/// Independent evaluation at a rational point: sum of c * prod x_i^e_i.
inline Rational evaluate_at(const Poly& p, const std::vector<Rational>& point) {
  Rational total(0);
  for (const auto& [e, c] : p.terms()) {
    Rational term = c;
    for (std::size_t i = 0; i < e.size(); ++i)
      for (unsigned k = 0; k < e[i]; ++k) term *= point[i];
    total += term;
  }
  return total;
}

/// Form f dx_I given 0-based basis indices.
inline negforms::OrdinaryForm basis_form(const negforms::Chart& chart, std::vector<int> idx,
                                         const Poly& f) {
  negforms::OrdinaryForm w(chart);
  w.add_term(negforms::IndexSet::from_indices(idx), f);
  return w;
}

inline negforms::OrdinaryForm basis_form(const negforms::Chart& chart, std::vector<int> idx,
                                         const Rational& c = Rational(1)) {
  return basis_form(chart, std::move(idx), Poly::constant(chart.coords(), c));
}

}  // namespace testing
