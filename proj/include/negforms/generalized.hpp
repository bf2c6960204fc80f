#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>

#include "negforms/basis.hpp"
#include "negforms/error.hpp"
#include "negforms/forms.hpp"
#include "negforms/koszul.hpp"
#include "negforms/rational.hpp"

namespace negforms {

/// Element of the graded tensor product Omega (x) (wedge V)^-1, stored as a sum
/// of a_S (x) zeta_S with the ordinary form written to the left. The component
/// a_S contributes degree deg(a_S) - |S|.
class GeneralizedForm {
 public:
  using Components = std::map<IndexSet, OrdinaryForm>;

  GeneralizedForm() = default;
  GeneralizedForm(Chart chart, KoszulParams params)
      : chart_(std::move(chart)), params_(std::move(params)) {}

  /// a (x) 1.
  static GeneralizedForm from_form(const OrdinaryForm& a, const KoszulParams& params) {
    return tensor(a, KoszulElement::unit(params));
  }

  /// a (x) u, expanded over the monomials of u.
  static GeneralizedForm tensor(const OrdinaryForm& a, const KoszulElement& u) {
    GeneralizedForm r(a.chart(), u.params());
    for (const auto& [s, c] : u.terms()) r.add_component(s, a * c);
    return r;
  }

  const Chart& chart() const { return chart_; }
  const KoszulParams& params() const { return params_; }
  const Components& components() const { return comps_; }
  bool is_zero() const { return comps_.empty(); }

  /// The ordinary form multiplying zeta_S (zero if absent).
  OrdinaryForm component(IndexSet s) const {
    const auto it = comps_.find(s);
    return it == comps_.end() ? OrdinaryForm(chart_) : it->second;
  }

  void add_component(IndexSet s, const OrdinaryForm& a) {
    if (a.chart() != chart_) throw MismatchError("component on a different chart");
    if (s.max_index() >= static_cast<int>(params_.n()))
      throw DomainError("zeta index exceeds generator count");
    if (a.is_zero()) return;
    auto [it, inserted] = comps_.try_emplace(s, a);
    if (!inserted) {
      it->second += a;
      if (it->second.is_zero()) comps_.erase(it);
    }
  }

  std::set<int> degrees() const {
    std::set<int> r;
    for (const auto& [s, a] : comps_)
      for (int q : a.degrees()) r.insert(q - s.size());
    return r;
  }

  /// Common degree; 0 for the zero element; nullopt when mixed.
  std::optional<int> degree() const {
    const auto ds = degrees();
    if (ds.empty()) return 0;
    if (ds.size() > 1) return std::nullopt;
    return *ds.begin();
  }

  GeneralizedForm part(int p) const {
    GeneralizedForm r(chart_, params_);
    for (const auto& [s, a] : comps_) r.add_component(s, a.part(p + s.size()));
    return r;
  }

  GeneralizedForm& operator+=(const GeneralizedForm& o) {
    require_compatible(o);
    for (const auto& [s, a] : o.comps_) add_component(s, a);
    return *this;
  }
  GeneralizedForm& operator*=(const Rational& x) {
    if (x.is_zero()) comps_.clear();
    for (auto& [s, a] : comps_) a *= x;
    return *this;
  }
  GeneralizedForm operator-() const {
    GeneralizedForm r = *this;
    return r *= Rational(-1);
  }
  friend GeneralizedForm operator+(GeneralizedForm a, const GeneralizedForm& b) { return a += b; }
  friend GeneralizedForm operator-(GeneralizedForm a, const GeneralizedForm& b) { return a += -b; }
  friend GeneralizedForm operator*(GeneralizedForm a, const Rational& x) { return a *= x; }
  friend GeneralizedForm operator*(const Rational& x, GeneralizedForm a) { return a *= x; }

  friend bool operator==(const GeneralizedForm&, const GeneralizedForm&) = default;

  void require_compatible(const GeneralizedForm& o) const {
    if (chart_ != o.chart_) throw MismatchError("generalized forms on different charts");
    if (params_ != o.params_) throw MismatchError("generalized forms with different Koszul parameters");
  }

 private:
  Chart chart_;
  KoszulParams params_;
  Components comps_;
};

/// Product in the graded tensor algebra:
/// (a (x) zeta_S)(b (x) zeta_T) = (-1)^{|S| deg b} (a ^ b) (x) (zeta_S zeta_T).
inline GeneralizedForm wedge(const GeneralizedForm& x, const GeneralizedForm& y) {
  x.require_compatible(y);
  GeneralizedForm r(x.chart(), x.params());
  for (const auto& [s, a] : x.components()) {
    for (const auto& [t, b] : y.components()) {
      const int zeta_sign = merge_sign(s, t);
      if (zeta_sign == 0) continue;
      for (int q : b.degrees()) {
        OrdinaryForm ab = wedge(a, b.part(q));
        const int sign = zeta_sign * parity_sign(static_cast<long>(s.size()) * q);
        if (sign < 0) ab = -ab;
        r.add_component(merge(s, t), ab);
      }
    }
  }
  return r;
}

/// Induced differential: a (x) zeta_S -> da (x) zeta_S + (-1)^{deg a} a (x) d(zeta_S).
inline GeneralizedForm differential(const GeneralizedForm& x) {
  GeneralizedForm r(x.chart(), x.params());
  for (const auto& [s, a] : x.components()) {
    r.add_component(s, differential(a));
    const KoszulElement dz = monomial_differential(x.params(), s);
    if (dz.is_zero()) continue;
    for (int q : a.degrees()) {
      const OrdinaryForm aq = a.part(q);
      r += GeneralizedForm::tensor(parity_sign(q) < 0 ? -aq : aq, dz);
    }
  }
  return r;
}

/// A generalized form with a single generator written as the pair
/// (a_p, a_{p+1}) <-> a_p + a_{p+1} zeta.
struct FormPair {
  int degree = 0;
  OrdinaryForm low;   // a_p
  OrdinaryForm high;  // a_{p+1}
};

inline GeneralizedForm pair_encode(const OrdinaryForm& low, const OrdinaryForm& high,
                                   const Rational& k) {
  low.require_same_chart(high);
  const auto dl = low.degree();
  const auto dh = high.degree();
  if (!dl || !dh) throw DomainError("pair entries must be homogeneous");
  if (!low.is_zero() && !high.is_zero() && *dh != *dl + 1)
    throw DomainError("pair entries must have degrees p and p+1");
  GeneralizedForm r(low.chart(), KoszulParams({k}));
  r.add_component(IndexSet{}, low);
  r.add_component(IndexSet::single(0), high);
  return r;
}

inline FormPair pair_decode(const GeneralizedForm& x) {
  if (x.params().n() != 1) throw DomainError("pair decoding needs exactly one generator");
  const auto p = x.degree();
  if (!p) throw DomainError("pair decoding needs a homogeneous element");
  return FormPair{*p, x.component(IndexSet{}), x.component(IndexSet::single(0))};
}

}  // namespace negforms
