#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "negforms/error.hpp"
#include "negforms/forms.hpp"
#include "negforms/generalized.hpp"
#include "negforms/poly.hpp"
#include "negforms/rational.hpp"

namespace negforms {

/// Polynomial plot: a family of paths parametrized by u in U (dimension m),
/// given as the map (t, u1..um) -> R^N. The time coordinate is always first.
class Plot {
 public:
  static constexpr const char* kTime = "t";

  Plot(std::size_t domain_dim, std::vector<Poly> components)
      : domain_dim_(domain_dim), comps_(std::move(components)) {
    const Chart path = path_chart();
    for (const auto& c : comps_)
      if (c.vars() != path.coords()) throw MismatchError("plot component not over (t, u1..um)");
  }

  std::size_t domain_dim() const { return domain_dim_; }
  std::size_t target_dim() const { return comps_.size(); }
  const std::vector<Poly>& components() const { return comps_; }

  /// Coordinates (t, u1, ..., um) of [0,1] x U.
  Chart path_chart() const { return path_chart(domain_dim_); }
  Chart domain_chart() const { return Chart::numbered("u", domain_dim_); }

  static Chart path_chart(std::size_t domain_dim) {
    std::vector<std::string> c{kTime};
    const Chart domain = Chart::numbered("u", domain_dim);
    c.insert(c.end(), domain.coords().begin(), domain.coords().end());
    return Chart(std::move(c));
  }

  /// The map [0,1] x U -> X onto the given target chart.
  PolyMap graph_map(const Chart& target) const {
    require_target(target);
    return PolyMap(path_chart(), target, comps_);
  }

  /// ev_e o phi : U -> X for e in {0, 1}.
  PolyMap endpoint_map(int endpoint, const Chart& target) const {
    if (endpoint != 0 && endpoint != 1) throw DomainError("endpoint must be 0 or 1");
    require_target(target);
    std::vector<Poly> at;
    at.reserve(comps_.size());
    for (const auto& c : comps_) at.push_back(substitute(c, 0, Rational(endpoint)));
    return PolyMap(domain_chart(), target, std::move(at));
  }

  /// Plots only fix the target dimension; coordinate names come from the form.
  void require_target(const Chart& target) const {
    if (target.dim() != comps_.size())
      throw MismatchError("form chart dimension does not match plot target dimension");
  }

 private:
  std::size_t domain_dim_;
  std::vector<Poly> comps_;
};

/// Split of a form on [0,1] x U as dt ^ velocity + spatial, where neither
/// part has a dt leg. Both parts stay on the (t, u) chart so their
/// coefficients keep their t-dependence.
struct TimeSplit {
  OrdinaryForm velocity;
  OrdinaryForm spatial;
};

inline TimeSplit decompose(const OrdinaryForm& w, const std::string& time_var) {
  const int ti = static_cast<int>(w.chart().index_of(time_var));
  const IndexSet dt = IndexSet::single(ti);
  TimeSplit r{OrdinaryForm(w.chart()), OrdinaryForm(w.chart())};
  for (const auto& [idx, f] : w.components()) {
    if (!idx.contains(ti)) {
      r.spatial.add_term(idx, f);
      continue;
    }
    // dx_idx = sign * dt ^ dx_rest
    const IndexSet rest = idx.without(ti);
    const int sign = merge_sign(dt, rest);
    r.velocity.add_term(rest, sign > 0 ? f : -f);
  }
  return r;
}

namespace detail {

inline Chart drop_coordinate(const Chart& c, std::size_t i) {
  auto coords = c.coords();
  coords.erase(coords.begin() + static_cast<std::ptrdiff_t>(i));
  return Chart(std::move(coords));
}

/// Applies `coef` to every coefficient of a form without legs along
/// coordinate i and moves the result to the chart with that coordinate removed.
template <typename CoefFn>
OrdinaryForm eliminate_coordinate(const OrdinaryForm& w, std::size_t i, CoefFn coef) {
  const Chart target = drop_coordinate(w.chart(), i);
  OrdinaryForm r(target);
  for (const auto& [idx, f] : w.components())
    r.add_term(idx.remove_slot(static_cast<int>(i)), coef(f));
  return r;
}

}  // namespace detail

/// Integrates every coefficient over time_var in [0,1]; drops that coordinate.
inline OrdinaryForm integrate_time(const OrdinaryForm& w, const std::string& time_var) {
  const std::size_t ti = w.chart().index_of(time_var);
  return detail::eliminate_coordinate(
      w, ti, [ti](const Poly& f) { return integrate_unit_interval(f, ti); });
}

/// Sets time_var to a constant in every coefficient; drops that coordinate.
inline OrdinaryForm restrict_time(const OrdinaryForm& w, const std::string& time_var,
                                  const Rational& value) {
  const std::size_t ti = w.chart().index_of(time_var);
  return detail::eliminate_coordinate(
      w, ti, [ti, &value](const Poly& f) { return substitute(f, ti, value); });
}

/// First-order Chen integral: pull w back along the plot, keep the dt part and
/// integrate it over t in [0,1]. Lowers degree by one; functions go to zero.
inline OrdinaryForm chen_integral(const OrdinaryForm& w, const Plot& plot) {
  const OrdinaryForm pulled = pullback(plot.graph_map(w.chart()), w);
  return integrate_time(decompose(pulled, Plot::kTime).velocity, Plot::kTime);
}

/// ev_e^* w evaluated on the plot.
inline OrdinaryForm ev_pullback(int endpoint, const OrdinaryForm& w, const Plot& plot) {
  return pullback(plot.endpoint_map(endpoint, w.chart()), w);
}

/// Symbolic path-space form. Values are immutable expression trees shared by
/// pointer; the zero expression is an empty sum.
class PathForm {
 public:
  struct Node;

  static PathForm zero();
  static PathForm ev_pull(int endpoint, const OrdinaryForm& w);
  static PathForm chen(const OrdinaryForm& w);
  static PathForm wedge(const PathForm& left, const PathForm& right);
  static PathForm diff(const PathForm& child);
  static PathForm sum(std::vector<PathForm> terms);
  static PathForm scale(const Rational& c, const PathForm& child);

  const Node& node() const { return *node_; }
  bool is_zero() const;

  /// Degrees the expression can carry (empty for zero).
  std::set<int> degrees() const;

  friend PathForm operator+(const PathForm& a, const PathForm& b) { return sum({a, b}); }
  friend PathForm operator-(const PathForm& a, const PathForm& b) {
    return sum({a, scale(Rational(-1), b)});
  }

 private:
  explicit PathForm(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

struct EvPullNode {
  int endpoint;
  OrdinaryForm form;
};
struct ChenNode {
  OrdinaryForm form;
};
struct WedgeNode {
  PathForm left;
  PathForm right;
};
struct DiffNode {
  PathForm child;
};
struct SumNode {
  std::vector<PathForm> terms;
};
struct ScaleNode {
  Rational coeff;
  PathForm child;
};

struct PathForm::Node {
  std::variant<EvPullNode, ChenNode, WedgeNode, DiffNode, SumNode, ScaleNode> value;
};

inline PathForm PathForm::zero() {
  return PathForm(std::make_shared<const Node>(Node{SumNode{}}));
}

inline bool PathForm::is_zero() const {
  const auto* s = std::get_if<SumNode>(&node_->value);
  return s != nullptr && s->terms.empty();
}

inline PathForm PathForm::ev_pull(int endpoint, const OrdinaryForm& w) {
  if (endpoint != 0 && endpoint != 1) throw DomainError("endpoint must be 0 or 1");
  if (w.is_zero()) return zero();
  return PathForm(std::make_shared<const Node>(Node{EvPullNode{endpoint, w}}));
}

inline PathForm PathForm::chen(const OrdinaryForm& w) {
  // Functions integrate to zero, so only the positive-degree part is kept.
  OrdinaryForm kept = w - w.part(0);
  if (kept.is_zero()) return zero();
  return PathForm(std::make_shared<const Node>(Node{ChenNode{std::move(kept)}}));
}

inline PathForm PathForm::wedge(const PathForm& left, const PathForm& right) {
  if (left.is_zero() || right.is_zero()) return zero();
  return PathForm(std::make_shared<const Node>(Node{WedgeNode{left, right}}));
}

inline PathForm PathForm::diff(const PathForm& child) {
  if (child.is_zero()) return zero();
  return PathForm(std::make_shared<const Node>(Node{DiffNode{child}}));
}

inline PathForm PathForm::sum(std::vector<PathForm> terms) {
  std::vector<PathForm> kept;
  for (auto& t : terms)
    if (!t.is_zero()) kept.push_back(std::move(t));
  if (kept.size() == 1) return kept.front();
  return PathForm(std::make_shared<const Node>(Node{SumNode{std::move(kept)}}));
}

inline PathForm PathForm::scale(const Rational& c, const PathForm& child) {
  if (c.is_zero() || child.is_zero()) return zero();
  if (c == Rational(1)) return child;
  return PathForm(std::make_shared<const Node>(Node{ScaleNode{c, child}}));
}

inline std::set<int> PathForm::degrees() const {
  struct Visitor {
    std::set<int> operator()(const EvPullNode& n) const { return n.form.degrees(); }
    std::set<int> operator()(const ChenNode& n) const {
      std::set<int> r;
      for (int q : n.form.degrees()) r.insert(q - 1);
      return r;
    }
    std::set<int> operator()(const WedgeNode& n) const {
      std::set<int> r;
      for (int a : n.left.degrees())
        for (int b : n.right.degrees()) r.insert(a + b);
      return r;
    }
    std::set<int> operator()(const DiffNode& n) const {
      std::set<int> r;
      for (int q : n.child.degrees()) r.insert(q + 1);
      return r;
    }
    std::set<int> operator()(const SumNode& n) const {
      std::set<int> r;
      for (const auto& t : n.terms) r.merge(t.degrees());
      return r;
    }
    std::set<int> operator()(const ScaleNode& n) const { return n.child.degrees(); }
  };
  return std::visit(Visitor{}, node_->value);
}

/// Value of a path-space form on a plot: an ordinary form on the plot's
/// domain U.
inline OrdinaryForm evaluate(const PathForm& e, const Plot& plot) {
  struct Visitor {
    const Plot& plot;
    OrdinaryForm operator()(const EvPullNode& n) const { return ev_pullback(n.endpoint, n.form, plot); }
    OrdinaryForm operator()(const ChenNode& n) const { return chen_integral(n.form, plot); }
    OrdinaryForm operator()(const WedgeNode& n) const {
      return negforms::wedge(evaluate(n.left, plot), evaluate(n.right, plot));
    }
    OrdinaryForm operator()(const DiffNode& n) const { return differential(evaluate(n.child, plot)); }
    OrdinaryForm operator()(const SumNode& n) const {
      OrdinaryForm r(plot.domain_chart());
      for (const auto& t : n.terms) r += evaluate(t, plot);
      return r;
    }
    OrdinaryForm operator()(const ScaleNode& n) const { return evaluate(n.child, plot) * n.coeff; }
  };
  return std::visit(Visitor{plot}, e.node().value);
}

/// The map I from single-generator generalized forms to path-space forms:
/// w_p + w_{p+1} zeta -> ev_1^* w_p - ev_0^* w_p + k (-1)^{p+1} Chen(w_{p+1}).
/// Inhomogeneous input is mapped degree by degree.
inline PathForm map_I(const GeneralizedForm& a) {
  if (a.params().n() != 1) throw DomainError("map I is defined for a single Koszul generator");
  const Rational& k = a.params().k(0);
  std::vector<PathForm> terms;
  for (int p : a.degrees()) {
    const OrdinaryForm low = a.component(IndexSet{}).part(p);
    const OrdinaryForm high = a.component(IndexSet::single(0)).part(p + 1);
    terms.push_back(PathForm::ev_pull(1, low));
    terms.push_back(PathForm::scale(Rational(-1), PathForm::ev_pull(0, low)));
    terms.push_back(PathForm::scale(k * Rational(parity_sign(p + 1)), PathForm::chen(high)));
  }
  return PathForm::sum(std::move(terms));
}

/// Product transported through I: I(a) ^' I(b) = I(a ^ b). Defined only for
/// homogeneous inputs of degree >= 1 with k != 0, where I is injective.
inline PathForm wedge_prime(const GeneralizedForm& a, const GeneralizedForm& b) {
  a.require_compatible(b);
  if (a.params().n() != 1) throw DomainError("wedge' needs a single Koszul generator");
  if (a.params().k(0).is_zero()) throw DomainError("wedge' needs k != 0");
  if (a.is_zero() || b.is_zero()) return PathForm::zero();
  const auto p = a.degree();
  const auto q = b.degree();
  if (!p || !q) throw DomainError("wedge' needs homogeneous inputs");
  if (*p < 1 || *q < 1) throw DomainError("wedge' is only defined in degrees >= 1");
  return map_I(wedge(a, b));
}

}  // namespace negforms
