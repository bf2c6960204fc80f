#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_set>
#include <vector>

#include "negforms/basis.hpp"
#include "negforms/error.hpp"
#include "negforms/poly.hpp"
#include "negforms/rational.hpp"

namespace negforms {

/// Ordered coordinate names of an open set in R^N. N = 0 is allowed.
class Chart {
 public:
  Chart() = default;
  explicit Chart(std::vector<std::string> coords) : coords_(std::move(coords)) {
    if (coords_.size() > static_cast<std::size_t>(IndexSet::kMaxIndex))
      throw DomainError("chart dimension exceeds supported maximum");
    std::unordered_set<std::string> seen;
    for (const auto& c : coords_)
      if (!seen.insert(c).second) throw DomainError("duplicate coordinate '" + c + "'");
  }

  /// Coordinates prefix1, prefix2, ..., prefixN.
  static Chart numbered(const std::string& prefix, std::size_t n) {
    std::vector<std::string> c;
    for (std::size_t i = 1; i <= n; ++i) c.push_back(prefix + std::to_string(i));
    return Chart(std::move(c));
  }

  std::size_t dim() const { return coords_.size(); }
  const std::vector<std::string>& coords() const { return coords_; }

  std::size_t index_of(const std::string& name) const {
    for (std::size_t i = 0; i < coords_.size(); ++i)
      if (coords_[i] == name) return i;
    throw DomainError("unknown coordinate '" + name + "'");
  }

  friend bool operator==(const Chart&, const Chart&) = default;

 private:
  std::vector<std::string> coords_;
};

/// Polynomial-coefficient differential form on a chart: a sum of f_I dx_I over
/// strictly increasing index tuples I. Mixed degrees are allowed.
class OrdinaryForm {
 public:
  using Components = std::map<IndexSet, Poly>;

  OrdinaryForm() = default;
  explicit OrdinaryForm(Chart chart) : chart_(std::move(chart)) {}

  static OrdinaryForm scalar(const Chart& chart, const Poly& f) {
    OrdinaryForm w(chart);
    w.add_term(IndexSet{}, f);
    return w;
  }
  static OrdinaryForm constant(const Chart& chart, const Rational& c) {
    return scalar(chart, Poly::constant(chart.coords(), c));
  }
  static OrdinaryForm coordinate(const Chart& chart, std::size_t i) {
    return scalar(chart, Poly::variable(chart.coords(), chart.coords().at(i)));
  }
  /// The basis 1-form dx_i.
  static OrdinaryForm dx(const Chart& chart, std::size_t i) {
    if (i >= chart.dim()) throw DomainError("coordinate index out of range");
    OrdinaryForm w(chart);
    w.add_term(IndexSet::single(static_cast<int>(i)), Poly::constant(chart.coords(), Rational(1)));
    return w;
  }

  const Chart& chart() const { return chart_; }
  const Components& components() const { return comps_; }
  bool is_zero() const { return comps_.empty(); }

  void add_term(IndexSet idx, const Poly& f) {
    if (f.vars() != chart_.coords()) throw MismatchError("coefficient not over chart coordinates");
    if (idx.max_index() >= static_cast<int>(chart_.dim()))
      throw DomainError("basis index exceeds chart dimension");
    if (f.is_zero()) return;
    auto [it, inserted] = comps_.try_emplace(idx, f);
    if (!inserted) {
      it->second += f;
      if (it->second.is_zero()) comps_.erase(it);
    }
  }

  /// Degrees that carry a nonzero component.
  std::set<int> degrees() const {
    std::set<int> r;
    for (const auto& [idx, f] : comps_) r.insert(idx.size());
    return r;
  }

  /// The common degree of all components; 0 for the zero form; nullopt when
  /// mixed.
  std::optional<int> degree() const {
    const auto ds = degrees();
    if (ds.empty()) return 0;
    if (ds.size() > 1) return std::nullopt;
    return *ds.begin();
  }

  /// Homogeneous part of degree p (zero for p < 0 or p > N).
  OrdinaryForm part(int p) const {
    OrdinaryForm r(chart_);
    for (const auto& [idx, f] : comps_)
      if (idx.size() == p) r.comps_.emplace(idx, f);
    return r;
  }

  OrdinaryForm operator-() const {
    OrdinaryForm r(chart_);
    for (const auto& [idx, f] : comps_) r.comps_.emplace(idx, -f);
    return r;
  }
  OrdinaryForm& operator+=(const OrdinaryForm& o) {
    require_same_chart(o);
    for (const auto& [idx, f] : o.comps_) add_term(idx, f);
    return *this;
  }
  OrdinaryForm& operator-=(const OrdinaryForm& o) { return *this += -o; }
  OrdinaryForm& operator*=(const Rational& s) {
    if (s.is_zero()) comps_.clear();
    for (auto& [idx, f] : comps_) f *= s;
    return *this;
  }

  friend OrdinaryForm operator+(OrdinaryForm a, const OrdinaryForm& b) { return a += b; }
  friend OrdinaryForm operator-(OrdinaryForm a, const OrdinaryForm& b) { return a -= b; }
  friend OrdinaryForm operator*(OrdinaryForm a, const Rational& s) { return a *= s; }
  friend OrdinaryForm operator*(const Rational& s, OrdinaryForm a) { return a *= s; }

  /// Multiplication by a function (0-form coefficient).
  friend OrdinaryForm operator*(const Poly& f, const OrdinaryForm& w) {
    OrdinaryForm r(w.chart_);
    for (const auto& [idx, g] : w.comps_) r.add_term(idx, f * g);
    return r;
  }

  friend bool operator==(const OrdinaryForm& a, const OrdinaryForm& b) {
    return a.chart_ == b.chart_ && a.comps_ == b.comps_;
  }

  void require_same_chart(const OrdinaryForm& o) const {
    if (chart_ != o.chart_) throw MismatchError("forms live on different charts");
  }

 private:
  Chart chart_;
  Components comps_;
};

/// Exterior product. On basis terms f dx_I ^ g dx_J the result is zero when I
/// and J share an index, otherwise sign(sort(I ++ J)) fg dx_{I u J}.
inline OrdinaryForm wedge(const OrdinaryForm& a, const OrdinaryForm& b) {
  a.require_same_chart(b);
  OrdinaryForm r(a.chart());
  for (const auto& [i, f] : a.components()) {
    for (const auto& [j, g] : b.components()) {
      const int s = merge_sign(i, j);
      if (s == 0) continue;
      Poly c = f * g;
      if (s < 0) c = -c;
      r.add_term(merge(i, j), c);
    }
  }
  return r;
}

/// Exterior derivative: f dx_I -> sum_j (d_j f) dx_j ^ dx_I.
inline OrdinaryForm differential(const OrdinaryForm& a) {
  const Chart& chart = a.chart();
  OrdinaryForm r(chart);
  for (const auto& [idx, f] : a.components()) {
    for (std::size_t j = 0; j < chart.dim(); ++j) {
      const IndexSet dj = IndexSet::single(static_cast<int>(j));
      const int s = merge_sign(dj, idx);
      if (s == 0) continue;
      Poly c = pderiv(f, j);
      if (c.is_zero()) continue;
      if (s < 0) c = -c;
      r.add_term(merge(dj, idx), c);
    }
  }
  return r;
}

/// Polynomial map between charts: one component per target coordinate, each
/// a polynomial in the source coordinates.
class PolyMap {
 public:
  PolyMap(Chart source, Chart target, std::vector<Poly> components)
      : source_(std::move(source)), target_(std::move(target)), comps_(std::move(components)) {
    if (comps_.size() != target_.dim())
      throw DomainError("map needs one component per target coordinate");
    for (const auto& c : comps_)
      if (c.vars() != source_.coords())
        throw MismatchError("map component not over source coordinates");
  }

  static PolyMap identity(const Chart& chart) {
    std::vector<Poly> comps;
    for (const auto& c : chart.coords()) comps.push_back(Poly::variable(chart.coords(), c));
    return PolyMap(chart, chart, std::move(comps));
  }

  const Chart& source() const { return source_; }
  const Chart& target() const { return target_; }
  const std::vector<Poly>& components() const { return comps_; }

 private:
  Chart source_;
  Chart target_;
  std::vector<Poly> comps_;
};

/// Pullback f dx_I -> (f o m) dm_{i1} ^ ... ^ dm_{ip}.
inline OrdinaryForm pullback(const PolyMap& m, const OrdinaryForm& a) {
  if (a.chart() != m.target()) throw MismatchError("form does not live on the map's target chart");
  const Chart& src = m.source();

  std::vector<OrdinaryForm> dm;
  dm.reserve(m.components().size());
  for (const auto& c : m.components()) dm.push_back(differential(OrdinaryForm::scalar(src, c)));

  OrdinaryForm r(src);
  for (const auto& [idx, f] : a.components()) {
    OrdinaryForm term = OrdinaryForm::scalar(src, compose(f, m.components(), src.coords()));
    for (int i : idx.indices()) {
      term = wedge(term, dm[static_cast<std::size_t>(i)]);
      if (term.is_zero()) break;
    }
    r += term;
  }
  return r;
}

}  // namespace negforms
