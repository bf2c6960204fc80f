#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "negforms/basis.hpp"
#include "negforms/error.hpp"
#include "negforms/rational.hpp"

namespace negforms {

/// Structure constants k_1..k_n of the Koszul differential, d(zeta_i) = k_i.
class KoszulParams {
 public:
  KoszulParams() = default;
  explicit KoszulParams(std::vector<Rational> k) : k_(std::move(k)) {
    if (k_.size() > static_cast<std::size_t>(IndexSet::kMaxIndex))
      throw DomainError("too many Koszul generators");
  }

  std::size_t n() const { return k_.size(); }
  const Rational& k(std::size_t i) const { return k_.at(i); }
  const std::vector<Rational>& ks() const { return k_; }

  friend bool operator==(const KoszulParams&, const KoszulParams&) = default;

 private:
  std::vector<Rational> k_;
};

/// Element of the exterior algebra on zeta_1..zeta_n with the grading
/// inverted: the monomial zeta_S has degree -|S|.
class KoszulElement {
 public:
  using Terms = std::map<IndexSet, Rational>;

  KoszulElement() = default;
  explicit KoszulElement(KoszulParams params) : params_(std::move(params)) {}

  static KoszulElement unit(const KoszulParams& params) { return monomial(params, IndexSet{}); }
  static KoszulElement generator(const KoszulParams& params, std::size_t i) {
    return monomial(params, IndexSet::single(static_cast<int>(i)));
  }
  static KoszulElement monomial(const KoszulParams& params, IndexSet s, const Rational& c = 1) {
    KoszulElement u(params);
    u.add_term(s, c);
    return u;
  }

  const KoszulParams& params() const { return params_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(IndexSet s, const Rational& c) {
    if (s.max_index() >= static_cast<int>(params_.n()))
      throw DomainError("zeta index exceeds generator count");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(s, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  /// Common degree (-|S|); 0 for the zero element; nullopt when mixed.
  std::optional<int> degree() const {
    std::set<int> ds;
    for (const auto& [s, c] : terms_) ds.insert(-s.size());
    if (ds.empty()) return 0;
    if (ds.size() > 1) return std::nullopt;
    return *ds.begin();
  }

  KoszulElement part(int p) const {
    KoszulElement r(params_);
    for (const auto& [s, c] : terms_)
      if (-s.size() == p) r.terms_.emplace(s, c);
    return r;
  }

  KoszulElement& operator+=(const KoszulElement& o) {
    require_same_params(o);
    for (const auto& [s, c] : o.terms_) add_term(s, c);
    return *this;
  }
  KoszulElement& operator*=(const Rational& x) {
    if (x.is_zero()) terms_.clear();
    for (auto& [s, c] : terms_) c *= x;
    return *this;
  }
  KoszulElement operator-() const {
    KoszulElement r = *this;
    return r *= Rational(-1);
  }
  friend KoszulElement operator+(KoszulElement a, const KoszulElement& b) { return a += b; }
  friend KoszulElement operator-(KoszulElement a, const KoszulElement& b) { return a += -b; }
  friend KoszulElement operator*(KoszulElement a, const Rational& x) { return a *= x; }
  friend KoszulElement operator*(const Rational& x, KoszulElement a) { return a *= x; }

  friend bool operator==(const KoszulElement&, const KoszulElement&) = default;

  void require_same_params(const KoszulElement& o) const {
    if (params_ != o.params_) throw MismatchError("Koszul elements with different parameters");
  }

 private:
  KoszulParams params_;
  Terms terms_;
};

/// Exterior product; generators have degree -1 and therefore anticommute.
inline KoszulElement wedge(const KoszulElement& u, const KoszulElement& v) {
  u.require_same_params(v);
  KoszulElement r(u.params());
  for (const auto& [s, a] : u.terms()) {
    for (const auto& [t, b] : v.terms()) {
      const int sign = merge_sign(s, t);
      if (sign == 0) continue;
      r.add_term(merge(s, t), sign > 0 ? a * b : -(a * b));
    }
  }
  return r;
}

/// d(zeta_S) for a single monomial: sum over j of (-1)^j k_{s_j} zeta_{S \ s_j},
/// j counting the degree -1 generators passed on the way to s_j.
inline KoszulElement monomial_differential(const KoszulParams& params, IndexSet s) {
  KoszulElement r(params);
  int passed = 0;
  for (int i : s.indices()) {
    const Rational& k = params.k(static_cast<std::size_t>(i));
    r.add_term(s.without(i), passed % 2 == 0 ? k : -k);
    ++passed;
  }
  return r;
}

/// The degree +1 superderivation with d(zeta_i) = k_i.
inline KoszulElement differential(const KoszulElement& u) {
  KoszulElement r(u.params());
  for (const auto& [s, c] : u.terms()) r += monomial_differential(u.params(), s) * c;
  return r;
}

}  // namespace negforms
