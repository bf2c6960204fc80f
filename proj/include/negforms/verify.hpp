#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "negforms/forms.hpp"
#include "negforms/generalized.hpp"
#include "negforms/koszul.hpp"
#include "negforms/pathspace.hpp"
#include "negforms/serialize.hpp"

namespace negforms::verify {

using json::Json;

struct GenConfig {
  std::uint64_t seed = 1;
  int chart_dim = 3;        // N_max
  int plot_domain_dim = 2;  // m_max
  int poly_degree = 3;      // d_max
  int koszul_n = 3;         // n_max
  int coeff_bound = 5;      // max |numerator|, max denominator
  int trials = 100;

  void validate() const {
    if (chart_dim < 1 || plot_domain_dim < 1 || poly_degree < 1 || koszul_n < 1 || coeff_bound < 1)
      throw DomainError("generator bounds must be positive");
    if (chart_dim > 8 || plot_domain_dim > 8 || koszul_n > 8)
      throw DomainError("generator dimensions above 8 are not supported");
    if (trials < 0) throw DomainError("trial count must be non-negative");
  }
};

/// Deliberate defects injected into the operations under test. Used as
/// negative controls: a suite that exercises the broken operation must fail.
enum class Mutation {
  kNone,
  kWedgeSign,       // drop the (-1)^{|S| deg b} factor of the tensor product
  kDropK,           // differential without the Koszul term
  kDerivationSign,  // differential without the (-1)^{deg a} factor
  kChenSign,        // Chen integral with the wrong sign
  kDropChen,        // map I without its Chen term
  kKernelPerturb,   // kernel suite uses g zeta + k f + 2 df zeta instead of g zeta + d(f zeta)
  kZetaIdempotent,  // zeta_i zeta_i = zeta_i instead of 0
};

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

/// Random values honoring the configured bounds. The stream of values depends
/// only on (cfg.seed, stream); draws use mt19937_64 and plain modular
/// reduction so results do not depend on the standard library's
/// distributions.
class Generator {
 public:
  Generator(const GenConfig& cfg, std::uint64_t stream)
      : cfg_(cfg), rng_(splitmix64(cfg.seed ^ splitmix64(stream))) {}

  int uniform(int lo, int hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<int>(rng_() % span);
  }
  bool coin() { return (rng_() & 1u) != 0; }

  Rational rational() {
    const int b = cfg_.coeff_bound;
    return Rational(uniform(-b, b), uniform(1, b));
  }
  Rational nonzero_rational() {
    const int b = cfg_.coeff_bound;
    const int num = uniform(1, b) * (coin() ? 1 : -1);
    return Rational(num, uniform(1, b));
  }

  /// One to four terms, each of total degree <= max_degree.
  Poly poly(const std::vector<std::string>& vars, int max_degree) {
    Poly p(vars);
    const int nterms = uniform(1, 4);
    for (int i = 0; i < nterms; ++i) {
      Exponents e(vars.size(), 0);
      int budget = uniform(0, max_degree);
      std::vector<std::size_t> order(vars.size());
      for (std::size_t j = 0; j < order.size(); ++j) order[j] = j;
      for (std::size_t j = order.size(); j > 1; --j)
        std::swap(order[j - 1], order[static_cast<std::size_t>(uniform(0, static_cast<int>(j) - 1))]);
      for (std::size_t j : order) {
        const int x = uniform(0, budget);
        e[j] = static_cast<unsigned>(x);
        budget -= x;
      }
      p.add_term(std::move(e), nonzero_rational());
    }
    return p;
  }
  Poly poly(const std::vector<std::string>& vars) { return poly(vars, cfg_.poly_degree); }

  Chart chart(int min_dim = 0) { return Chart::numbered("x", uniform(min_dim, cfg_.chart_dim)); }

  /// Homogeneous random p-form; zero when p < 0 or p > dim.
  OrdinaryForm form(const Chart& chart, int p) {
    OrdinaryForm w(chart);
    const int n = static_cast<int>(chart.dim());
    if (p < 0 || p > n) return w;
    std::vector<IndexSet> basis;
    for (std::uint32_t bits = 0; bits < (1u << n); ++bits)
      if (IndexSet(bits).size() == p) basis.emplace_back(bits);
    const std::size_t forced = static_cast<std::size_t>(uniform(0, static_cast<int>(basis.size()) - 1));
    for (std::size_t i = 0; i < basis.size(); ++i)
      if (i == forced || coin()) w.add_term(basis[i], poly(chart.coords()));
    return w;
  }

  /// Random mixed-degree form.
  OrdinaryForm any_form(const Chart& chart) {
    OrdinaryForm w(chart);
    for (int p = 0; p <= static_cast<int>(chart.dim()); ++p)
      if (coin()) w += form(chart, p);
    return w;
  }

  KoszulParams params(int n) {
    std::vector<Rational> k;
    for (int i = 0; i < n; ++i) k.push_back(rational());
    return KoszulParams(std::move(k));
  }
  KoszulParams params() { return params(uniform(0, cfg_.koszul_n)); }
  KoszulParams single_params() { return KoszulParams({nonzero_rational()}); }

  /// Homogeneous element of degree p in [-n, 0]; zero outside.
  KoszulElement koszul(const KoszulParams& params, int p) {
    KoszulElement u(params);
    const int n = static_cast<int>(params.n());
    if (p > 0 || p < -n) return u;
    for (std::uint32_t bits = 0; bits < (1u << n); ++bits)
      if (IndexSet(bits).size() == -p && coin()) u.add_term(IndexSet(bits), nonzero_rational());
    if (u.is_zero()) {
      std::uint32_t bits = (1u << (-p)) - 1u;
      u.add_term(IndexSet(bits), nonzero_rational());
    }
    return u;
  }

  KoszulElement any_koszul(const KoszulParams& params) {
    KoszulElement u(params);
    for (std::uint32_t bits = 0; bits < (1u << params.n()); ++bits)
      if (coin()) u.add_term(IndexSet(bits), rational());
    return u;
  }

  /// Homogeneous generalized form of degree p: a_S of degree p + |S| for
  /// each zeta monomial S.
  GeneralizedForm genform(const Chart& chart, const KoszulParams& params, int p) {
    GeneralizedForm a(chart, params);
    const int n = static_cast<int>(params.n());
    for (std::uint32_t bits = 0; bits < (1u << n); ++bits) {
      const IndexSet s(bits);
      if (s.empty() || coin()) a.add_component(s, form(chart, p + s.size()));
    }
    return a;
  }

  GeneralizedForm genform(const Chart& chart, const KoszulParams& params) {
    return genform(chart, params, uniform(-static_cast<int>(params.n()), static_cast<int>(chart.dim())));
  }

  GeneralizedForm any_genform(const Chart& chart, const KoszulParams& params) {
    GeneralizedForm a = genform(chart, params);
    if (coin()) a += genform(chart, params);
    return a;
  }

  /// Plot with components of total degree <= d_max in (t, u1..um).
  Plot plot(int domain_dim, std::size_t target_dim) {
    const auto vars = Plot::path_chart(static_cast<std::size_t>(domain_dim)).coords();
    std::vector<Poly> comps;
    for (std::size_t i = 0; i < target_dim; ++i) comps.push_back(poly(vars));
    return Plot(static_cast<std::size_t>(domain_dim), std::move(comps));
  }
  Plot plot(std::size_t target_dim) { return plot(uniform(0, cfg_.plot_domain_dim), target_dim); }

  const GenConfig& config() const { return cfg_; }

 private:
  GenConfig cfg_;
  std::mt19937_64 rng_;
};

// --- operations under test, optionally mutated ----------------------------

struct Ops {
  Mutation mutation = Mutation::kNone;

  GeneralizedForm wedge(const GeneralizedForm& x, const GeneralizedForm& y) const {
    if (mutation == Mutation::kZetaIdempotent) return idempotent_wedge(x, y);
    if (mutation != Mutation::kWedgeSign) return negforms::wedge(x, y);
    GeneralizedForm r(x.chart(), x.params());
    for (const auto& [s, a] : x.components()) {
      GeneralizedForm single(x.chart(), x.params());
      single.add_component(s, a);
      // Multiplying by (-1)^{|S| deg b} again cancels the tensor sign.
      for (int q : y.degrees()) {
        GeneralizedForm part = negforms::wedge(single, y.part(q));
        r += parity_sign(static_cast<long>(s.size()) * q) < 0 ? -part : part;
      }
    }
    return r;
  }

  static GeneralizedForm idempotent_wedge(const GeneralizedForm& x, const GeneralizedForm& y) {
    GeneralizedForm r(x.chart(), x.params());
    for (const auto& [s, a] : x.components()) {
      for (const auto& [t, b] : y.components()) {
        const IndexSet fresh(t.bits() & ~s.bits());
        const int zeta_sign = merge_sign(s, fresh);
        for (int q : b.degrees()) {
          OrdinaryForm ab = negforms::wedge(a, b.part(q));
          if (zeta_sign * parity_sign(static_cast<long>(s.size()) * q) < 0) ab = -ab;
          r.add_component(merge(s, t), ab);
        }
      }
    }
    return r;
  }

  GeneralizedForm d(const GeneralizedForm& x) const {
    if (mutation != Mutation::kDropK && mutation != Mutation::kDerivationSign)
      return differential(x);
    GeneralizedForm r(x.chart(), x.params());
    for (const auto& [s, a] : x.components()) {
      r.add_component(s, differential(a));
      if (mutation == Mutation::kDerivationSign)
        r += GeneralizedForm::tensor(a, monomial_differential(x.params(), s));
    }
    return r;
  }

  PathForm imap(const GeneralizedForm& a) const {
    if (mutation != Mutation::kDropChen) return map_I(a);
    std::vector<PathForm> terms;
    for (int p : a.degrees()) {
      const OrdinaryForm low = a.component(IndexSet{}).part(p);
      terms.push_back(PathForm::ev_pull(1, low) - PathForm::ev_pull(0, low));
    }
    return PathForm::sum(std::move(terms));
  }

  OrdinaryForm chen(const OrdinaryForm& w, const Plot& plot) const {
    const OrdinaryForm r = chen_integral(w, plot);
    return mutation == Mutation::kChenSign ? -r : r;
  }

  PathForm wedge_prime(const GeneralizedForm& a, const GeneralizedForm& b) const {
    if (mutation == Mutation::kNone) return negforms::wedge_prime(a, b);
    return imap(wedge(a, b));
  }
};

// --- independent closed forms (oracles) -----------------------------------

/// (a_p, a_{p+1}) ^ (b_q, b_{q+1}) = (a_p b_q, a_p b_{q+1} + (-1)^q a_{p+1} b_q).
inline FormPair pair_wedge_closed_form(const FormPair& a, const FormPair& b) {
  OrdinaryForm high = wedge(a.low, b.high);
  const OrdinaryForm cross = wedge(a.high, b.low);
  high += parity_sign(b.degree) < 0 ? -cross : cross;
  return FormPair{a.degree + b.degree, wedge(a.low, b.low), high};
}

/// d(a_p, a_{p+1}) = (d a_p + (-1)^{p+1} k a_{p+1}, d a_{p+1}).
inline FormPair pair_d_closed_form(const FormPair& a, const Rational& k) {
  return FormPair{a.degree + 1, differential(a.low) + a.high * (k * Rational(parity_sign(a.degree + 1))),
                  differential(a.high)};
}

/// Right-hand side of the explicit transported-product formula:
/// ev1*(a_p b_q) - ev0*(a_p b_q) + k (-1)^{p+q+1} Chen(a_p b_{q+1} + (-1)^q a_{p+1} b_q),
/// built from ordinary-form operations only.
inline PathForm wedge_prime_closed_form(const FormPair& a, const FormPair& b, const Rational& k) {
  const OrdinaryForm low = wedge(a.low, b.low);
  OrdinaryForm high = wedge(a.low, b.high);
  const OrdinaryForm cross = wedge(a.high, b.low);
  high += parity_sign(b.degree) < 0 ? -cross : cross;
  return PathForm::ev_pull(1, low) - PathForm::ev_pull(0, low) +
         PathForm::scale(k * Rational(parity_sign(a.degree + b.degree + 1)), PathForm::chen(high));
}

// --- reports --------------------------------------------------------------

struct Failure {
  int trial;
  std::string check;
  Json inputs;
};

struct SuiteReport {
  std::string name;
  int trials = 0;
  std::vector<Failure> failures;
  double elapsed_ms = 0.0;

  bool passed() const { return failures.empty(); }
};

inline Json to_json(const SuiteReport& r) {
  Json failures = Json::array();
  for (const auto& f : r.failures)
    failures.push_back(Json{{"trial", f.trial}, {"check", f.check}, {"inputs", f.inputs}});
  return Json{{"suite", r.name},
              {"trials", r.trials},
              {"passed", r.passed()},
              {"failures", failures},
              {"elapsed_ms", r.elapsed_ms}};
}

// --- witnesses ------------------------------------------------------------

struct Witness {
  std::string label;
  GeneralizedForm alpha;
  Plot plot;
};

namespace detail {

inline Poly path_poly(std::size_t m, std::initializer_list<std::pair<Exponents, long>> terms) {
  Poly p(Plot::path_chart(m).coords());
  for (const auto& [e, c] : terms) p.add_term(e, Rational(c));
  return p;
}

}  // namespace detail

/// Nonzero homogeneous elements of degree >= 1 together with plots on which
/// their image under I does not vanish. The plots localize the path so that
/// either the endpoint terms or the Chen term is visible on its own.
inline std::vector<Witness> injectivity_witnesses() {
  const Rational k(3);
  const KoszulParams params({k});
  const Chart r2 = Chart::numbered("x", 2);
  const Chart r3 = Chart::numbered("x", 3);
  using detail::path_poly;

  std::vector<Witness> w;

  // dx1 on the plot x1 = t u1, x2 = 0: endpoint term du1.
  w.push_back({"dx1", GeneralizedForm::from_form(OrdinaryForm::dx(r2, 0), params),
               Plot(1, {path_poly(1, {{{1, 1}, 1}}), path_poly(1, {})})});

  // (dx1 ^ dx2) zeta on x1 = t, x2 = u1: pure Chen term k du1.
  {
    GeneralizedForm a(r2, params);
    a.add_component(IndexSet::single(0), wedge(OrdinaryForm::dx(r2, 0), OrdinaryForm::dx(r2, 1)));
    w.push_back({"dx1dx2.zeta", a, Plot(1, {path_poly(1, {{{1, 0}, 1}}), path_poly(1, {{{0, 1}, 1}})})});
  }

  // x1 dx2 + (dx1 ^ dx2) zeta on the same plot: (1 + k) du1.
  {
    GeneralizedForm a(r2, params);
    a.add_component(IndexSet{}, Poly::variable(r2.coords(), "x1") * OrdinaryForm::dx(r2, 1));
    a.add_component(IndexSet::single(0), wedge(OrdinaryForm::dx(r2, 0), OrdinaryForm::dx(r2, 1)));
    w.push_back({"x1dx2+dx1dx2.zeta", a,
                 Plot(1, {path_poly(1, {{{1, 0}, 1}}), path_poly(1, {{{0, 1}, 1}})})});
  }

  // dx1 ^ dx2 on x1 = t u1, x2 = t u2: endpoint term du1 ^ du2.
  w.push_back({"dx1dx2",
               GeneralizedForm::from_form(wedge(OrdinaryForm::dx(r2, 0), OrdinaryForm::dx(r2, 1)), params),
               Plot(2, {path_poly(2, {{{1, 1, 0}, 1}}), path_poly(2, {{{1, 0, 1}, 1}})})});

  // (dx1 ^ dx2 ^ dx3) zeta on x1 = t, x2 = u1, x3 = u2: -k du1 ^ du2.
  {
    GeneralizedForm a(r3, params);
    OrdinaryForm vol = wedge(wedge(OrdinaryForm::dx(r3, 0), OrdinaryForm::dx(r3, 1)), OrdinaryForm::dx(r3, 2));
    a.add_component(IndexSet::single(0), vol);
    w.push_back({"dx1dx2dx3.zeta", a,
                 Plot(2, {path_poly(2, {{{1, 0, 0}, 1}}), path_poly(2, {{{0, 1, 0}, 1}}),
                          path_poly(2, {{{0, 0, 1}, 1}})})});
  }
  return w;
}

// --- suites ---------------------------------------------------------------

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{
      "d_squared",      "leibniz", "supercomm", "associativity", "tensor_sign",
      "pair_equivalence", "chain_homotopy", "dI_commute", "kernel", "wedge_prime",
      "injectivity_witness"};
  return names;
}

namespace detail {

class TrialContext {
 public:
  TrialContext(SuiteReport& report, int trial) : report_(report), trial_(trial) {}

  template <typename T>
  void check(const std::string& name, const T& lhs, const T& rhs, const Json& inputs) {
    if (lhs == rhs) return;
    report_.failures.push_back(Failure{trial_, name, inputs});
  }
  void expect(const std::string& name, bool ok, const Json& inputs) {
    if (!ok) report_.failures.push_back(Failure{trial_, name, inputs});
  }

 private:
  SuiteReport& report_;
  int trial_;
};

using Trial = std::function<void(Generator&, const Ops&, TrialContext&)>;

inline void d_squared(Generator& g, const Ops& ops, TrialContext& ctx) {
  const Chart chart = g.chart();
  const OrdinaryForm w = g.any_form(chart);
  ctx.check("forms: d(dw) = 0", differential(differential(w)), OrdinaryForm(chart),
            Json{{"form", json::to_json(w)}});

  const KoszulParams params = g.params();
  const KoszulElement u = g.any_koszul(params);
  ctx.check("koszul: d(du) = 0", differential(differential(u)), KoszulElement(params),
            Json{{"element", json::to_json(u)}});

  const GeneralizedForm a = g.any_genform(chart, params);
  ctx.check("generalized: d(d alpha) = 0", ops.d(ops.d(a)), GeneralizedForm(chart, params),
            Json{{"alpha", json::to_json(a)}});
}

inline void leibniz(Generator& g, const Ops& ops, TrialContext& ctx) {
  const Chart chart = g.chart();
  const int n = static_cast<int>(chart.dim());
  {
    const int p = g.uniform(0, n);
    const OrdinaryForm a = g.form(chart, p);
    const OrdinaryForm b = g.form(chart, g.uniform(0, n));
    OrdinaryForm rhs = wedge(differential(a), b) + wedge(a, differential(b)) * Rational(parity_sign(p));
    ctx.check("forms: d(a^b) = da^b + (-1)^p a^db", differential(wedge(a, b)), rhs,
              Json{{"a", json::to_json(a)}, {"b", json::to_json(b)}});
  }
  const KoszulParams params = g.params();
  const int kn = static_cast<int>(params.n());
  {
    const int p = -g.uniform(0, kn);
    const KoszulElement u = g.koszul(params, p);
    const KoszulElement v = g.koszul(params, -g.uniform(0, kn));
    const KoszulElement rhs = wedge(differential(u), v) + wedge(u, differential(v)) * Rational(parity_sign(p));
    ctx.check("koszul: d(uv) = du v + (-1)^p u dv", differential(wedge(u, v)), rhs,
              Json{{"u", json::to_json(u)}, {"v", json::to_json(v)}});
  }
  {
    const int p = g.uniform(-kn, n);
    const GeneralizedForm a = g.genform(chart, params, p);
    const GeneralizedForm b = g.genform(chart, params);
    const GeneralizedForm rhs = ops.wedge(ops.d(a), b) + ops.wedge(a, ops.d(b)) * Rational(parity_sign(p));
    ctx.check("generalized: d(ab) = da b + (-1)^p a db", ops.d(ops.wedge(a, b)), rhs,
              Json{{"alpha", json::to_json(a)}, {"beta", json::to_json(b)}});
  }
}

inline void supercomm(Generator& g, const Ops& ops, TrialContext& ctx) {
  const Chart chart = g.chart();
  const int n = static_cast<int>(chart.dim());
  {
    const int p = g.uniform(0, n);
    const int q = g.uniform(0, n);
    const OrdinaryForm a = g.form(chart, p);
    const OrdinaryForm b = g.form(chart, q);
    ctx.check("forms: a^b = (-1)^pq b^a", wedge(a, b), wedge(b, a) * Rational(parity_sign(p * q)),
              Json{{"a", json::to_json(a)}, {"b", json::to_json(b)}});
  }
  const KoszulParams params = g.params();
  const int kn = static_cast<int>(params.n());
  {
    const int p = -g.uniform(0, kn);
    const int q = -g.uniform(0, kn);
    const KoszulElement u = g.koszul(params, p);
    const KoszulElement v = g.koszul(params, q);
    ctx.check("koszul: uv = (-1)^pq vu", wedge(u, v), wedge(v, u) * Rational(parity_sign(p * q)),
              Json{{"u", json::to_json(u)}, {"v", json::to_json(v)}});
  }
  {
    const int p = g.uniform(-kn, n);
    const int q = g.uniform(-kn, n);
    const GeneralizedForm a = g.genform(chart, params, p);
    const GeneralizedForm b = g.genform(chart, params, q);
    ctx.check("generalized: ab = (-1)^pq ba", ops.wedge(a, b), ops.wedge(b, a) * Rational(parity_sign(p * q)),
              Json{{"alpha", json::to_json(a)}, {"beta", json::to_json(b)}});
  }
}

inline void associativity(Generator& g, const Ops& ops, TrialContext& ctx) {
  const Chart chart = g.chart();
  {
    const OrdinaryForm a = g.any_form(chart), b = g.any_form(chart), c = g.any_form(chart);
    ctx.check("forms: (ab)c = a(bc)", wedge(wedge(a, b), c), wedge(a, wedge(b, c)),
              Json{{"a", json::to_json(a)}, {"b", json::to_json(b)}, {"c", json::to_json(c)}});
  }
  const KoszulParams params = g.params();
  {
    const KoszulElement u = g.any_koszul(params), v = g.any_koszul(params), w = g.any_koszul(params);
    ctx.check("koszul: (uv)w = u(vw)", wedge(wedge(u, v), w), wedge(u, wedge(v, w)),
              Json{{"u", json::to_json(u)}, {"v", json::to_json(v)}, {"w", json::to_json(w)}});
  }
  {
    const GeneralizedForm a = g.any_genform(chart, params), b = g.any_genform(chart, params),
                          c = g.any_genform(chart, params);
    ctx.check("generalized: (ab)c = a(bc)", ops.wedge(ops.wedge(a, b), c), ops.wedge(a, ops.wedge(b, c)),
              Json{{"alpha", json::to_json(a)}, {"beta", json::to_json(b)}, {"gamma", json::to_json(c)}});
  }
}

/// (a (x) b)(a' (x) b') = (-1)^{deg b deg a'} (a a') (x) (b b').
inline void tensor_sign(Generator& g, const Ops& ops, TrialContext& ctx) {
  const Chart chart = g.chart();
  const int n = static_cast<int>(chart.dim());
  const KoszulParams params = g.params();
  const int kn = static_cast<int>(params.n());
  const int pa2 = g.uniform(0, n);
  const int qb = -g.uniform(0, kn);
  const OrdinaryForm a = g.form(chart, g.uniform(0, n));
  const OrdinaryForm a2 = g.form(chart, pa2);
  const KoszulElement b = g.koszul(params, qb);
  const KoszulElement b2 = g.koszul(params, -g.uniform(0, kn));
  const GeneralizedForm lhs =
      ops.wedge(GeneralizedForm::tensor(a, b), GeneralizedForm::tensor(a2, b2));
  const GeneralizedForm rhs =
      GeneralizedForm::tensor(wedge(a, a2), wedge(b, b2)) * Rational(parity_sign(qb * pa2));
  ctx.check("generalized: tensor product sign rule", lhs, rhs,
            Json{{"a", json::to_json(a)}, {"b", json::to_json(b)}, {"a2", json::to_json(a2)},
                 {"b2", json::to_json(b2)}});
}

inline FormPair random_pair(Generator& g, const Chart& chart, int p) {
  return FormPair{p, g.form(chart, p), g.form(chart, p + 1)};
}

inline void pair_equivalence(Generator& g, const Ops& ops, TrialContext& ctx) {
  const Chart chart = g.chart(1);
  const int n = static_cast<int>(chart.dim());
  const Rational k = g.rational();
  const FormPair a = random_pair(g, chart, g.uniform(-1, n));
  const FormPair b = random_pair(g, chart, g.uniform(-1, n));
  const GeneralizedForm ea = pair_encode(a.low, a.high, k);
  const GeneralizedForm eb = pair_encode(b.low, b.high, k);
  const Json inputs{{"k", k.str()}, {"p", a.degree}, {"q", b.degree},
                    {"alpha", json::to_json(ea)}, {"beta", json::to_json(eb)}};

  const GeneralizedForm prod = ops.wedge(ea, eb);
  const FormPair want = pair_wedge_closed_form(a, b);
  ctx.check("pair product, zeta^0 part", prod.component(IndexSet{}), want.low, inputs);
  ctx.check("pair product, zeta^1 part", prod.component(IndexSet::single(0)), want.high, inputs);

  const GeneralizedForm da = ops.d(ea);
  const FormPair want_d = pair_d_closed_form(a, k);
  ctx.check("pair differential, zeta^0 part", da.component(IndexSet{}), want_d.low, inputs);
  ctx.check("pair differential, zeta^1 part", da.component(IndexSet::single(0)), want_d.high, inputs);
}

inline void chain_homotopy(Generator& g, const Ops& ops, TrialContext& ctx) {
  const Chart chart = g.chart(1);
  const OrdinaryForm w = g.form(chart, g.uniform(0, static_cast<int>(chart.dim())));
  const Plot plot = g.plot(chart.dim());
  const OrdinaryForm lhs = ops.chen(differential(w), plot) + differential(ops.chen(w, plot));
  const OrdinaryForm rhs = ev_pullback(1, w, plot) - ev_pullback(0, w, plot);
  ctx.check("Chen(dw) + d Chen(w) = ev1*w - ev0*w", lhs, rhs,
            Json{{"form", json::to_json(w)}, {"plot", json::to_json(plot)}});
}

inline void dI_commute(Generator& g, const Ops& ops, TrialContext& ctx) {
  const Chart chart = g.chart(1);
  const KoszulParams params = g.single_params();
  const GeneralizedForm a = g.genform(chart, params, g.uniform(-1, static_cast<int>(chart.dim())));
  const Plot plot = g.plot(chart.dim());
  ctx.check("I(d alpha) = d I(alpha)", evaluate(ops.imap(ops.d(a)), plot),
            differential(evaluate(ops.imap(a), plot)),
            Json{{"alpha", json::to_json(a)}, {"plot", json::to_json(plot)}});
}

inline void kernel(Generator& g, const Ops& ops, TrialContext& ctx) {
  const Chart chart = g.chart(1);
  const KoszulParams params = g.single_params();
  const Rational& k = params.k(0);
  const OrdinaryForm f = g.form(chart, 0);
  const OrdinaryForm gf = g.form(chart, 0);
  const Plot plot = g.plot(chart.dim());
  const KoszulElement zeta = KoszulElement::generator(params, 0);

  GeneralizedForm alpha = GeneralizedForm::tensor(gf, zeta);
  if (ops.mutation == Mutation::kKernelPerturb) {
    alpha += GeneralizedForm::from_form(f * k, params) +
             GeneralizedForm::tensor(differential(f) * Rational(2), zeta);
  } else {
    alpha += ops.d(GeneralizedForm::tensor(f, zeta));
  }
  ctx.check("I(g zeta + d(f zeta)) = 0", evaluate(ops.imap(alpha), plot), OrdinaryForm(plot.domain_chart()),
            Json{{"f", json::to_json(f)}, {"g", json::to_json(gf)}, {"k", k.str()},
                 {"alpha", json::to_json(alpha)}, {"plot", json::to_json(plot)}});
}

inline void wedge_prime_trial(Generator& g, const Ops& ops, TrialContext& ctx) {
  const Chart chart = g.chart(1);
  const int n = static_cast<int>(chart.dim());
  const KoszulParams params = g.single_params();
  const Rational& k = params.k(0);
  const FormPair a = random_pair(g, chart, g.uniform(1, n));
  const FormPair b = random_pair(g, chart, g.uniform(1, n));
  const GeneralizedForm ea = pair_encode(a.low, a.high, k);
  const GeneralizedForm eb = pair_encode(b.low, b.high, k);
  const Plot plot = g.plot(chart.dim());
  const Json inputs{{"alpha", json::to_json(ea)}, {"beta", json::to_json(eb)}, {"plot", json::to_json(plot)}};

  const OrdinaryForm ab = evaluate(ops.wedge_prime(ea, eb), plot);
  ctx.check("I(a)^'I(b) matches the explicit formula", ab,
            evaluate(wedge_prime_closed_form(a, b, k), plot), inputs);
  ctx.check("I(a)^'I(b) = (-1)^pq I(b)^'I(a)", ab,
            evaluate(ops.wedge_prime(eb, ea), plot) * Rational(parity_sign(a.degree * b.degree)), inputs);
  const OrdinaryForm rhs = evaluate(ops.wedge_prime(ops.d(ea), eb), plot) +
                           evaluate(ops.wedge_prime(ea, ops.d(eb)), plot) * Rational(parity_sign(a.degree));
  ctx.check("d(I(a)^'I(b)) = dI(a)^'I(b) + (-1)^p I(a)^'dI(b)", differential(ab), rhs, inputs);
}

inline Trial trial_for(const std::string& name) {
  if (name == "d_squared") return d_squared;
  if (name == "leibniz") return leibniz;
  if (name == "supercomm") return supercomm;
  if (name == "associativity") return associativity;
  if (name == "tensor_sign") return tensor_sign;
  if (name == "pair_equivalence") return pair_equivalence;
  if (name == "chain_homotopy") return chain_homotopy;
  if (name == "dI_commute") return dI_commute;
  if (name == "kernel") return kernel;
  if (name == "wedge_prime") return wedge_prime_trial;
  return nullptr;
}

}  // namespace detail

/// Runs the named property suite. Trial i draws from a generator seeded by
/// (cfg.seed, suite name, i), so any single trial can be replayed on its own.
inline SuiteReport run_suite(const std::string& name, const GenConfig& cfg,
                             Mutation mutation = Mutation::kNone) {
  cfg.validate();
  const Ops ops{mutation};
  SuiteReport report;
  report.name = name;
  const auto start = std::chrono::steady_clock::now();

  if (name == "injectivity_witness") {
    if (cfg.trials > 0) {
      const auto witnesses = injectivity_witnesses();
      for (std::size_t i = 0; i < witnesses.size(); ++i) {
        const auto& w = witnesses[i];
        detail::TrialContext ctx(report, static_cast<int>(i));
        ctx.expect("I(alpha) != 0 on witness plot " + w.label, !evaluate(ops.imap(w.alpha), w.plot).is_zero(),
                   Json{{"alpha", json::to_json(w.alpha)}, {"plot", json::to_json(w.plot)}});
      }
      report.trials = static_cast<int>(witnesses.size());
    }
  } else {
    const detail::Trial trial = detail::trial_for(name);
    if (!trial) throw DomainError("unknown suite '" + name + "'");
    const std::uint64_t base = fnv1a(name);
    for (int i = 0; i < cfg.trials; ++i) {
      Generator g(cfg, base + static_cast<std::uint64_t>(i));
      detail::TrialContext ctx(report, i);
      trial(g, ops, ctx);
    }
    report.trials = cfg.trials;
  }

  report.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace negforms::verify
