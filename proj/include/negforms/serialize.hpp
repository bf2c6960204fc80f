#pragma once

// JSON interchange. Rationals travel as "num/den" strings; basis and zeta
// indices are 1-based on the wire and 0-based in memory.

#include <cstddef>
#include <string>
#include <vector>

#include <json.hpp>

#include "negforms/error.hpp"
#include "negforms/forms.hpp"
#include "negforms/generalized.hpp"
#include "negforms/koszul.hpp"
#include "negforms/pathspace.hpp"
#include "negforms/poly.hpp"
#include "negforms/rational.hpp"

namespace negforms::json {

using Json = nlohmann::ordered_json;

namespace detail {

inline Json indices_to_json(IndexSet s) {
  Json r = Json::array();
  for (int i : s.indices()) r.push_back(i + 1);
  return r;
}

inline IndexSet indices_from_json(const Json& j) {
  std::vector<int> idx;
  for (const auto& v : j) idx.push_back(v.get<int>() - 1);
  return IndexSet::from_indices(idx);
}

inline const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw ParseError(std::string("missing field '") + key + "'");
  return j.at(key);
}

/// Runs a parser and reports every failure as a ParseError.
template <typename Fn>
auto guarded(Fn fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(e.what());
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(e.what());
  }
}

}  // namespace detail

// --- Rational ------------------------------------------------------------

inline Json to_json(const Rational& r) { return r.str(); }

inline Rational rational_from_json(const Json& j) {
  if (!j.is_string()) throw ParseError("rational must be a \"num/den\" string");
  return Rational::parse(j.get<std::string>());
}

// --- Poly ----------------------------------------------------------------

inline Json to_json(const Poly& p) {
  Json r = Json::array();
  for (const auto& [e, c] : p.terms()) r.push_back(Json{{"coeff", c.str()}, {"exps", e}});
  return r;
}

inline Poly poly_from_json(const Json& j, const std::vector<std::string>& vars) {
  return detail::guarded([&] {
    if (!j.is_array()) throw ParseError("polynomial must be a list of terms");
    Poly p(vars);
    for (const auto& term : j) {
      const Rational c = rational_from_json(detail::field(term, "coeff"));
      Exponents e;
      for (const auto& x : detail::field(term, "exps")) {
        const long v = x.get<long>();
        if (v < 0) throw ParseError("negative exponent");
        e.push_back(static_cast<unsigned>(v));
      }
      if (e.size() != vars.size()) throw ParseError("exponent list does not match variables");
      p.add_term(std::move(e), c);
    }
    return p;
  });
}

// --- Chart / OrdinaryForm ------------------------------------------------

inline Json to_json(const Chart& c) { return Json(c.coords()); }

inline Chart chart_from_json(const Json& j) {
  return detail::guarded([&] { return Chart(j.get<std::vector<std::string>>()); });
}

/// The term list of a form, without its chart.
inline Json form_terms_to_json(const OrdinaryForm& w) {
  Json r = Json::array();
  for (const auto& [idx, f] : w.components())
    r.push_back(Json{{"indices", detail::indices_to_json(idx)}, {"poly", to_json(f)}});
  return r;
}

inline OrdinaryForm form_terms_from_json(const Json& j, const Chart& chart) {
  return detail::guarded([&] {
    if (!j.is_array()) throw ParseError("form terms must be a list");
    OrdinaryForm w(chart);
    for (const auto& term : j)
      w.add_term(detail::indices_from_json(detail::field(term, "indices")),
                 poly_from_json(detail::field(term, "poly"), chart.coords()));
    return w;
  });
}

inline Json to_json(const OrdinaryForm& w) {
  return Json{{"chart", to_json(w.chart())}, {"terms", form_terms_to_json(w)}};
}

inline OrdinaryForm form_from_json(const Json& j) {
  return detail::guarded([&] {
    const Chart chart = chart_from_json(detail::field(j, "chart"));
    return form_terms_from_json(detail::field(j, "terms"), chart);
  });
}

// --- Koszul --------------------------------------------------------------

inline Json to_json(const KoszulParams& params) {
  Json k = Json::array();
  for (const auto& x : params.ks()) k.push_back(x.str());
  return Json{{"n", params.n()}, {"k", k}};
}

inline KoszulParams params_from_json(const Json& j) {
  return detail::guarded([&] {
    const auto n = detail::field(j, "n").get<std::size_t>();
    std::vector<Rational> k;
    for (const auto& x : detail::field(j, "k")) k.push_back(rational_from_json(x));
    if (k.size() != n) throw ParseError("Koszul parameter list length differs from n");
    return KoszulParams(std::move(k));
  });
}

inline Json to_json(const KoszulElement& u) {
  Json r = to_json(u.params());
  Json terms = Json::array();
  for (const auto& [s, c] : u.terms())
    terms.push_back(Json{{"zetas", detail::indices_to_json(s)}, {"coeff", c.str()}});
  r["terms"] = terms;
  return r;
}

inline KoszulElement koszul_from_json(const Json& j) {
  return detail::guarded([&] {
    KoszulElement u(params_from_json(j));
    for (const auto& term : detail::field(j, "terms"))
      u.add_term(detail::indices_from_json(detail::field(term, "zetas")),
                 rational_from_json(detail::field(term, "coeff")));
    return u;
  });
}

// --- GeneralizedForm -----------------------------------------------------

inline Json to_json(const GeneralizedForm& a) {
  Json comps = Json::array();
  for (const auto& [s, w] : a.components())
    comps.push_back(Json{{"zetas", detail::indices_to_json(s)}, {"form", form_terms_to_json(w)}});
  return Json{{"chart", to_json(a.chart())}, {"koszul", to_json(a.params())}, {"components", comps}};
}

inline GeneralizedForm genform_from_json(const Json& j) {
  return detail::guarded([&] {
    const Chart chart = chart_from_json(detail::field(j, "chart"));
    GeneralizedForm a(chart, params_from_json(detail::field(j, "koszul")));
    for (const auto& c : detail::field(j, "components")) {
      const Json& form = detail::field(c, "form");
      // Accept either a bare term list or a full form object on the same chart.
      OrdinaryForm w = form.is_object() ? form_from_json(form) : form_terms_from_json(form, chart);
      a.add_component(detail::indices_from_json(detail::field(c, "zetas")), w);
    }
    return a;
  });
}

// --- Plot ----------------------------------------------------------------

inline Json to_json(const Plot& plot) {
  Json comps = Json::array();
  for (const auto& c : plot.components()) comps.push_back(to_json(c));
  return Json{{"m", plot.domain_dim()}, {"target_dim", plot.target_dim()}, {"components", comps}};
}

inline Plot plot_from_json(const Json& j) {
  return detail::guarded([&] {
    const auto m = detail::field(j, "m").get<std::size_t>();
    const auto n = detail::field(j, "target_dim").get<std::size_t>();
    const auto vars = Plot::path_chart(m).coords();
    std::vector<Poly> comps;
    for (const auto& c : detail::field(j, "components")) comps.push_back(poly_from_json(c, vars));
    if (comps.size() != n) throw ParseError("plot component count differs from target_dim");
    return Plot(m, std::move(comps));
  });
}

// --- PathForm ------------------------------------------------------------

inline Json to_json(const PathForm& e) {
  struct Visitor {
    Json operator()(const EvPullNode& n) const {
      return Json{{"node", "EvPull"}, {"endpoint", n.endpoint}, {"form", to_json(n.form)}};
    }
    Json operator()(const ChenNode& n) const { return Json{{"node", "Chen"}, {"form", to_json(n.form)}}; }
    Json operator()(const WedgeNode& n) const {
      return Json{{"node", "Wedge"}, {"left", to_json(n.left)}, {"right", to_json(n.right)}};
    }
    Json operator()(const DiffNode& n) const { return Json{{"node", "Diff"}, {"child", to_json(n.child)}}; }
    Json operator()(const SumNode& n) const {
      Json children = Json::array();
      for (const auto& t : n.terms) children.push_back(to_json(t));
      return Json{{"node", "Sum"}, {"children", children}};
    }
    Json operator()(const ScaleNode& n) const {
      return Json{{"node", "Scale"}, {"coeff", n.coeff.str()}, {"child", to_json(n.child)}};
    }
  };
  return std::visit(Visitor{}, e.node().value);
}

inline PathForm pathform_from_json(const Json& j) {
  return detail::guarded([&]() -> PathForm {
    const auto tag = detail::field(j, "node").get<std::string>();
    if (tag == "EvPull")
      return PathForm::ev_pull(detail::field(j, "endpoint").get<int>(),
                               form_from_json(detail::field(j, "form")));
    if (tag == "Chen") return PathForm::chen(form_from_json(detail::field(j, "form")));
    if (tag == "Wedge")
      return PathForm::wedge(pathform_from_json(detail::field(j, "left")),
                             pathform_from_json(detail::field(j, "right")));
    if (tag == "Diff") return PathForm::diff(pathform_from_json(detail::field(j, "child")));
    if (tag == "Sum") {
      std::vector<PathForm> terms;
      for (const auto& c : detail::field(j, "children")) terms.push_back(pathform_from_json(c));
      return PathForm::sum(std::move(terms));
    }
    if (tag == "Scale")
      return PathForm::scale(rational_from_json(detail::field(j, "coeff")),
                             pathform_from_json(detail::field(j, "child")));
    throw ParseError("unknown path form node '" + tag + "'");
  });
}

/// Canonical text: two-space indentation and a trailing newline.
inline std::string dump(const Json& j) { return j.dump(2) + "\n"; }

inline Json parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(e.what());
  }
}

}  // namespace negforms::json
