#include <catch2/catch_amalgamated.hpp>

#include "negforms/verify.hpp"
#include "support.hpp"

using namespace negforms;
using namespace negforms::verify;

TEST_CASE("generators are deterministic per seed and stream", "[verify]") {
  GenConfig cfg;
  cfg.seed = 42;
  Generator a(cfg, 3), b(cfg, 3), c(cfg, 4);
  const Chart chart = Chart::numbered("x", 3);
  const OrdinaryForm wa = a.any_form(chart);
  CHECK(wa == b.any_form(chart));
  bool differs = false;
  for (int i = 0; i < 10 && !differs; ++i) differs = !(a.any_form(chart) == c.any_form(chart));
  CHECK(differs);

  const SuiteReport r1 = run_suite("leibniz", cfg);
  const SuiteReport r2 = run_suite("leibniz", cfg);
  CHECK(to_json(r1)["failures"] == to_json(r2)["failures"]);
}

TEST_CASE("generator respects its bounds", "[verify]") {
  GenConfig cfg;
  Generator g(cfg, 0);
  const Chart chart = Chart::numbered("x", 2);
  CHECK(g.form(chart, 3).is_zero());
  CHECK(g.form(chart, -1).is_zero());
  for (int i = 0; i < 50; ++i) {
    const Plot plot = g.plot(2);
    CHECK(plot.domain_dim() <= static_cast<std::size_t>(cfg.plot_domain_dim));
    for (const auto& c : plot.components()) CHECK(static_cast<int>(c.total_degree()) <= cfg.poly_degree);
    const Rational r = g.rational();
    CHECK(abs(r.value().get_num()) <= cfg.coeff_bound);
    CHECK(r.value().get_den() <= cfg.coeff_bound);
  }
}

TEST_CASE("zero trials pass vacuously", "[verify]") {
  GenConfig cfg;
  cfg.trials = 0;
  for (const auto& name : suite_names()) {
    const SuiteReport r = run_suite(name, cfg);
    CHECK(r.trials == 0);
    CHECK(r.passed());
  }
}

TEST_CASE("unknown suite and bad config are errors", "[verify]") {
  GenConfig cfg;
  CHECK_THROWS_AS(run_suite("no_such_suite", cfg), DomainError);
  cfg.trials = -1;
  CHECK_THROWS_AS(run_suite("leibniz", cfg), DomainError);
}

TEST_CASE("every suite passes at the default bounds", "[verify]") {
  GenConfig cfg;
  cfg.seed = 7;
  for (const auto& name : suite_names()) {
    const SuiteReport r = run_suite(name, cfg);
    INFO(name);
    CHECK(r.passed());
  }
}

TEST_CASE("every suite catches some mutation", "[verify]") {
  GenConfig cfg;
  cfg.trials = 30;
  const std::vector<Mutation> mutations{Mutation::kWedgeSign,     Mutation::kDropK,
                                        Mutation::kDerivationSign, Mutation::kChenSign,
                                        Mutation::kDropChen,      Mutation::kKernelPerturb,
                                        Mutation::kZetaIdempotent};
  for (const auto& name : suite_names()) {
    bool caught = false;
    for (Mutation m : mutations) caught = caught || !run_suite(name, cfg, m).passed();
    INFO(name);
    CHECK(caught);
  }
}

TEST_CASE("kernel negative control is reported with its inputs", "[verify]") {
  GenConfig cfg;
  cfg.seed = 7;
  const SuiteReport r = run_suite("kernel", cfg, Mutation::kKernelPerturb);
  REQUIRE_FALSE(r.passed());
  const Json j = to_json(r);
  CHECK(j["passed"] == false);
  CHECK(j["failures"][0].contains("trial"));
  CHECK(j["failures"][0]["inputs"].contains("alpha"));
  CHECK(j["failures"][0]["inputs"].contains("plot"));
}

TEST_CASE("shipped witnesses are nonzero of degree at least one", "[verify]") {
  const auto ws = injectivity_witnesses();
  CHECK(ws.size() >= 3);
  for (const auto& w : ws) {
    INFO(w.label);
    REQUIRE(w.alpha.degree().has_value());
    CHECK(*w.alpha.degree() >= 1);
    CHECK(!evaluate(map_I(w.alpha), w.plot).is_zero());
  }
}
