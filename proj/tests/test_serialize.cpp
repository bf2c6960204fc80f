#include <catch2/catch_amalgamated.hpp>

#include "negforms/serialize.hpp"
#include "negforms/verify.hpp"
#include "support.hpp"

using namespace negforms;
using testing::poly;
using testing::q;
namespace nj = negforms::json;

TEST_CASE("exact wire format", "[serialize]") {
  const Chart r2 = Chart::numbered("x", 2);
  const OrdinaryForm w = poly(r2.coords(), {{{0, 1}, q(-3, 2)}}) * OrdinaryForm::dx(r2, 0);
  CHECK(nj::to_json(w).dump() ==
        R"({"chart":["x1","x2"],"terms":[{"indices":[1],"poly":[{"coeff":"-3/2","exps":[0,1]}]}]})");
  CHECK(nj::to_json(q(4)).dump() == R"("4/1")");

  const KoszulParams params({q(2), q(1, 3)});
  const KoszulElement z = KoszulElement::monomial(params, IndexSet{0, 1});
  CHECK(nj::to_json(z).dump() == R"({"n":2,"k":["2/1","1/3"],"terms":[{"zetas":[1,2],"coeff":"1/1"}]})");
  CHECK(nj::to_json(PathForm::zero()).dump() == R"({"node":"Sum","children":[]})");
}

TEST_CASE("round trips", "[serialize][property]") {
  verify::GenConfig cfg;
  for (int trial = 0; trial < 50; ++trial) {
    verify::Generator g(cfg, 11000 + trial);
    const Chart chart = g.chart();
    const OrdinaryForm w = g.any_form(chart);
    REQUIRE(nj::form_from_json(nj::parse(nj::dump(nj::to_json(w)))) == w);

    const KoszulParams params = g.params();
    const KoszulElement u = g.any_koszul(params);
    REQUIRE(nj::koszul_from_json(nj::to_json(u)) == u);

    const GeneralizedForm a = g.any_genform(chart, params);
    REQUIRE(nj::genform_from_json(nj::parse(nj::dump(nj::to_json(a)))) == a);

    const Plot plot = g.plot(chart.dim());
    const Plot back = nj::plot_from_json(nj::to_json(plot));
    REQUIRE(back.domain_dim() == plot.domain_dim());
    REQUIRE(back.components() == plot.components());

    const GeneralizedForm s = g.genform(chart, g.single_params(), 1);
    const PathForm e = PathForm::diff(map_I(s)) + PathForm::wedge(map_I(s), PathForm::chen(w));
    const std::string text = nj::dump(nj::to_json(e));
    REQUIRE(nj::dump(nj::to_json(nj::pathform_from_json(nj::parse(text)))) == text);
  }
}

TEST_CASE("malformed documents raise ParseError", "[serialize]") {
  CHECK_THROWS_AS(nj::parse("{not json"), ParseError);
  CHECK_THROWS_AS(nj::rational_from_json(nj::Json(3)), ParseError);
  CHECK_THROWS_AS(nj::rational_from_json(nj::Json("1/0")), ParseError);
  CHECK_THROWS_AS(nj::form_from_json(nj::parse(R"({"terms":[]})")), ParseError);
  CHECK_THROWS_AS(nj::form_from_json(nj::parse(
                      R"({"chart":["x"],"terms":[{"indices":[2],"poly":[{"coeff":"1/1","exps":[0]}]}]})")),
                  ParseError);
  CHECK_THROWS_AS(nj::form_from_json(nj::parse(
                      R"({"chart":["x"],"terms":[{"indices":[1],"poly":[{"coeff":"1/1","exps":[0,1]}]}]})")),
                  ParseError);
  CHECK_THROWS_AS(nj::form_from_json(nj::parse(
                      R"({"chart":["x","y"],"terms":[{"indices":[2,1],"poly":[]}]})")),
                  ParseError);
  CHECK_THROWS_AS(nj::params_from_json(nj::parse(R"({"n":2,"k":["1/1"]})")), ParseError);
  CHECK_THROWS_AS(nj::plot_from_json(nj::parse(R"({"m":1,"target_dim":2,"components":[[]]})")), ParseError);
  CHECK_THROWS_AS(nj::pathform_from_json(nj::parse(R"({"node":"Integral"})")), ParseError);
  CHECK_THROWS_AS(nj::chart_from_json(nj::parse(R"(["x","x"])")), ParseError);
}
