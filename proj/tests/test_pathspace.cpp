#include <catch2/catch_amalgamated.hpp>

#include "negforms/pathspace.hpp"
#include "negforms/verify.hpp"
#include "support.hpp"

using namespace negforms;
using testing::basis_form;
using testing::poly;
using testing::q;

namespace {

const Chart kLine({"x"});
const Chart kR2 = Chart::numbered("x", 2);
const Chart kTU = Plot::path_chart(1);  // (t, u1)
const Chart kU = Chart::numbered("u", 1);

/// Plot x = t u1 into the line.
Plot ramp() { return Plot(1, {poly(kTU.coords(), {{{1, 1}, q(1)}})}); }

Poly u_poly(std::initializer_list<std::pair<Exponents, Rational>> terms) {
  return poly(kU.coords(), terms);
}

}  // namespace

TEST_CASE("decompose examples", "[pathspace]") {
  const Poly t = Poly::variable(kTU.coords(), "t");
  const Poly u = Poly::variable(kTU.coords(), "u1");
  const OrdinaryForm dt = OrdinaryForm::dx(kTU, 0);
  const OrdinaryForm du = OrdinaryForm::dx(kTU, 1);

  const TimeSplit s = decompose(u * dt + t * du, "t");
  CHECK(s.velocity == OrdinaryForm::scalar(kTU, u));
  CHECK(s.spatial == t * du);

  const TimeSplit none = decompose(t * du, "t");
  CHECK(none.velocity.is_zero());
  CHECK(none.spatial == t * du);

  const TimeSplit pure = decompose(wedge(dt, du), "t");
  CHECK(pure.velocity == du);
  CHECK(pure.spatial.is_zero());
}

TEST_CASE("decompose reconstructs its input", "[pathspace][property]") {
  verify::GenConfig cfg;
  for (int trial = 0; trial < 50; ++trial) {
    verify::Generator g(cfg, 9000 + trial);
    const Chart chart = Plot::path_chart(static_cast<std::size_t>(g.uniform(0, 2)));
    const OrdinaryForm w = g.any_form(chart);
    const TimeSplit s = decompose(w, "t");
    REQUIRE(wedge(OrdinaryForm::dx(chart, 0), s.velocity) + s.spatial == w);
  }
}

TEST_CASE("chen_integral examples", "[pathspace]") {
  const Poly x = Poly::variable(kLine.coords(), "x");
  CHECK(chen_integral(OrdinaryForm::dx(kLine, 0), ramp()) ==
        OrdinaryForm::scalar(kU, u_poly({{{1}, q(1)}})));
  CHECK(chen_integral(x * OrdinaryForm::dx(kLine, 0), ramp()) ==
        OrdinaryForm::scalar(kU, u_poly({{{2}, q(1, 2)}})));
  CHECK(chen_integral(OrdinaryForm::scalar(kLine, x * x), ramp()).is_zero());
  CHECK_THROWS_AS(chen_integral(OrdinaryForm::dx(kR2, 0), ramp()), MismatchError);
}

TEST_CASE("ev_pullback examples", "[pathspace]") {
  const OrdinaryForm x = OrdinaryForm::scalar(kLine, Poly::variable(kLine.coords(), "x"));
  CHECK(ev_pullback(1, x, ramp()) == OrdinaryForm::scalar(kU, u_poly({{{1}, q(1)}})));
  CHECK(ev_pullback(0, x, ramp()).is_zero());
  CHECK_THROWS_AS(ev_pullback(2, x, ramp()), DomainError);
}

TEST_CASE("chain homotopy on a hand-computed instance", "[pathspace]") {
  // w = x1 dx2 along x1 = t u, x2 = u + t.
  const Plot plot(1, {poly(kTU.coords(), {{{1, 1}, q(1)}}), poly(kTU.coords(), {{{0, 1}, q(1)}, {{1, 0}, q(1)}})});
  const OrdinaryForm w = Poly::variable(kR2.coords(), "x1") * OrdinaryForm::dx(kR2, 1);
  const OrdinaryForm du = OrdinaryForm::dx(kU, 0);

  CHECK(chen_integral(w, plot) == OrdinaryForm::scalar(kU, u_poly({{{1}, q(1, 2)}})));
  CHECK(chen_integral(differential(w), plot) == u_poly({{{1}, q(1)}, {{0}, q(-1, 2)}}) * du);
  CHECK(ev_pullback(1, w, plot) == u_poly({{{1}, q(1)}}) * du);
  CHECK(ev_pullback(0, w, plot).is_zero());
  CHECK(chen_integral(differential(w), plot) + differential(chen_integral(w, plot)) ==
        ev_pullback(1, w, plot) - ev_pullback(0, w, plot));
}

TEST_CASE("path-space expression construction", "[pathspace]") {
  const OrdinaryForm dx = OrdinaryForm::dx(kLine, 0);
  const OrdinaryForm x = OrdinaryForm::scalar(kLine, Poly::variable(kLine.coords(), "x"));
  CHECK(PathForm::zero().is_zero());
  CHECK(PathForm::chen(x).is_zero());
  CHECK(PathForm::ev_pull(1, OrdinaryForm(kLine)).is_zero());
  CHECK(PathForm::scale(q(0), PathForm::chen(dx)).is_zero());
  CHECK(PathForm::wedge(PathForm::zero(), PathForm::chen(dx)).is_zero());

  CHECK(PathForm::chen(dx).degrees() == std::set<int>{0});
  CHECK(PathForm::ev_pull(0, dx).degrees() == std::set<int>{1});
  CHECK(PathForm::diff(PathForm::chen(dx)).degrees() == std::set<int>{1});
  CHECK(PathForm::wedge(PathForm::ev_pull(0, dx), PathForm::ev_pull(1, dx)).degrees() == std::set<int>{2});
}

TEST_CASE("eval examples", "[pathspace]") {
  CHECK(evaluate(PathForm::zero(), ramp()).is_zero());
  CHECK(evaluate(PathForm::chen(OrdinaryForm::dx(kLine, 0)), ramp()) ==
        OrdinaryForm::scalar(kU, u_poly({{{1}, q(1)}})));

  const PathForm e = PathForm::scale(q(3), PathForm::ev_pull(1, OrdinaryForm::dx(kLine, 0))) +
                     PathForm::diff(PathForm::chen(OrdinaryForm::dx(kLine, 0)));
  CHECK(evaluate(e, ramp()) == OrdinaryForm::dx(kU, 0) * q(4));
}

TEST_CASE("map_I examples", "[pathspace]") {
  const Rational k = q(5, 3);
  const KoszulParams params({k});
  const OrdinaryForm f = OrdinaryForm::scalar(kLine, poly(kLine.coords(), {{{2}, q(1)}, {{0}, q(7)}}));
  const OrdinaryForm dx = OrdinaryForm::dx(kLine, 0);
  const KoszulElement zeta = KoszulElement::generator(params, 0);

  CHECK(map_I(GeneralizedForm::tensor(f, zeta)).is_zero());

  const PathForm no_zeta = map_I(GeneralizedForm::from_form(dx, params));
  CHECK(evaluate(no_zeta, ramp()) == evaluate(PathForm::ev_pull(1, dx) - PathForm::ev_pull(0, dx), ramp()));

  // p = 0: I(f + w zeta) = ev1* f - ev0* f - k Chen(w).
  const OrdinaryForm w = Poly::variable(kLine.coords(), "x") * dx;
  const GeneralizedForm a = GeneralizedForm::from_form(f, params) + GeneralizedForm::tensor(w, zeta);
  const OrdinaryForm got = evaluate(map_I(a), ramp());
  // f(u) - f(0) - k u^2/2 with f = x^2 + 7.
  CHECK(got == OrdinaryForm::scalar(kU, u_poly({{{2}, q(1) - k * q(1, 2)}})));

  CHECK_THROWS_AS(map_I(GeneralizedForm::from_form(dx, KoszulParams({q(1), q(1)}))), DomainError);
}

TEST_CASE("kernel elements f + df zeta / k evaluate to zero", "[pathspace]") {
  const Rational k = q(-4, 7);
  const KoszulParams params({k});
  const OrdinaryForm f =
      OrdinaryForm::scalar(kR2, poly(kR2.coords(), {{{2, 1}, q(3)}, {{0, 1}, q(-1, 2)}, {{0, 0}, q(9)}}));
  const GeneralizedForm a = GeneralizedForm::from_form(f, params) +
                            GeneralizedForm::tensor(differential(f) * (q(1) / k), KoszulElement::generator(params, 0));
  const Plot plot(2, {poly(Plot::path_chart(2).coords(), {{{2, 1, 0}, q(1)}, {{0, 0, 1}, q(2)}}),
                      poly(Plot::path_chart(2).coords(), {{{1, 0, 0}, q(1)}, {{1, 1, 1}, q(-3)}})});
  CHECK(evaluate(map_I(a), plot).is_zero());
}

TEST_CASE("wedge_prime matches the explicit formula", "[pathspace]") {
  const Rational k = q(2);
  const KoszulParams params({k});
  const Poly x1 = Poly::variable(kR2.coords(), "x1");
  const FormPair a{1, OrdinaryForm::dx(kR2, 0), basis_form(kR2, {0, 1}, x1)};
  const FormPair b{1, x1 * OrdinaryForm::dx(kR2, 1), OrdinaryForm(kR2)};
  const GeneralizedForm ea = pair_encode(a.low, a.high, k);
  const GeneralizedForm eb = pair_encode(b.low, b.high, k);
  const Plot plot(2, {poly(Plot::path_chart(2).coords(), {{{1, 1, 0}, q(1)}, {{0, 0, 1}, q(1)}}),
                      poly(Plot::path_chart(2).coords(), {{{1, 0, 1}, q(1)}, {{2, 0, 0}, q(1)}})});

  const OrdinaryForm got = evaluate(wedge_prime(ea, eb), plot);
  CHECK(got == evaluate(verify::wedge_prime_closed_form(a, b, k), plot));
  CHECK(got == evaluate(wedge_prime(eb, ea), plot) * q(-1));
}

TEST_CASE("wedge_prime differs from the natural wedge", "[pathspace]") {
  // a = dx1, b = dx2 on x1 = t u1, x2 = t u2 with k = 1.
  const KoszulParams params({q(1)});
  const GeneralizedForm a = GeneralizedForm::from_form(OrdinaryForm::dx(kR2, 0), params);
  const GeneralizedForm b = GeneralizedForm::from_form(OrdinaryForm::dx(kR2, 1), params);
  const Chart path2 = Plot::path_chart(2);
  const auto& tu = path2.coords();
  const Plot plot(2, {poly(tu, {{{1, 1, 0}, q(1)}}), poly(tu, {{{1, 0, 1}, q(1)}})});

  const OrdinaryForm prime = evaluate(wedge_prime(a, b), plot);
  const OrdinaryForm natural = evaluate(PathForm::wedge(map_I(a), map_I(b)), plot);
  const Chart u2 = Chart::numbered("u", 2);
  CHECK(prime == basis_form(u2, {0, 1}));
  CHECK(natural == basis_form(u2, {0, 1}));

  // a = x1 dx2, b = dx1 on x1 = u1 + t, x2 = u2: I(b) = 0, so the natural
  // product vanishes, while I(a ^ b) = -du1 ^ du2.
  const GeneralizedForm c =
      GeneralizedForm::from_form(Poly::variable(kR2.coords(), "x1") * OrdinaryForm::dx(kR2, 1), params);
  const Plot slide(2, {poly(tu, {{{0, 1, 0}, q(1)}, {{1, 0, 0}, q(1)}}), poly(tu, {{{0, 0, 1}, q(1)}})});
  CHECK(evaluate(wedge_prime(c, a), slide) == -basis_form(u2, {0, 1}));
  CHECK(evaluate(PathForm::wedge(map_I(c), map_I(a)), slide).is_zero());
}

TEST_CASE("wedge_prime domain errors", "[pathspace]") {
  const OrdinaryForm dx1 = OrdinaryForm::dx(kR2, 0);
  const GeneralizedForm one = GeneralizedForm::from_form(dx1, KoszulParams({q(1)}));
  CHECK_THROWS_AS(wedge_prime(GeneralizedForm::from_form(dx1, KoszulParams({q(1), q(1)})),
                              GeneralizedForm::from_form(dx1, KoszulParams({q(1), q(1)}))),
                  DomainError);
  CHECK_THROWS_AS(wedge_prime(GeneralizedForm::from_form(dx1, KoszulParams({q(0)})),
                              GeneralizedForm::from_form(dx1, KoszulParams({q(0)}))),
                  DomainError);
  const GeneralizedForm fn = GeneralizedForm::from_form(OrdinaryForm::constant(kR2, q(1)), KoszulParams({q(1)}));
  CHECK_THROWS_AS(wedge_prime(fn, one), DomainError);
  CHECK_THROWS_AS(wedge_prime(one + fn, one), DomainError);
  CHECK_THROWS_AS(wedge_prime(one, GeneralizedForm::from_form(OrdinaryForm::dx(kLine, 0), KoszulParams({q(1)}))),
                  MismatchError);
  CHECK(wedge_prime(GeneralizedForm(kR2, KoszulParams({q(1)})), one).is_zero());
}

TEST_CASE("Chen integral is a chain homotopy on random inputs", "[pathspace][property]") {
  verify::GenConfig cfg;
  for (int trial = 0; trial < 100; ++trial) {
    verify::Generator g(cfg, 10000 + trial);
    const Chart chart = g.chart(1);
    const OrdinaryForm w = g.any_form(chart);
    const Plot plot = g.plot(chart.dim());
    REQUIRE(chen_integral(differential(w), plot) + differential(chen_integral(w, plot)) ==
            ev_pullback(1, w, plot) - ev_pullback(0, w, plot));
  }
}
