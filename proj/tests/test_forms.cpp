#include <algorithm>

#include <catch2/catch_amalgamated.hpp>

#include "negforms/forms.hpp"
#include "negforms/verify.hpp"
#include "support.hpp"

using namespace negforms;
using testing::basis_form;
using testing::poly;
using testing::q;

namespace {

const Chart kR2 = Chart::numbered("x", 2);

/// Parity of the permutation sorting seq, by counting bubble-sort swaps.
int bubble_sign(std::vector<int> seq) {
  int swaps = 0;
  for (std::size_t i = 0; i < seq.size(); ++i)
    for (std::size_t j = 0; j + 1 < seq.size() - i; ++j)
      if (seq[j] > seq[j + 1]) {
        std::swap(seq[j], seq[j + 1]);
        ++swaps;
      }
  return swaps % 2 == 0 ? 1 : -1;
}

}  // namespace

TEST_CASE("form_wedge examples", "[forms]") {
  const OrdinaryForm dx1 = OrdinaryForm::dx(kR2, 0);
  const OrdinaryForm dx2 = OrdinaryForm::dx(kR2, 1);
  const OrdinaryForm dx12 = basis_form(kR2, {0, 1});
  CHECK(wedge(dx1, dx2) == dx12);
  CHECK(wedge(dx2, dx1) == -dx12);
  CHECK(wedge(dx1, dx1).is_zero());

  const Poly x1 = Poly::variable(kR2.coords(), "x1");
  const Poly x2 = Poly::variable(kR2.coords(), "x2");
  CHECK(wedge(x2 * dx1, x1 * dx2) == basis_form(kR2, {0, 1}, x1 * x2));
}

TEST_CASE("wedge signs match brute-force permutation parity", "[forms]") {
  const Chart r4 = Chart::numbered("x", 4);
  for (std::uint32_t a = 0; a < 16; ++a) {
    for (std::uint32_t b = 0; b < 16; ++b) {
      const IndexSet ia(a), ib(b);
      const OrdinaryForm w = wedge(basis_form(r4, ia.indices()), basis_form(r4, ib.indices()));
      if ((a & b) != 0) {
        CHECK(w.is_zero());
        continue;
      }
      std::vector<int> cat = ia.indices();
      const auto tail = ib.indices();
      cat.insert(cat.end(), tail.begin(), tail.end());
      CHECK(w == basis_form(r4, IndexSet(a | b).indices(), q(bubble_sign(cat))));
    }
  }
}

TEST_CASE("form_d examples", "[forms]") {
  const auto& v = kR2.coords();
  const Poly x1 = Poly::variable(v, "x1");
  const Poly x2 = Poly::variable(v, "x2");
  CHECK(differential(OrdinaryForm::scalar(kR2, x1 * x2)) ==
        x2 * OrdinaryForm::dx(kR2, 0) + x1 * OrdinaryForm::dx(kR2, 1));
  CHECK(differential(x2 * OrdinaryForm::dx(kR2, 0)) == -basis_form(kR2, {0, 1}));
  const OrdinaryForm w = OrdinaryForm::scalar(kR2, poly(v, {{{3, 2}, q(5)}, {{1, 0}, q(-1)}}));
  CHECK(differential(differential(w)).is_zero());
}

TEST_CASE("degree bookkeeping", "[forms]") {
  const OrdinaryForm mixed = OrdinaryForm::constant(kR2, q(1)) + OrdinaryForm::dx(kR2, 0);
  CHECK_FALSE(mixed.degree().has_value());
  CHECK(mixed.part(1) == OrdinaryForm::dx(kR2, 0));
  CHECK(mixed.part(-1).is_zero());
  CHECK(mixed.part(3).is_zero());
  CHECK(OrdinaryForm(kR2).degree() == 0);
  CHECK_THROWS_AS(basis_form(kR2, {2}), DomainError);
}

TEST_CASE("zero-dimensional charts hold scalars", "[forms]") {
  const Chart point;
  const OrdinaryForm c = OrdinaryForm::constant(point, q(3, 4));
  CHECK(c.degree() == 0);
  CHECK(differential(c).is_zero());
  CHECK(wedge(c, c) == OrdinaryForm::constant(point, q(9, 16)));
}

TEST_CASE("chart mismatch is an error", "[forms]") {
  const Chart other({"y1", "y2"});
  CHECK_THROWS_AS(wedge(OrdinaryForm::dx(kR2, 0), OrdinaryForm::dx(other, 0)), MismatchError);
  CHECK_THROWS_AS(OrdinaryForm::dx(kR2, 0) + OrdinaryForm::dx(other, 0), MismatchError);
  CHECK_THROWS_AS(Chart({"x", "x"}), DomainError);
}

TEST_CASE("form_pullback examples", "[forms]") {
  const Chart line({"x"});
  const Chart tu({"t", "u"});
  const PolyMap m(tu, line, {poly(tu.coords(), {{{1, 1}, q(1)}})});
  const Poly t = Poly::variable(tu.coords(), "t");
  const Poly u = Poly::variable(tu.coords(), "u");
  CHECK(pullback(m, OrdinaryForm::dx(line, 0)) == u * OrdinaryForm::dx(tu, 0) + t * OrdinaryForm::dx(tu, 1));

  const OrdinaryForm w = Poly::variable(kR2.coords(), "x1") * basis_form(kR2, {0, 1}) +
                         OrdinaryForm::scalar(kR2, poly(kR2.coords(), {{{0, 2}, q(2)}}));
  CHECK(pullback(PolyMap::identity(kR2), w) == w);

  const OrdinaryForm f = OrdinaryForm::scalar(line, poly({"x"}, {{{2}, q(1)}, {{0}, q(1)}}));
  CHECK(pullback(m, f) == OrdinaryForm::scalar(tu, poly(tu.coords(), {{{2, 2}, q(1)}, {{0, 0}, q(1)}})));

  CHECK_THROWS_AS(pullback(m, OrdinaryForm::dx(kR2, 0)), MismatchError);
}

TEST_CASE("graded algebra laws on random forms", "[forms][property]") {
  verify::GenConfig cfg;
  for (int trial = 0; trial < 100; ++trial) {
    verify::Generator g(cfg, 4000 + trial);
    const Chart chart = g.chart(1);
    const int n = static_cast<int>(chart.dim());
    const int p = g.uniform(0, n), r = g.uniform(0, n);
    const OrdinaryForm a = g.form(chart, p), b = g.form(chart, r);

    REQUIRE(differential(differential(a)).is_zero());
    REQUIRE(differential(wedge(a, b)) ==
            wedge(differential(a), b) + wedge(a, differential(b)) * q(parity_sign(p)));
    REQUIRE(wedge(a, b) == wedge(b, a) * q(parity_sign(p * r)));
  }
}

TEST_CASE("pullback is a dg-algebra map", "[forms][property]") {
  verify::GenConfig cfg;
  for (int trial = 0; trial < 60; ++trial) {
    verify::Generator g(cfg, 5000 + trial);
    const Chart target = g.chart(1);
    const Chart source = Chart::numbered("y", static_cast<std::size_t>(g.uniform(1, 3)));
    std::vector<Poly> comps;
    for (std::size_t i = 0; i < target.dim(); ++i) comps.push_back(g.poly(source.coords(), 2));
    const PolyMap m(source, target, comps);
    const OrdinaryForm a = g.any_form(target), b = g.any_form(target);

    REQUIRE(pullback(m, differential(a)) == differential(pullback(m, a)));
    REQUIRE(pullback(m, wedge(a, b)) == wedge(pullback(m, a), pullback(m, b)));
  }
}
