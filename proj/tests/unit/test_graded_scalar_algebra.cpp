#include <doctest.h>

#include "polycontact/errors.hpp"
#include "polycontact/gaussian_rational.hpp"
#include "polycontact/laws.hpp"
#include "polycontact/monomial.hpp"
#include "polycontact/random_objects.hpp"
#include "polycontact/render.hpp"
#include "polycontact/super_poly.hpp"
#include "polycontact/chart.hpp"

using namespace polycontact;

namespace {

// x0, x1 even; th1, th2 odd; fibres dx0, dx1 (odd), dth1, dth2 (even); lambda even
// with exp atoms; eps1 odd and t invertible as parameters.
Chart algebra_chart() {
  Chart::Builder b;
  b.base("x0", Parity::even).base("x1", Parity::even).base("th1", Parity::odd).base("th2", Parity::odd);
  b.base("l", Parity::even).base("r", Parity::even, true);
  b.parameter("eps1", Parity::odd).parameter("t", Parity::even, true);
  return std::move(b).build();
}

const GaussianRational kI = GaussianRational::i();

}  // namespace

TEST_CASE("gaussian rationals are exact") {
  GaussianRational half(1, 2);
  CHECK(half + half == GaussianRational(1));
  CHECK(kI * kI == GaussianRational(-1));
  CHECK((GaussianRational(1) + kI) * (GaussianRational(1) - kI) == GaussianRational(2));
  CHECK(GaussianRational(3, 4).to_string() == "3/4");
  CHECK((GaussianRational(1, 2) + GaussianRational(3) * kI).to_string() == "1/2+3*I");
  CHECK((-kI).to_string() == "-I");
  CHECK(GaussianRational(6, 8) == GaussianRational(3, 4));
}

TEST_CASE("odd generators anticommute and square to zero") {
  Chart c = algebra_chart();
  SuperPoly th1 = c.var("th1"), th2 = c.var("th2");
  CHECK((th1 * th1).is_zero());
  CHECK(th2 * th1 == -(th1 * th2));
  CHECK(render_plain(th2 * th1) == "-th1*th2");
  CHECK(render_plain(th1 * th2) == "th1*th2");
}

TEST_CASE("moving an odd differential past an odd coordinate flips the sign") {
  // canonical order x0 < dx1 < th1 < th2
  GeneratorContext::Builder b;
  b.add("x0", Parity::even).add("dx1", Parity::odd, GeneratorKind::fiber).add("th1", Parity::odd).add("th2", Parity::odd);
  ContextPtr ctx = std::move(b).build();
  auto g = [&](const char* n) { return SuperPoly::generator(ctx, n); };
  SuperPoly lhs = (g("x0") * g("th1")) * (g("dx1") * g("th2"));
  CHECK(render_plain(lhs) == "-x0*dx1*th1*th2");
  SuperPoly canonical = SuperPoly::term(ctx, Monomial::power(ctx->index("x0"), 1).with_odd_mask(0b111), 1);
  CHECK(lhs == -canonical);
}

TEST_CASE("exponential atoms merge") {
  Chart c = algebra_chart();
  const auto& ctx = c.context();
  const GenIndex l = c.base_generator(c.slot("l"));
  SuperPoly el = SuperPoly::exp(ctx, l);
  CHECK(el * el == SuperPoly::exp(ctx, l, 2));
  CHECK(render_plain(el * el) == "exp(2*l)");
  CHECK(SuperPoly::exp(ctx, l, 1) * SuperPoly::exp(ctx, l, -1) == c.constant(1));
  CHECK_THROWS_AS(SuperPoly::exp(ctx, c.base_generator(c.slot("th1"))), ParityError);
}

TEST_CASE("laurent powers need an invertible generator") {
  Chart c = algebra_chart();
  SuperPoly r = c.var("r");
  CHECK(r * r.pow(-1) == c.constant(1));
  CHECK(render_plain(r.pow(-2)) == "r^(-2)");
  CHECK(c.var("t").pow(-1) * c.var("t").pow(3) == c.var("t").pow(2));
  CHECK_THROWS(c.var("x0").pow(-1));
}

TEST_CASE("parity queries") {
  Chart c = algebra_chart();
  CHECK((c.var("th1") * c.var("th2")).parity() == Parity::even);
  CHECK(c.var("dx0").parity() == Parity::odd);
  CHECK(c.var("dth1").parity() == Parity::even);
  CHECK_FALSE((c.var("x0") + c.var("th1")).parity().has_value());
  CHECK(c.zero().parity() == Parity::even);
}

TEST_CASE("left derivatives") {
  Chart c = algebra_chart();
  const auto& ctx = c.context();
  const GenIndex th1 = ctx->index("th1");
  SuperPoly a = c.var("th1"), b = c.var("th2");
  CHECK((a * b).derivative(th1) == b);
  CHECK((b * a).derivative(th1) == -b);
  const GenIndex l = ctx->index("l");
  SuperPoly e2 = SuperPoly::exp(ctx, l, 2) * c.var("x0");
  CHECK(e2.derivative(l) == GaussianRational(2) * e2);
  CHECK(c.var("x0").pow(3).derivative(ctx->index("x0")) == GaussianRational(3) * c.var("x0").pow(2));
  CHECK(c.var("r").pow(-1).derivative(ctx->index("r")) == -c.var("r").pow(-2));
}

TEST_CASE("odd derivatives anticommute") {
  Chart c = algebra_chart();
  const auto& ctx = c.context();
  const GenIndex th1 = ctx->index("th1"), th2 = ctx->index("th2");
  RandomObjects rnd(c, 7);
  for (int k = 0; k < 50; ++k) {
    SuperPoly f = rnd.poly(rnd.parity(), 4, 2, true);
    CHECK(f.derivative(th1).derivative(th2) == -f.derivative(th2).derivative(th1));
    CHECK(f.derivative(th1).derivative(th1).is_zero());
  }
}

TEST_CASE("supercommutativity, associativity and graded Leibniz on random elements") {
  Chart c = algebra_chart();
  RandomObjects rnd(c, 11);
  const GenIndex th2 = c.context()->index("th2");
  for (int k = 0; k < 100; ++k) {
    Parity pa = rnd.parity(), pb = rnd.parity();
    SuperPoly a = rnd.poly(pa, 3, 2, true), b = rnd.poly(pb, 3, 2, true), e = rnd.poly(rnd.parity(), 3, 2, true);
    CHECK(a * b == GaussianRational(koszul_sign(pa, pb)) * (b * a));
    CHECK((a * b) * e == a * (b * e));
    SuperPoly leibniz = a.derivative(th2) * b + GaussianRational(koszul_sign(Parity::odd, pa)) * (a * b.derivative(th2));
    CHECK((a * b).derivative(th2) == leibniz);
  }
}

TEST_CASE("naive word normaliser agrees with reorder_sign") {
  CHECK(naive_word_sign({1, 0}) == -1);
  CHECK(naive_word_sign({0, 1, 2}) == 1);
  CHECK(naive_word_sign({2, 1, 0}) == -1);
  CHECK(naive_word_sign({0, 2, 0}) == 0);
  CHECK(reorder_sign(0b10, 0b01) == -1);
  CHECK(reorder_sign(0b01, 0b10) == 1);
  CHECK(reorder_sign(0b11, 0b01) == 0);
}

TEST_CASE("substitution is a simultaneous graded homomorphism") {
  Chart c = algebra_chart();
  SuperPoly th1 = c.var("th1"), th2 = c.var("th2"), eps = c.var("eps1");

  Substitution shift(c.context());
  shift.assign("th1", th1 + eps);
  CHECK(shift.apply(th1 * th2) == th1 * th2 + eps * th2);

  Substitution same(c.context());
  same.assign("x0", c.var("x0"));
  SuperPoly f = c.var("x0").pow(2) * th1 + c.var("dx0") * th2;
  CHECK(same.apply(f) == f);

  Substitution dilate(c.context());
  dilate.assign("r", c.var("t") * c.var("r"));
  CHECK(dilate.apply(c.var("r").pow(2)) == c.var("t").pow(2) * c.var("r").pow(2));
  CHECK(dilate.apply(c.var("r").pow(-1)) == c.var("t").pow(-1) * c.var("r").pow(-1));

  // swap is simultaneous, not sequential
  Substitution swap(c.context());
  swap.assign("th1", th2).assign("th2", th1);
  CHECK(swap.apply(th1 * th2) == -(th1 * th2));

  Substitution bad(c.context());
  CHECK_THROWS_AS(bad.assign("th1", c.var("x0")), ParityError);
}

TEST_CASE("exponential substitution policy") {
  Chart c = algebra_chart();
  const auto& ctx = c.context();
  const GenIndex l = ctx->index("l");
  SuperPoly el = SuperPoly::exp(ctx, l);

  Substitution scale(ctx);
  scale.assign("l", GaussianRational(2) * c.var("l"));
  CHECK(scale.apply(el) == SuperPoly::exp(ctx, l, 2));

  // lambda -> lambda + th1 th2 : e^{th1 th2} = 1 + th1 th2
  Substitution nil(ctx);
  nil.assign("l", c.var("l") + c.var("th1") * c.var("th2"));
  CHECK(nil.apply(el) == el + el * c.var("th1") * c.var("th2"));

  Substitution shift(ctx);
  shift.assign("l", c.var("l") + c.constant(1));
  CHECK_THROWS_AS(shift.apply(el), UnsupportedSubstitution);

  Substitution square(ctx);
  square.assign("l", c.var("l").pow(2));
  CHECK_THROWS_AS(square.apply(el), UnsupportedSubstitution);
}

TEST_CASE("context mismatch is an error") {
  Chart a = algebra_chart();
  Chart b = algebra_chart();
  CHECK_THROWS_AS(a.var("x0") * b.var("x0"), ContextMismatch);
  CHECK(a.var("x0").transport(b.context()) == b.var("x0"));
}

TEST_CASE("body drops odd generators") {
  Chart c = algebra_chart();
  SuperPoly f = c.var("x0") + c.var("th1") * c.var("th2") + c.var("dth1");
  CHECK(f.body() == c.var("x0") + c.var("dth1"));
}
