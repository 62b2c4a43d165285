#include <doctest.h>

#include "polycontact/calculus.hpp"
#include "polycontact/errors.hpp"
#include "polycontact/random_objects.hpp"
#include "polycontact/render.hpp"
#include "polycontact/sigma.hpp"
#include "polycontact/super_map.hpp"
#include "polycontact/susy.hpp"
#include "polycontact/susy_checks.hpp"

using namespace polycontact;

namespace {

const GaussianRational kI = GaussianRational::i();

struct Coords {
  const Chart& c = susy_chart();
  SusySlots s = SusySlots::on(c);
  std::array<SuperPoly, 2> th{c.coordinate(s.th[0]), c.coordinate(s.th[1])};
  std::array<SuperPoly, 2> thb{c.coordinate(s.thb[0]), c.coordinate(s.thb[1])};
  std::array<SuperPoly, 2> dth{c.differential(s.th[0]), c.differential(s.th[1])};
  std::array<SuperPoly, 2> dthb{c.differential(s.thb[0]), c.differential(s.thb[1])};
  std::array<SuperPoly, 2> eps{c.var("eps1"), c.var("eps2")};
  std::array<SuperPoly, 2> epsb{c.var("epsb1"), c.var("epsb2")};
  std::array<SuperPoly, 2> unit(int a) const {
    return {c.constant(a == 0 ? 1 : 0), c.constant(a == 1 ? 1 : 0)};
  }
  // sum over mu of f(mu) d/dx^mu with the given total parity
  template <typename F>
  VectorValuedForm along_x(F f, Parity p) const {
    std::vector<SuperPoly> comps(c.dim(), c.zero());
    for (std::size_t mu = 0; mu < 4; ++mu) comps[s.x[mu]] = f(mu);
    return {c, comps, p};
  }
  template <typename F>
  VectorField field_along_x(F f, Parity p) const {
    std::vector<SuperPoly> comps(c.dim(), c.zero());
    for (std::size_t mu = 0; mu < 4; ++mu) comps[s.x[mu]] = f(mu);
    return {c, comps, p};
  }
};

}  // namespace

TEST_CASE("sigma matrices") {
  const auto& s = sigma();
  CHECK(s[0] == identity_matrix(2));
  for (int i = 1; i < 4; ++i) {
    for (int j = 1; j < 4; ++j) {
      Matrix anti = matadd(matmul(s[i], s[j]), matmul(s[j], s[i]));
      CHECK(anti == matscale(GaussianRational(i == j ? 2 : 0), identity_matrix(2)));
    }
  }
  CHECK(s[2][0][1] == -kI);
  CHECK(s[2][1][0] == kI);
}

TEST_CASE("superspace chart parities") {
  Coords z;
  CHECK(z.c.var("dx0").parity() == Parity::odd);
  CHECK(z.c.var("dth1").parity() == Parity::even);
  std::size_t odd = 0;
  for (std::size_t k = 0; k < z.c.dim(); ++k) odd += is_odd(z.c.slot_parity(k));
  CHECK(z.c.dim() - odd == 4);
  CHECK(odd == 4);
}

TEST_CASE("supersymmetry map") {
  Coords z;
  SuperMap m = susy_map(z.c);
  CHECK(m.inverse_is_exact());
  for (int a = 0; a < 2; ++a) {
    CHECK(m.forward()[z.s.th[a]] == z.th[a] + z.eps[a]);
    CHECK(m.forward()[z.s.thb[a]] == z.thb[a] + z.epsb[a]);
  }
  for (std::size_t mu = 0; mu < 4; ++mu) {
    SuperPoly expected = z.c.differential(z.s.x[mu]) -
                         kI * (sigma_contract(mu, z.dth, z.epsb) + sigma_contract(mu, z.eps, z.dthb));
    CHECK(pullback(m, z.c.differential(z.s.x[mu])) == expected);
  }
}

TEST_CASE("generators act on coordinates as expected") {
  Coords z;
  SusyGenerators g = build_generators(z.c);
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) CHECK(g.Q[a].apply(z.th[b]) == z.c.constant(a == b ? 1 : 0));
    for (std::size_t mu = 0; mu < 4; ++mu) {
      CHECK(g.D[a].apply(z.c.coordinate(z.s.x[mu])) == -kI * sigma_contract(mu, z.unit(a), z.thb));
    }
    CHECK(g.R.apply(z.th[a]) == -kI * z.th[a]);
    CHECK(g.R.apply(z.thb[a]) == kI * z.thb[a]);
    CHECK(g.Q[a].parity() == Parity::odd);
    CHECK(g.Dbar[a].parity() == Parity::odd);
  }
  CHECK(g.R.parity() == Parity::even);
  CHECK(g.P[2].parity() == Parity::even);
}

TEST_CASE("the polycontact form") {
  Coords z;
  VectorValuedForm alpha = polycontact_form(z.c);
  CHECK(alpha.parity() == Parity::odd);
  // must carry genuine theta terms, otherwise most checks would be vacuous
  CHECK(alpha[z.s.x[0]].size() == 5);

  Substitution flat(z.c.context());
  for (int a = 0; a < 2; ++a) flat.assign(z.c.base_generator(z.s.th[a]), z.c.zero());
  for (int a = 0; a < 2; ++a) flat.assign(z.c.base_generator(z.s.thb[a]), z.c.zero());
  for (std::size_t mu = 0; mu < 4; ++mu) {
    CHECK(flat.apply(alpha[z.s.x[mu]]) == z.c.differential(z.s.x[mu]));
    // the dx^mu coefficient has body 1
    CHECK(alpha[z.s.x[mu]].derivative(z.c.fiber_generator(z.s.x[mu])).body() == z.c.constant(1));
  }

  VectorValuedForm dalpha = z.along_x(
      [&](std::size_t mu) { return (2 * kI) * sigma_contract(mu, z.dth, z.dthb); }, Parity::even);
  CHECK(exterior_derivative(alpha) == dalpha);
}

TEST_CASE("alpha is d minus the covariant-derivative part on superfields") {
  Coords z;
  SusyGenerators g = build_generators(z.c);
  VectorValuedForm alpha = polycontact_form(z.c);
  RandomObjects rnd(z.c, 17);
  for (int k = 0; k < 25; ++k) {
    SuperPoly phi = rnd.poly(rnd.parity(), 4, 2);
    SuperPoly lhs = z.c.zero();
    for (std::size_t mu = 0; mu < 4; ++mu) {
      lhs += alpha[z.s.x[mu]] * VectorField::coordinate(z.c, z.s.x[mu]).apply(phi);
    }
    SuperPoly rhs = exterior_derivative(z.c, phi);
    for (int a = 0; a < 2; ++a) rhs -= z.dth[a] * g.D[a].apply(phi) + z.dthb[a] * g.Dbar[a].apply(phi);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("contractions with alpha and d alpha") {
  Coords z;
  SusyGenerators g = build_generators(z.c);
  VectorValuedForm alpha = polycontact_form(z.c);
  VectorValuedForm dalpha = exterior_derivative(alpha);
  for (int a = 0; a < 2; ++a) {
    CHECK(interior_product(g.D[a], alpha).is_zero());
    CHECK(interior_product(g.Dbar[a], alpha).is_zero());
    CHECK(interior_product(g.D[a], dalpha) ==
          z.along_x([&](std::size_t mu) { return (-2 * kI) * sigma_contract(mu, z.unit(a), z.dthb); }, Parity::even));
    CHECK(interior_product(g.Dbar[a], dalpha) ==
          z.along_x([&](std::size_t mu) { return (-2 * kI) * sigma_contract(mu, z.dth, z.unit(a)); }, Parity::even));
  }
  for (std::size_t mu = 0; mu < 4; ++mu) {
    VectorValuedForm picked = interior_product(g.P[mu], alpha);
    for (std::size_t s = 0; s < z.c.dim(); ++s) {
      CHECK(picked[s] == z.c.constant(s == z.s.x[mu] ? 1 : 0));
    }
    CHECK(interior_product(g.P[mu], dalpha).is_zero());
  }
  CHECK_FALSE(interior_product(g.P[0], alpha).is_zero());
}

TEST_CASE("bracket table spot checks") {
  Coords z;
  SusyGenerators g = build_generators(z.c);
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      VectorField qq = graded_commutator(g.Q[a], g.Qbar[b]);
      VectorField expected = z.field_along_x(
          [&](std::size_t mu) { return z.c.constant((2 * kI) * sigma()[mu][a][b]); }, Parity::even);
      CHECK(qq == expected);
      CHECK_FALSE(qq.is_zero());
      CHECK((qq + graded_commutator(g.D[a], g.Dbar[b])).is_zero());
      CHECK(graded_commutator(g.Q[a], g.D[b]).is_zero());
      CHECK(graded_commutator(g.Q[a], g.Dbar[b]).is_zero());
    }
    CHECK(graded_commutator(g.R, g.Q[a]) == kI * g.Q[a]);
    CHECK(graded_commutator(g.R, g.Qbar[a]) == -kI * g.Qbar[a]);
  }
  CHECK(graded_commutator(g.R, g.R).is_zero());
  CHECK(render_plain(graded_commutator(g.Q[0], g.Qbar[0])) == "2*I*@x0 + 2*I*@x3");
}

TEST_CASE("strict contact fields and the negative control") {
  Coords z;
  SusyGenerators g = build_generators(z.c);
  VectorValuedForm alpha = polycontact_form(z.c);
  for (int a = 0; a < 2; ++a) {
    CHECK(lie_derivative(g.Q[a], alpha).is_zero());
    CHECK(lie_derivative(g.Qbar[a], alpha).is_zero());
  }
  CHECK(lie_derivative(g.R, alpha).is_zero());
  CHECK(lie_derivative(g.P[0], alpha).is_zero());
  VectorField euler = z.th[0] * VectorField::coordinate(z.c, z.s.th[0]);
  CHECK_FALSE(lie_derivative(euler, alpha).is_zero());
  // D is not a symmetry either
  CHECK_FALSE(lie_derivative(g.D[0], alpha).is_zero());
}

TEST_CASE("invariance maps") {
  Coords z;
  VectorValuedForm alpha = polycontact_form(z.c);
  CHECK(transform_vector_valued(susy_map(z.c), alpha) == alpha);
  CHECK(transform_vector_valued(translation_map(z.c), alpha) == alpha);
  CHECK(transform_vector_valued(r_phase_map(z.c), alpha) == alpha);
  LorentzPair boost = rational_z_boost();
  for (const auto& m : intertwining_residual(boost)) CHECK(is_zero(m));
  CHECK(transform_vector_valued(lorentz_map(z.c, boost), alpha) == alpha);

  // the same boost acting on x alone is refused by the intertwining precheck
  LorentzPair x_only{boost.lambda, identity_matrix(2)};
  CHECK_THROWS_AS(lorentz_map(z.c, x_only), PreconditionError);
}

TEST_CASE("decompositions of the supercharges and R") {
  Coords z;
  SusyGenerators g = build_generators(z.c);
  for (int a = 0; a < 2; ++a) {
    Decomposition q = decompose(g.Q[a]);
    CHECK(q.distribution_part == g.D[a]);
    CHECK(q.reeb_part == z.field_along_x(
                             [&](std::size_t mu) { return (2 * kI) * sigma_contract(mu, z.unit(a), z.thb); },
                             Parity::odd));
    Decomposition qb = decompose(g.Qbar[a]);
    CHECK(qb.distribution_part == g.Dbar[a]);
    CHECK(qb.reeb_part == z.field_along_x(
                              [&](std::size_t mu) { return (2 * kI) * sigma_contract(mu, z.th, z.unit(a)); },
                              Parity::odd));
  }
  Decomposition r = decompose(g.R);
  VectorField expected_d = kI * (z.thb[0] * g.Dbar[0] + z.thb[1] * g.Dbar[1] - z.th[0] * g.D[0] - z.th[1] * g.D[1]);
  CHECK(r.distribution_part == expected_d);
  CHECK(r.reeb_part ==
        z.field_along_x([&](std::size_t mu) { return (2 * GaussianRational(1)) * sigma_contract(mu, z.th, z.thb); },
                        Parity::even));
  Decomposition p = decompose(g.P[1]);
  CHECK(p.distribution_part.is_zero());
  CHECK(p.reeb_part == g.P[1]);
}

TEST_CASE("Maurer-Cartan series") {
  Coords z;
  MaurerCartanResult mc = susy_maurer_cartan(z.c);
  CHECK(mc.series.terminated);
  REQUIRE(mc.series.ad_powers.size() >= 2);
  CHECK(mc.series.ad_powers[2].is_zero());
  CHECK_FALSE(mc.series.ad_powers[1].is_zero());
  CHECK(mc.translation_part == polycontact_form(z.c));
  SusyGenerators g = build_generators(z.c);
  VectorValuedForm alpha = polycontact_form(z.c);
  std::vector<SuperPoly> comps = alpha.components();
  VectorField expected(z.c, comps, Parity::odd);
  expected = kI * expected;
  for (int a = 0; a < 2; ++a) expected += kI * (z.dth[a] * g.Q[a] + z.dthb[a] * g.Qbar[a]);
  CHECK(mc.i_omega == expected);
}

TEST_CASE("Reeb fields are the translations") {
  ReebResult r = reeb_solve();
  CHECK(r.report.status == CheckStatus::pass);
  SusyGenerators g = build_generators(susy_chart());
  REQUIRE(r.fields.size() == 4);
  for (std::size_t mu = 0; mu < 4; ++mu) {
    CHECK(r.dimensions[mu] == 1);
    CHECK(r.fields[mu] == g.P[mu]);
  }
}
