#include <doctest.h>

#include "polycontact/calculus.hpp"
#include "polycontact/errors.hpp"
#include "polycontact/laws.hpp"
#include "polycontact/nondegeneracy.hpp"
#include "polycontact/random_objects.hpp"
#include "polycontact/render.hpp"
#include "polycontact/super_map.hpp"
#include "polycontact/susy.hpp"

using namespace polycontact;

namespace {

Chart classical_chart() {
  Chart::Builder b;
  b.base("x", Parity::even).base("y", Parity::even).base("z", Parity::even);
  return std::move(b).build();
}

Chart mixed_chart() {
  Chart::Builder b;
  b.base("x0", Parity::even).base("x1", Parity::even).base("th1", Parity::odd).base("th2", Parity::odd);
  b.parameter("c", Parity::even);
  return std::move(b).build();
}

}  // namespace

TEST_CASE("charts pair each coordinate with a parity-flipped differential") {
  Chart c = mixed_chart();
  CHECK(c.dim() == 4);
  for (std::size_t s = 0; s < c.dim(); ++s) {
    const auto& ctx = *c.context();
    CHECK(ctx[c.fiber_generator(s)].name == "d" + c.slot_name(s));
    CHECK(ctx[c.fiber_generator(s)].parity == flip(c.slot_parity(s)));
  }
  CHECK(c.parameters().size() == 1);
}

TEST_CASE("vector field components must match the declared parity") {
  Chart c = mixed_chart();
  std::vector<SuperPoly> comps(c.dim(), c.zero());
  comps[0] = c.var("th1");
  CHECK_THROWS_AS(VectorField(c, comps, Parity::even), ParityError);
  CHECK_NOTHROW(VectorField(c, comps, Parity::odd));
}

TEST_CASE("exterior derivative basics") {
  Chart c = classical_chart();
  CHECK(exterior_derivative(c, c.constant(5)).is_zero());
  SuperPoly w = c.var("dz") + c.var("x") * c.var("dy");
  CHECK(exterior_derivative(c, w) == c.var("dx") * c.var("dy"));
  CHECK(exterior_derivative(c, c.var("x") * c.var("y")) == c.var("dx") * c.var("y") + c.var("x") * c.var("dy"));
}

TEST_CASE("interior product on classical forms") {
  Chart c = classical_chart();
  SuperPoly w = c.var("dx") * c.var("dy");
  VectorField ex = VectorField::coordinate(c, c.slot("x"));
  VectorField ey = VectorField::coordinate(c, c.slot("y"));
  CHECK(interior_product(ex, w) == c.var("dy"));
  CHECK(interior_product(ey, w) == -c.var("dx"));
  CHECK(interior_product(ex, c.var("x") * c.var("y")).is_zero());
}

TEST_CASE("Lie derivative and commutator basics") {
  Chart c = mixed_chart();
  VectorField e0 = VectorField::coordinate(c, 0);
  VectorField e1 = VectorField::coordinate(c, 1);
  CHECK(lie_derivative(e0, c.var("x0")) == c.constant(1));
  CHECK(graded_commutator(e0, e1).is_zero());
  VectorField t1 = VectorField::coordinate(c, c.slot("th1"));
  // [d/dth1, th1 d/dth1] = d/dth1
  VectorField euler = c.var("th1") * t1;
  CHECK(graded_commutator(t1, euler) == t1);
  // odd fields: [d/dth1, d/dth1] = 2 (d/dth1)^2 = 0
  CHECK(graded_commutator(t1, t1).is_zero());
}

TEST_CASE("random calculus identities") {
  Chart c = mixed_chart();
  RandomObjects rnd(c, 99);
  for (int k = 0; k < 40; ++k) {
    SuperPoly w = rnd.poly(rnd.parity(), 3, 2, true);
    CHECK(exterior_derivative(c, exterior_derivative(c, w)).is_zero());
    VectorField x = rnd.field(rnd.parity(), 2, 2, k % 2 == 0);
    CHECK(lie_derivative(x, w) == lie_derivative_cartan(x, w));
    VectorValuedForm f = rnd.form(rnd.parity());
    CHECK(exterior_derivative(exterior_derivative(f)).is_zero());
    CHECK(lie_derivative(x, f) == lie_derivative_cartan(x, f));
  }
}

TEST_CASE("graded antisymmetry and Jacobi") {
  Chart c = mixed_chart();
  RandomObjects rnd(c, 5);
  for (int k = 0; k < 30; ++k) {
    Parity px = rnd.parity(), py = rnd.parity(), pz = rnd.parity();
    VectorField x = rnd.field(px), y = rnd.field(py), z = rnd.field(pz);
    CHECK(graded_commutator(x, y) == GaussianRational(-koszul_sign(px, py)) * graded_commutator(y, x));
    VectorField jac = GaussianRational(koszul_sign(px, pz)) * graded_commutator(x, graded_commutator(y, z)) +
                      GaussianRational(koszul_sign(py, px)) * graded_commutator(y, graded_commutator(z, x)) +
                      GaussianRational(koszul_sign(pz, py)) * graded_commutator(z, graded_commutator(x, y));
    CHECK(jac.is_zero());
  }
}

TEST_CASE("pullbacks") {
  Chart c = mixed_chart();
  SuperMap id = SuperMap::identity(c);
  SuperPoly w = c.var("x0") * c.var("dth1") + c.var("th2") * c.var("dx1");
  CHECK(pullback(id, w) == w);

  std::vector<SuperPoly> fwd, inv;
  for (std::size_t s = 0; s < c.dim(); ++s) {
    fwd.push_back(c.coordinate(s));
    inv.push_back(c.coordinate(s));
  }
  fwd[0] = c.var("x0") + c.var("c");
  inv[0] = c.var("x0") - c.var("c");
  SuperMap shift(c, c, fwd, inv);
  CHECK(shift.inverse_is_exact());
  CHECK(pullback(shift, c.var("dx0")) == c.var("dx0"));
  CHECK(pullback(shift, c.var("x0").pow(2)) == (c.var("x0") + c.var("c")).pow(2));

  RandomObjects rnd(c, 3);
  for (int k = 0; k < 20; ++k) {
    SuperMap phi = rnd.invertible_map();
    SuperMap psi = rnd.invertible_map();
    CHECK(phi.inverse_is_exact());
    SuperPoly f = rnd.poly(rnd.parity(), 3, 2, true);
    CHECK(pullback(phi, exterior_derivative(c, f)) == exterior_derivative(c, pullback(phi, f)));
    CHECK(pullback(phi.after(psi), f) == pullback(psi, pullback(phi, f)));
  }
}

TEST_CASE("transform_vector_valued along the identity") {
  Chart c = mixed_chart();
  RandomObjects rnd(c, 8);
  VectorValuedForm f = rnd.form(Parity::odd);
  CHECK(transform_vector_valued(SuperMap::identity(c), f) == f);
}

TEST_CASE("body rank and explicit inversion agree") {
  Chart c = mixed_chart();
  RandomObjects rnd(c, 21);
  const SuperPoly one = c.constant(1);
  const SuperPoly th12 = c.var("th1") * c.var("th2");
  // identity plus a nilpotent perturbation is invertible; a zero-body row is not
  PolyMatrix good = {{one + th12, th12}, {c.zero(), one}};
  PolyMatrix bad = {{th12, c.zero()}, {c.zero(), one}};
  CHECK(invertible_by_linear_solve(good, c));
  CHECK_FALSE(invertible_by_linear_solve(bad, c));
  auto body = [](const PolyMatrix& m) {
    PolyMatrix out = m;
    for (auto& row : out)
      for (auto& e : row) e = e.body();
    return out;
  };
  CHECK(function_field_rank(body(good), c.context()).rank == 2);
  RankResult r = function_field_rank(body(bad), c.context());
  CHECK(r.rank == 1);
  CHECK_FALSE(r.kernel_vector.empty());
}

TEST_CASE("function-field rank treats polynomial entries as field elements") {
  Chart c = mixed_chart();
  SuperPoly x = c.var("x0"), y = c.var("x1");
  PolyMatrix m = {{x, y}, {x * x, x * y}};
  RankResult r = function_field_rank(m, c.context());
  CHECK(r.rank == 1);
  REQUIRE(r.kernel_vector.size() == 2);
  // the witness really combines the rows to zero
  for (std::size_t col = 0; col < 2; ++col) {
    CHECK((r.kernel_vector[0] * m[0][col] + r.kernel_vector[1] * m[1][col]).is_zero());
  }
}

TEST_CASE("non-degeneracy examples") {
  const Chart& c = susy_chart();
  const SusyGenerators g = build_generators(c);
  const VectorValuedForm alpha = polycontact_form(c);
  std::vector<VectorField> d_block{g.D[0], g.D[1], g.Dbar[0], g.Dbar[1]};
  CHECK(nondegeneracy_check(exterior_derivative(alpha), d_block).nondegenerate);
  std::vector<VectorField> d_only{g.D[0], g.D[1]};
  NondegeneracyResult a = nondegeneracy_check(alpha, d_only);
  CHECK_FALSE(a.nondegenerate);
  CHECK_FALSE(a.witness.empty());
  CHECK_FALSE(nondegeneracy_check(VectorValuedForm(c, Parity::odd), d_only).nondegenerate);
}
