#include "polycontact/polysymplectic.hpp"

#include "polycontact/calculus.hpp"
#include "polycontact/nondegeneracy.hpp"
#include "polycontact/render.hpp"
#include "polycontact/susy.hpp"

namespace polycontact {

namespace {

const GaussianRational kI = GaussianRational::i();

Chart extended_chart(const char* extra, bool invertible, const char* parameter) {
  Chart::Builder b;
  for (const char* x : {"x0", "x1", "x2", "x3"}) b.base(x, Parity::even);
  for (const char* t : {"th1", "th2", "thb1", "thb2"}) b.base(t, Parity::odd);
  b.base(extra, Parity::even, invertible);
  if (parameter) b.parameter(parameter, Parity::even, true);
  return std::move(b).build();
}

std::vector<VectorField> frame(const Chart& chart) {
  std::vector<VectorField> out;
  for (std::size_t s = 0; s < chart.dim(); ++s) out.push_back(VectorField::coordinate(chart, s));
  return out;
}

std::string rank_witness(const NondegeneracyResult& nd) {
  std::string w = "rank " + std::to_string(nd.rank);
  for (const auto& c : nd.witness) w += " | " + render_plain(c);
  return w;
}

}  // namespace

const Chart& symplectization_chart() {
  static const Chart chart = extended_chart("l", false, nullptr);
  return chart;
}

const Chart& cone_chart() {
  static const Chart chart = extended_chart("r", true, "t");
  return chart;
}

VectorValuedForm pulled_back_alpha(const Chart& extended) { return polycontact_form(extended); }

VectorValuedForm symplectic_form() {
  const Chart& m = symplectization_chart();
  SuperPoly el = SuperPoly::exp(m.context(), m.base_generator(m.slot("l")));
  return exterior_derivative(el * pulled_back_alpha(m));
}

VectorValuedForm cone_form() {
  const Chart& c = cone_chart();
  return exterior_derivative(c.var("r").pow(2) * pulled_back_alpha(c));
}

SuperMap dilation_map(const Chart& cone) {
  std::vector<SuperPoly> fwd;
  for (std::size_t s = 0; s < cone.dim(); ++s) fwd.push_back(cone.coordinate(s));
  std::vector<SuperPoly> inv = fwd;
  const std::size_t r = cone.slot("r");
  const SuperPoly t = cone.var("t");
  fwd[r] = t * cone.coordinate(r);
  inv[r] = t.pow(-1) * cone.coordinate(r);
  return {cone, cone, std::move(fwd), std::move(inv)};
}

CheckReport verify_symplectization(const CheckOptions&) {
  const Chart& m = symplectization_chart();
  CheckRecorder rec("symplectize",
                    "omega = d(e^l pi^* alpha) is even and closed, equals e^l(dl dx^mu + i dl(theta sigma dthetabar + "
                    "dtheta sigma thetabar) + 2i dtheta sigma dthetabar) d/dx^mu and is non-degenerate");
  const SusySlots s = SusySlots::on(m);
  const std::size_t l = m.slot("l");
  const SuperPoly el = SuperPoly::exp(m.context(), m.base_generator(l));
  const SuperPoly dl = m.differential(l);
  const VectorValuedForm alpha = pulled_back_alpha(m);
  const VectorValuedForm omega = symplectic_form();

  rec.require_equal("pi^* alpha is alpha transported", alpha, transport(polycontact_form(susy_chart()), m));
  rec.require(omega.parity() == Parity::even, "omega is even");
  rec.require_zero("d omega = 0", exterior_derivative(omega));

  const std::array<SuperPoly, 2> th{m.coordinate(s.th[0]), m.coordinate(s.th[1])};
  const std::array<SuperPoly, 2> thb{m.coordinate(s.thb[0]), m.coordinate(s.thb[1])};
  const std::array<SuperPoly, 2> dth{m.differential(s.th[0]), m.differential(s.th[1])};
  const std::array<SuperPoly, 2> dthb{m.differential(s.thb[0]), m.differential(s.thb[1])};
  std::vector<SuperPoly> display(m.dim(), m.zero());
  for (std::size_t mu = 0; mu < 4; ++mu) {
    display[s.x[mu]] = el * (dl * m.differential(s.x[mu]) +
                             kI * (dl * (sigma_contract(mu, th, dthb) + sigma_contract(mu, dth, thb))) +
                             (2 * kI) * sigma_contract(mu, dth, dthb));
  }
  rec.require_equal("omega matches the coordinate display", omega, VectorValuedForm(m, display, Parity::even));

  const VectorValuedForm dalpha = exterior_derivative(alpha);
  rec.require_equal("Leibniz: omega = e^l(dl pi^*alpha + pi^* d alpha)", omega, el * (dl * alpha + dalpha));

  // l = 0 and dl = 0 leave pi^* d alpha.
  Substitution drop(m.context());
  drop.assign(m.base_generator(l), m.zero());
  drop.assign(m.fiber_generator(l), m.zero());
  std::vector<SuperPoly> reduced;
  for (const auto& c : omega.components()) reduced.push_back(drop.apply(c));
  rec.require_equal("omega at l = 0, dl = 0 is pi^* d alpha", VectorValuedForm(m, reduced, Parity::even), dalpha);

  auto basis = frame(m);
  NondegeneracyResult nd = nondegeneracy_check(omega, basis);
  rec.require(nd.nondegenerate, "omega is non-degenerate on the coordinate frame", [&] { return rank_witness(nd); });
  return rec.finish();
}

CheckReport verify_cone(const CheckOptions&) {
  const Chart& c = cone_chart();
  CheckRecorder rec("cone",
                    "varpi = d(r^2 alpha) is closed, non-degenerate for r > 0 and scales as Phi_t^* varpi = t^2 varpi "
                    "under r -> t r");
  const VectorValuedForm varpi = cone_form();
  rec.require(varpi.parity() == Parity::even, "varpi is even");
  rec.require_zero("d varpi = 0", exterior_derivative(varpi));

  const SuperMap phi = dilation_map(c);
  rec.require(phi.inverse_is_exact(), "dilation inverse is exact");
  const SuperPoly t2 = c.var("t").pow(2);
  for (std::size_t s = 0; s < c.dim(); ++s) {
    if (varpi[s].is_zero()) continue;
    rec.require_equal("Phi_t^* varpi^" + c.slot_name(s) + " = t^2 varpi^" + c.slot_name(s), pullback(phi, varpi[s]),
                      t2 * varpi[s]);
  }
  rec.require_equal("Phi_t acting on varpi is t^2 varpi", transform_vector_valued(phi, varpi), t2 * varpi);

  Substitution at_one(c.context());
  at_one.assign("t", c.constant(1));
  std::vector<SuperPoly> fwd1;
  std::vector<SuperPoly> inv1;
  for (std::size_t s = 0; s < c.dim(); ++s) {
    fwd1.push_back(at_one.apply(phi.forward()[s]));
    inv1.push_back(at_one.apply(phi.inverse()[s]));
  }
  SuperMap phi1(c, c, std::move(fwd1), std::move(inv1));
  rec.require_equal("Phi_1 is the identity on varpi", transform_vector_valued(phi1, varpi), varpi);

  auto basis = frame(c);
  NondegeneracyResult nd = nondegeneracy_check(varpi, basis);
  rec.require(nd.nondegenerate, "varpi is non-degenerate on the coordinate frame", [&] { return rank_witness(nd); });
  return rec.finish();
}

CheckReport verify_block_decomposition(const CheckOptions&) {
  const Chart& m = symplectization_chart();
  CheckRecorder rec("block-decomposition",
                    "on TM = ker(alpha) + ker(d alpha) + R: pi^* alpha vanishes on ker(alpha) and pairs "
                    "non-degenerately with the P block, pi^* d alpha vanishes on the P block and is non-degenerate on "
                    "ker(alpha), dl pairs non-degenerately with d/dl");
  const SusyGenerators g = build_generators(m);
  const VectorValuedForm alpha = pulled_back_alpha(m);
  const VectorValuedForm dalpha = exterior_derivative(alpha);
  const std::size_t l = m.slot("l");

  std::vector<VectorField> block_d{g.D[0], g.D[1], g.Dbar[0], g.Dbar[1]};
  std::vector<VectorField> block_p{g.P[0], g.P[1], g.P[2], g.P[3]};
  std::vector<VectorField> block_l{VectorField::coordinate(m, l)};

  for (std::size_t k = 0; k < block_d.size(); ++k) {
    rec.require_zero("i_X pi^* alpha = 0 on the D block (" + std::to_string(k) + ")", interior_product(block_d[k], alpha));
  }
  for (std::size_t mu = 0; mu < 4; ++mu) {
    rec.require_zero("i_P" + std::to_string(mu) + " pi^* d alpha = 0", interior_product(block_p[mu], dalpha));
  }
  NondegeneracyResult a_on_p = nondegeneracy_check(alpha, block_p);
  rec.require(a_on_p.nondegenerate, "pi^* alpha is non-degenerate on the P block", [&] { return rank_witness(a_on_p); });
  NondegeneracyResult da_on_d = nondegeneracy_check(dalpha, block_d);
  rec.require(da_on_d.nondegenerate, "pi^* d alpha is non-degenerate on the D block",
              [&] { return rank_witness(da_on_d); });

  const SuperPoly dl = m.differential(l);
  rec.require_equal("i_{d/dl} dl = 1", interior_product(block_l[0], dl), m.constant(1));
  NondegeneracyResult l_on_l = nondegeneracy_check(m, dl, block_l);
  rec.require(l_on_l.nondegenerate, "dl is non-degenerate on d/dl", [&] { return rank_witness(l_on_l); });
  rec.require_zero("dl vanishes on the D block", interior_product(block_d[0], dl));
  rec.require_zero("dl vanishes on the P block", interior_product(block_p[0], dl));
  return rec.finish();
}

}  // namespace polycontact
