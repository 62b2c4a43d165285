#include "polycontact/susy_checks.hpp"

#include "polycontact/ansatz.hpp"
#include "polycontact/calculus.hpp"
#include "polycontact/errors.hpp"
#include "polycontact/nondegeneracy.hpp"
#include "polycontact/random_objects.hpp"
#include "polycontact/render.hpp"

namespace polycontact {

namespace {

const GaussianRational kI = GaussianRational::i();

std::string idx(const char* head, std::size_t i) { return head + std::to_string(i + 1); }

struct Susy {
  const Chart& chart = susy_chart();
  SusySlots s = SusySlots::on(chart);
  SusyGenerators g = build_generators(chart);
  VectorValuedForm alpha = polycontact_form(chart);

  std::array<SuperPoly, 2> th() const { return {chart.coordinate(s.th[0]), chart.coordinate(s.th[1])}; }
  std::array<SuperPoly, 2> thb() const { return {chart.coordinate(s.thb[0]), chart.coordinate(s.thb[1])}; }
  std::array<SuperPoly, 2> dth() const { return {chart.differential(s.th[0]), chart.differential(s.th[1])}; }
  std::array<SuperPoly, 2> dthb() const { return {chart.differential(s.thb[0]), chart.differential(s.thb[1])}; }
  std::array<SuperPoly, 2> unit(std::size_t a) const {
    std::array<SuperPoly, 2> out{chart.zero(), chart.zero()};
    out[a] = chart.constant(1);
    return out;
  }

  /// sum_mu f^mu d/dx^mu as a form of the given parity.
  VectorValuedForm x_form(const std::array<SuperPoly, 4>& f, Parity p) const {
    std::vector<SuperPoly> comps(chart.dim(), chart.zero());
    for (std::size_t mu = 0; mu < 4; ++mu) comps[s.x[mu]] = f[mu];
    return {chart, std::move(comps), p};
  }
  VectorField x_field(const std::array<SuperPoly, 4>& f, Parity p) const {
    std::vector<SuperPoly> comps(chart.dim(), chart.zero());
    for (std::size_t mu = 0; mu < 4; ++mu) comps[s.x[mu]] = f[mu];
    return {chart, std::move(comps), p};
  }
  template <typename Fn>
  std::array<SuperPoly, 4> per_mu(Fn&& fn) const {
    return {fn(0), fn(1), fn(2), fn(3)};
  }

  std::vector<VectorField> distribution_basis() const { return {g.D[0], g.D[1], g.Dbar[0], g.Dbar[1]}; }
};

const Susy& susy() {
  static const Susy instance;
  return instance;
}

// Setting theta = thetabar = 0 in a superfunction.
SuperPoly flat(const Susy& z, const SuperPoly& p) {
  Substitution sub(z.chart.context());
  for (std::size_t a = 0; a < 2; ++a) {
    sub.assign(z.chart.base_generator(z.s.th[a]), z.chart.zero());
    sub.assign(z.chart.base_generator(z.s.thb[a]), z.chart.zero());
  }
  return sub.apply(p);
}

}  // namespace

CheckReport verify_kernel_theorem(const CheckOptions& opts) {
  const Susy& z = susy();
  CheckRecorder rec("kernel-theorem",
                    "the kernel of alpha is spanned by D_a and Dbar^a: both contract alpha to zero and every "
                    "field X with i_X alpha = 0 in the bounded ansatz equals X^a D_a + Xbar_a Dbar^a");

  for (std::size_t a = 0; a < 2; ++a) {
    rec.require_zero("i_" + idx("D", a) + " alpha = 0", interior_product(z.g.D[a], z.alpha));
    rec.require_zero("i_" + idx("Db", a) + " alpha = 0", interior_product(z.g.Dbar[a], z.alpha));
  }
  rec.require(!interior_product(z.g.P[0], z.alpha).is_zero(), "d/dx0 is not in the kernel");
  rec.require(nondegeneracy_check(z.alpha, std::span<const VectorField>(z.g.D.data(), 2)).nondegenerate == false,
              "alpha is degenerate on {D_a}");

  // alpha at theta = thetabar = 0 is dx^mu d/dx^mu, hence nowhere vanishing.
  auto flat_alpha = z.x_form(z.per_mu([&](std::size_t mu) { return flat(z, z.alpha[z.s.x[mu]]); }), Parity::odd);
  auto dx = z.x_form(z.per_mu([&](std::size_t mu) { return z.chart.differential(z.s.x[mu]); }), Parity::odd);
  rec.require_equal("alpha at theta = thetabar = 0 is dx^mu d/dx^mu", flat_alpha, dx);

  // alpha = d - dtheta^a D_a - dthetabar_a Dbar^a as derivations.
  std::vector<SuperPoly> d_comps;
  for (std::size_t slot = 0; slot < z.chart.dim(); ++slot) d_comps.push_back(z.chart.differential(slot));
  VectorField rhs(z.chart, std::move(d_comps), Parity::odd);
  for (std::size_t a = 0; a < 2; ++a) {
    rhs -= z.dth()[a] * z.g.D[a];
    rhs -= z.dthb()[a] * z.g.Dbar[a];
  }
  rec.require_equal("alpha = d - dth^a D_a - dthb_a Db^a",
                    VectorField(z.chart, z.alpha.components(), Parity::odd), rhs);

  FieldAnsatz ansatz(z.chart, opts.kernel_xdeg);
  ImageSystem system(ansatz.size());
  for (std::size_t k = 0; k < ansatz.size(); ++k) {
    system.add_image(k, interior_product(ansatz.field(k), z.alpha).components());
  }
  LinearSolution sol = system.solve();
  const std::size_t expected_dim = 4 * ansatz.monomial_count();
  rec.require(sol.nullspace.size() == expected_dim, "solution space has one free function per odd leg", [&] {
    return "dimension " + std::to_string(sol.nullspace.size()) + ", expected " + std::to_string(expected_dim);
  });

  for (const auto& v : sol.nullspace) {
    auto [even, odd] = ansatz.assemble(v);
    bool all_zero = true;
    for (const VectorField* part : {&even, &odd}) {
      VectorField residual = *part;
      for (std::size_t a = 0; a < 2; ++a) {
        residual -= (*part)[z.s.th[a]] * z.g.D[a];
        residual -= (*part)[z.s.thb[a]] * z.g.Dbar[a];
      }
      if (!residual.is_zero()) {
        rec.require_zero("kernel solution minus its D-part", residual);
        all_zero = false;
        break;
      }
    }
    if (!all_zero) break;
  }
  rec.require(true, "every kernel solution lies in span{D, Dbar} (" + std::to_string(sol.nullspace.size()) +
                        " basis solutions, x-degree <= " + std::to_string(opts.kernel_xdeg) + ")");
  return rec.finish();
}

CheckReport verify_nondegeneracy(const CheckOptions&) {
  const Susy& z = susy();
  CheckRecorder rec("nondegeneracy",
                    "d alpha = 2i dtheta sigma^mu dthetabar d/dx^mu, its contractions with D_a and Dbar^a are "
                    "-2i sigma dthetabar and -2i dtheta sigma, and i_X d alpha = 0 forces X = 0 on the SUSY structure");
  VectorValuedForm dalpha = exterior_derivative(z.alpha);
  auto expected = z.x_form(z.per_mu([&](std::size_t mu) { return (2 * kI) * sigma_contract(mu, z.dth(), z.dthb()); }),
                           Parity::even);
  rec.require_equal("d alpha = 2i dth sigma dthb d/dx", dalpha, expected);

  for (std::size_t a = 0; a < 2; ++a) {
    auto exp_d = z.x_form(
        z.per_mu([&](std::size_t mu) { return (-2 * kI) * sigma_contract(mu, z.unit(a), z.dthb()); }), Parity::even);
    rec.require_equal("i_" + idx("D", a) + " d alpha = -2i sigma dthb d/dx", interior_product(z.g.D[a], dalpha), exp_d);
    auto exp_db = z.x_form(
        z.per_mu([&](std::size_t mu) { return (-2 * kI) * sigma_contract(mu, z.dth(), z.unit(a)); }), Parity::even);
    rec.require_equal("i_" + idx("Db", a) + " d alpha = -2i dth sigma d/dx", interior_product(z.g.Dbar[a], dalpha),
                      exp_db);
  }

  auto basis = z.distribution_basis();
  NondegeneracyResult nd = nondegeneracy_check(dalpha, basis);
  rec.require(nd.nondegenerate && nd.rank == 4, "body rank of the contraction matrix is 4", [&] {
    std::string w = "rank " + std::to_string(nd.rank);
    for (const auto& c : nd.witness) w += " | " + render_plain(c);
    return w;
  });

  VectorValuedForm zero(z.chart, Parity::even);
  rec.require(!nondegeneracy_check(zero, basis).nondegenerate, "the zero form is degenerate");
  return rec.finish();
}

CheckReport verify_invariance(InvarianceKind kind, const std::optional<LorentzPair>& pair) {
  const Susy& z = susy();
  static const char* const ids[] = {"invariance-susy", "invariance-translation", "invariance-lorentz",
                                    "invariance-rphase"};
  static const char* const statements[] = {
      "alpha is preserved by the SUSY shift with formal odd parameters eps, epsb",
      "alpha is preserved by the translations x^mu -> x^mu + a^mu with formal a^mu",
      "alpha is preserved by the rational boost cosh = 17/8, sinh = 15/8 along x3 paired with the spinor map "
      "diag(2, 1/2)",
      "alpha is preserved by the R-phase theta -> u theta, thetabar -> u^-1 thetabar with formal unit u",
  };
  CheckRecorder rec(ids[static_cast<int>(kind)], statements[static_cast<int>(kind)]);

  std::optional<SuperMap> phi;
  try {
    switch (kind) {
      case InvarianceKind::susy:
        phi = susy_map(z.chart);
        break;
      case InvarianceKind::translation:
        phi = translation_map(z.chart);
        break;
      case InvarianceKind::r_phase:
        phi = r_phase_map(z.chart);
        break;
      case InvarianceKind::lorentz: {
        LorentzPair p = pair.value_or(rational_z_boost());
        auto residual = intertwining_residual(p);
        bool ok = true;
        for (const auto& m : residual) ok = ok && is_zero(m);
        rec.require(ok, "spinor pair intertwines sigma^mu", [&] {
          std::string w;
          for (const auto& m : residual) w += to_string(m) + " ";
          return w;
        });
        phi = lorentz_map(z.chart, p);
        // The x-only boost has no spinor partner and is refused by the precheck.
        LorentzPair x_only{p.lambda, identity_matrix(2)};
        bool refused = false;
        try {
          (void)lorentz_map(z.chart, x_only);
        } catch (const PreconditionError&) {
          refused = true;
        }
        rec.require(refused, "the boost acting on x alone fails the intertwining precheck");
        break;
      }
    }
  } catch (const AlgebraError& e) {
    rec.fail("building the map", e.what());
    return rec.finish();
  }

  rec.require(phi->inverse_is_exact(), "forward and inverse compose to the identity");
  rec.require_equal("transformed alpha equals alpha", transform_vector_valued(*phi, z.alpha), z.alpha);
  for (std::size_t mu = 0; mu < 4; ++mu) {
    const SuperPoly& comp = z.alpha[z.s.x[mu]];
    rec.require_equal("pullback commutes with d on alpha^" + std::to_string(mu),
                      pullback(*phi, exterior_derivative(z.chart, comp)),
                      exterior_derivative(z.chart, pullback(*phi, comp)));
  }

  if (kind == InvarianceKind::susy) {
    const std::array<SuperPoly, 2> eps{z.chart.var("eps1"), z.chart.var("eps2")};
    const std::array<SuperPoly, 2> epsb{z.chart.var("epsb1"), z.chart.var("epsb2")};
    for (std::size_t a = 0; a < 2; ++a) {
      rec.require_equal("theta'^" + std::to_string(a + 1) + " = theta + eps", phi->forward()[z.s.th[a]],
                        z.th()[a] + eps[a]);
    }
    for (std::size_t mu = 0; mu < 4; ++mu) {
      SuperPoly expected = z.chart.differential(z.s.x[mu]) -
                           kI * (sigma_contract(mu, z.dth(), epsb) + sigma_contract(mu, eps, z.dthb()));
      rec.require_equal("induced dx'^" + std::to_string(mu), pullback(*phi, z.chart.differential(z.s.x[mu])), expected);
    }
    for (std::size_t a = 0; a < 2; ++a) {
      rec.require_equal("induced dth'", pullback(*phi, z.dth()[a]), z.dth()[a]);
      rec.require_equal("induced dthb'", pullback(*phi, z.dthb()[a]), z.dthb()[a]);
    }
  }
  return rec.finish();
}

CheckReport verify_strict_contact_fields(const CheckOptions&) {
  const Susy& z = susy();
  CheckRecorder rec("strict-contact",
                    "Q_a, Qbar^a, P_mu and R are strict symmetries of alpha (L_X alpha = 0), while theta1 d/dtheta1 "
                    "is not");
  std::vector<std::pair<std::string, const VectorField*>> fields;
  for (std::size_t a = 0; a < 2; ++a) {
    fields.emplace_back(idx("Q", a), &z.g.Q[a]);
    fields.emplace_back(idx("Qb", a), &z.g.Qbar[a]);
  }
  for (std::size_t mu = 0; mu < 4; ++mu) fields.emplace_back("P" + std::to_string(mu), &z.g.P[mu]);
  fields.emplace_back("R", &z.g.R);
  for (const auto& [name, x] : fields) {
    VectorValuedForm explicit_line = lie_derivative(*x, z.alpha);
    rec.require_zero("L_" + name + " alpha = 0", explicit_line);
    rec.require_equal("L_" + name + " alpha: both expressions agree", lie_derivative_cartan(*x, z.alpha),
                      explicit_line);
  }
  std::vector<SuperPoly> comps(z.chart.dim(), z.chart.zero());
  comps[z.s.th[0]] = z.th()[0];
  VectorField scaling(z.chart, std::move(comps), Parity::even);
  VectorValuedForm moved = lie_derivative(scaling, z.alpha);
  rec.require(!moved.is_zero(), "L_{th1 d/dth1} alpha is nonzero");
  rec.require_equal("negative control: both expressions agree", lie_derivative_cartan(scaling, z.alpha), moved);
  return rec.finish();
}

ReebResult reeb_solve(const CheckOptions& opts) {
  const Susy& z = susy();
  CheckRecorder rec("reeb",
                    "the Reeb conditions i_P alpha = d/dx^mu, i_P d alpha = 0 have the unique solution P_mu = d/dx^mu "
                    "in the bounded ansatz");
  ReebResult result{};
  const VectorValuedForm dalpha = exterior_derivative(z.alpha);
  FieldAnsatz ansatz(z.chart, opts.reeb_xdeg);
  const std::size_t n = ansatz.size();

  // Images do not depend on mu except for the extra unknown.
  std::vector<std::vector<SuperPoly>> images;
  images.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<SuperPoly> img = interior_product(ansatz.field(k), z.alpha).components();
    auto second = interior_product(ansatz.field(k), dalpha).components();
    img.insert(img.end(), second.begin(), second.end());
    images.push_back(std::move(img));
  }

  for (std::size_t mu = 0; mu < 4; ++mu) {
    ImageSystem system(n + 1);
    for (std::size_t k = 0; k < n; ++k) system.add_image(k, images[k]);
    std::vector<SuperPoly> target(2 * z.chart.dim(), z.chart.zero());
    target[z.s.x[mu]] = z.chart.constant(-1);  // unknown c: i_P alpha - c d/dx^mu = 0
    system.add_image(n, target);
    LinearSolution sol = system.solve();
    result.dimensions[mu] = sol.nullspace.size();
    const std::string tag = "P" + std::to_string(mu);
    if (!rec.require(sol.nullspace.size() == 1, tag + ": solution space has dimension 1",
                     [&] { return "dimension " + std::to_string(sol.nullspace.size()); })) {
      continue;
    }
    SparseRow v = sol.nullspace.front();
    auto c = v.find(n);
    if (!rec.require(c != v.end() && !c->second.is_zero(), tag + ": normalisable to i_P alpha = d/dx^mu")) continue;
    const GaussianRational scale = c->second.inverse();
    v.erase(c);
    for (auto& [k, value] : v) value *= scale;
    auto [even, odd] = ansatz.assemble(v);
    rec.require_zero(tag + ": no odd part", odd);
    rec.require_equal(tag + " = d/dx^" + std::to_string(mu), even, z.g.P[mu]);
    rec.require_zero("i_" + tag + " d alpha = 0", interior_product(z.g.P[mu], dalpha));
    result.fields.push_back(even);
  }
  result.report = rec.finish();
  return result;
}

CheckReport verify_algebra_table(const CheckOptions&) {
  const Susy& z = susy();
  const auto& g = z.g;
  CheckRecorder rec("algebra-table",
                    "graded brackets: [Q_a, Qbar^b] = 2i sigma P, [D_a, Dbar^b] = -2i sigma P, Q commutes with D, Dbar "
                    "and P, and [R, Q] = iQ, [R, Qbar] = -iQbar, [R, P] = [R, R] = 0");
  auto sigma_p = [&](std::size_t a, std::size_t b, const GaussianRational& c) {
    return z.x_field(z.per_mu([&](std::size_t mu) { return z.chart.constant(c * sigma()[mu][a][b]); }), Parity::even);
  };
  auto check_zero = [&](const std::string& label, const VectorField& x, const VectorField& y) {
    rec.require_zero(label + " = 0", graded_commutator(x, y));
  };

  for (std::size_t a = 0; a < 2; ++a) {
    for (std::size_t b = 0; b < 2; ++b) {
      const std::string ab = std::to_string(a + 1) + ", " + std::to_string(b + 1);
      rec.require_equal("[Q" + std::to_string(a + 1) + ", Qb" + std::to_string(b + 1) + "] = 2i sigma P",
                        graded_commutator(g.Q[a], g.Qbar[b]), sigma_p(a, b, 2 * kI));
      rec.require_equal("[D" + std::to_string(a + 1) + ", Db" + std::to_string(b + 1) + "] = -2i sigma P",
                        graded_commutator(g.D[a], g.Dbar[b]), sigma_p(a, b, -2 * kI));
      rec.require_zero("[Q, Qb] + [D, Db] = 0 (" + ab + ")",
                       graded_commutator(g.Q[a], g.Qbar[b]) + graded_commutator(g.D[a], g.Dbar[b]));
      check_zero("[Q" + std::to_string(a + 1) + ", D" + std::to_string(b + 1) + "]", g.Q[a], g.D[b]);
      check_zero("[Qb" + std::to_string(a + 1) + ", Db" + std::to_string(b + 1) + "]", g.Qbar[a], g.Dbar[b]);
      check_zero("[Q" + std::to_string(a + 1) + ", Db" + std::to_string(b + 1) + "]", g.Q[a], g.Dbar[b]);
      check_zero("[Qb" + std::to_string(a + 1) + ", D" + std::to_string(b + 1) + "]", g.Qbar[a], g.D[b]);
      if (a <= b) {
        check_zero("[Q" + std::to_string(a + 1) + ", Q" + std::to_string(b + 1) + "]", g.Q[a], g.Q[b]);
        check_zero("[Qb" + std::to_string(a + 1) + ", Qb" + std::to_string(b + 1) + "]", g.Qbar[a], g.Qbar[b]);
      }
    }
    for (std::size_t mu = 0; mu < 4; ++mu) {
      check_zero("[Q" + std::to_string(a + 1) + ", P" + std::to_string(mu) + "]", g.Q[a], g.P[mu]);
      check_zero("[Qb" + std::to_string(a + 1) + ", P" + std::to_string(mu) + "]", g.Qbar[a], g.P[mu]);
    }
    rec.require_equal("[R, Q" + std::to_string(a + 1) + "] = i Q", graded_commutator(g.R, g.Q[a]), kI * g.Q[a]);
    rec.require_equal("[R, Qb" + std::to_string(a + 1) + "] = -i Qb", graded_commutator(g.R, g.Qbar[a]),
                      -kI * g.Qbar[a]);
  }
  for (std::size_t mu = 0; mu < 4; ++mu) {
    check_zero("[R, P" + std::to_string(mu) + "]", g.R, g.P[mu]);
    for (std::size_t nu = mu; nu < 4; ++nu) check_zero("[P, P]", g.P[mu], g.P[nu]);
  }
  check_zero("[R, R]", g.R, g.R);
  return rec.finish();
}

Decomposition decompose(const VectorField& x) {
  const Chart& chart = x.chart();
  const SusySlots s = SusySlots::on(chart);
  const SusyGenerators g = build_generators(chart);
  VectorField dpart(chart, x.parity());
  for (std::size_t a = 0; a < 2; ++a) {
    if (!x[s.th[a]].is_zero()) dpart += x[s.th[a]] * g.D[a];
    if (!x[s.thb[a]].is_zero()) dpart += x[s.thb[a]] * g.Dbar[a];
  }
  VectorField rest = x - dpart;
  return {std::move(dpart), std::move(rest)};
}

CheckReport verify_decomposition(const CheckOptions& opts) {
  const Susy& z = susy();
  const auto& g = z.g;
  CheckRecorder rec("decomposition",
                    "every vector field splits as X = X_D + X_P with X_D in ker alpha and X_P in ker d alpha; Q, Qbar "
                    "and R split as displayed and the splitting is linear and idempotent");
  const VectorValuedForm dalpha = exterior_derivative(z.alpha);

  auto check_split = [&](const std::string& name, const VectorField& x) {
    Decomposition d = decompose(x);
    rec.require_equal(name + ": X_D + X_P = X", d.distribution_part + d.reeb_part, x);
    rec.require_zero(name + ": i_{X_D} alpha = 0", interior_product(d.distribution_part, z.alpha));
    rec.require_zero(name + ": i_{X_P} d alpha = 0", interior_product(d.reeb_part, dalpha));
    return d;
  };

  for (std::size_t a = 0; a < 2; ++a) {
    Decomposition dq = check_split(idx("Q", a), g.Q[a]);
    rec.require_equal(idx("Q", a) + ": X_D = D", dq.distribution_part, g.D[a]);
    rec.require_equal(idx("Q", a) + ": X_P = 2i sigma thb P", dq.reeb_part,
                      z.x_field(z.per_mu([&](std::size_t mu) { return (2 * kI) * sigma_contract(mu, z.unit(a), z.thb()); }),
                                Parity::odd));
    Decomposition dqb = check_split(idx("Qb", a), g.Qbar[a]);
    rec.require_equal(idx("Qb", a) + ": X_D = Db", dqb.distribution_part, g.Dbar[a]);
    rec.require_equal(idx("Qb", a) + ": X_P = 2i th sigma P", dqb.reeb_part,
                      z.x_field(z.per_mu([&](std::size_t mu) { return (2 * kI) * sigma_contract(mu, z.th(), z.unit(a)); }),
                                Parity::odd));
  }
  Decomposition dr = check_split("R", g.R);
  VectorField r_d(z.chart, Parity::even);
  for (std::size_t a = 0; a < 2; ++a) {
    r_d += (kI * z.thb()[a]) * g.Dbar[a];
    r_d -= (kI * z.th()[a]) * g.D[a];
  }
  rec.require_equal("R: X_D = i(thb Db - th D)", dr.distribution_part, r_d);
  rec.require_equal("R: X_P = i(-2i th sigma thb) P", dr.reeb_part,
                    z.x_field(z.per_mu([&](std::size_t mu) { return (kI * (-2 * kI)) * sigma_contract(mu, z.th(), z.thb()); }),
                              Parity::even));
  for (std::size_t mu = 0; mu < 4; ++mu) {
    Decomposition dp = decompose(g.P[mu]);
    rec.require(dp.distribution_part.is_zero() && dp.reeb_part == g.P[mu], "P" + std::to_string(mu) + " -> (0, P)");
  }

  RandomObjects rnd(z.chart, opts.seed);
  const int fields = 50;
  for (int i = 0; i < fields && rec.ok(); ++i) {
    Parity p = rnd.parity();
    VectorField x = rnd.field(p);
    VectorField y = rnd.field(p);
    GaussianRational c = rnd.coefficient();
    Decomposition dx = decompose(x);
    Decomposition dy = decompose(y);
    Decomposition dxy = decompose(x + c * y);
    const std::string tag = "random field " + std::to_string(i);
    rec.require_equal(tag + ": linear (D part)", dxy.distribution_part, dx.distribution_part + c * dy.distribution_part);
    rec.require_equal(tag + ": linear (P part)", dxy.reeb_part, dx.reeb_part + c * dy.reeb_part);
    Decomposition dd = decompose(dx.distribution_part);
    rec.require(dd.distribution_part == dx.distribution_part && dd.reeb_part.is_zero(), tag + ": idempotent on X_D",
                [&] { return render_plain(dd.reeb_part); });
    Decomposition dp = decompose(dx.reeb_part);
    rec.require(dp.distribution_part.is_zero() && dp.reeb_part == dx.reeb_part, tag + ": idempotent on X_P",
                [&] { return render_plain(dp.distribution_part); });
    rec.require_zero(tag + ": i_{X_D} alpha = 0", interior_product(dx.distribution_part, z.alpha));
    rec.require_zero(tag + ": i_{X_P} d alpha = 0", interior_product(dx.reeb_part, dalpha));
  }
  return rec.finish();
}

MaurerCartanResult susy_maurer_cartan(const Chart& chart) {
  const SusySlots s = SusySlots::on(chart);
  const SusyGenerators g = build_generators(chart);
  std::vector<std::string> names{"P0", "P1", "P2", "P3", "Q1", "Q2", "Qb1", "Qb2"};
  // Left-invariant frame: the abstract generators act as d/dx, D and Dbar.
  std::vector<VectorField> frame{g.P[0], g.P[1], g.P[2], g.P[3], g.D[0], g.D[1], g.Dbar[0], g.Dbar[1]};
  LieSuperalgebra algebra = LieSuperalgebra::from_realization(names, frame);

  MaurerCartanResult out{std::move(algebra), {}, VectorValuedForm(chart, Parity::odd), VectorField(chart, Parity::odd)};
  AlgebraValued a{&out.algebra, {}};
  for (std::size_t mu = 0; mu < 4; ++mu) a.coeffs.push_back(chart.coordinate(s.x[mu]));
  for (std::size_t k = 0; k < 2; ++k) a.coeffs.push_back(chart.coordinate(s.th[k]));
  for (std::size_t k = 0; k < 2; ++k) a.coeffs.push_back(chart.coordinate(s.thb[k]));
  out.series = left_maurer_cartan(chart, a);

  const auto& omega = out.series.sum.coeffs;
  std::vector<SuperPoly> legs(chart.dim(), chart.zero());
  for (std::size_t mu = 0; mu < 4; ++mu) legs[s.x[mu]] = omega[mu];
  out.translation_part = VectorValuedForm(chart, legs, Parity::odd);

  VectorField realised(chart, legs, Parity::odd);
  for (std::size_t k = 0; k < 2; ++k) {
    realised += omega[4 + k] * g.Q[k];
    realised += omega[6 + k] * g.Qbar[k];
  }
  out.i_omega = kI * realised;
  return out;
}

CheckReport verify_maurer_cartan(const CheckOptions&) {
  const Susy& z = susy();
  CheckRecorder rec("maurer-cartan",
                    "the Hadamard series for e^-A d e^A with A = x P + theta Q + thetabar Qbar stops after ad_A(dA), "
                    "its translation part is alpha and i Omega = i(alpha^mu d/dx^mu + dtheta Q + dthetabar Qbar)");
  MaurerCartanResult mc = susy_maurer_cartan(z.chart);
  const auto& powers = mc.series.ad_powers;
  rec.require(mc.series.terminated && powers.size() == 3 && !powers[1].is_zero() && powers[2].is_zero(),
              "ad_A^2(dA) = 0 and ad_A(dA) != 0", [&] { return std::to_string(powers.size()) + " terms"; });

  for (std::size_t a = 0; a < 2; ++a) {
    for (std::size_t b = 0; b < 2; ++b) {
      const auto& c = mc.algebra.bracket(4 + a, 6 + b);
      bool ok = true;
      for (std::size_t k = 0; k < mc.algebra.dim(); ++k) {
        GaussianRational want = k < 4 ? -2 * kI * sigma()[k][a][b] : GaussianRational(0);
        ok = ok && c[k] == want;
      }
      rec.require(ok, "structure constant [Q" + std::to_string(a + 1) + ", Qb" + std::to_string(b + 1) +
                          "] = -2i sigma P in the left-invariant frame");
    }
  }

  rec.require_equal("translation part = alpha", mc.translation_part, z.alpha);
  rec.require(render_plain(mc.translation_part) == render_plain(z.alpha), "translation part renders as alpha",
              [&] { return render_plain(mc.translation_part); });
  const auto& omega = mc.series.sum.coeffs;
  for (std::size_t a = 0; a < 2; ++a) {
    rec.require_equal("Omega^Q" + std::to_string(a + 1) + " = dth", omega[4 + a], z.dth()[a]);
    rec.require_equal("Omega^Qb" + std::to_string(a + 1) + " = dthb", omega[6 + a], z.dthb()[a]);
  }

  // The display, assembled independently from sigma.
  VectorField display = z.x_field(z.per_mu([&](std::size_t mu) {
    return z.chart.differential(z.s.x[mu]) +
           kI * (sigma_contract(mu, z.th(), z.dthb()) + sigma_contract(mu, z.dth(), z.thb()));
  }), Parity::odd);
  for (std::size_t a = 0; a < 2; ++a) {
    display += z.dth()[a] * z.g.Q[a];
    display += z.dthb()[a] * z.g.Qbar[a];
  }
  display = kI * display;
  rec.require_equal("i Omega matches the display", mc.i_omega, display);

  std::vector<SuperPoly> flat_comps;
  for (std::size_t slot = 0; slot < z.chart.dim(); ++slot) flat_comps.push_back(flat(z, mc.i_omega[slot]));
  VectorField flat_limit = z.x_field(z.per_mu([&](std::size_t mu) { return z.chart.differential(z.s.x[mu]); }),
                                     Parity::odd);
  for (std::size_t a = 0; a < 2; ++a) {
    std::vector<SuperPoly> q0;
    std::vector<SuperPoly> qb0;
    for (std::size_t slot = 0; slot < z.chart.dim(); ++slot) {
      q0.push_back(flat(z, z.g.Q[a][slot]));
      qb0.push_back(flat(z, z.g.Qbar[a][slot]));
    }
    flat_limit += z.dth()[a] * VectorField(z.chart, std::move(q0), Parity::odd);
    flat_limit += z.dthb()[a] * VectorField(z.chart, std::move(qb0), Parity::odd);
  }
  rec.require_equal("flat limit of i Omega", VectorField(z.chart, std::move(flat_comps), Parity::odd),
                    kI * flat_limit);
  return rec.finish();
}

}  // namespace polycontact
