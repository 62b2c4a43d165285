#include "polycontact/susy.hpp"

#include "polycontact/errors.hpp"

namespace polycontact {

namespace {

const GaussianRational kI = GaussianRational::i();

const char* const kX[4] = {"x0", "x1", "x2", "x3"};
const char* const kTh[2] = {"th1", "th2"};
const char* const kThb[2] = {"thb1", "thb2"};

std::array<SuperPoly, 2> pair_of(const Chart& chart, const char* const names[2]) {
  return {chart.var(names[0]), chart.var(names[1])};
}

std::array<SuperPoly, 2> fibers_of(const Chart& chart, const std::array<std::size_t, 2>& slots) {
  return {chart.differential(slots[0]), chart.differential(slots[1])};
}

// d/dtheta^a (or thetabar) plus s * sum_mu coeff^mu d/dx^mu.
VectorField shifted_frame(const Chart& chart, const SusySlots& s, std::size_t odd_slot,
                          const std::array<SuperPoly, 4>& x_coeffs) {
  std::vector<SuperPoly> comps(chart.dim(), chart.zero());
  comps[odd_slot] = chart.constant(1);
  for (std::size_t mu = 0; mu < 4; ++mu) comps[s.x[mu]] = x_coeffs[mu];
  return {chart, std::move(comps), Parity::odd};
}

std::array<SuperPoly, 2> unit_pair(const Chart& chart, std::size_t which) {
  std::array<SuperPoly, 2> out{chart.zero(), chart.zero()};
  out[which] = chart.constant(1);
  return out;
}

}  // namespace

SusySlots SusySlots::on(const Chart& chart) {
  SusySlots s;
  for (std::size_t mu = 0; mu < 4; ++mu) s.x[mu] = chart.slot(kX[mu]);
  for (std::size_t a = 0; a < 2; ++a) {
    s.th[a] = chart.slot(kTh[a]);
    s.thb[a] = chart.slot(kThb[a]);
  }
  return s;
}

const Chart& susy_chart() {
  static const Chart chart = [] {
    Chart::Builder b;
    for (const char* x : kX) b.base(x, Parity::even);
    for (const char* t : kTh) b.base(t, Parity::odd);
    for (const char* t : kThb) b.base(t, Parity::odd);
    for (const char* e : {"eps1", "eps2", "epsb1", "epsb2"}) b.parameter(e, Parity::odd);
    for (const char* a : {"a0", "a1", "a2", "a3"}) b.parameter(a, Parity::even);
    b.parameter("u", Parity::even, true);
    return std::move(b).build();
  }();
  return chart;
}

SuperPoly sigma_contract(std::size_t mu, const std::array<SuperPoly, 2>& left, const std::array<SuperPoly, 2>& right) {
  SuperPoly out(left[0].context());
  for (std::size_t a = 0; a < 2; ++a) {
    for (std::size_t b = 0; b < 2; ++b) {
      const GaussianRational& c = sigma()[mu][a][b];
      if (!c.is_zero()) out += c * (left[a] * right[b]);
    }
  }
  return out;
}

SusyGenerators build_generators(const Chart& chart) {
  const SusySlots s = SusySlots::on(chart);
  const auto th = pair_of(chart, kTh);
  const auto thb = pair_of(chart, kThb);

  auto make = [&](bool barred, std::size_t a, const GaussianRational& sign) {
    std::array<SuperPoly, 4> coeffs{chart.zero(), chart.zero(), chart.zero(), chart.zero()};
    for (std::size_t mu = 0; mu < 4; ++mu) {
      // Q_a: i sigma^mu_{a b} thb_b;  Qbar^a: i th^b sigma^mu_{b a}
      SuperPoly c = barred ? sigma_contract(mu, th, unit_pair(chart, a)) : sigma_contract(mu, unit_pair(chart, a), thb);
      coeffs[mu] = (sign * kI) * c;
    }
    return shifted_frame(chart, s, barred ? s.thb[a] : s.th[a], coeffs);
  };

  std::vector<SuperPoly> r(chart.dim(), chart.zero());
  for (std::size_t a = 0; a < 2; ++a) {
    r[s.thb[a]] = kI * thb[a];
    r[s.th[a]] = -kI * th[a];
  }

  return SusyGenerators{
      {make(false, 0, 1), make(false, 1, 1)},
      {make(true, 0, 1), make(true, 1, 1)},
      {make(false, 0, -1), make(false, 1, -1)},
      {make(true, 0, -1), make(true, 1, -1)},
      {VectorField::coordinate(chart, s.x[0]), VectorField::coordinate(chart, s.x[1]),
       VectorField::coordinate(chart, s.x[2]), VectorField::coordinate(chart, s.x[3])},
      VectorField(chart, std::move(r), Parity::even),
  };
}

VectorValuedForm polycontact_form(const Chart& chart) {
  const SusySlots s = SusySlots::on(chart);
  const auto th = pair_of(chart, kTh);
  const auto thb = pair_of(chart, kThb);
  const auto dth = fibers_of(chart, s.th);
  const auto dthb = fibers_of(chart, s.thb);
  std::vector<SuperPoly> comps(chart.dim(), chart.zero());
  for (std::size_t mu = 0; mu < 4; ++mu) {
    comps[s.x[mu]] = chart.differential(s.x[mu]) + kI * (sigma_contract(mu, th, dthb) + sigma_contract(mu, dth, thb));
  }
  return {chart, std::move(comps), Parity::odd};
}

SuperMap susy_map(const Chart& chart) {
  const SusySlots s = SusySlots::on(chart);
  const std::array<SuperPoly, 2> eps{chart.var("eps1"), chart.var("eps2")};
  const std::array<SuperPoly, 2> epsb{chart.var("epsb1"), chart.var("epsb2")};
  const auto th = pair_of(chart, kTh);
  const auto thb = pair_of(chart, kThb);

  auto images = [&](const GaussianRational& sign) {
    std::vector<SuperPoly> out;
    for (std::size_t slot = 0; slot < chart.dim(); ++slot) out.push_back(chart.coordinate(slot));
    for (std::size_t mu = 0; mu < 4; ++mu) {
      SuperPoly shift = sigma_contract(mu, eps, thb) - sigma_contract(mu, th, epsb);
      out[s.x[mu]] += (sign * kI) * shift;
    }
    for (std::size_t a = 0; a < 2; ++a) {
      out[s.th[a]] += sign * eps[a];
      out[s.thb[a]] += sign * epsb[a];
    }
    return out;
  };
  return {chart, chart, images(1), images(-1)};
}

SuperMap translation_map(const Chart& chart) {
  const SusySlots s = SusySlots::on(chart);
  std::vector<SuperPoly> fwd;
  for (std::size_t slot = 0; slot < chart.dim(); ++slot) fwd.push_back(chart.coordinate(slot));
  std::vector<SuperPoly> inv = fwd;
  for (std::size_t mu = 0; mu < 4; ++mu) {
    SuperPoly a = chart.var("a" + std::to_string(mu));
    fwd[s.x[mu]] += a;
    inv[s.x[mu]] -= a;
  }
  return {chart, chart, std::move(fwd), std::move(inv)};
}

SuperMap r_phase_map(const Chart& chart) {
  const SusySlots s = SusySlots::on(chart);
  const SuperPoly u = chart.var("u");
  const SuperPoly u_inv = u.pow(-1);
  std::vector<SuperPoly> fwd;
  for (std::size_t slot = 0; slot < chart.dim(); ++slot) fwd.push_back(chart.coordinate(slot));
  std::vector<SuperPoly> inv = fwd;
  for (std::size_t a = 0; a < 2; ++a) {
    fwd[s.th[a]] = u * chart.coordinate(s.th[a]);
    fwd[s.thb[a]] = u_inv * chart.coordinate(s.thb[a]);
    inv[s.th[a]] = u_inv * chart.coordinate(s.th[a]);
    inv[s.thb[a]] = u * chart.coordinate(s.thb[a]);
  }
  return {chart, chart, std::move(fwd), std::move(inv)};
}

std::array<Matrix, 4> intertwining_residual(const LorentzPair& pair) {
  std::array<Matrix, 4> out;
  const Matrix sd = dagger(pair.spinor);
  for (std::size_t mu = 0; mu < 4; ++mu) {
    Matrix lhs = matmul(matmul(pair.spinor, sigma()[mu]), sd);
    for (std::size_t nu = 0; nu < 4; ++nu) lhs = matadd(lhs, matscale(-pair.lambda[mu][nu], sigma()[nu]));
    out[mu] = std::move(lhs);
  }
  return out;
}

SuperMap lorentz_map(const Chart& chart, const LorentzPair& pair) {
  if (pair.lambda.size() != 4 || pair.spinor.size() != 2) throw PreconditionError("lorentz_map: expected 4x4 and 2x2 matrices");
  const auto residual = intertwining_residual(pair);
  for (std::size_t mu = 0; mu < 4; ++mu) {
    if (!is_zero(residual[mu])) {
      throw PreconditionError("lorentz_map: spinor pair does not intertwine sigma^" + std::to_string(mu) +
                              "; residual " + to_string(residual[mu]));
    }
  }
  const auto lambda_inv = inverse(pair.lambda);
  const auto spinor_inv = inverse(pair.spinor);
  if (!lambda_inv || !spinor_inv) throw PreconditionError("lorentz_map: singular matrix");
  const Matrix sd = dagger(pair.spinor);
  const Matrix sd_inv = *inverse(sd);

  const SusySlots s = SusySlots::on(chart);
  auto images = [&](const Matrix& lam, const Matrix& spin, const Matrix& spin_bar) {
    std::vector<SuperPoly> out;
    for (std::size_t slot = 0; slot < chart.dim(); ++slot) out.push_back(chart.coordinate(slot));
    for (std::size_t mu = 0; mu < 4; ++mu) {
      SuperPoly v = chart.zero();
      for (std::size_t nu = 0; nu < 4; ++nu) v += lam[mu][nu] * chart.coordinate(s.x[nu]);
      out[s.x[mu]] = v;
    }
    for (std::size_t a = 0; a < 2; ++a) {
      SuperPoly t = chart.zero();
      SuperPoly tb = chart.zero();
      for (std::size_t b = 0; b < 2; ++b) {
        t += spin[b][a] * chart.coordinate(s.th[b]);
        tb += spin_bar[a][b] * chart.coordinate(s.thb[b]);
      }
      out[s.th[a]] = t;
      out[s.thb[a]] = tb;
    }
    return out;
  };
  return {chart, chart, images(pair.lambda, pair.spinor, sd), images(*lambda_inv, *spinor_inv, sd_inv)};
}

LorentzPair rational_z_boost() {
  Matrix lambda = identity_matrix(4);
  lambda[0][0] = lambda[3][3] = GaussianRational(17, 8);
  lambda[0][3] = lambda[3][0] = GaussianRational(15, 8);
  Matrix spinor{{2, 0}, {0, GaussianRational(1, 2)}};
  return {std::move(lambda), std::move(spinor)};
}

}  // namespace polycontact
