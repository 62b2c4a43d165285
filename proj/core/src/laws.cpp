#include "polycontact/laws.hpp"

#include <algorithm>
#include <set>

#include "polycontact/calculus.hpp"
#include "polycontact/linear_system.hpp"
#include "polycontact/random_objects.hpp"
#include "polycontact/render.hpp"

namespace polycontact {

int naive_word_sign(std::vector<unsigned> word) {
  int sign = 1;
  for (std::size_t pass = 0; pass < word.size(); ++pass) {
    for (std::size_t i = 0; i + 1 < word.size(); ++i) {
      if (word[i] == word[i + 1]) return 0;
      if (word[i] > word[i + 1]) {
        std::swap(word[i], word[i + 1]);
        sign = -sign;
      }
    }
  }
  for (std::size_t i = 0; i + 1 < word.size(); ++i) {
    if (word[i] == word[i + 1]) return 0;
  }
  return sign;
}

bool invertible_by_linear_solve(const PolyMatrix& m, const Chart& chart) {
  const std::size_t n = m.size();
  const ContextPtr& ctx = chart.context();
  // Even monomials in the odd generators of the chart: the unknowns' basis.
  std::vector<GenIndex> odd;
  for (std::size_t s = 0; s < chart.dim(); ++s) {
    if (is_odd(chart.slot_parity(s))) odd.push_back(chart.base_generator(s));
  }
  std::vector<SuperPoly> basis;
  for (std::size_t mask = 0; mask < (std::size_t{1} << odd.size()); ++mask) {
    if (std::popcount(mask) % 2) continue;
    SuperPoly b(ctx, 1);
    for (std::size_t k = 0; k < odd.size(); ++k) {
      if (mask & (std::size_t{1} << k)) b = b * SuperPoly::generator(ctx, odd[k]);
    }
    basis.push_back(b);
  }
  const std::size_t nb = basis.size();
  // Unknown (k, j, t) is the coefficient of basis[t] in Y_kj.
  auto unknown = [&](std::size_t k, std::size_t j, std::size_t t) { return (k * n + j) * nb + t; };
  std::map<std::tuple<std::size_t, std::size_t, Monomial>, SparseRow> rows;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t t = 0; t < nb; ++t) {
          SuperPoly prod = m[i][k] * basis[t];
          for (const auto& [mono, c] : prod.terms()) rows[{i, j, mono}][unknown(k, j, t)] += c;
        }
      }
    }
  }
  LinearSystem sys(n * n * nb);
  std::set<std::pair<std::size_t, std::size_t>> diag_seen;
  for (const auto& [key, row] : rows) {
    const auto& [i, j, mono] = key;
    GaussianRational rhs = (i == j && mono.is_one()) ? GaussianRational(1) : GaussianRational(0);
    if (i == j && mono.is_one()) diag_seen.insert({i, j});
    SparseRow clean;
    for (const auto& [col, c] : row) {
      if (!c.is_zero()) clean.emplace(col, c);
    }
    if (clean.empty() && !rhs.is_zero()) return false;
    if (!clean.empty()) sys.add_equation(clean, rhs);
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!diag_seen.count({i, i})) return false;  // the unit coefficient can never be produced
  }
  return sys.solve().consistent;
}

namespace {

Chart law_chart() {
  Chart::Builder b;
  b.base("x0", Parity::even).base("x1", Parity::even);
  b.base("th1", Parity::odd).base("th2", Parity::odd).base("th3", Parity::odd);
  return std::move(b).build();
}

GaussianRational ksign(Parity a, Parity b) { return GaussianRational(koszul_sign(a, b)); }

}  // namespace

CheckReport verify_calculus_laws(const CheckOptions& opts) {
  CheckRecorder rec("calculus-laws",
                    "randomised laws: d^2 = 0, graded Leibniz, supercommutativity and associativity, agreement of the "
                    "two Lie derivative expressions, pullback commutes with d and composes contravariantly, graded "
                    "antisymmetry and Jacobi, canonical products against a transposition oracle, body-rank soundness");
  const Chart chart = law_chart();
  RandomObjects rnd(chart, opts.seed);
  const int n = opts.cases;

  std::string detail;
  auto run = [&](const std::string& law, auto&& body) {
    for (int i = 0; i < n; ++i) {
      detail.clear();
      if (!body(i)) {
        rec.require(false, law + " (case " + std::to_string(i) + ")", [&] { return detail; });
        return;
      }
    }
    rec.require(true, law + " (" + std::to_string(n) + " cases)");
  };
  auto note = [&](const std::string& s) {
    detail = s;
    return false;
  };

  run("d^2 = 0 on scalar forms", [&](int) {
    SuperPoly w = rnd.poly(rnd.parity(), 3, 2, true);
    SuperPoly dd = exterior_derivative(chart, exterior_derivative(chart, w));
    return dd.is_zero() || note(render_plain(w));
  });
  run("d^2 = 0 on vector-valued forms", [&](int) {
    VectorValuedForm w = rnd.form(rnd.parity());
    return exterior_derivative(exterior_derivative(w)).is_zero() || note(render_plain(w));
  });
  run("graded Leibniz for left derivatives", [&](int) {
    SuperPoly a = rnd.poly(rnd.parity(), 3, 2, true);
    SuperPoly b = rnd.poly(rnd.parity(), 3, 2, true);
    std::size_t slot = static_cast<std::size_t>(rnd.uniform(0, static_cast<int>(chart.dim()) - 1));
    GenIndex g = rnd.uniform(0, 1) ? chart.base_generator(slot) : chart.fiber_generator(slot);
    Parity gp = (*chart.context())[g].parity;
    SuperPoly lhs = (a * b).derivative(g);
    SuperPoly rhs = a.derivative(g) * b + ksign(gp, *a.parity()) * (a * b.derivative(g));
    return lhs == rhs || note(render_plain(a) + " ; " + render_plain(b));
  });
  run("odd derivatives anticommute", [&](int) {
    SuperPoly a = rnd.poly(rnd.parity(), 4, 2, true);
    int i = rnd.uniform(2, 4);
    int j = rnd.uniform(2, 4);
    GenIndex gi = chart.base_generator(static_cast<std::size_t>(i));
    GenIndex gj = chart.base_generator(static_cast<std::size_t>(j));
    SuperPoly lhs = a.derivative(gj).derivative(gi);
    SuperPoly rhs = a.derivative(gi).derivative(gj);
    return (i == j ? lhs.is_zero() : lhs == -rhs) || note(render_plain(a));
  });
  run("supercommutativity", [&](int) {
    SuperPoly a = rnd.poly(rnd.parity(), 3, 2, true);
    SuperPoly b = rnd.poly(rnd.parity(), 3, 2, true);
    return a * b == ksign(*a.parity(), *b.parity()) * (b * a) || note(render_plain(a) + " ; " + render_plain(b));
  });
  run("associativity", [&](int) {
    SuperPoly a = rnd.poly(rnd.parity(), 3, 1, true);
    SuperPoly b = rnd.poly(rnd.parity(), 3, 1, true);
    SuperPoly c = rnd.poly(rnd.parity(), 3, 1, true);
    return (a * b) * c == a * (b * c);
  });
  run("nilpotency of odd generators", [&](int) {
    for (GenIndex g = 0; g < chart.context()->size(); ++g) {
      if (!is_odd((*chart.context())[g].parity)) continue;
      SuperPoly x = SuperPoly::generator(chart.context(), g);
      if (!(x * x).is_zero()) return false;
    }
    return true;
  });
  run("the two Lie derivative expressions agree (scalar)", [&](int) {
    VectorField x = rnd.field(rnd.parity());
    SuperPoly w = rnd.poly(rnd.parity(), 3, 2, true);
    return lie_derivative(x, w) == lie_derivative_cartan(x, w) || note(render_plain(x) + " ; " + render_plain(w));
  });
  run("the two Lie derivative expressions agree (vector-valued)", [&](int) {
    VectorField x = rnd.field(rnd.parity());
    VectorValuedForm w = rnd.form(rnd.parity());
    return lie_derivative(x, w) == lie_derivative_cartan(x, w) || note(render_plain(x) + " ; " + render_plain(w));
  });
  run("pullback commutes with d", [&](int) {
    SuperMap phi = rnd.invertible_map(2);
    SuperPoly w = rnd.poly(rnd.parity(), 3, 2, true);
    return pullback(phi, exterior_derivative(chart, w)) == exterior_derivative(chart, pullback(phi, w)) ||
           note(render_plain(w));
  });
  run("pullback is functorial", [&](int) {
    SuperMap phi = rnd.invertible_map(1);
    SuperMap psi = rnd.invertible_map(1);
    SuperPoly w = rnd.poly(rnd.parity(), 3, 2, true);
    return pullback(phi.after(psi), w) == pullback(psi, pullback(phi, w)) || note(render_plain(w));
  });
  run("composite maps have exact inverses", [&](int) { return rnd.invertible_map(3).inverse_is_exact(); });
  run("graded antisymmetry of the bracket", [&](int) {
    VectorField x = rnd.field(rnd.parity());
    VectorField y = rnd.field(rnd.parity());
    VectorField lhs = graded_commutator(x, y);
    VectorField rhs = graded_commutator(y, x);
    rhs *= -ksign(x.parity(), y.parity());
    return lhs == rhs || (lhs.is_zero() && rhs.is_zero());
  });
  run("graded Jacobi identity", [&](int) {
    VectorField x = rnd.field(rnd.parity(), 2, 1);
    VectorField y = rnd.field(rnd.parity(), 2, 1);
    VectorField z = rnd.field(rnd.parity(), 2, 1);
    VectorField lhs = graded_commutator(x, graded_commutator(y, z));
    VectorField rhs = graded_commutator(graded_commutator(x, y), z);
    VectorField third = graded_commutator(y, graded_commutator(x, z));
    third *= ksign(x.parity(), y.parity());
    rhs += third;
    return lhs == rhs || (lhs.is_zero() && rhs.is_zero());
  });

  // Exhaustive product oracle over eight odd generators.
  {
    GeneratorContext::Builder b;
    for (int k = 0; k < 8; ++k) b.add("e" + std::to_string(k), Parity::odd);
    ContextPtr ctx = std::move(b).build();
    std::vector<std::vector<unsigned>> words{{}};
    std::size_t begin = 0;
    for (int len = 1; len <= 4; ++len) {
      std::size_t end = words.size();
      for (std::size_t w = begin; w < end; ++w) {
        for (unsigned g = 0; g < 8; ++g) {
          auto next = words[w];
          next.push_back(g);
          words.push_back(std::move(next));
        }
      }
      begin = end;
    }
    bool ok = true;
    std::string bad;
    for (const auto& word : words) {
      SuperPoly prod(ctx, 1);
      OddMask mask = 0;
      for (unsigned g : word) {
        prod = prod * SuperPoly::generator(ctx, g);
        mask |= OddMask{1} << g;
      }
      int sign = naive_word_sign(word);
      SuperPoly expected = sign == 0 ? SuperPoly(ctx) : SuperPoly::term(ctx, Monomial::from_mask(mask), sign);
      if (prod != expected) {
        ok = false;
        bad = render_plain(prod);
        break;
      }
    }
    // Pairs of canonical monomials of degree <= 4.
    std::vector<OddMask> masks;
    for (OddMask m = 0; m < 256; ++m) {
      if (std::popcount(m) <= 4) masks.push_back(m);
    }
    auto to_word = [](OddMask m) {
      std::vector<unsigned> w;
      for (unsigned k = 0; k < 8; ++k) {
        if (m & (OddMask{1} << k)) w.push_back(k);
      }
      return w;
    };
    std::size_t pairs = 0;
    for (OddMask x : masks) {
      for (OddMask y : masks) {
        auto wx = to_word(x);
        auto wy = to_word(y);
        wx.insert(wx.end(), wy.begin(), wy.end());
        int sign = naive_word_sign(wx);
        auto prod = Monomial::multiply(Monomial::from_mask(x), Monomial::from_mask(y));
        bool agree = sign == 0 ? !prod.has_value() : (prod && prod->first == Monomial::from_mask(x | y) && prod->second == sign);
        ok = ok && agree;
        ++pairs;
      }
    }
    rec.require(ok, "canonical products agree with the transposition oracle (" + std::to_string(words.size()) +
                        " words, " + std::to_string(pairs) + " monomial pairs)",
                [&] { return bad; });
  }

  // Body-rank soundness on 3x3 matrices over the Grassmann algebra on th1..th3.
  {
    int agree = 0;
    int invertible = 0;
    std::string bad;
    for (int i = 0; i < n; ++i) {
      PolyMatrix m(3, std::vector<SuperPoly>(3, chart.zero()));
      for (auto& row : m) {
        for (auto& e : row) {
          e = chart.constant(rnd.uniform(-2, 2));
          if (rnd.uniform(0, 1)) e += rnd.coefficient() * (chart.var("th1") * chart.var("th2"));
          if (rnd.uniform(0, 2) == 0) e += rnd.coefficient() * (chart.var("th2") * chart.var("th3"));
          if (rnd.uniform(0, 2) == 0) e += rnd.coefficient() * (chart.var("th1") * chart.var("th3"));
        }
      }
      if (rnd.uniform(0, 1)) {
        // Force a singular body: row 2 = row 0 + row 1 on the body, keep the nilpotent noise.
        for (std::size_t j = 0; j < 3; ++j) {
          SuperPoly nil = m[2][j] - m[2][j].body();
          m[2][j] = m[0][j].body() + m[1][j].body() + nil;
        }
      }
      PolyMatrix body(3, std::vector<SuperPoly>(3, chart.zero()));
      for (std::size_t r = 0; r < 3; ++r) {
        for (std::size_t c = 0; c < 3; ++c) body[r][c] = m[r][c].body();
      }
      bool by_body = function_field_rank(body, chart.context()).rank == 3;
      bool by_solve = invertible_by_linear_solve(m, chart);
      if (by_body == by_solve) {
        ++agree;
      } else if (bad.empty()) {
        bad = "case " + std::to_string(i) + ": body says " + (by_body ? "invertible" : "singular");
      }
      invertible += by_solve ? 1 : 0;
    }
    rec.require(agree == n, "body rank decides invertibility (" + std::to_string(n) + " matrices, " +
                                std::to_string(invertible) + " invertible)",
                [&] { return bad; });
  }

  // Classical reduction on an even chart (x, y, z).
  {
    Chart::Builder b;
    b.base("x", Parity::even).base("y", Parity::even).base("z", Parity::even);
    Chart c = std::move(b).build();
    SuperPoly w = c.var("dz") + c.var("x") * c.var("dy");
    rec.require_equal("d(dz + x dy) = dx dy", exterior_derivative(c, w), c.var("dx") * c.var("dy"));
    rec.require_equal("i_{d/dx}(dx dy) = dy", interior_product(VectorField::coordinate(c, 0), c.var("dx") * c.var("dy")),
                      c.var("dy"));
  }
  return rec.finish();
}

}  // namespace polycontact
