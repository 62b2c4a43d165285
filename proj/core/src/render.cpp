#include "polycontact/render.hpp"

#include <cctype>
#include <vector>

namespace polycontact {

namespace {

std::string q_latex(const mpq_class& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  std::string sign = sgn(q) < 0 ? "-" : "";
  mpz_class num = abs(q.get_num());
  return sign + "\\frac{" + num.get_str() + "}{" + q.get_den().get_str() + "}";
}

// A coefficient in front of a non-trivial monomial: "" for 1, "-" for -1, else "c*".
std::string plain_prefix(const GaussianRational& c) {
  if (c.is_one()) return "";
  if (c == GaussianRational(-1)) return "-";
  if (c.is_real() || c.is_imaginary()) return c.to_string() + "*";
  return "(" + c.to_string() + ")*";
}

std::string latex_prefix(const GaussianRational& c) {
  if (c.is_one()) return "";
  if (c == GaussianRational(-1)) return "-";
  if (c.is_real() || c.is_imaginary()) return render_latex(c) + " ";
  return "(" + render_latex(c) + ") ";
}

std::string plain_monomial(const GeneratorContext& ctx, const Monomial& m) {
  std::vector<std::string> factors;
  for (const auto& [g, e] : m.powers()) {
    std::string f = ctx[g].name;
    if (e != 1) f += e < 0 ? "^(" + std::to_string(e) + ")" : "^" + std::to_string(e);
    factors.push_back(std::move(f));
  }
  for (const auto& [g, c] : m.exps()) {
    if (c.is_one()) {
      factors.push_back("exp(" + ctx[g].name + ")");
    } else if (c.is_real() || c.is_imaginary()) {
      factors.push_back("exp(" + c.to_string() + "*" + ctx[g].name + ")");
    } else {
      factors.push_back("exp((" + c.to_string() + ")*" + ctx[g].name + ")");
    }
  }
  for (unsigned r = 0; r < ctx.odd_count(); ++r) {
    if (m.odd_mask() & (OddMask{1} << r)) factors.push_back(ctx[ctx.odd_generator(r)].name);
  }
  std::string out;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i) out += "*";
    out += factors[i];
  }
  return out;
}

std::string latex_monomial(const GeneratorContext& ctx, const Monomial& m) {
  std::vector<std::string> factors;
  for (const auto& [g, e] : m.powers()) {
    std::string s = latex_symbol(ctx[g].name);
    if (e != 1) s = "(" + s + ")^{" + std::to_string(e) + "}";
    factors.push_back(std::move(s));
  }
  for (const auto& [g, c] : m.exps()) {
    std::string mult = c.is_one() ? "" : (c == GaussianRational(-1) ? "-" : latex_prefix(c));
    factors.push_back("e^{" + mult + latex_symbol(ctx[g].name) + "}");
  }
  for (unsigned r = 0; r < ctx.odd_count(); ++r) {
    if (m.odd_mask() & (OddMask{1} << r)) factors.push_back(latex_symbol(ctx[ctx.odd_generator(r)].name));
  }
  std::string out;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i) out += " ";
    out += factors[i];
  }
  return out;
}

// Joins signed terms: "a + b - c".
std::string join_terms(const std::vector<std::string>& terms) {
  if (terms.empty()) return "0";
  std::string out = terms.front();
  for (std::size_t i = 1; i < terms.size(); ++i) {
    if (terms[i].front() == '-') {
      out += " - " + terms[i].substr(1);
    } else {
      out += " + " + terms[i];
    }
  }
  return out;
}

std::vector<std::string> poly_terms(const SuperPoly& p, bool latex) {
  std::vector<std::string> out;
  const GeneratorContext& ctx = *p.context();
  for (const auto& [m, c] : p.terms()) {
    if (m.is_one()) {
      out.push_back(latex ? render_latex(c) : render_plain(c));
      continue;
    }
    out.push_back(latex ? latex_prefix(c) + latex_monomial(ctx, m) : plain_prefix(c) + plain_monomial(ctx, m));
  }
  return out;
}

template <typename Legs>
std::string render_legs(const Legs& x, bool latex) {
  std::vector<std::string> terms;
  const Chart& chart = x.chart();
  for (std::size_t s = 0; s < chart.dim(); ++s) {
    if (x[s].is_zero()) continue;
    const std::string leg = latex ? "\\frac{\\partial}{\\partial " + latex_symbol(chart.slot_name(s)) + "}"
                                  : "@" + chart.slot_name(s);
    auto pieces = poly_terms(x[s], latex);
    if (pieces.size() == 1) {
      const std::string& t = pieces.front();
      if (t == "1") {
        terms.push_back(leg);
      } else if (t == "-1") {
        terms.push_back("-" + leg);
      } else if (latex) {
        terms.push_back(t + " " + leg);
      } else {
        terms.push_back(t + "*" + leg);
      }
    } else {
      const std::string inner = join_terms(pieces);
      terms.push_back(latex ? "\\left(" + inner + "\\right) " + leg : "(" + inner + ")*" + leg);
    }
  }
  return join_terms(terms);
}

}  // namespace

std::string render_plain(const GaussianRational& c) { return c.to_string(); }

std::string render_latex(const GaussianRational& c) {
  if (c.is_real()) return q_latex(c.real());
  auto imag = [](const mpq_class& q) {
    if (q == 1) return std::string("i");
    if (q == -1) return std::string("-i");
    return q_latex(q) + "i";
  };
  if (c.is_imaginary()) return imag(c.imag());
  std::string im = imag(c.imag());
  return q_latex(c.real()) + (im.front() == '-' ? im : "+" + im);
}

std::string render_plain(const SuperPoly& p) { return join_terms(poly_terms(p, false)); }
std::string render_latex(const SuperPoly& p) { return join_terms(poly_terms(p, true)); }
std::string render_plain(const VectorField& x) { return render_legs(x, false); }
std::string render_plain(const VectorValuedForm& form) { return render_legs(form, false); }
std::string render_latex(const VectorField& x) { return render_legs(x, true); }
std::string render_latex(const VectorValuedForm& form) { return render_legs(form, true); }

std::string latex_symbol(const std::string& name) {
  auto split = [&](std::size_t prefix) { return name.substr(prefix); };
  auto all_digits = [](const std::string& s) {
    if (s.empty()) return false;
    for (char ch : s) {
      if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
    }
    return true;
  };
  if (name.size() > 1 && name[0] == 'd') {
    std::string rest = latex_symbol(name.substr(1));
    if (rest != name.substr(1) || name.size() == 2) return "d" + rest;
  }
  if (name == "l") return "\\lambda";
  if (name.rfind("thb", 0) == 0 && all_digits(split(3))) return "\\bar{\\theta}_{\\dot{" + split(3) + "}}";
  if (name.rfind("th", 0) == 0 && all_digits(split(2))) return "\\theta^{" + split(2) + "}";
  if (name.rfind("epsb", 0) == 0 && all_digits(split(4))) return "\\bar{\\epsilon}_{\\dot{" + split(4) + "}}";
  if (name.rfind("eps", 0) == 0 && all_digits(split(3))) return "\\epsilon^{" + split(3) + "}";
  if (name.size() > 1 && std::isalpha(static_cast<unsigned char>(name[0])) && all_digits(split(1))) {
    return std::string(1, name[0]) + "^{" + split(1) + "}";
  }
  return name;
}

}  // namespace polycontact
