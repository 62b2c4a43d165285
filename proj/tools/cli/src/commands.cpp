#include "polycontact/cli/commands.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <sstream>

#include <json.hpp>

#include "polycontact/cli/evaluator.hpp"

namespace polycontact::cli {

std::vector<const CatalogueEntry*> select_checks(const std::vector<std::string>& ids) {
  std::vector<const CatalogueEntry*> out;
  auto add = [&](const CatalogueEntry* e) {
    if (std::find(out.begin(), out.end(), e) == out.end()) out.push_back(e);
  };
  for (const auto& arg : ids) {
    std::stringstream ss(arg);
    std::string id;
    while (std::getline(ss, id, ',')) {
      if (id.empty()) continue;
      if (id == "all") {
        for (const auto& e : check_catalogue()) add(&e);
        continue;
      }
      const CatalogueEntry* e = find_check(id);
      if (!e) throw UsageError("unknown check id '" + id + "'");
      add(e);
    }
  }
  if (out.empty()) throw UsageError("no checks selected");
  return out;
}

std::string structured_record(const CheckReport& r) {
  nlohmann::ordered_json j;
  j["check_id"] = r.check_id;
  j["statement"] = r.statement;
  j["status"] = to_string(r.status);
  j["witness"] = r.witness ? nlohmann::ordered_json(*r.witness) : nlohmann::ordered_json(nullptr);
  j["elapsed_ms"] = r.elapsed_ms;
  return j.dump();
}

std::string text_record(const CheckReport& r) {
  char ms[32];
  std::snprintf(ms, sizeof ms, "%.1f ms", r.elapsed_ms);
  std::string line = std::string(to_string(r.status)) + "  " + r.check_id + "  (" + ms + ")\n    " + r.statement;
  if (r.witness) line += "\n    witness: " + *r.witness;
  return line;
}

int run_verify(const std::vector<std::string>& ids, ReportFormat format, std::optional<int> xdeg, std::ostream& out,
               std::ostream& err) {
  std::vector<const CatalogueEntry*> selection;
  try {
    selection = select_checks(ids);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  CheckOptions opts;
  if (xdeg) {
    if (*xdeg < 0) {
      err << "error: --xdeg must be non-negative\n";
      return kExitUsage;
    }
    opts.kernel_xdeg = *xdeg;
    opts.reeb_xdeg = *xdeg;
  }
  const auto reports = run_checks(selection, opts);
  std::size_t passed = 0;
  for (const auto& r : reports) {
    if (r.status == CheckStatus::pass) ++passed;
    out << (format == ReportFormat::structured ? structured_record(r) : text_record(r)) << "\n";
  }
  if (format == ReportFormat::text) out << passed << "/" << reports.size() << " checks passed\n";
  return passed == reports.size() ? kExitPass : kExitFail;
}

int run_eval(std::string_view expr, bool latex, std::ostream& out, std::ostream& err) {
  const Workspace& ws = Workspace::shared();
  try {
    out << render(evaluate(expr, ws), latex) << "\n";
    return kExitPass;
  } catch (const EvalError& e) {
    err << "error: " << format_diagnostic(expr, e) << "\n";
    return kExitFail;
  } catch (const SyntaxError& e) {
    err << "error: " << format_diagnostic(expr, e) << "\n";
    return kExitUsage;
  }
}

namespace {

const char* const kAlphaBody =
    "dx^{\\mu} + i\\left(\\theta\\sigma^{\\mu}d\\bar{\\theta} + d\\theta\\sigma^{\\mu}\\bar{\\theta}\\right)";

std::string fill(std::string text, const std::string& index) {
  for (std::size_t p; (p = text.find('#')) != std::string::npos;) text.replace(p, 1, index);
  return text;
}

}  // namespace

std::optional<std::string> latex_template(std::string_view name) {
  const std::string n(name);
  static const std::map<std::string, std::string> fixed = {
      {"alpha", std::string("\\alpha = \\left(") + kAlphaBody + "\\right)\\frac{\\partial}{\\partial x^{\\mu}}"},
      {"dalpha", "d\\alpha = 2i\\, d\\theta\\sigma^{\\mu}d\\bar{\\theta}\\,\\frac{\\partial}{\\partial x^{\\mu}}"},
      {"omega", std::string("\\omega = d\\left(e^{\\lambda}\\pi^{*}\\alpha\\right) = e^{\\lambda}\\left(d\\lambda\\left(") +
                    kAlphaBody +
                    "\\right) + 2i\\, d\\theta\\sigma^{\\mu}d\\bar{\\theta}\\right)\\frac{\\partial}{\\partial x^{\\mu}}"},
      {"varpi", std::string("\\varpi = d\\left(r^{2}\\alpha\\right) = \\left(2r\\, dr\\left(") + kAlphaBody +
                    "\\right) + 2i r^{2}\\, d\\theta\\sigma^{\\mu}d\\bar{\\theta}\\right)\\frac{\\partial}{\\partial "
                    "x^{\\mu}}"},
      {"R", "R = i\\left(\\bar{\\theta}_{\\dot{a}}\\frac{\\partial}{\\partial\\bar{\\theta}_{\\dot{a}}} - "
            "\\theta^{a}\\frac{\\partial}{\\partial\\theta^{a}}\\right)"},
  };
  if (auto it = fixed.find(n); it != fixed.end()) return it->second;

  // Indexed families: Q1, Qb2, D1, Db1, P0 ...
  struct Family {
    const char* prefix;
    const char* tmpl;
    bool dotted;
  };
  static const Family families[] = {
      {"Qb", "\\bar{Q}^{#} = \\frac{\\partial}{\\partial\\bar{\\theta}_{#}} + i\\left(\\theta\\sigma^{\\mu}\\right)^{#}"
             "\\frac{\\partial}{\\partial x^{\\mu}}",
       true},
      {"Db", "\\bar{\\mathbb{D}}^{#} = \\frac{\\partial}{\\partial\\bar{\\theta}_{#}} - "
             "i\\left(\\theta\\sigma^{\\mu}\\right)^{#}\\frac{\\partial}{\\partial x^{\\mu}}",
       true},
      {"Q", "Q_{#} = \\frac{\\partial}{\\partial\\theta^{#}} + i\\left(\\sigma^{\\mu}\\bar{\\theta}\\right)_{#}"
            "\\frac{\\partial}{\\partial x^{\\mu}}",
       false},
      {"D", "\\mathbb{D}_{#} = \\frac{\\partial}{\\partial\\theta^{#}} - i\\left(\\sigma^{\\mu}\\bar{\\theta}\\right)_{#}"
            "\\frac{\\partial}{\\partial x^{\\mu}}",
       false},
      {"P", "P_{#} = \\frac{\\partial}{\\partial x^{#}}", false},
  };
  if (!Workspace::shared().has_named(n)) return std::nullopt;
  for (const auto& f : families) {
    const std::string prefix = f.prefix;
    if (n.size() != prefix.size() + 1 || n.compare(0, prefix.size(), prefix) != 0) continue;
    const std::string digit = n.substr(prefix.size());
    return fill(f.tmpl, f.dotted ? "\\dot{" + digit + "}" : digit);
  }
  return std::nullopt;
}

int run_show(std::string_view name, bool latex, std::ostream& out, std::ostream& err) {
  const Workspace& ws = Workspace::shared();
  if (!ws.has_named(name)) {
    err << "error: unknown object '" << name << "'; known:";
    for (const auto& n : ws.named_order()) err << " " << n;
    err << "\n";
    return kExitUsage;
  }
  const Value& v = ws.named(name);
  if (latex) {
    if (auto t = latex_template(name)) out << *t << "\n";
    out << render(v, true) << "\n";
  } else {
    out << render(v, false) << "\n";
  }
  return kExitPass;
}

}  // namespace polycontact::cli
