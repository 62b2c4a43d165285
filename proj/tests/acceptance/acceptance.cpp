// One line per acceptance criterion; exit status 0 iff every criterion holds.
#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "polycontact/catalogue.hpp"
#include "polycontact/cli/evaluator.hpp"
#include "polycontact/render.hpp"
#include "polycontact/susy.hpp"
#include "polycontact/susy_checks.hpp"

using namespace polycontact;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
  double check_ms = 0;  // time spent inside the catalogue checks this criterion relies on
  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

std::map<std::string, CheckReport> g_reports;

void require_pass(Outcome& o, const std::string& id) {
  auto it = g_reports.find(id);
  if (it == g_reports.end()) {
    o.require(false, id + " did not run");
    return;
  }
  const CheckReport& r = it->second;
  o.check_ms += r.elapsed_ms;
  o.require(r.status == CheckStatus::pass, id + ": " + r.witness.value_or("not passing"));
}

struct Run {
  int status = -1;
  std::string out;
};

Run run_cli(const std::string& args) {
  Run r;
  std::string cmd = std::string("\"") + POLYCONTACT_CLI_PATH + "\" " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  while (std::fgets(buf.data(), buf.size(), pipe)) r.out += buf.data();
  int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

void kernel(Outcome& o) { require_pass(o, "kernel-theorem"); }

void nondegeneracy(Outcome& o) { require_pass(o, "nondegeneracy"); }

void maurer_cartan(Outcome& o) {
  require_pass(o, "maurer-cartan");
  MaurerCartanResult mc = susy_maurer_cartan(susy_chart());
  o.require(mc.series.terminated && mc.series.ad_powers.size() == 3 && mc.series.ad_powers[2].is_zero(),
            "series does not stop at ad_A^2(dA) = 0");
  o.require(render_plain(mc.translation_part) == render_plain(polycontact_form(susy_chart())),
            "rendered translation part differs from alpha");
}

void invariance(Outcome& o) {
  for (const char* id : {"invariance-susy", "invariance-translation", "invariance-rphase", "invariance-lorentz"}) {
    require_pass(o, id);
  }
  bool ok = true;
  for (const auto& m : intertwining_residual(rational_z_boost())) ok = ok && is_zero(m);
  o.require(ok, "z-boost pair does not intertwine");
}

void strict_contact(Outcome& o) { require_pass(o, "strict-contact"); }

void reeb(Outcome& o) {
  require_pass(o, "reeb");
  ReebResult r = reeb_solve();
  const SusyGenerators g = build_generators(susy_chart());
  for (std::size_t mu = 0; mu < 4; ++mu) {
    o.require(r.dimensions[mu] == 1, "solution space for mu = " + std::to_string(mu) + " is not one-dimensional");
    o.require(mu < r.fields.size() && r.fields[mu] == g.P[mu], "solved field differs from d/dx^" + std::to_string(mu));
  }
}

void algebra_table(Outcome& o) {
  require_pass(o, "algebra-table");
  o.require(g_reports["algebra-table"].assertions.size() >= 20, "fewer than 20 identities checked");
}

void decomposition(Outcome& o) { require_pass(o, "decomposition"); }

void symplectization(Outcome& o) {
  require_pass(o, "symplectize");
  require_pass(o, "block-decomposition");
}

void cone(Outcome& o) { require_pass(o, "cone"); }

void calculus_laws(Outcome& o) { require_pass(o, "calculus-laws"); }

void cli_contract(Outcome& o) {
  Run all = run_cli("verify all --format structured");
  o.require(all.status == 0, "verify all exited with " + std::to_string(all.status));
  std::istringstream lines(all.out);
  std::size_t passing = 0;
  std::size_t records = 0;
  for (std::string line; std::getline(lines, line);) {
    ++records;
    nlohmann::ordered_json j;
    try {
      j = nlohmann::ordered_json::parse(line);
    } catch (const std::exception&) {
      o.require(false, "unparsable record: " + line);
      continue;
    }
    std::vector<std::string> keys;
    for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
    o.require(keys == std::vector<std::string>{"check_id", "statement", "status", "witness", "elapsed_ms"},
              "record fields differ from the schema: " + line);
    if (j.value("status", "") == "pass") ++passing;
  }
  o.require(records == 15 && passing == 15,
            std::to_string(passing) + " of " + std::to_string(records) + " records passing");

  Run bogus = run_cli("verify bogus");
  o.require(bogus.status == 2, "unknown check id exited with " + std::to_string(bogus.status));

  const auto& ws = cli::Workspace::shared();
  std::ifstream in(POLYCONTACT_CORPUS);
  o.require(in.good(), "corpus missing");
  std::size_t entries = 0;
  for (std::string line; std::getline(in, line);) {
    if (line.empty() || line.front() == '#') continue;
    ++entries;
    try {
      cli::Value v = cli::evaluate(line, ws);
      o.require(cli::same_value(cli::evaluate(cli::render(v), ws), v), "round trip changes " + line);
    } catch (const std::exception& e) {
      o.require(false, line + ": " + e.what());
    }
  }
  o.require(entries > 0, "empty corpus");
}

}  // namespace

int main() {
  std::vector<const CatalogueEntry*> all;
  for (const auto& e : check_catalogue()) all.push_back(&e);
  for (auto& r : run_checks(all, CheckOptions{})) g_reports.emplace(r.check_id, std::move(r));

  const std::vector<std::pair<const char*, std::function<void(Outcome&)>>> criteria = {
      {"kernel of alpha is spanned by D and Dbar", kernel},
      {"d alpha and its contractions, full body rank", nondegeneracy},
      {"Maurer-Cartan series terminates, translation part is alpha", maurer_cartan},
      {"alpha invariant under susy, translation, R-phase, z-boost", invariance},
      {"Q, Qbar, P, R preserve alpha; theta d/dtheta does not", strict_contact},
      {"Reeb fields are the translations, unique", reeb},
      {"bracket table", algebra_table},
      {"decomposition into ker alpha and ker d alpha", decomposition},
      {"polysymplectic form and block decomposition", symplectization},
      {"cone form closed and scales by t^2", cone},
      {"calculus laws property suite", calculus_laws},
      {"command-line contract and round trip", cli_contract},
  };
  int failures = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Outcome o;
    auto start = std::chrono::steady_clock::now();
    try {
      criteria[k].second(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    double ms = o.check_ms + std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s criterion %2zu: %s (%.0f ms)%s%s\n", o.ok ? "PASS" : "FAIL", k + 1, criteria[k].first, ms,
                o.ok ? "" : " -- ", o.detail.c_str());
    failures += o.ok ? 0 : 1;
  }
  std::printf("%d of %zu criteria failed\n", failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
