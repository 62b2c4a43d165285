#include "polycontact/catalogue.hpp"

#include <chrono>
#include <future>

#include "polycontact/laws.hpp"
#include "polycontact/polysymplectic.hpp"
#include "polycontact/susy_checks.hpp"

namespace polycontact {

const std::vector<CatalogueEntry>& check_catalogue() {
  static const std::vector<CatalogueEntry> entries = {
      {"kernel-theorem", [](const CheckOptions& o) { return verify_kernel_theorem(o); }},
      {"nondegeneracy", [](const CheckOptions& o) { return verify_nondegeneracy(o); }},
      {"invariance-susy", [](const CheckOptions&) { return verify_invariance(InvarianceKind::susy); }},
      {"invariance-translation", [](const CheckOptions&) { return verify_invariance(InvarianceKind::translation); }},
      {"invariance-lorentz", [](const CheckOptions&) { return verify_invariance(InvarianceKind::lorentz); }},
      {"invariance-rphase", [](const CheckOptions&) { return verify_invariance(InvarianceKind::r_phase); }},
      {"strict-contact", [](const CheckOptions& o) { return verify_strict_contact_fields(o); }},
      {"reeb", [](const CheckOptions& o) { return reeb_solve(o).report; }},
      {"algebra-table", [](const CheckOptions& o) { return verify_algebra_table(o); }},
      {"decomposition", [](const CheckOptions& o) { return verify_decomposition(o); }},
      {"maurer-cartan", [](const CheckOptions& o) { return verify_maurer_cartan(o); }},
      {"symplectize", [](const CheckOptions& o) { return verify_symplectization(o); }},
      {"cone", [](const CheckOptions& o) { return verify_cone(o); }},
      {"block-decomposition", [](const CheckOptions& o) { return verify_block_decomposition(o); }},
      {"calculus-laws", [](const CheckOptions& o) { return verify_calculus_laws(o); }},
  };
  return entries;
}

const CatalogueEntry* find_check(const std::string& id) {
  for (const auto& e : check_catalogue()) {
    if (e.id == id) return &e;
  }
  return nullptr;
}

CheckReport run_check(const CatalogueEntry& entry, const CheckOptions& opts) {
  const auto start = std::chrono::steady_clock::now();
  try {
    return entry.run(opts);
  } catch (const std::exception& e) {
    CheckReport r;
    r.check_id = entry.id;
    r.statement = "check aborted";
    r.status = CheckStatus::fail;
    r.witness = std::string("exception: ") + e.what();
    r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return r;
  }
}

std::vector<CheckReport> run_checks(const std::vector<const CatalogueEntry*>& selection, const CheckOptions& opts,
                                    bool parallel) {
  std::vector<CheckReport> out;
  out.reserve(selection.size());
  if (!parallel) {
    for (const auto* e : selection) out.push_back(run_check(*e, opts));
    return out;
  }
  std::vector<std::future<CheckReport>> pending;
  pending.reserve(selection.size());
  for (const auto* e : selection) {
    pending.push_back(std::async(std::launch::async, [e, &opts] { return run_check(*e, opts); }));
  }
  for (auto& f : pending) out.push_back(f.get());
  return out;
}

}  // namespace polycontact
