#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "polycontact/check_report.hpp"

namespace polycontact {

struct CatalogueEntry {
  std::string id;
  std::function<CheckReport(const CheckOptions&)> run;
};

/// Every named verification, in the fixed reporting order.
const std::vector<CatalogueEntry>& check_catalogue();
const CatalogueEntry* find_check(const std::string& id);

/// Runs one entry; an escaping exception becomes a failed report.
CheckReport run_check(const CatalogueEntry& entry, const CheckOptions& opts);

/// Runs the selected entries concurrently; reports come back in selection order.
std::vector<CheckReport> run_checks(const std::vector<const CatalogueEntry*>& selection, const CheckOptions& opts,
                                    bool parallel = true);

}  // namespace polycontact
