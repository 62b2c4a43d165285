#pragma once

#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "polycontact/catalogue.hpp"
#include "polycontact/check_report.hpp"

namespace polycontact::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class ReportFormat { text, structured };

/// Ids may be given one per argument or comma-separated; "all" selects the catalogue.
/// Duplicates keep their first position. Throws UsageError on an unknown id.
std::vector<const CatalogueEntry*> select_checks(const std::vector<std::string>& ids);

/// One JSON object with exactly check_id, statement, status, witness, elapsed_ms.
std::string structured_record(const CheckReport& report);
std::string text_record(const CheckReport& report);

/// Index-notation LaTeX for a named object, when one exists.
std::optional<std::string> latex_template(std::string_view name);

int run_verify(const std::vector<std::string>& ids, ReportFormat format, std::optional<int> xdeg, std::ostream& out,
               std::ostream& err);
int run_eval(std::string_view expr, bool latex, std::ostream& out, std::ostream& err);
int run_show(std::string_view name, bool latex, std::ostream& out, std::ostream& err);

}  // namespace polycontact::cli
