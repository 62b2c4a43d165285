#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "polycontact/super_poly.hpp"
#include "polycontact/vector_field.hpp"

namespace polycontact {

enum class CheckStatus { pass, fail, skipped };

const char* to_string(CheckStatus s);

struct CheckReport {
  std::string check_id;
  std::string statement;
  CheckStatus status = CheckStatus::skipped;
  /// Present exactly when status is fail.
  std::optional<std::string> witness;
  double elapsed_ms = 0;
  /// Labels of the individual assertions, in evaluation order.
  std::vector<std::string> assertions;
};

/// Knobs shared by the verification routines.
struct CheckOptions {
  /// x-degree bound of the kernel-theorem ansatz.
  int kernel_xdeg = 2;
  /// x-degree bound of the Reeb ansatz.
  int reeb_xdeg = 2;
  /// Randomised cases per law in the property suites.
  int cases = 200;
  std::uint64_t seed = 20130101;
};

/// Accumulates assertions for one check; the first failure becomes the witness.
class CheckRecorder {
 public:
  CheckRecorder(std::string id, std::string statement);

  bool require(bool ok, std::string_view label, const std::function<std::string()>& witness = {});
  bool require_zero(std::string_view label, const SuperPoly& value);
  bool require_zero(std::string_view label, const VectorField& value);
  bool require_zero(std::string_view label, const VectorValuedForm& value);
  bool require_equal(std::string_view label, const SuperPoly& actual, const SuperPoly& expected);
  bool require_equal(std::string_view label, const VectorField& actual, const VectorField& expected);
  bool require_equal(std::string_view label, const VectorValuedForm& actual, const VectorValuedForm& expected);

  /// Marks the check failed with an exception message.
  void fail(std::string_view label, std::string_view detail);

  bool ok() const { return !witness_; }
  CheckReport finish();

 private:
  CheckReport report_;
  std::optional<std::string> witness_;
  std::chrono::steady_clock::time_point start_;
};

}  // namespace polycontact
