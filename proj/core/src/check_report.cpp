#include "polycontact/check_report.hpp"

#include "polycontact/render.hpp"

namespace polycontact {

const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass:
      return "pass";
    case CheckStatus::fail:
      return "fail";
    case CheckStatus::skipped:
      return "skipped";
  }
  return "?";
}

CheckRecorder::CheckRecorder(std::string id, std::string statement) : start_(std::chrono::steady_clock::now()) {
  report_.check_id = std::move(id);
  report_.statement = std::move(statement);
}

bool CheckRecorder::require(bool ok, std::string_view label, const std::function<std::string()>& witness) {
  report_.assertions.emplace_back(label);
  if (!ok && !witness_) {
    std::string w(label);
    if (witness) w += ": " + witness();
    witness_ = std::move(w);
  }
  return ok;
}

bool CheckRecorder::require_zero(std::string_view label, const SuperPoly& value) {
  return require(value.is_zero(), label, [&] { return render_plain(value); });
}

bool CheckRecorder::require_zero(std::string_view label, const VectorField& value) {
  return require(value.is_zero(), label, [&] { return render_plain(value); });
}

bool CheckRecorder::require_zero(std::string_view label, const VectorValuedForm& value) {
  return require(value.is_zero(), label, [&] { return render_plain(value); });
}

bool CheckRecorder::require_equal(std::string_view label, const SuperPoly& actual, const SuperPoly& expected) {
  return require(actual == expected, label, [&] { return "difference " + render_plain(actual - expected); });
}

namespace {

template <typename Legs>
std::string leg_difference(const Legs& actual, const Legs& expected) {
  if (actual.parity() != expected.parity() && !actual.is_zero() && !expected.is_zero()) {
    return std::string("parity ") + to_string(actual.parity()) + " vs " + to_string(expected.parity());
  }
  std::vector<SuperPoly> comps;
  for (std::size_t s = 0; s < actual.dim(); ++s) comps.push_back(actual[s] - expected[s]);
  Parity p = actual.is_zero() ? expected.parity() : actual.parity();
  return "difference " + render_plain(Legs(actual.chart(), std::move(comps), p));
}

}  // namespace

bool CheckRecorder::require_equal(std::string_view label, const VectorField& actual, const VectorField& expected) {
  bool same = actual.chart() == expected.chart() &&
              (actual == expected || (actual.is_zero() && expected.is_zero()));
  return require(same, label, [&] { return leg_difference(actual, expected); });
}

bool CheckRecorder::require_equal(std::string_view label, const VectorValuedForm& actual,
                                  const VectorValuedForm& expected) {
  bool same = actual.chart() == expected.chart() &&
              (actual == expected || (actual.is_zero() && expected.is_zero()));
  return require(same, label, [&] { return leg_difference(actual, expected); });
}

void CheckRecorder::fail(std::string_view label, std::string_view detail) {
  require(false, label, [&] { return std::string(detail); });
}

CheckReport CheckRecorder::finish() {
  report_.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  report_.status = witness_ ? CheckStatus::fail : CheckStatus::pass;
  report_.witness = witness_;
  return report_;
}

}  // namespace polycontact
