#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "fanohodge/bipoly.hpp"
#include "fanohodge/integer.hpp"
#include "fanohodge/laurent_poly.hpp"
#include "fanohodge/motivic_expression.hpp"

namespace fanohodge {

enum class Status { verified, failed };

std::string_view to_string(Status status);

using ReportValue = std::variant<Integer, LaurentPoly, BiPoly, MotivicExpression>;

struct ReportParam {
  std::string name;
  long value;

  friend bool operator==(const ReportParam&, const ReportParam&) = default;
};

struct EffectivityCheck {
  int index;
  bool effective;

  friend bool operator==(const EffectivityCheck&, const EffectivityCheck&) = default;
};

using Milliseconds = std::chrono::duration<double, std::milli>;

/// Outcome of checking one identity instance. Both sides are kept so that a
/// mismatch can be inspected; status() is derived, never stored.
struct VerificationReport {
  std::string identity;
  std::vector<ReportParam> params;
  ReportValue lhs;
  ReportValue rhs;
  std::vector<EffectivityCheck> effectivity;
  std::optional<bool> lefschetz_symmetric;  // informational only
  std::vector<std::string> notes;
  Milliseconds elapsed{0};

  /// verified iff lhs == rhs and every effectivity check passed.
  Status status() const;
  bool verified() const { return status() == Status::verified; }
};

/// Runs `body`, which fills in a report, and records its wall-clock time.
template <typename Body>
VerificationReport timed(Body&& body) {
  const auto start = std::chrono::steady_clock::now();
  VerificationReport report = std::forward<Body>(body)();
  report.elapsed = std::chrono::steady_clock::now() - start;
  return report;
}

}  // namespace fanohodge
