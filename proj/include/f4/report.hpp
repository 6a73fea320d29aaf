#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "f4/types.hpp"

namespace f4 {

using Json = nlohmann::ordered_json;

/// One checked identity: residual against its tolerance.
struct CheckResult {
  std::string name;
  std::string formula;  // identifier of the closed form being checked
  double residual = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  Json value;  // optional payload (matrices, lhs/rhs, ...)
};

struct ErrorRecord {
  std::string kind;
  std::string message;
};

struct VerificationReport {
  std::string title;
  std::vector<CheckResult> checks;
  std::vector<ErrorRecord> errors;
  std::vector<std::string> notes;
  Json details;

  /// Passes iff residual <= tolerance and tolerance > 0; NaN residuals fail.
  CheckResult& add(std::string name, std::string formula, double residual, double tolerance,
                   Json value = {});
  void add_error(const std::exception& e);
  bool passed() const;
  double max_residual() const;
};

Json to_json(Complex z);
Json to_json(const Eigen::MatrixXcd& m);
Json to_json(const CheckResult& c);
Json to_json(const VerificationReport& r);

}  // namespace f4
