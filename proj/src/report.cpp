#include "f4/report.hpp"

#include <algorithm>
#include <cmath>

#include "f4/errors.hpp"

namespace f4 {

CheckResult& VerificationReport::add(std::string name, std::string formula, double residual,
                                     double tolerance, Json value) {
  CheckResult c;
  c.name = std::move(name);
  c.formula = std::move(formula);
  c.residual = residual;
  c.tolerance = tolerance;
  c.passed = std::isfinite(residual) && tolerance > 0.0 && residual <= tolerance;
  c.value = std::move(value);
  checks.push_back(std::move(c));
  return checks.back();
}

void VerificationReport::add_error(const std::exception& e) {
  const auto* err = dynamic_cast<const Error*>(&e);
  errors.push_back({err ? err->kind() : "std::exception", e.what()});
}

bool VerificationReport::passed() const {
  return errors.empty() && !checks.empty() &&
         std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

double VerificationReport::max_residual() const {
  double m = 0.0;
  for (const auto& c : checks) m = std::max(m, std::isfinite(c.residual) ? c.residual : INFINITY);
  return m;
}

Json to_json(Complex z) { return Json{{"re", z.real()}, {"im", z.imag()}}; }

Json to_json(const Eigen::MatrixXcd& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json to_json(const CheckResult& c) {
  Json j{{"name", c.name},         {"formula", c.formula}, {"residual", c.residual},
         {"tolerance", c.tolerance}, {"pass", c.passed}};
  if (!c.value.is_null()) j["value"] = c.value;
  return j;
}

Json to_json(const VerificationReport& r) {
  Json j{{"title", r.title}, {"pass", r.passed()}};
  Json checks = Json::array();
  for (const auto& c : r.checks) checks.push_back(to_json(c));
  j["checks"] = std::move(checks);
  if (!r.errors.empty()) {
    Json errs = Json::array();
    for (const auto& e : r.errors) errs.push_back({{"kind", e.kind}, {"message", e.message}});
    j["errors"] = std::move(errs);
  }
  if (!r.notes.empty()) j["notes"] = r.notes;
  if (!r.details.is_null()) j["details"] = r.details;
  return j;
}

}  // namespace f4
