// f4tool: evaluation and verification front end for the F4 library.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "f4/checks.hpp"
#include "f4/continuation.hpp"
#include "f4/errors.hpp"
#include "f4/intersection.hpp"
#include "f4/monodromy.hpp"
#include "f4/solutions.hpp"
#include "f4/tpr.hpp"

using namespace f4;

namespace {

struct RunConfig {
  std::string command;
  std::string a = "0.31", b = "0.47", c1 = "0.62", c2 = "0.79";
  std::string x1 = "0.04", x2 = "0.06";
  std::optional<double> tol;
  double series_tol = 1e-14;
  double rk_tol = 1e-10;
  std::uint64_t seed = 1;
  int draws = 5;
  std::string out;
  bool json = false;
};

// Accepts "re", "imj", "re+imj" and "re-imj".
Complex parse_complex(const std::string& text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) throw ParameterError("empty complex literal");
  auto to_double = [&](const std::string& t) {
    std::size_t used = 0;
    const double v = std::stod(t, &used);
    if (used != t.size()) throw ParameterError("malformed complex literal '" + text + "'");
    return v;
  };
  try {
    if (s.back() != 'j') return to_double(s);
    const std::string body = s.substr(0, s.size() - 1);
    std::size_t split = std::string::npos;
    for (std::size_t i = body.size(); i-- > 1;)
      if ((body[i] == '+' || body[i] == '-') && body[i - 1] != 'e' && body[i - 1] != 'E') {
        split = i;
        break;
      }
    if (split == std::string::npos) {
      if (body.empty() || body == "+" || body == "-") return {0.0, body == "-" ? -1.0 : 1.0};
      return {0.0, to_double(body)};
    }
    const std::string im = body.substr(split);
    const double imag = (im == "+" || im == "-") ? (im == "-" ? -1.0 : 1.0) : to_double(im);
    return {to_double(body.substr(0, split)), imag};
  } catch (const std::invalid_argument&) {
    throw ParameterError("malformed complex literal '" + text + "'");
  } catch (const std::out_of_range&) {
    throw ParameterError("complex literal out of range '" + text + "'");
  }
}

Tolerances tolerances(const RunConfig& cfg) {
  return cfg.tol ? Tolerances::uniform(*cfg.tol) : Tolerances{};
}

Json params_json(const HypergeometricParams& p) {
  return Json{{"a", to_json(p.a)}, {"b", to_json(p.b)}, {"c1", to_json(p.c1)}, {"c2", to_json(p.c2)}};
}

Json point_json(const Point2& x) { return Json{{"x1", to_json(x.x1)}, {"x2", to_json(x.x2)}}; }

Json genericity_json(const HypergeometricParams& p) {
  const GenericityReport g = genericity_check(p);
  return Json{{"violated_conditions", g.violated_conditions},
              {"min_distance", g.min_distance},
              {"degenerate_flag", g.degenerate_flag}};
}

Json vector_json(const SolutionVector& v) {
  Json j = Json::array();
  for (const Complex z : v.entries) j.push_back(to_json(z));
  return Json{{"basis", to_string(v.basis)}, {"entries", j}};
}

Json matrix(const Eigen::MatrixXcd& m) { return to_json(m); }

// Collects sections and the overall verdict.
struct Document {
  Json body = Json::object();
  bool ok = true;
  Json errors = Json::array();

  void section(const std::string& name, const VerificationReport& r) {
    body[name] = to_json(r);
    ok = ok && r.passed();
  }
  void sections(const std::string& name, const std::vector<VerificationReport>& rs) {
    Json arr = Json::array();
    for (const auto& r : rs) {
      arr.push_back(to_json(r));
      ok = ok && r.passed();
    }
    body[name] = arr;
  }
  void error(const std::exception& e) {
    const auto* err = dynamic_cast<const Error*>(&e);
    errors.push_back({{"kind", err ? err->kind() : "std::exception"}, {"message", e.what()}});
    ok = false;
  }
};

Json run_eval(const HypergeometricParams& p, const Point2& x, const RunConfig& cfg) {
  const SeriesValue v = f4::f4(p, x, cfg.series_tol);
  Json j{{"f4", {{"value", to_json(v.value)}, {"order", v.order}, {"tail_bound", v.tail_bound}}}};
  // Prefactored bases need x off the branch cut.
  try {
    j["local_basis"] = vector_json(local_basis(p, x, cfg.series_tol));
    j["f_vector"] = vector_json(f_vector(p, x, cfg.series_tol));
    j["f_dual_vector"] = vector_json(f_dual_vector(p, x, cfg.series_tol));
    j["f_hat_vector"] = vector_json(f_hat_vector(p, x, cfg.series_tol));
  } catch (const BranchError& e) {
    j["bases_unavailable"] = e.what();
  }
  return j;
}

Json run_matrices(const HypergeometricParams& p, const Point2& x) {
  Json j = Json::object();
  auto guarded = [&](const char* name, auto&& fn) {
    try {
      j[name] = fn();
    } catch (const Error& e) {
      j[name] = Json{{"unavailable", std::string(e.kind()) + ": " + e.what()}};
    }
  };
  guarded("H", [&] { return matrix(h_matrix(p).entries); });
  guarded("Hhat", [&] { return matrix(h_hat_matrix(p).entries); });
  guarded("H678", [&] { return matrix(h678_matrix(p).entries); });
  guarded("C", [&] { return matrix(c_matrix(p, x).entries); });
  guarded("P", [&] { return matrix(basis_changes(p).P); });
  guarded("P_prime", [&] { return matrix(basis_changes(p).P_prime); });
  for (const LoopId loop : kAllLoops) {
    const std::string l = to_string(loop);
    guarded(("M_delta." + l).c_str(), [&] { return matrix(m_delta(p, loop).entries); });
    guarded(("M_hat." + l).c_str(), [&] { return matrix(m_hat(p, loop).entries); });
    guarded(("M_prime." + l).c_str(), [&] { return matrix(m_prime(p, loop).entries); });
  }
  return j;
}

// Closed-form identities over seeded random generic draws.
VerificationReport run_sweep(const Point2& x, const RunConfig& cfg, const Tolerances& tol) {
  VerificationReport rep;
  rep.title = "random draws";
  std::mt19937_64 rng(cfg.seed);
  for (int i = 0; i < cfg.draws; ++i) {
    const HypergeometricParams q = random_generic_params(rng);
    const std::string tag = "draw" + std::to_string(i) + ".";
    for (const auto& r : {intersection_checks(q, x, tol), monodromy_closed_form_checks(q, tol),
                          tpr_check(q, x, tol.identity, tol.entry11)}) {
      for (const auto& c : r.checks) {
        CheckResult copy = c;
        copy.name = tag + c.name;
        copy.value = Json();
        rep.checks.push_back(copy);
      }
      rep.errors.insert(rep.errors.end(), r.errors.begin(), r.errors.end());
    }
  }
  rep.details = Json{{"seed", cfg.seed}, {"draws", cfg.draws}};
  return rep;
}

// Plain-text rendering of the JSON document.
void render_text(std::ostream& os, const Json& j, int indent = 0) {
  const std::string pad(indent, ' ');
  auto complex_text = [](const Json& z) {
    // Adding 0.0 turns -0 into +0.
    const double re = z["re"].get<double>() + 0.0, im = z["im"].get<double>() + 0.0;
    char buf[64];
    if (re == 0.0 && im == 0.0) return std::string("0");
    std::snprintf(buf, sizeof buf, "%.12g%+.12gi", re, im);
    return std::string(buf);
  };
  auto is_complex = [](const Json& z) {
    return z.is_object() && z.size() == 2 && z.contains("re") && z.contains("im");
  };
  if (j.is_object() && j.contains("name") && j.contains("residual") && j.contains("pass")) {
    char buf[256];
    std::snprintf(buf, sizeof buf, "%s[%s] %s  residual=%.3e  tol=%.1e", pad.c_str(),
                  j["pass"].get<bool>() ? "PASS" : "FAIL", j["name"].get<std::string>().c_str(),
                  j["residual"].is_number() ? j["residual"].get<double>() : NAN,
                  j["tolerance"].get<double>());
    os << buf << '\n';
    return;
  }
  if (is_complex(j)) {
    os << pad << complex_text(j) << '\n';
    return;
  }
  if (j.is_array() && !j.empty() && j[0].is_array() && !j[0].empty() && is_complex(j[0][0])) {
    for (const auto& row : j) {
      os << pad;
      for (const auto& z : row) {
        std::string s = complex_text(z);
        s.resize(std::max<std::size_t>(s.size(), 40), ' ');
        os << s;
      }
      os << '\n';
    }
    return;
  }
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      if (is_complex(v)) {
        os << pad << k << ": " << complex_text(v) << '\n';
      } else if (v.is_primitive()) {
        os << pad << k << ": " << v.dump() << '\n';
      } else {
        os << pad << k << ":\n";
        render_text(os, v, indent + 2);
      }
    }
    return;
  }
  if (j.is_array()) {
    bool primitive = true;
    for (const auto& v : j) primitive = primitive && (v.is_primitive() || is_complex(v));
    if (primitive) {
      if (j.empty()) {
        os << pad << "(none)\n";
        return;
      }
      os << pad;
      for (const auto& v : j) os << (is_complex(v) ? complex_text(v) : v.dump()) << "  ";
      os << '\n';
      return;
    }
    for (const auto& v : j) render_text(os, v, indent);
    return;
  }
  os << pad << j.dump() << '\n';
}

int run(const RunConfig& cfg) {
  Document doc;
  doc.body["command"] = cfg.command;
  try {
    const HypergeometricParams p = HypergeometricParams::make(
        parse_complex(cfg.a), parse_complex(cfg.b), parse_complex(cfg.c1), parse_complex(cfg.c2));
    const Point2 x{parse_complex(cfg.x1), parse_complex(cfg.x2)};
    if (cfg.tol && !(*cfg.tol > 0.0)) throw ParameterError("--tol must be positive");
    if (!(cfg.rk_tol > 0.0) || !(cfg.series_tol > 0.0))
      throw ParameterError("tolerances must be positive");
    const Tolerances tol = tolerances(cfg);
    ContinuationOptions copts;
    copts.integrator.rel_tol = cfg.rk_tol;

    doc.body["params"] = params_json(p);
    doc.body["point"] = point_json(x);
    doc.body["genericity"] = genericity_json(p);

    const std::string& c = cfg.command;
    if (c == "eval") {
      doc.body["eval"] = run_eval(p, x, cfg);
    } else if (c == "matrices") {
      doc.body["matrices"] = run_matrices(p, x);
      doc.section("intersection_checks", intersection_checks(p, x, tol));
      doc.section("monodromy_checks", monodromy_closed_form_checks(p, tol));
    } else if (c == "monodromy-verify") {
      doc.sections("monodromy", verify_all_loops(p, tol.monodromy, copts));
    } else if (c == "tpr-check") {
      doc.section("tpr", tpr_check(p, x, tol.identity, tol.entry11));
    } else {
      doc.body["matrices"] = run_matrices(p, x);
      doc.section("intersection_checks", intersection_checks(p, x, tol));
      doc.section("monodromy_checks", monodromy_closed_form_checks(p, tol));
      doc.sections("monodromy", verify_all_loops(p, tol.monodromy, copts));
      doc.section("tpr", tpr_check(p, x, tol.identity, tol.entry11));
      doc.section("random_draws", run_sweep(x, cfg, tol));
    }
  } catch (const std::exception& e) {
    doc.error(e);
  }
  if (!doc.errors.empty()) doc.body["errors"] = doc.errors;
  doc.body["pass"] = doc.ok;

  std::ostringstream text;
  if (cfg.json)
    text << doc.body.dump(2) << '\n';
  else
    render_text(text, doc.body);

  if (cfg.out.empty()) {
    std::cout << text.str();
  } else {
    std::ofstream f(cfg.out);
    if (!f) {
      std::cerr << "cannot open " << cfg.out << '\n';
      return 2;
    }
    f << text.str();
  }
  return doc.ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Appell F4: series, bases, intersection and monodromy matrices, verification"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig cfg;
  app.add_option("--a", cfg.a, "parameter a (re+imj)")->capture_default_str();
  app.add_option("--b", cfg.b, "parameter b")->capture_default_str();
  app.add_option("--c1", cfg.c1, "parameter c1")->capture_default_str();
  app.add_option("--c2", cfg.c2, "parameter c2")->capture_default_str();
  app.add_option("--x1", cfg.x1, "point coordinate x1")->capture_default_str();
  app.add_option("--x2", cfg.x2, "point coordinate x2")->capture_default_str();
  app.add_option("--tol", cfg.tol, "report tolerance for every check (default: per family)");
  app.add_option("--series-tol", cfg.series_tol, "series truncation tolerance")->capture_default_str();
  app.add_option("--rk-tol", cfg.rk_tol, "integrator relative tolerance")->capture_default_str();
  app.add_option("--seed", cfg.seed, "seed for random parameter draws")->capture_default_str();
  app.add_option("--draws", cfg.draws, "random draws in full-report")->capture_default_str();
  app.add_option("--out", cfg.out, "output path (default stdout)");
  app.add_flag("--json", cfg.json, "emit JSON");

  for (const char* name : {"eval", "matrices", "monodromy-verify", "tpr-check", "full-report"}) {
    app.add_subcommand(name, "")->callback([&cfg, name] { cfg.command = name; });
  }
  app.get_subcommand("eval")->description("F4 and the four solution bases at a point");
  app.get_subcommand("matrices")->description("intersection, change-of-basis and circuit matrices");
  app.get_subcommand("monodromy-verify")->description("numerical continuation around the three loops");
  app.get_subcommand("tpr-check")->description("twisted period relations");
  app.get_subcommand("full-report")->description("all of the above plus random draws");

  CLI11_PARSE(app, argc, argv);
  return run(cfg);
}
