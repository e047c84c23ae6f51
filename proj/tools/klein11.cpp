// klein11: runs the verification and derivation tasks and writes certificates.
// Exit codes: 0 all checks pass, 1 a check failed, 2 usage error.

#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "klein11/cli/tasks.hpp"

using namespace klein11;

namespace {

int finish(const Certificate& cert, const std::string& json_path) {
  for (const auto& s : cert.suites) std::cout << s.report();
  std::cout << (cert.pass() ? "PASS" : "FAIL") << "\n";
  if (!json_path.empty()) {
    std::ofstream out(json_path);
    if (!out) {
      std::cerr << "cannot write " << json_path << "\n";
      return 1;
    }
    out << cert.to_json().dump(2) << "\n";
  }
  return cert.pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Degree-eleven transformation: exact verification tasks", "klein11"};
  app.require_subcommand(1);
  app.fallthrough();

  TaskOptions opt;
  std::string json_path;
  std::string omega_text = "1.5i";
  app.add_option("--order", opt.order, "branch truncation order")->check(CLI::PositiveNumber)->capture_default_str();
  app.add_option("--qorder", opt.qorder, "u-series truncation order")->check(CLI::PositiveNumber)->capture_default_str();
  app.add_flag("--conjugate", opt.conjugate, "use the second system, sqrt(-11) -> -sqrt(-11)");
  app.add_option("--json", json_path, "write a JSON certificate to this path");

  auto* covers = app.add_subcommand("covers", "branched covers of the sphere");
  covers->require_subcommand(1);
  auto* census = covers->add_subcommand("census", "classify the eleven-sheeted covers");

  auto* group = app.add_subcommand("group", "the collineation group of order 660");
  group->require_subcommand(1);
  auto* group_verify = group->add_subcommand("verify", "elements, relations and invariants");

  auto* curve = app.add_subcommand("curve", "the double curve of H = 0");
  curve->require_subcommand(1);
  auto* curve_verify = curve->add_subcommand("verify", "branches, degree and genus");

  auto* resolvent = app.add_subcommand("resolvent", "the resolvents of degree eleven");
  resolvent->require_subcommand(1);
  auto* derive = resolvent->add_subcommand("derive", "derive a resolvent by undetermined coefficients");
  derive->add_option("--form", opt.form, "z or xi")->check(CLI::IsMember({"z", "xi"}))->capture_default_str();
  derive->add_option("--chart", opt.chart, "coordinate point of the branch")
      ->check(CLI::IsMember({"I", "IV", "V", "IX", "III"}))
      ->capture_default_str();
  derive->add_option("--order", opt.order, "branch truncation order")->check(CLI::Range(30L, 100000L));

  auto* qmod = app.add_subcommand("qmod", "q-series identities");
  qmod->require_subcommand(1);
  auto* qverify = qmod->add_subcommand("verify", "one exact u-series identity");
  qverify->add_option("--identity", opt.identity, "28|29|33|36|hik|J")
      ->required()
      ->check(CLI::IsMember(qmod_identities()));
  qverify->add_option("--order", opt.qorder, "u-series truncation order")->check(CLI::PositiveNumber);
  auto* spot = qmod->add_subcommand("spotcheck", "floating check at a point of the upper half plane");
  spot->add_option("--omega", omega_text, "point a+bi with b > 0")->capture_default_str();
  spot->add_option("--tolerance", opt.tolerance, "bound for |F(z_v) - J|")->capture_default_str();
  spot->add_option("--digits", opt.digits, "working decimal digits")->check(CLI::Range(20u, 2000u))->capture_default_str();

  auto* all = app.add_subcommand("all", "every task with the given orders");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    Certificate cert;
    cert.parameters = {{"order", opt.order}, {"qorder", opt.qorder}, {"conjugate", opt.conjugate}};
    if (*census) {
      cert.suites.push_back(task_covers_census());
    } else if (*group_verify) {
      cert.suites.push_back(task_group_verify(opt));
    } else if (*curve_verify) {
      cert.suites.push_back(task_curve_verify(opt));
    } else if (*derive) {
      cert.parameters["chart"] = opt.chart;
      cert.parameters["form"] = opt.form;
      cert.suites.push_back(task_resolvent(opt));
    } else if (*qverify) {
      cert.parameters["identity"] = opt.identity;
      cert.suites.push_back(task_qmod_verify(opt));
    } else if (*spot) {
      opt.omega = parse_omega(omega_text);
      if (!(opt.omega.imag() > 0)) throw ParseError("omega must lie in the upper half plane");
      cert.parameters["omega"] = format_omega(opt.omega);
      cert.suites.push_back(task_qmod_spotcheck(opt));
    } else if (*all) {
      cert = run_all(opt);
    }
    return finish(cert, json_path);
  } catch (const ParseError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  }
}
