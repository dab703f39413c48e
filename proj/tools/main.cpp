// Copyright 2026 The vdgv Authors.
// SPDX-License-Identifier: Apache-2.0

#include <cstdint>
#include <fstream>
#include <iostream>
#include <limits>

#include "CLI11.hpp"
#include "vdgv/cli/pipeline.hpp"
#include "vdgv/cli/verify.hpp"

namespace {

using namespace vdgv;
using namespace vdgv::cli;

struct Flags {
  CurveInput in;
  RunOptions run;
  bool force = false;
  std::string out;
  unsigned n = 1;
  std::string grid;
};

void curve_flags(CLI::App* sub, Flags& fl, bool required) {
  sub->add_option("--p0", fl.in.p0, "characteristic")->required(required);
  sub->add_option("--f", fl.in.f, "q = p0^f")->required(required);
  sub->add_option("--p", fl.in.p, "p = p0^k, the Artin-Schreier degree")->required(required);
  sub->add_option("--R", fl.in.R, "coefficients a_0;...;a_e of R = sum a_i x^(p^i)")->required(required);
  sub->add_option("--FR", fl.in.FR, "coefficients of F_R, in powers of p");
  sub->add_option("--delta", fl.in.delta, "coefficients of delta, in powers of p0");
}

void run_flags(CLI::App* sub, Flags& fl) {
  sub->add_option("--max-n", fl.run.max_n, "largest n for counts and verdicts (default 4 p0)");
  sub->add_flag("--force", fl.force, "lift the enumeration size guard");
  sub->add_option("--out", fl.out, "write the JSON report here instead of stdout");
  sub->add_option("--jobs", fl.run.jobs, "OpenMP threads for point counting (default: all)");
  sub->add_option("--oracle-limit", fl.run.oracle_limit, "largest field enumerated by the oracle routes");
  sub->add_flag("--timings", fl.run.timings, "append a timings_ms section");
}

void emit(const Json& j, const std::string& out) {
  const std::string text = render(j);
  if (out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out, std::ios::binary);
  check(static_cast<bool>(f), ErrorKind::InvalidInput, "cannot open " + out);
  f << text;
}

int verify_one(const Curve& curve, const RunOptions& run, Json& report) {
  const auto an = analyze(curve, run);
  const auto rs = run_suites(*an);
  report = Json{{"suites", suites_json(rs)}, {"pass", all_pass(rs)}};
  return all_pass(rs) ? 0 : 4;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Point counts, L-polynomials and Gauss sums of curves y^p - y = x R(x)"};
  app.require_subcommand(1);
  Flags fl;

  auto* analyze_cmd = app.add_subcommand("analyze", "full report: structure, tau table, L-polynomial, verdicts");
  auto* count_cmd = app.add_subcommand("count", "number of points over F_{q^n}");
  auto* verify_cmd = app.add_subcommand("verify", "run every property suite on a curve or a built-in grid");
  auto* tau_cmd = app.add_subcommand("tau", "the tau table only");
  auto* quotient_cmd = app.add_subcommand("quotient", "the quotient chain only");
  for (auto* s : {analyze_cmd, count_cmd, tau_cmd, quotient_cmd}) {
    curve_flags(s, fl, true);
    run_flags(s, fl);
  }
  curve_flags(verify_cmd, fl, false);
  run_flags(verify_cmd, fl);
  verify_cmd->add_option("--grid", fl.grid, "built-in grid: small or extended");
  count_cmd->add_option("--n", fl.n, "extension degree")->required();

  CLI11_PARSE(app, argc, argv);
  if (fl.force) gf::set_size_guard(std::numeric_limits<std::uint64_t>::max());

  try {
    if (verify_cmd->parsed() && !fl.grid.empty()) {
      Json curves = Json::object();
      int code = 0;
      for (const auto& gc : grid(fl.grid)) {
        Json r;
        if (verify_one(parse_curve(gc.input), fl.run, r) != 0) code = 4;
        curves[gc.name] = r;
      }
      emit(Json{{"schema", "vdgv-report/1"}, {"grid", fl.grid}, {"curves", curves}, {"pass", code == 0}}, fl.out);
      return code;
    }
    if (verify_cmd->parsed()) {
      check(fl.in.p0 != 0 && fl.in.f != 0 && fl.in.p != 0 && !fl.in.R.empty(), ErrorKind::InvalidInput,
            "verify needs --grid or --p0, --f, --p and --R");
      Json r;
      const int code = verify_one(parse_curve(fl.in), fl.run, r);
      r["schema"] = "vdgv-report/1";
      emit(r, fl.out);
      return code;
    }

    const Curve curve = parse_curve(fl.in);
    if (count_cmd->parsed()) {
      emit(count_json(curve, fl.n, fl.run), fl.out);
      return 0;
    }
    if (quotient_cmd->parsed()) {
      emit(quotient_json(*analyze_structure(curve, fl.run)), fl.out);
      return 0;
    }
    if (tau_cmd->parsed()) {
      const auto an = analyze_tau(curve, fl.run);
      emit(tau_report_json(*an), fl.out);
      return an->mismatches.empty() ? 0 : 4;
    }
    const auto an = analyze(curve, fl.run);
    emit(report_json(*an, fl.run.timings), fl.out);
    return an->mismatches.empty() ? 0 : 4;
  } catch (const Error& e) {
    std::cerr << "vdgv: " << e.what() << "\n";
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "vdgv: " << e.what() << "\n";
    return 4;
  }
}
