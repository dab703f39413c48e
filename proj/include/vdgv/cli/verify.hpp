// Copyright 2026 The vdgv Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef VDGV_CLI_VERIFY_HPP
#define VDGV_CLI_VERIFY_HPP

#include <string>
#include <vector>

#include "vdgv/cli/pipeline.hpp"

namespace vdgv::cli {

// Recorded carries a reported value that is not a pass/fail condition.
enum class SuiteStatus { Pass, Fail, Skipped, Recorded };

struct SuiteResult {
  std::string name;
  SuiteStatus status = SuiteStatus::Skipped;
  std::string detail;
};

// Every property suite on one analyzed curve.
std::vector<SuiteResult> run_suites(const Analysis& an);
bool all_pass(const std::vector<SuiteResult>& rs);
Json suites_json(const std::vector<SuiteResult>& rs);

struct GridCase {
  std::string name;
  CurveInput input;
};

// "small" is the acceptance grid; "extended" adds e = 2 and p = 4, 9 cases.
// Throws InvalidInput for unknown names.
std::vector<GridCase> grid(const std::string& name);

}  // namespace vdgv::cli

#endif  // VDGV_CLI_VERIFY_HPP
