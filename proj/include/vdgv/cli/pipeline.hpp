// Copyright 2026 The vdgv Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef VDGV_CLI_PIPELINE_HPP
#define VDGV_CLI_PIPELINE_HPP

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "vdgv/cli/input.hpp"
#include "vdgv/gauss/gauss.hpp"
#include "vdgv/heis/heisenberg.hpp"
#include "vdgv/lfunc/lfunc.hpp"
#include "vdgv/quotient/quotient.hpp"

namespace vdgv::cli {

using Json = nlohmann::json;
using cyclo::CycloPolynomial;
using cyclo::Int;
using cyclo::IntPolynomial;

struct RunOptions {
  // Largest n for counts and verdicts; 0 means 4 p0.
  unsigned max_n = 0;
  // Enumeration budget for the oracle routes, in field elements.
  std::uint64_t oracle_limit = std::uint64_t{1} << 24;
  unsigned jobs = 0;
  bool timings = false;
};

struct CountRow {
  unsigned n = 0;
  Int from_L;
  std::optional<Int> enumerated;
};

struct DeltaResult {
  lfunc::DeltaCurve dc;
  std::optional<IntPolynomial> product;
  std::optional<IntPolynomial> oracle;
};

/// Everything computed for one curve. Heap-pinned: AR points into H.
struct Analysis {
  Curve curve;
  std::unique_ptr<heis::Heisenberg> H;
  std::optional<heis::IsotropicSubspace> A;
  heis::AssumptionReport assumptions;
  std::unique_ptr<heis::MaximalAbelian> AR;
  std::optional<quotient::QuotientChain> chain;
  std::optional<quotient::ClosedFormCA> closed;
  bool chain_ok = false;
  gauss::TauTable taus;
  std::unique_ptr<lfunc::TraceCounts> counts;
  std::optional<IntPolynomial> L_oracle;
  std::optional<IntPolynomial> L_product;
  std::optional<IntPolynomial> L_parts;
  std::map<std::uint64_t, CycloPolynomial> parts;
  IntPolynomial L;
  std::string L_source;
  std::vector<CountRow> rows;
  lfunc::Verdicts verdicts;
  std::optional<DeltaResult> delta;
  // Routes that did not run, with the reason.
  std::map<std::string, std::string> skipped;
  // Failed cross-checks; nonempty means exit code 4.
  std::vector<std::string> mismatches;
  std::map<std::string, double> timings_ms;

  unsigned max_n = 0;
  Int q() const;
};

// Validate, find A, run the quotient chain, the tau table, the L routes and
// the verdicts. Assumption failures throw; cross-check failures are recorded.
std::unique_ptr<Analysis> analyze(const Curve& curve, const RunOptions& opts);

// The curve header, assumptions, A and the quotient chain only.
std::unique_ptr<Analysis> analyze_structure(const Curve& curve, const RunOptions& opts);
// analyze_structure plus the tau table.
std::unique_ptr<Analysis> analyze_tau(const Curve& curve, const RunOptions& opts);

Json report_json(const Analysis& an, bool timings);
Json tau_json(const Analysis& an);
Json tau_report_json(const Analysis& an);
Json quotient_json(const Analysis& an);
Json count_json(const Curve& curve, unsigned n, const RunOptions& opts);

// Two-space indent, sorted keys, trailing newline.
std::string render(const Json& j);

// JSON encodings shared by the reports.
Json to_json(const Int& v);
Json to_json(const FieldElement& x);
Json to_json(const cyclo::CyclotomicInteger& z);
Json to_json(const IntPolynomial& p);
Json to_json(const CycloPolynomial& p);
Json to_json(const AdditivePolynomial& p);

}  // namespace vdgv::cli

#endif  // VDGV_CLI_PIPELINE_HPP
