// Copyright 2026 The vdgv Authors.
// SPDX-License-Identifier: Apache-2.0
//
// Serial reference vs OpenMP trace-histogram kernel over F_{q^n}.

#include <benchmark/benchmark.h>

#include "vdgv/lfunc/count.hpp"

namespace {

using vdgv::addpoly::AdditivePolynomial;
using vdgv::gf::Field;

struct Case {
  unsigned p0, f, p_exp, n;
  std::vector<std::int64_t> R;  // prime-subfield coefficients a_0..a_e
};

// Sizes keep the serial reference (direct evaluation) to a few seconds.
const Case kCases[] = {
    {3, 1, 1, 10, {-1, 1}},
    {3, 1, 1, 12, {-1, 1}},
    {5, 1, 1, 7, {-1, 1}},
    {2, 2, 1, 8, {0, 1}},
};

AdditivePolynomial make_R(const Case& c) {
  const Field fq = vdgv::gf::build_field(c.p0, c.f);
  std::vector<vdgv::gf::FieldElement> coeffs;
  for (auto a : c.R) coeffs.push_back(fq.from_int(a));
  return AdditivePolynomial(fq, c.p_exp, coeffs);
}

void label(benchmark::State& state, const Case& c) {
  state.SetLabel("p0=" + std::to_string(c.p0) + " f=" + std::to_string(c.f) + " n=" + std::to_string(c.n));
  std::uint64_t size = 1;
  for (unsigned i = 0; i < c.f * c.n; ++i) size *= c.p0;
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * size));
}

void BM_Serial(benchmark::State& state) {
  const Case& c = kCases[state.range(0)];
  const auto R = make_R(c);
  const Field big = vdgv::gf::build_field(c.p0, c.f * c.n);
  for (auto _ : state) benchmark::DoNotOptimize(vdgv::lfunc::trace_histogram_serial(R, big));
  label(state, c);
}

void BM_Parallel(benchmark::State& state) {
  const Case& c = kCases[state.range(0)];
  const auto R = make_R(c);
  const Field big = vdgv::gf::build_field(c.p0, c.f * c.n);
  const auto jobs = static_cast<unsigned>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(vdgv::lfunc::trace_histogram(R, big, jobs));
  label(state, c);
  state.counters["jobs"] = static_cast<double>(jobs);
}

BENCHMARK(BM_Serial)->DenseRange(0, 3)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_Parallel)->ArgsProduct({{0, 1, 2, 3}, {0, 1, 2, 4}})->Unit(benchmark::kMillisecond)->UseRealTime();

}  // namespace

BENCHMARK_MAIN();
