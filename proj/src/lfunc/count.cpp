// Copyright 2026 The vdgv Authors.
// SPDX-License-Identifier: Apache-2.0

#include "vdgv/lfunc/count.hpp"

#include <omp.h>

#include <algorithm>

#include "vdgv/error.hpp"

namespace vdgv::lfunc {

namespace {

Field fp_of(const AdditivePolynomial& R) { return gf::build_field(R.p0(), R.step_exp()); }

void check_ambient(const AdditivePolynomial& R, Field big) {
  check(big.p0() == R.p0() && big.degree() % R.field().degree() == 0, ErrorKind::NotASubfield,
        "counting field does not contain the coefficient field");
}

}  // namespace

TraceForm build_trace_form(const AdditivePolynomial& R, Field big) {
  check_ambient(R, big);
  const Field fp = fp_of(R);
  TraceForm tf;
  tf.p0 = big.p0();
  tf.m = big.degree();
  tf.k = fp.degree();
  const auto basis = big.basis();
  std::vector<FieldElement> rb;
  for (const auto& g : basis) rb.push_back(R.eval(g));

  const unsigned m = tf.m, k = tf.k, p0 = tf.p0;
  std::vector<std::uint32_t> c(m * m * k);
  for (unsigned i = 0; i < m; ++i)
    for (unsigned j = 0; j < m; ++j) {
      const auto t = gf::trace(basis[i] * rb[j], fp).coords();
      for (unsigned l = 0; l < k; ++l) c[(i * m + j) * k + l] = t[l];
    }
  tf.diag.resize(m * k);
  tf.sym.resize(m * m * k);
  for (unsigned i = 0; i < m; ++i)
    for (unsigned l = 0; l < k; ++l) {
      tf.diag[i * k + l] = c[(i * m + i) * k + l];
      for (unsigned j = 0; j < m; ++j)
        tf.sym[(i * m + j) * k + l] = (c[(i * m + j) * k + l] + c[(j * m + i) * k + l]) % p0;
    }
  return tf;
}

Histogram trace_histogram_serial(const AdditivePolynomial& R, Field big) {
  check_ambient(R, big);
  const Field fp = fp_of(R);
  Histogram hist(fp.order(), 0);
  for (std::uint64_t i = 0; i < big.order(); ++i) {
    const FieldElement x = big.element(i);
    ++hist[gf::trace(x * R.eval(x), fp).index()];
  }
  return hist;
}

Histogram trace_histogram(const AdditivePolynomial& R, Field big, unsigned jobs) {
  const TraceForm tf = build_trace_form(R, big);
  const unsigned m = tf.m, k = tf.k, p0 = tf.p0;
  std::uint64_t p = 1;
  for (unsigned l = 0; l < k; ++l) p *= p0;

  // Fix the top h coordinates per chunk; the rest is walked by the odometer.
  unsigned h = 0;
  std::uint64_t chunks = 1;
  while (h < m && chunks < 4096) {
    chunks *= p0;
    ++h;
  }
  const unsigned low = m - h;
  std::uint64_t inner = 1;
  for (unsigned i = 0; i < low; ++i) inner *= p0;

  Histogram total(p, 0);
  const int threads = jobs == 0 ? omp_get_max_threads() : static_cast<int>(jobs);

#pragma omp parallel num_threads(threads)
  {
    Histogram hist(p, 0);
    std::vector<std::uint32_t> x(m), z(m * k), t(k);

#pragma omp for schedule(dynamic, 1)
    for (std::int64_t chunk = 0; chunk < static_cast<std::int64_t>(chunks); ++chunk) {
      std::fill(x.begin(), x.end(), 0);
      std::uint64_t rest = static_cast<std::uint64_t>(chunk);
      for (unsigned i = low; i < m; ++i) {
        x[i] = static_cast<std::uint32_t>(rest % p0);
        rest /= p0;
      }
      // t = Q(x0), z[j] = B(x0, g_j).
      std::fill(t.begin(), t.end(), 0);
      std::fill(z.begin(), z.end(), 0);
      for (unsigned i = low; i < m; ++i) {
        if (x[i] == 0) continue;
        for (unsigned l = 0; l < k; ++l) {
          t[l] = (t[l] + x[i] * x[i] * tf.diag[i * k + l]) % p0;
          for (unsigned j = 0; j < m; ++j) z[j * k + l] = (z[j * k + l] + x[i] * tf.sym[(i * m + j) * k + l]) % p0;
        }
        for (unsigned j = i + 1; j < m; ++j)
          for (unsigned l = 0; l < k; ++l) t[l] = (t[l] + x[i] * x[j] * tf.sym[(i * m + j) * k + l]) % p0;
      }

      for (std::uint64_t step = 0;; ++step) {
        std::uint64_t idx = 0;
        for (unsigned l = k; l-- > 0;) idx = idx * p0 + t[l];
        ++hist[idx];
        if (step + 1 == inner) break;
        // x += g_i, carrying through the low coordinates.
        for (unsigned i = 0; i < low; ++i) {
          const std::uint32_t* s = &tf.sym[i * m * k];
          for (unsigned l = 0; l < k; ++l) t[l] = (t[l] + z[i * k + l] + tf.diag[i * k + l]) % p0;
          for (unsigned jl = 0; jl < m * k; ++jl) {
            const std::uint32_t v = z[jl] + s[jl];
            z[jl] = v >= p0 ? v - p0 : v;
          }
          if (++x[i] < p0) break;
          x[i] = 0;
        }
      }
    }

#pragma omp critical
    for (std::uint64_t i = 0; i < p; ++i) total[i] += hist[i];
  }
  return total;
}

}  // namespace vdgv::lfunc
