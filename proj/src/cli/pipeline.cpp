// Copyright 2026 The vdgv Authors.
// SPDX-License-Identifier: Apache-2.0

#include "vdgv/cli/pipeline.hpp"

#include <chrono>

namespace vdgv::cli {

namespace {

class Stopwatch {
 public:
  Stopwatch(std::map<std::string, double>& sink, std::string name)
      : sink_(sink), name_(std::move(name)), t0_(std::chrono::steady_clock::now()) {}
  ~Stopwatch() {
    sink_[name_] += std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0_).count();
  }

 private:
  std::map<std::string, double>& sink_;
  std::string name_;
  std::chrono::steady_clock::time_point t0_;
};

std::string join(const std::vector<std::string>& xs) {
  std::string out;
  for (const auto& x : xs) out += (out.empty() ? "" : "; ") + x;
  return out;
}

std::string poly_str(const IntPolynomial& p) { return p.to_string(); }

}  // namespace

Int Analysis::q() const { return Int(static_cast<unsigned long>(curve.fq.order())); }

std::unique_ptr<Analysis> analyze_structure(const Curve& curve, const RunOptions& opts) {
  auto an = std::make_unique<Analysis>();
  an->curve = curve;
  an->max_n = opts.max_n == 0 ? 4 * curve.input.p0 : opts.max_n;
  {
    Stopwatch sw(an->timings_ms, "structure");
    an->H = std::make_unique<heis::Heisenberg>(curve.R);
    an->A = curve.FR ? heis::isotropic_from_FR(*an->H, *curve.FR) : heis::maximal_isotropic_rational(*an->H);
    an->assumptions = heis::validate_assumptions(*an->H, an->A);
    check(an->assumptions.ok(), ErrorKind::AssumptionViolated, join(an->assumptions.failures));
    an->AR = std::make_unique<heis::MaximalAbelian>(*an->H, *an->A);
  }
  if (an->H->p0() == 2) {
    an->skipped["quotient"] = "the quotient chain needs odd p0";
    return an;
  }
  Stopwatch sw(an->timings_ms, "quotient");
  an->chain = quotient::iterate_to_cA(curve.R, *an->A);
  an->closed = quotient::closed_form_cA(curve.R, *an->A, an->chain->cA);
  an->chain_ok = quotient::verify_chain_identity(curve.R, *an->chain) &&
                 quotient::verify_translation_identity(curve.R, *an->chain, an->A->elements);
  if (!an->chain_ok) an->mismatches.push_back("chain identity fails for the constructive c_A");
  return an;
}

std::unique_ptr<Analysis> analyze_tau(const Curve& curve, const RunOptions& opts) {
  auto an = analyze_structure(curve, opts);
  Analysis& a = *an;
  const unsigned p0 = a.H->p0(), f = curve.fq.degree();
  Stopwatch sw(a.timings_ms, "tau");
  std::optional<FieldElement> cA;
  if (a.chain) cA = a.chain->cA;
  a.taus = gauss::compute_tau_table(*a.AR, cA);
  if (!a.taus.complete) a.skipped["tau"] = a.taus.reason;
  for (const auto& r : a.taus.records) {
    const std::string tag = "tau " + r.tau.to_string();
    if (!r.routes_agree) a.mismatches.push_back(tag + ": routes disagree");
    if (!cyclo::equals_q(r.tau, a.q())) a.mismatches.push_back(tag + ": tau conj(tau) != q");
    if (!gauss::check_tau_root_of_unity(r.tau, p0, f).ok()) a.mismatches.push_back(tag + ": root-of-unity check fails");
  }
  return an;
}

std::unique_ptr<Analysis> analyze(const Curve& curve, const RunOptions& opts) {
  auto an = analyze_tau(curve, opts);
  Analysis& a = *an;
  const heis::Heisenberg& H = *a.H;
  const unsigned p0 = H.p0(), f = curve.fq.degree();
  const unsigned M = lfunc::value_order(p0);
  auto within = [&](std::uint64_t n) { return gf::within_guard(p0, f * n, opts.oracle_limit); };

  a.counts = std::make_unique<lfunc::TraceCounts>(curve.R, opts.jobs);
  const std::uint64_t two_g = lfunc::two_genus(curve.R);
  std::uint64_t pe = 1;
  for (unsigned i = 0; i < H.e(); ++i) pe *= H.p();

  if (a.taus.complete) {
    Stopwatch sw(a.timings_ms, "product");
    a.L_product = lfunc::lpoly_product(a.taus, M);
  }
  if (within(two_g)) {
    Stopwatch sw(a.timings_ms, "oracle");
    a.L_oracle = lfunc::lpoly_oracle(*a.counts);
  } else {
    a.skipped["oracle"] = "q^(2g) exceeds the oracle limit";
  }
  if (within(pe)) {
    Stopwatch sw(a.timings_ms, "psi_parts");
    std::vector<CycloPolynomial> ps;
    for (std::uint64_t c = 1; c < H.fp().order(); ++c) {
      a.parts.emplace(c, lfunc::psi_part_lpoly(*a.counts, H.fp().element(c)));
      ps.push_back(a.parts.at(c));
    }
    a.L_parts = lfunc::product_of_parts(ps);
  } else {
    a.skipped["psi_parts"] = "q^(p^e) exceeds the oracle limit";
  }

  if (a.L_product) {
    a.L = *a.L_product;
    a.L_source = "product";
  } else if (a.L_oracle) {
    a.L = *a.L_oracle;
    a.L_source = "oracle";
  } else if (a.L_parts) {
    a.L = *a.L_parts;
    a.L_source = "psi_parts";
  } else {
    fail(ErrorKind::SizeGuardExceeded, "no L-polynomial route fits within the oracle limit");
  }
  for (const auto* other : {&a.L_oracle, &a.L_parts})
    if (*other && !(**other == a.L))
      a.mismatches.push_back("L routes disagree: " + poly_str(a.L) + " vs " + poly_str(**other));
  if (!lfunc::functional_equation_holds(a.L, a.q(), two_g / 2))
    a.mismatches.push_back("functional equation or degree 2g fails");

  {
    Stopwatch sw(a.timings_ms, "counts");
    for (unsigned n = 1; n <= a.max_n; ++n) {
      CountRow row{n, lfunc::count_from_L(a.L, a.q(), n), std::nullopt};
      if (within(n)) {
        row.enumerated = lfunc::count_points(*a.counts, n);
        if (*row.enumerated != row.from_L) a.mismatches.push_back("N_" + std::to_string(n) + " differs from L");
      }
      a.rows.push_back(std::move(row));
    }
  }

  a.verdicts = lfunc::classify(a.L, p0, f, a.max_n, &a.taus, a.assumptions.heisenberg_rational);
  const auto& v = a.verdicts;
  if (!v.minimal_at_4p0) a.mismatches.push_back("not minimal over F_{q^{4 p0}}");
  if (v.maximal_at_2p0 && !*v.maximal_at_2p0) a.mismatches.push_back("not maximal over F_{q^{2 p0}}");
  if (v.minimal_at_2 && !*v.minimal_at_2) a.mismatches.push_back("not minimal over F_{q^2}");
  if (v.taus_supersingular && *v.taus_supersingular != v.supersingular)
    a.mismatches.push_back("supersingularity verdicts disagree");

  if (curve.delta) {
    Stopwatch sw(a.timings_ms, "delta");
    DeltaResult d{lfunc::make_delta_curve(curve.R, *curve.delta), std::nullopt, std::nullopt};
    if (within(pe))
      d.product = lfunc::delta_curve_lpoly(*a.counts, d.dc, false);
    else
      a.skipped["delta_product"] = "q^(p^e) exceeds the oracle limit";
    if (within(lfunc::two_genus(curve.R, d.dc)))
      d.oracle = lfunc::delta_oracle(*a.counts, d.dc);
    else
      a.skipped["delta_oracle"] = "q^(2g) exceeds the oracle limit";
    if (d.product && d.oracle && !(*d.product == *d.oracle))
      a.mismatches.push_back("delta product differs from its point count");
    a.delta = std::move(d);
  }
  return an;
}

Json to_json(const Int& v) {
  if (v.fits_slong_p()) return Json(static_cast<std::int64_t>(v.get_si()));
  return Json(v.get_str());
}

Json to_json(const FieldElement& x) {
  if (x.field().degree() == 1) return Json(x.coords().empty() ? 0u : x.coords()[0]);
  Json arr = Json::array();
  for (unsigned i = 0; i < x.field().degree(); ++i) arr.push_back(i < x.coords().size() ? x.coords()[i] : 0u);
  return arr;
}

Json to_json(const cyclo::CyclotomicInteger& z) {
  Json coords = Json::array();
  for (const auto& c : z.coords()) coords.push_back(to_json(c));
  return Json{{"order", z.order()}, {"coords", coords}};
}

Json to_json(const IntPolynomial& p) {
  Json arr = Json::array();
  for (const auto& c : p.coeffs()) arr.push_back(to_json(c));
  return arr;
}

Json to_json(const CycloPolynomial& p) {
  Json arr = Json::array();
  for (const auto& c : p.coeffs()) arr.push_back(to_json(c)["coords"]);
  return Json{{"order", p.order()}, {"coeffs", arr}};
}

Json to_json(const AdditivePolynomial& p) {
  Json arr = Json::array();
  for (const auto& c : p.step_coeffs()) arr.push_back(to_json(c));
  return arr;
}

namespace {

Json sparse_json(const addpoly::SparsePoly& s) {
  Json arr = Json::array();
  for (const auto& [e, c] : s.terms()) arr.push_back(Json::array({e, to_json(c)}));
  return arr;
}

Json closed_form_json(const quotient::ClosedFormCA& cf) {
  return Json{{"coeff_form", to_json(cf.coeff_form)},
              {"coeff_form_agrees", cf.coeff_form_agrees},
              {"root_form", to_json(cf.root_form)},
              {"root_form_agrees", cf.root_form_agrees},
              {"root_product", to_json(cf.root_product)},
              {"root_product_is_minus_b0_over_be", cf.root_product_is_minus_b0_over_be}};
}

Json header_json(const Analysis& a) {
  const auto& in = a.curve.input;
  Json curve{{"p0", in.p0},
             {"f", in.f},
             {"p", in.p},
             {"q", to_json(a.q())},
             {"e", a.curve.R.e()},
             {"genus", lfunc::two_genus(a.curve.R) / 2},
             {"R", to_json(a.curve.R)}};
  if (a.A) curve["F_R"] = to_json(a.A->F);
  if (a.curve.delta) curve["delta"] = to_json(*a.curve.delta);
  return curve;
}

Json assumptions_json(const Analysis& a) {
  const auto& r = a.assumptions;
  return Json{{"p0e_ok", r.p0e_ok},
              {"has_rational_A", r.has_rational_A},
              {"lifts_rational", r.lifts_rational},
              {"heisenberg_rational", r.heisenberg_rational},
              {"failures", r.failures}};
}

Json isotropic_json(const Analysis& a) {
  Json basis = Json::array();
  for (const auto& b : a.A->basis) basis.push_back(to_json(b));
  Json gens = Json::array();
  const auto& st = a.AR->structure();
  for (std::size_t i = 0; i < st.generators.size(); ++i)
    gens.push_back(
        Json{{"a", to_json(st.generators[i].a)}, {"b", to_json(st.generators[i].b)}, {"order", st.orders[i]}});
  return Json{{"basis", basis}, {"size", a.A->elements.size()}, {"A_R_generators", gens}};
}

Json chain_summary_json(const Analysis& a) {
  if (!a.chain) return Json{{"skipped", a.skipped.at("quotient")}};
  return Json{{"c_A", to_json(a.chain->cA)},
              {"chain_identity", a.chain_ok},
              {"steps", a.chain->steps.size()},
              {"closed_form", closed_form_json(*a.closed)}};
}

Json opt_poly(const std::optional<IntPolynomial>& p) { return p ? to_json(*p) : Json(nullptr); }

}  // namespace

Json tau_json(const Analysis& a) {
  Json recs = Json::array();
  for (const auto& r : a.taus.records) {
    Json routes = Json::object();
    for (const auto& [k, v] : r.routes) routes[k] = to_json(v);
    Json rec{{"psi", to_json(r.psi)},
             {"xi", r.xi},
             {"tau", to_json(r.tau)},
             {"routes", routes},
             {"routes_agree", r.routes_agree}};
    rec["eta"] = r.eta ? to_json(*r.eta) : Json(nullptr);
    if (r.eta) rec["eta_zero"] = r.eta->is_zero();
    recs.push_back(std::move(rec));
  }
  Json out{{"complete", a.taus.complete}, {"records", recs}};
  if (!a.taus.complete) out["reason"] = a.taus.reason;
  return out;
}

Json tau_report_json(const Analysis& a) {
  return Json{
      {"schema", "vdgv-report/1"}, {"curve", header_json(a)}, {"tau", tau_json(a)}, {"mismatches", a.mismatches}};
}

Json quotient_json(const Analysis& a) {
  check(a.chain.has_value(), ErrorKind::InvalidInput, "the quotient chain needs odd p0");
  Json steps = Json::array();
  for (const auto& st : a.chain->steps)
    steps.push_back(Json{{"R", to_json(st.R)},
                         {"a", to_json(st.a)},
                         {"b", to_json(st.b)},
                         {"u", to_json(st.u)},
                         {"R1", to_json(st.R1)},
                         {"delta0", sparse_json(st.delta0)},
                         {"step_identity", quotient::verify_step_identity(st)}});
  return Json{{"schema", "vdgv-report/1"},
              {"curve", header_json(a)},
              {"isotropic", isotropic_json(a)},
              {"steps", steps},
              {"c_A", to_json(a.chain->cA)},
              {"delta", sparse_json(a.chain->delta)},
              {"U", to_json(a.chain->U)},
              {"chain_identity", a.chain_ok},
              {"closed_form", closed_form_json(*a.closed)}};
}

Json report_json(const Analysis& a, bool timings) {
  Json lp{{"L", to_json(a.L)},
          {"source", a.L_source},
          {"degree", a.L.degree()},
          {"oracle", opt_poly(a.L_oracle)},
          {"product", opt_poly(a.L_product)},
          {"psi_parts_product", opt_poly(a.L_parts)},
          {"functional_equation", lfunc::functional_equation_holds(a.L, a.q(), lfunc::two_genus(a.curve.R) / 2)}};
  if (a.L_product) {
    Json fac = Json::array();
    for (const auto& r : a.taus.records) fac.push_back(to_json(r.tau));
    lp["factored"] = fac;
  }
  Json parts = Json::array();
  for (const auto& [c, poly] : a.parts)
    parts.push_back(Json{{"psi", to_json(a.H->fp().element(c))}, {"L_psi", to_json(poly)}});
  lp["psi_parts"] = parts;

  Json rows = Json::array();
  for (const auto& r : a.rows) {
    Json row{{"n", r.n}, {"N", to_json(r.from_L)}};
    if (r.enumerated) row["enumerated"] = to_json(*r.enumerated);
    rows.push_back(std::move(row));
  }

  const auto& v = a.verdicts;
  Json verdicts{{"supersingular", v.supersingular},
                {"maximal_at", v.maximal_at},
                {"minimal_at", v.minimal_at},
                {"minimal_at_4p0", v.minimal_at_4p0}};
  verdicts["taus_supersingular"] = v.taus_supersingular ? Json(*v.taus_supersingular) : Json(nullptr);
  verdicts["maximal_at_2p0"] = v.maximal_at_2p0 ? Json(*v.maximal_at_2p0) : Json(nullptr);
  verdicts["minimal_at_2"] = v.minimal_at_2 ? Json(*v.minimal_at_2) : Json(nullptr);

  Json out{{"schema", "vdgv-report/1"},
           {"curve", header_json(a)},
           {"assumptions", assumptions_json(a)},
           {"isotropic", isotropic_json(a)},
           {"quotient", chain_summary_json(a)},
           {"tau", tau_json(a)},
           {"lpoly", lp},
           {"counts", rows},
           {"verdicts", verdicts},
           {"skipped", a.skipped},
           {"mismatches", a.mismatches}};
  if (a.delta) {
    Json psis = Json::array();
    for (const auto& c : a.delta->dc.psis) psis.push_back(to_json(c));
    out["delta"] = Json{{"degree", a.delta->dc.degree},
                        {"nu", to_json(a.delta->dc.nu)},
                        {"psis", psis},
                        {"product", opt_poly(a.delta->product)},
                        {"oracle", opt_poly(a.delta->oracle)}};
  }
  if (timings) out["timings_ms"] = a.timings_ms;
  return out;
}

Json count_json(const Curve& curve, unsigned n, const RunOptions& opts) {
  check(n >= 1, ErrorKind::InvalidInput, "n must be positive");
  lfunc::TraceCounts counts(curve.R, opts.jobs);
  std::map<std::string, double> t;
  Json out{{"schema", "vdgv-report/1"}, {"n", n}};
  {
    Stopwatch sw(t, "count");
    out["N"] = to_json(lfunc::count_points(counts, n));
    if (curve.delta) {
      const auto dc = lfunc::make_delta_curve(curve.R, *curve.delta);
      out["N_delta"] = to_json(lfunc::count_points_delta(counts, dc, n));
    }
  }
  out["q_n"] = to_json(counts.q_pow(n));
  if (opts.timings) out["timings_ms"] = t;
  return out;
}

std::string render(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace vdgv::cli
