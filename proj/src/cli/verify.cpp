// Copyright 2026 The vdgv Authors.
// SPDX-License-Identifier: Apache-2.0

#include "vdgv/cli/verify.hpp"

#include <functional>
#include <set>

namespace vdgv::cli {

namespace {

using heis::HeisenbergElement;

// Exhaustive group checks stay below this many elements of H_R.
constexpr std::uint64_t kGroupLimit = 1u << 16;

SuiteResult pass(std::string name, std::string detail = {}) {
  return {std::move(name), SuiteStatus::Pass, std::move(detail)};
}
SuiteResult fail_(std::string name, std::string detail) {
  return {std::move(name), SuiteStatus::Fail, std::move(detail)};
}
SuiteResult skip(std::string name, std::string why) { return {std::move(name), SuiteStatus::Skipped, std::move(why)}; }
SuiteResult verdict(std::string name, bool ok, std::string detail) {
  return ok ? pass(std::move(name)) : fail_(std::move(name), std::move(detail));
}

SuiteResult guarded(const std::string& name, const std::function<SuiteResult()>& body) {
  try {
    return body();
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::SizeGuardExceeded) return skip(name, e.what());
    return fail_(name, e.what());
  }
}

SuiteResult group_suite(const Analysis& a) {
  const heis::Heisenberg& H = *a.H;
  std::uint64_t size = H.p();
  for (unsigned i = 0; i < 2 * H.e(); ++i) size *= H.p();
  if (size > kGroupLimit) return skip("heisenberg_group", "|H_R| above the exhaustive limit");
  const Field w = H.group_field();
  const auto all = H.enumerate(w);
  if (all.size() != size) return fail_("heisenberg_group", "|H_R| = " + std::to_string(all.size()));

  std::vector<HeisenbergElement> gens;
  for (const auto& v : H.vr_basis()) gens.push_back(H.lifts(v, w).front());
  const unsigned bound = H.p0() == 2 ? 4 : H.p0();
  std::uint64_t central = 0;
  for (const auto& h : all) {
    const unsigned ord = H.element_order(h);
    if (bound % ord != 0)
      return fail_("heisenberg_group", "element " + h.to_string() + " of order " + std::to_string(ord));
    if (!(H.multiply(h, H.inverse(h)) == H.identity(w)))
      return fail_("heisenberg_group", "bad inverse at " + h.to_string());
    bool c = true;
    for (const auto& g : gens) c = c && H.multiply(h, g) == H.multiply(g, h);
    if (!c) continue;
    ++central;
    if (!h.a.is_zero() || h.b.frobenius(H.p_exp()) != h.b)
      return fail_("heisenberg_group", "central element " + h.to_string() + " outside {0} x F_p");
  }
  if (central != H.p()) return fail_("heisenberg_group", "center has " + std::to_string(central) + " elements");
  return pass("heisenberg_group", "order bound " + std::to_string(bound) + ", center {0} x F_p");
}

SuiteResult omega_suite(const Analysis& a) {
  const heis::Heisenberg& H = *a.H;
  const auto& B = H.vr_basis();
  if (B.size() != 2 * H.e() * H.p_exp()) return fail_("omega", "dim V_R = " + std::to_string(B.size()));
  if (H.gram_matrix().rank() != B.size()) return fail_("omega", "omega is degenerate");
  for (const auto& x : B) {
    if (!H.omega(x, x).is_zero()) return fail_("omega", "omega(a, a) != 0 at " + x.to_string());
    for (const auto& y : B)
      if (H.omega(x, y) != -H.omega(y, x)) return fail_("omega", "omega not alternating");
  }
  return pass("omega");
}

SuiteResult cd2_suite(const Analysis& a) {
  const auto& ch = *a.chain;
  for (std::size_t k = 0; k < ch.steps.size(); ++k)
    for (const auto& a2 : heis::fp_span(a.H->fp(), ch.bases[k]))
      if (!quotient::verify_descent_identity(ch.steps[k], a2))
        return fail_("descent_identity", "step " + std::to_string(k) + ", a' = " + a2.to_string());
  return pass("descent_identity");
}

}  // namespace

std::vector<SuiteResult> run_suites(const Analysis& a) {
  std::vector<SuiteResult> out;
  const heis::Heisenberg& H = *a.H;
  const bool odd = H.p0() != 2;
  const std::string even_why = "needs odd p0";

  out.push_back(guarded("bilinear_identity", [&] {
    return verdict("bilinear_identity", addpoly::verify_bilinear_identity(a.curve.R), "sides differ");
  }));
  out.push_back(guarded("heisenberg_group", [&] { return group_suite(a); }));
  out.push_back(guarded("omega", [&] { return omega_suite(a); }));

  if (odd) {
    out.push_back(guarded("step_identity", [&] {
      for (std::size_t k = 0; k < a.chain->steps.size(); ++k)
        if (!quotient::verify_step_identity(a.chain->steps[k]))
          return fail_("step_identity", "step " + std::to_string(k));
      return pass("step_identity");
    }));
    out.push_back(guarded("descent_identity", [&] { return cd2_suite(a); }));
    out.push_back(verdict("chain_identity", a.chain_ok, "chain identity fails for the constructive c_A"));
    const auto& cf = *a.closed;
    out.push_back({"c_A_closed_forms", SuiteStatus::Recorded,
                   std::string("coefficient form ") + (cf.coeff_form_agrees ? "agrees" : "disagrees") +
                       ", root-product form " + (cf.root_form_agrees ? "agrees" : "disagrees")});
    out.push_back(guarded("cA_trace_identity", [&] {
      return verdict("cA_trace_identity",
                     gauss::verify_cA_trace_identity(*a.AR, gauss::build_descent(*a.AR), a.chain->cA),
                     "b(t) - f(a,a)/2 != Tr(c_A t^2)");
    }));
  } else {
    for (const char* n :
         {"step_identity", "descent_identity", "chain_identity", "c_A_closed_forms", "cA_trace_identity"})
      out.push_back(skip(n, even_why));
  }

  if (a.taus.complete) {
    bool routes = true, norm = true, c2 = true;
    std::string bad;
    for (const auto& r : a.taus.records) {
      routes = routes && r.routes_agree;
      const bool nq = cyclo::equals_q(r.tau, a.q());
      const bool ok2 = gauss::check_tau_root_of_unity(r.tau, H.p0(), a.curve.fq.degree()).ok();
      if ((!r.routes_agree || !nq || !ok2) && bad.empty()) bad = r.tau.to_string();
      norm = norm && nq;
      c2 = c2 && ok2;
    }
    out.push_back(verdict("tau_routes", routes, "first bad tau " + bad));
    out.push_back(verdict("tau_norm", norm, "first bad tau " + bad));
    out.push_back(verdict("tau_root_of_unity", c2, "first bad tau " + bad));
    out.push_back(verdict("sum_rule", gauss::verify_sum_rule(*a.AR, a.taus), "sum over xi differs from the trace sum"));
  } else {
    for (const char* n : {"tau_routes", "tau_norm", "tau_root_of_unity", "sum_rule"})
      out.push_back(skip(n, a.taus.reason));
  }

  {
    int routes = 0;
    bool same = true;
    for (const auto* p : {&a.L_product, &a.L_oracle, &a.L_parts})
      if (*p) {
        ++routes;
        same = same && **p == a.L;
      }
    if (routes < 2)
      out.push_back(skip("lpoly_routes", "fewer than two L routes ran"));
    else
      out.push_back(verdict("lpoly_routes", same, "routes disagree"));
  }
  const std::uint64_t two_g = lfunc::two_genus(a.curve.R);
  out.push_back(verdict("functional_equation", lfunc::functional_equation_holds(a.L, a.q(), two_g / 2),
                        "L = " + a.L.to_string()));
  out.push_back(verdict("degree", static_cast<std::uint64_t>(a.L.degree()) == two_g,
                        "deg L = " + std::to_string(a.L.degree()) + ", expected " + std::to_string(two_g)));

  if (!a.parts.empty()) {
    bool sym = true;
    const Field fp = H.fp();
    for (const auto& [c, poly] : a.parts) {
      const auto neg = (-fp.element(c)).index();
      sym = sym && a.parts.at(neg) == poly.conj();
    }
    out.push_back(verdict("psi_conjugate_symmetry", sym, "L_{-psi} != conj(L_psi)"));
  } else {
    out.push_back(skip("psi_conjugate_symmetry", a.skipped.count("psi_parts") ? a.skipped.at("psi_parts") : ""));
  }

  {
    bool fib = true, agree = true, weil = true;
    std::string bad;
    const Int p = static_cast<unsigned long>(H.p());
    const Int g = static_cast<unsigned long>(two_g / 2);
    Int qn = 1;
    for (const auto& r : a.rows) {
      qn *= a.q();
      if (r.enumerated) {
        const bool ok = *r.enumerated >= 1 && Int(*r.enumerated % p) == 1;
        fib = fib && ok;
        agree = agree && *r.enumerated == r.from_L;
        if ((!ok || *r.enumerated != r.from_L) && bad.empty()) bad = "n = " + std::to_string(r.n);
      }
      const Int s = qn + 1 - r.from_L;
      weil = weil && s * s <= 4 * g * g * qn;
    }
    out.push_back(verdict("fiber_counts", fib, bad));
    out.push_back(verdict("counts_vs_L", agree, bad));
    out.push_back(verdict("weil_bounds", weil, "|S_n| > 2g q^(n/2)"));
  }

  const auto& v = a.verdicts;
  out.push_back(verdict("supersingular", v.supersingular && (!v.taus_supersingular || *v.taus_supersingular),
                        "not minimal over F_{q^{4 p0}}"));
  if (v.maximal_at_2p0)
    out.push_back(verdict("maximal_at_2p0", *v.maximal_at_2p0, "not maximal over F_{q^{2 p0}}"));
  else
    out.push_back(skip("maximal_at_2p0", "needs f odd and p0 != 1 mod 4"));
  if (v.minimal_at_2)
    out.push_back(verdict("minimal_at_2", *v.minimal_at_2, "not minimal over F_{q^2}"));
  else
    out.push_back(skip("minimal_at_2", "needs p0 = 2 with H_R rational"));

  if (a.delta) {
    if (a.delta->product && a.delta->oracle)
      out.push_back(verdict("delta_curve", *a.delta->product == *a.delta->oracle,
                            a.delta->product->to_string() + " vs " + a.delta->oracle->to_string()));
    else
      out.push_back(skip("delta_curve", "a delta route exceeded the oracle limit"));
  }
  out.push_back(verdict("pipeline", a.mismatches.empty(), a.mismatches.empty() ? "" : a.mismatches.front()));
  return out;
}

bool all_pass(const std::vector<SuiteResult>& rs) {
  for (const auto& r : rs)
    if (r.status == SuiteStatus::Fail) return false;
  return true;
}

Json suites_json(const std::vector<SuiteResult>& rs) {
  Json out = Json::object();
  for (const auto& r : rs) {
    static const char* names[] = {"pass", "fail", "skipped", "recorded"};
    Json entry{{"status", names[static_cast<int>(r.status)]}};
    if (!r.detail.empty()) entry["detail"] = r.detail;
    out[r.name] = entry;
  }
  return out;
}

std::vector<GridCase> grid(const std::string& name) {
  std::vector<GridCase> small{
      {"q3-e0", {3, 1, 3, "1", "", ""}},       {"q3-e1", {3, 1, 3, "-1;1", "", ""}},
      {"q9-e1", {3, 2, 3, "0,1;1,1", "", ""}}, {"q5-e1", {5, 1, 5, "-1;1", "", ""}},
      {"q4-e1", {2, 2, 2, "0;1", "", ""}},
  };
  if (name == "small") return small;
  check(name == "extended", ErrorKind::InvalidInput, "unknown grid '" + name + "'");
  small.push_back({"q9-e2", {3, 2, 3, "2;0;1", "", ""}});
  small.push_back({"q9-p9", {3, 2, 9, "-1;1", "", ""}});
  small.push_back({"q16-p4-delta", {2, 4, 4, "0;1", "", "1;1"}});
  return small;
}

}  // namespace vdgv::cli
