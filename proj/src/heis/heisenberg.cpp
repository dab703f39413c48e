// Copyright 2026 The vdgv Authors.
// SPDX-License-Identifier: Apache-2.0

#include "vdgv/heis/heisenberg.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

#include "vdgv/addpoly/sparse_poly.hpp"
#include "vdgv/error.hpp"

namespace vdgv::heis {

namespace {

using Key = std::pair<std::uint64_t, std::uint64_t>;

Key key_of(const HeisenbergElement& h) { return {h.a.index(), h.b.index()}; }

bool key_less(const HeisenbergElement& x, const HeisenbergElement& y) { return key_of(x) < key_of(y); }

// F_p0-rank of a family of elements of one field.
std::size_t p0_rank(const std::vector<FieldElement>& v) {
  if (v.empty()) return 0;
  const Field f = v.front().field();
  gf::Matrix m(f.p0(), f.degree(), v.size());
  for (std::size_t j = 0; j < v.size(); ++j)
    for (unsigned i = 0; i < f.degree(); ++i) m.at(i, j) = v[j].coords()[i];
  return m.rank();
}

std::vector<FieldElement> fp_times(Field fp, const std::vector<FieldElement>& gens) {
  std::vector<FieldElement> out;
  for (const auto& g : gens)
    for (const auto& beta : fp.basis()) out.push_back(gf::embed(beta, g.field()) * g);
  return out;
}

}  // namespace

std::string HeisenbergElement::to_string() const { return "(" + a.to_string() + ", " + b.to_string() + ")"; }

Heisenberg::Heisenberg(AdditivePolynomial R) : R_(std::move(R)) {
  check(!R_.is_zero(), ErrorKind::InvalidInput, "R must be nonzero");
  check(R_.fits_step(R_.step_exp()), ErrorKind::InvalidInput, "R has terms off the powers of p");
  check(R_.field().degree() % R_.step_exp() == 0, ErrorKind::InvalidInput, "q must be a power of p");
  check(!(R_.p0() == 2 && R_.e() == 0), ErrorKind::AssumptionViolated, "(p0, e) = (2, 0) gives genus 0");
  fp_ = gf::build_field(R_.p0(), R_.step_exp());
  E_ = addpoly::make_ER(R_);
  f_ = addpoly::make_fR(R_);
}

const Heisenberg::VR& Heisenberg::vr() const {
  std::lock_guard lock(vr_mu_);
  if (!vr_) {
    const unsigned n = addpoly::splitting_degree(E_);
    const Field w = gf::build_field(R_.p0(), R_.field().degree() * n);
    vr_ = std::make_shared<const VR>(VR{w, addpoly::kernel(E_, w).basis});
  }
  return *vr_;
}

Field Heisenberg::vr_field() const { return vr().field; }
const std::vector<FieldElement>& Heisenberg::vr_basis() const { return vr().basis; }

Field Heisenberg::group_field() const {
  const Field w = vr_field();
  for (const auto& a : gf::span_elements(w, vr_basis())) {
    const FieldElement c = a * R_.eval(a);
    if (!gf::trace(c, fp_).is_zero()) return gf::build_field(p0(), w.degree() * p0());
  }
  return w;
}

bool Heisenberg::in_VR(const FieldElement& a) const { return E_.eval(a).is_zero(); }

bool Heisenberg::contains(const HeisenbergElement& h) const {
  if (!(h.a.field() == h.b.field()) || !in_VR(h.a)) return false;
  return h.b.frobenius(p_exp()) - h.b == h.a * R_.eval(h.a);
}

bool Heisenberg::on_curve(const Point& pt) const {
  const auto& [x, y] = pt;
  return x.field() == y.field() && y.frobenius(p_exp()) - y == x * R_.eval(x);
}

HeisenbergElement Heisenberg::identity(Field where) const { return {where.zero(), where.zero()}; }

HeisenbergElement Heisenberg::multiply(const HeisenbergElement& h, const HeisenbergElement& g) const {
  check(contains(h), ErrorKind::NotInGroup, h.to_string());
  check(contains(g), ErrorKind::NotInGroup, g.to_string());
  check(h.a.field() == g.a.field(), ErrorKind::InvalidInput, "elements live in different fields");
  return {h.a + g.a, h.b + g.b + f_.eval(h.a, g.a)};
}

HeisenbergElement Heisenberg::inverse(const HeisenbergElement& h) const {
  check(contains(h), ErrorKind::NotInGroup, h.to_string());
  return {-h.a, f_.eval(h.a, h.a) - h.b};
}

HeisenbergElement Heisenberg::power(const HeisenbergElement& h, std::uint64_t i) const {
  check(contains(h), ErrorKind::NotInGroup, h.to_string());
  const std::uint64_t binom = (i % (2 * p0())) * ((i + 2 * p0() - 1) % (2 * p0())) / 2;
  return {h.a.scaled(static_cast<std::uint32_t>(i % p0())),
          h.b.scaled(static_cast<std::uint32_t>(i % p0())) +
              f_.eval(h.a, h.a).scaled(static_cast<std::uint32_t>(binom % p0()))};
}

unsigned Heisenberg::element_order(const HeisenbergElement& h) const {
  check(contains(h), ErrorKind::NotInGroup, h.to_string());
  const HeisenbergElement one = identity(h.a.field());
  HeisenbergElement g = h;
  for (unsigned i = 1; i <= std::max(4u, p0()); ++i) {
    if (g == one) return i;
    g = multiply(g, h);
  }
  fail(ErrorKind::InternalMismatch, "element order exceeds the Heisenberg bound");
}

Point Heisenberg::act(const Point& pt, const HeisenbergElement& h) const {
  check(on_curve(pt), ErrorKind::PointNotOnCurve, pt.first.to_string() + ", " + pt.second.to_string());
  check(contains(h), ErrorKind::NotInGroup, h.to_string());
  const Field w = pt.first.field();
  const FieldElement a = gf::embed(h.a, w), b = gf::embed(h.b, w);
  return {pt.first + a, pt.second + f_.eval(pt.first, a) + b};
}

FieldElement Heisenberg::omega(const FieldElement& a, const FieldElement& a2) const {
  check(in_VR(a), ErrorKind::NotInVR, a.to_string());
  check(in_VR(a2), ErrorKind::NotInVR, a2.to_string());
  const FieldElement v = f_.eval(a, a2) - f_.eval(a2, a);
  auto r = gf::try_restrict(v, fp_);
  check(r.has_value(), ErrorKind::ValueNotInFp, v.to_string());
  return *r;
}

gf::Matrix Heisenberg::gram_matrix() const {
  const auto& B = vr_basis();
  const std::size_t n = B.size();
  gf::Matrix g(p0(), n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) g.at(i, j) = gf::absolute_trace(omega(B[i], B[j]));
  return g;
}

std::vector<HeisenbergElement> Heisenberg::lifts(const FieldElement& a0, Field where) const {
  const FieldElement a = gf::embed(a0, where);
  check(in_VR(a), ErrorKind::NotInVR, a.to_string());
  const gf::Matrix as = where.matrix_of([&](const FieldElement& y) { return y.frobenius(p_exp()) - y; });
  const auto sol = gf::linear_solve(as, a * R_.eval(a));
  std::vector<HeisenbergElement> out;
  if (sol.empty()) return out;
  for (const auto& k : gf::span_elements(where, sol.kernel)) out.push_back({a, *sol.particular + k});
  std::sort(out.begin(), out.end(), key_less);
  return out;
}

std::vector<HeisenbergElement> Heisenberg::enumerate(Field where) const {
  std::vector<HeisenbergElement> out;
  const auto basis = addpoly::kernel(E_.over(where), where).basis;
  for (const auto& a : gf::span_elements(where, basis))
    for (auto& h : lifts(a, where)) out.push_back(std::move(h));
  std::sort(out.begin(), out.end(), key_less);
  return out;
}

std::vector<FieldElement> fp_span(Field fp, const std::vector<FieldElement>& gens) {
  if (gens.empty()) return {};
  const auto v = fp_times(fp, gens);
  return gf::span_elements(gens.front().field(), v);
}

AdditivePolynomial subspace_polynomial(Field field, unsigned step_exp, const std::vector<FieldElement>& elements) {
  // F_p0-basis in enumeration order.
  std::vector<FieldElement> basis;
  for (const auto& x : elements) {
    if (x.is_zero()) continue;
    auto trial = basis;
    trial.push_back(x);
    if (p0_rank(trial) == trial.size()) basis = std::move(trial);
  }
  AdditivePolynomial F = AdditivePolynomial::identity(field, 1);
  for (const auto& v : basis) {
    std::vector<FieldElement> c(F.p0_coeffs().size() + 1, field.zero());
    for (std::size_t k = 0; k < F.p0_coeffs().size(); ++k) c[k + 1] = F.p0_coeffs()[k].frobenius(1);
    const FieldElement s = F.eval(v).pow(field.p0() - 1);
    for (std::size_t k = 0; k < F.p0_coeffs().size(); ++k) c[k] -= s * F.p0_coeffs()[k];
    F = AdditivePolynomial::from_p0_coeffs(field, 1, std::move(c));
  }
  return F.fits_step(step_exp) ? F.with_step(step_exp) : F;
}

namespace {

IsotropicSubspace finish_subspace(const Heisenberg& H, std::vector<FieldElement> basis) {
  IsotropicSubspace A;
  const Field fq = H.base();
  A.basis = std::move(basis);
  A.elements = A.basis.empty() ? std::vector<FieldElement>{fq.zero()} : fp_span(H.fp(), A.basis);
  A.F = subspace_polynomial(fq, H.p_exp(), A.elements);
  check(A.F.fits_step(H.p_exp()) && A.F.e() == H.e(), ErrorKind::InternalMismatch,
        "annihilator of A is not additive over F_p");
  // Expand prod (x - alpha) directly and compare.
  addpoly::SparsePoly prod = addpoly::SparsePoly::constant(fq.one());
  for (const auto& alpha : A.elements)
    prod = prod * (addpoly::SparsePoly::x(fq) - addpoly::SparsePoly::constant(alpha));
  check(prod == A.F.to_sparse(), ErrorKind::InternalMismatch, "prod (x - alpha) is not additive");
  return A;
}

}  // namespace

IsotropicSubspace maximal_isotropic_rational(const Heisenberg& H) {
  const Field fq = H.base();
  const unsigned e = H.e();
  if (e == 0) return finish_subspace(H, {});
  const auto rational = addpoly::kernel(H.E(), fq).basis;
  std::vector<FieldElement> cands;
  for (const auto& x : gf::span_elements(fq, rational))
    if (!x.is_zero()) cands.push_back(x);

  std::vector<FieldElement> chosen;
  std::function<bool(std::size_t)> dfs = [&](std::size_t from) -> bool {
    if (chosen.size() == e) return true;
    const auto span = fp_span(H.fp(), chosen);
    std::set<std::uint64_t> in_span;
    for (const auto& s : span) in_span.insert(s.index());
    for (std::size_t i = from; i < cands.size(); ++i) {
      const FieldElement& c = cands[i];
      if (in_span.count(c.index())) continue;
      bool iso = true;
      for (const auto& x : chosen)
        if (!H.omega(c, x).is_zero()) {
          iso = false;
          break;
        }
      if (!iso) continue;
      chosen.push_back(c);
      if (dfs(i + 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  if (!dfs(0))
    fail(ErrorKind::NoRationalMaximalIsotropic,
         "V_R ∩ F_q has no totally isotropic subspace of F_p-dimension " + std::to_string(e));
  return finish_subspace(H, chosen);
}

IsotropicSubspace isotropic_from_FR(const Heisenberg& H, const AdditivePolynomial& F0) {
  const Field fq = H.base();
  check(F0.field() == fq, ErrorKind::InvalidInput, "F_R must have coefficients in F_q");
  check(!F0.is_zero() && F0.leading().is_one(), ErrorKind::InvalidInput, "F_R must be monic");
  check(F0.fits_step(H.p_exp()) && F0.degree_exp() == H.p_exp() * H.e(), ErrorKind::InvalidInput,
        "F_R must be additive over F_p of degree p^e");
  const auto F = F0.with_step(H.p_exp());
  const auto ker = addpoly::kernel(F, fq);
  check(ker.full, ErrorKind::InvalidInput, "the roots of F_R are not all in F_q");
  try {
    addpoly::outer_divide(H.E(), F);
  } catch (const Error&) {
    fail(ErrorKind::InvalidInput, "F_R does not divide E_R");
  }
  for (const auto& x : ker.basis)
    for (const auto& y : ker.basis)
      check(H.omega(x, y).is_zero(), ErrorKind::InvalidInput, "the roots of F_R are not totally isotropic");
  // F_p-basis in enumeration order.
  std::vector<FieldElement> basis;
  std::set<std::uint64_t> seen{fq.zero().index()};
  for (const auto& x : gf::span_elements(fq, ker.basis)) {
    if (seen.count(x.index())) continue;
    basis.push_back(x);
    seen.clear();
    for (const auto& s : fp_span(H.fp(), basis)) seen.insert(s.index());
  }
  auto A = finish_subspace(H, basis);
  check(A.F == F, ErrorKind::InternalMismatch, "F_R differs from the annihilator of its roots");
  return A;
}

HeisenbergElement lift_to_AR(const Heisenberg& H, const FieldElement& a) {
  const Field fq = H.base();
  check(a.field() == fq, ErrorKind::InvalidInput, "lift expects an element of F_q");
  check(H.in_VR(a), ErrorKind::NotInVR, a.to_string());
  if (H.p0() != 2) return {a, H.f().eval(a, a) / fq.from_int(2)};
  const auto l = H.lifts(a, fq);
  check(!l.empty(), ErrorKind::NoRationalLift, "no b in F_q over a = " + a.to_string());
  return l.front();
}

GroupStructure group_structure(const Heisenberg& H, const std::vector<HeisenbergElement>& elements) {
  check(!elements.empty(), ErrorKind::InvalidInput, "empty group");
  const Field w = elements.front().a.field();
  const HeisenbergElement one = H.identity(w);
  const std::size_t total = elements.size();

  auto closure_with = [&](const std::set<Key>& S, const HeisenbergElement& g, unsigned ord,
                          std::set<Key>& out) -> bool {
    // Requires <g> ∩ S = 1; writes S<g>.
    std::vector<HeisenbergElement> pw{one};
    for (unsigned i = 1; i < ord; ++i) {
      pw.push_back(H.multiply(pw.back(), g));
      if (S.count(key_of(pw.back()))) return false;
    }
    std::map<Key, HeisenbergElement> by_key;
    for (const auto& h : elements) by_key.emplace(key_of(h), h);
    out.clear();
    for (const auto& k : S)
      for (const auto& x : pw) out.insert(key_of(H.multiply(by_key.at(k), x)));
    return true;
  };

  std::vector<unsigned> order(total);
  for (std::size_t i = 0; i < total; ++i) order[i] = H.element_order(elements[i]);

  GroupStructure gs;
  std::set<Key> S{key_of(one)};
  std::vector<FieldElement> a_parts;
  std::vector<std::size_t> idx(total);
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t x, std::size_t y) {
    return std::make_tuple(elements[x].a.is_zero(), -static_cast<int>(order[x]), key_of(elements[x])) <
           std::make_tuple(elements[y].a.is_zero(), -static_cast<int>(order[y]), key_of(elements[y]));
  });
  for (std::size_t i : idx) {
    if (S.size() == total) break;
    const auto& g = elements[i];
    if (order[i] == 1) continue;
    if (!g.a.is_zero()) {
      auto trial = a_parts;
      trial.push_back(g.a);
      if (p0_rank(trial) != trial.size()) continue;
    }
    std::set<Key> next;
    if (!closure_with(S, g, order[i], next)) continue;
    S = std::move(next);
    if (!g.a.is_zero()) a_parts.push_back(g.a);
    gs.generators.push_back(g);
    gs.orders.push_back(order[i]);
  }
  if (S.size() == total) return gs;

  // Fallback: plain backtracking over cyclic factors.
  GroupStructure best;
  std::function<bool(const std::set<Key>&, std::size_t)> dfs = [&](const std::set<Key>& cur, std::size_t from) {
    if (cur.size() == total) return true;
    for (std::size_t t = from; t < idx.size(); ++t) {
      const std::size_t i = idx[t];
      if (order[i] == 1) continue;
      std::set<Key> next;
      if (!closure_with(cur, elements[i], order[i], next)) continue;
      best.generators.push_back(elements[i]);
      best.orders.push_back(order[i]);
      if (dfs(next, t + 1)) return true;
      best.generators.pop_back();
      best.orders.pop_back();
    }
    return false;
  };
  check(dfs({key_of(one)}, 0), ErrorKind::InternalMismatch, "no cyclic decomposition found");
  return best;
}

MaximalAbelian::MaximalAbelian(const Heisenberg& H, IsotropicSubspace A) : H_(&H), A_(std::move(A)) {
  const Field fq = H.base();
  std::vector<FieldElement> central;
  for (std::uint64_t i = 0; i < H.fp().order(); ++i) central.push_back(gf::embed(H.fp().element(i), fq));
  for (const auto& a : A_.elements) {
    const HeisenbergElement base = lift_to_AR(H, a);
    for (const auto& t : central) elements_.push_back({base.a, base.b + t});
  }
  std::sort(elements_.begin(), elements_.end(), key_less);
  structure_ = group_structure(H, elements_);

  const auto& gens = structure_.generators;
  const auto& ords = structure_.orders;
  std::vector<unsigned> n(gens.size(), 0);
  const HeisenbergElement one = H.identity(fq);
  while (true) {
    HeisenbergElement h = one;
    for (std::size_t j = 0; j < gens.size(); ++j) h = H.multiply(h, H.power(gens[j], n[j]));
    check(nf_.emplace(key_of(h), n).second, ErrorKind::InternalMismatch, "normal form is not unique");
    std::size_t j = 0;
    while (j < n.size() && ++n[j] == ords[j]) n[j++] = 0;
    if (j == n.size()) break;
  }
  check(nf_.size() == elements_.size(), ErrorKind::InternalMismatch, "generators do not cover A_R");
}

HeisenbergElement MaximalAbelian::lift(const FieldElement& a) const { return lift_to_AR(*H_, a); }

bool MaximalAbelian::contains(const HeisenbergElement& h) const { return nf_.count(key_of(h)) > 0; }

std::vector<unsigned> MaximalAbelian::normal_form(const HeisenbergElement& h) const {
  auto it = nf_.find(key_of(h));
  check(it != nf_.end(), ErrorKind::NotInGroup, h.to_string() + " is not in A_R");
  return it->second;
}

unsigned psi_exponent(const FieldElement& c, const FieldElement& t) {
  return gf::absolute_trace(gf::embed(c, t.field()) * t);
}

unsigned CharacterOfA::value_exponent(const std::vector<unsigned>& nf) const {
  std::uint64_t s = 0;
  for (std::size_t j = 0; j < nf.size(); ++j) s += static_cast<std::uint64_t>(nf[j]) * exponents[j];
  return static_cast<unsigned>(s % modulus);
}

unsigned character_value(const MaximalAbelian& AR, const CharacterOfA& xi, const HeisenbergElement& h) {
  return xi.value_exponent(AR.normal_form(h));
}

std::vector<CharacterOfA> characters_extending(const MaximalAbelian& AR, const FieldElement& psi) {
  check(!psi.is_zero(), ErrorKind::CentralCharacterTrivial, "psi must be nontrivial");
  const Heisenberg& H = AR.heisenberg();
  const unsigned M = AR.value_order();
  const unsigned scale = M / H.p0();
  const auto& ords = AR.structure().orders;
  const Field fq = H.base();

  std::vector<std::pair<std::vector<unsigned>, unsigned>> centre;
  for (std::uint64_t i = 0; i < H.fp().order(); ++i) {
    const FieldElement t = H.fp().element(i);
    centre.emplace_back(AR.normal_form({fq.zero(), gf::embed(t, fq)}), scale * psi_exponent(psi, t) % M);
  }

  std::vector<CharacterOfA> out;
  std::vector<unsigned> n(ords.size(), 0);
  while (true) {
    CharacterOfA xi{psi, M, {}};
    for (std::size_t j = 0; j < n.size(); ++j) xi.exponents.push_back(n[j] * (M / ords[j]));
    bool ok = true;
    for (const auto& [nf, want] : centre)
      if (xi.value_exponent(nf) != want) {
        ok = false;
        break;
      }
    if (ok) out.push_back(std::move(xi));
    // Lexicographic in the first generator.
    std::size_t j = n.size();
    while (j > 0 && ++n[j - 1] == ords[j - 1]) n[--j] = 0;
    if (j == 0) break;
  }
  std::uint64_t expect = 1;
  for (unsigned i = 0; i < H.e(); ++i) expect *= H.p();
  check(out.size() == expect, ErrorKind::InternalMismatch, "wrong number of characters over psi");
  return out;
}

AssumptionReport validate_assumptions(const Heisenberg& H, const std::optional<IsotropicSubspace>& A) {
  AssumptionReport r;
  r.p0e_ok = !(H.p0() == 2 && H.e() == 0);
  if (!r.p0e_ok) r.failures.push_back("(p0, e) = (2, 0)");
  r.has_rational_A = A.has_value();
  if (!A) {
    r.failures.push_back("no rational maximal isotropic subspace");
  } else if (H.p0() != 2) {
    r.lifts_rational = true;
  } else {
    r.lifts_rational = true;
    for (const auto& a : A->elements)
      if (H.lifts(a, H.base()).empty()) {
        r.lifts_rational = false;
        r.failures.push_back("no rational lift over a = " + a.to_string());
        break;
      }
  }
  const Field fq = H.base();
  const auto vr_q = addpoly::kernel(H.E(), fq);
  r.heisenberg_rational = vr_q.full;
  if (r.heisenberg_rational)
    for (const auto& a : gf::span_elements(fq, vr_q.basis))
      if (H.lifts(a, fq).empty()) {
        r.heisenberg_rational = false;
        break;
      }
  return r;
}

}  // namespace vdgv::heis
