// Copyright 2026 The vdgv Authors.
// SPDX-License-Identifier: Apache-2.0

#include "vdgv/addpoly/additive.hpp"

#include <cassert>
#include <sstream>

#include "vdgv/error.hpp"

namespace vdgv::addpoly {

namespace {

std::uint64_t ipow(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < e; ++i) r *= b;
  return r;
}

unsigned common_step(const AdditivePolynomial& a, const AdditivePolynomial& b) {
  return a.step_exp() == b.step_exp() ? a.step_exp() : 1;
}

// Matrix of y -> c * y^{p0^k} on the field of c.
gf::Matrix twisted_mul_matrix(const FieldElement& c, unsigned k) {
  const Field f = c.field();
  return f.matrix_of([&](const FieldElement& y) { return c * y.frobenius(k); });
}

void put_block(gf::Matrix& big, std::size_t row0, std::size_t col0, const gf::Matrix& block) {
  for (std::size_t i = 0; i < block.rows(); ++i)
    for (std::size_t j = 0; j < block.cols(); ++j)
      big.at(row0 + i, col0 + j) = static_cast<gf::Coord>((big.at(row0 + i, col0 + j) + block.at(i, j)) % big.prime());
}

std::vector<gf::Coord> stacked_coords(const AdditivePolynomial& h, std::size_t blocks) {
  const unsigned m = h.field().degree();
  std::vector<gf::Coord> rhs(blocks * m, 0);
  for (std::size_t k = 0; k < h.p0_coeffs().size(); ++k)
    for (unsigned t = 0; t < m; ++t) rhs[k * m + t] = h.p0_coeffs()[k].coords()[t];
  return rhs;
}

std::vector<FieldElement> unstack(Field f, const std::vector<gf::Coord>& v, std::size_t blocks) {
  const unsigned m = f.degree();
  std::vector<FieldElement> out;
  for (std::size_t i = 0; i < blocks; ++i)
    out.emplace_back(f, std::vector<gf::Coord>(v.begin() + i * m, v.begin() + (i + 1) * m));
  return out;
}

AdditivePolynomial with_best_step(AdditivePolynomial p, unsigned preferred) {
  return p.fits_step(preferred) ? p.with_step(preferred) : p.with_step(1);
}

}  // namespace

AdditivePolynomial::AdditivePolynomial(Field field, unsigned step_exp, const std::vector<FieldElement>& step_coeffs)
    : field_(field), step_exp_(step_exp) {
  check(step_exp >= 1, ErrorKind::InvalidInput, "step exponent must be positive");
  if (step_coeffs.empty()) return;
  c_.assign(step_exp * (step_coeffs.size() - 1) + 1, field.zero());
  for (std::size_t i = 0; i < step_coeffs.size(); ++i) {
    check(step_coeffs[i].field() == field, ErrorKind::InvalidInput, "coefficient outside the coefficient field");
    c_[i * step_exp] = step_coeffs[i];
  }
  trim();
}

AdditivePolynomial AdditivePolynomial::from_p0_coeffs(Field field, unsigned step_exp,
                                                      std::vector<FieldElement> coeffs) {
  AdditivePolynomial p;
  p.field_ = field;
  p.step_exp_ = step_exp;
  p.c_ = std::move(coeffs);
  for ([[maybe_unused]] const auto& c : p.c_) assert(c.field() == field);
  p.trim();
  return p;
}

AdditivePolynomial AdditivePolynomial::identity(Field field, unsigned step_exp) {
  return from_p0_coeffs(field, step_exp, {field.one()});
}

AdditivePolynomial AdditivePolynomial::frobenius_minus_identity(Field field, unsigned k, unsigned step_exp) {
  std::vector<FieldElement> c(k + 1, field.zero());
  c[0] = -field.one();
  c[k] = c[k] + field.one();
  return from_p0_coeffs(field, step_exp, std::move(c));
}

void AdditivePolynomial::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

std::uint64_t AdditivePolynomial::step() const { return ipow(p0(), step_exp_); }

bool AdditivePolynomial::fits_step(unsigned step_exp) const {
  for (std::size_t k = 0; k < c_.size(); ++k)
    if (k % step_exp != 0 && !c_[k].is_zero()) return false;
  return true;
}

std::vector<FieldElement> AdditivePolynomial::step_coeffs() const {
  check(fits_step(step_exp_), ErrorKind::InvalidInput, "polynomial has terms off its declared step");
  std::vector<FieldElement> out;
  for (std::size_t k = 0; k < c_.size(); k += step_exp_) out.push_back(c_[k]);
  return out;
}

FieldElement AdditivePolynomial::eval(const FieldElement& x) const {
  const Field f = x.field();
  FieldElement acc = f.zero();
  FieldElement xp = x;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (k > 0) xp = xp.frobenius(1);
    if (!c_[k].is_zero()) acc += gf::embed(c_[k], f) * xp;
  }
  return acc;
}

gf::Matrix AdditivePolynomial::matrix_on(Field ambient) const {
  const AdditivePolynomial local = over(ambient);
  return ambient.matrix_of([&](const FieldElement& x) { return local.eval(x); });
}

AdditivePolynomial AdditivePolynomial::over(Field target) const {
  if (target == field_) return *this;
  std::vector<FieldElement> c;
  for (const auto& x : c_) c.push_back(gf::embed(x, target));
  return from_p0_coeffs(target, step_exp_, std::move(c));
}

AdditivePolynomial AdditivePolynomial::with_step(unsigned step_exp) const {
  check(fits_step(step_exp), ErrorKind::InvalidInput, "polynomial does not fit the requested step");
  AdditivePolynomial r = *this;
  r.step_exp_ = step_exp;
  return r;
}

SparsePoly AdditivePolynomial::to_sparse() const {
  SparsePoly s(field_);
  for (std::size_t k = 0; k < c_.size(); ++k) s.add_term(ipow(p0(), static_cast<unsigned>(k)), c_[k]);
  return s;
}

AdditivePolynomial AdditivePolynomial::operator+(const AdditivePolynomial& o) const {
  assert(field_ == o.field_);
  std::vector<FieldElement> c(std::max(c_.size(), o.c_.size()), field_.zero());
  for (std::size_t k = 0; k < c_.size(); ++k) c[k] += c_[k];
  for (std::size_t k = 0; k < o.c_.size(); ++k) c[k] += o.c_[k];
  return from_p0_coeffs(field_, common_step(*this, o), std::move(c));
}

AdditivePolynomial AdditivePolynomial::operator-(const AdditivePolynomial& o) const {
  assert(field_ == o.field_);
  std::vector<FieldElement> c(std::max(c_.size(), o.c_.size()), field_.zero());
  for (std::size_t k = 0; k < c_.size(); ++k) c[k] += c_[k];
  for (std::size_t k = 0; k < o.c_.size(); ++k) c[k] -= o.c_[k];
  return from_p0_coeffs(field_, common_step(*this, o), std::move(c));
}

AdditivePolynomial AdditivePolynomial::scaled(const FieldElement& s) const {
  std::vector<FieldElement> c;
  for (const auto& x : c_) c.push_back(x * s);
  return from_p0_coeffs(field_, step_exp_, std::move(c));
}

std::string AdditivePolynomial::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = c_.size(); k-- > 0;) {
    if (c_[k].is_zero()) continue;
    os << (first ? "" : " + ") << c_[k].to_string() << "*x^" << ipow(p0(), static_cast<unsigned>(k));
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

void TwistedBiForm::add_term(unsigned u, unsigned v, const FieldElement& c) {
  assert(c.field() == field_);
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(std::make_pair(u, v), c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

FieldElement TwistedBiForm::eval(const FieldElement& x, const FieldElement& y) const {
  assert(x.field() == y.field());
  const Field f = x.field();
  FieldElement acc = f.zero();
  for (const auto& [uv, c] : terms_) acc += gf::embed(c, f) * x.frobenius(uv.first) * y.frobenius(uv.second);
  return acc;
}

AdditivePolynomial TwistedBiForm::in_x(const FieldElement& y) const {
  const Field f = y.field();
  std::vector<FieldElement> c;
  for (const auto& [uv, coeff] : terms_) {
    if (c.size() <= uv.first) c.resize(uv.first + 1, f.zero());
    c[uv.first] += gf::embed(coeff, f) * y.frobenius(uv.second);
  }
  return AdditivePolynomial::from_p0_coeffs(f, 1, std::move(c));
}

AdditivePolynomial TwistedBiForm::in_y(const FieldElement& x) const {
  const Field f = x.field();
  std::vector<FieldElement> c;
  for (const auto& [uv, coeff] : terms_) {
    if (c.size() <= uv.second) c.resize(uv.second + 1, f.zero());
    c[uv.second] += gf::embed(coeff, f) * x.frobenius(uv.first);
  }
  return AdditivePolynomial::from_p0_coeffs(f, 1, std::move(c));
}

TwistedBiForm TwistedBiForm::frobenius_power(unsigned k) const {
  TwistedBiForm r(field_);
  for (const auto& [uv, c] : terms_) r.add_term(uv.first + k, uv.second + k, c.frobenius(k));
  return r;
}

TwistedBiForm TwistedBiForm::over(Field target) const {
  TwistedBiForm r(target);
  for (const auto& [uv, c] : terms_) r.add_term(uv.first, uv.second, gf::embed(c, target));
  return r;
}

TwistedBiForm TwistedBiForm::operator+(const TwistedBiForm& o) const {
  TwistedBiForm r = *this;
  for (const auto& [uv, c] : o.terms_) r.add_term(uv.first, uv.second, c);
  return r;
}

TwistedBiForm TwistedBiForm::operator-(const TwistedBiForm& o) const {
  TwistedBiForm r = *this;
  for (const auto& [uv, c] : o.terms_) r.add_term(uv.first, uv.second, -c);
  return r;
}

std::string TwistedBiForm::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [uv, c] : terms_) {
    os << (first ? "" : " + ") << c.to_string() << "*x^(p0^" << uv.first << ")*y^(p0^" << uv.second << ")";
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

AdditivePolynomial make_ER(const AdditivePolynomial& R) {
  check(!R.is_zero(), ErrorKind::InvalidInput, "R must be nonzero");
  const unsigned k = R.step_exp();
  const auto a = R.step_coeffs();
  const unsigned e = static_cast<unsigned>(a.size() - 1);
  const Field f = R.field();
  std::vector<FieldElement> c(2 * k * e + 1, f.zero());
  for (unsigned i = 0; i <= e; ++i) {
    c[k * (i + e)] += a[i].frobenius(k * e);
    c[k * (e - i)] += a[i].frobenius(k * (e - i));
  }
  return AdditivePolynomial::from_p0_coeffs(f, k, std::move(c));
}

TwistedBiForm make_fR(const AdditivePolynomial& R) {
  const unsigned k = R.step_exp();
  const auto a = R.step_coeffs();
  const unsigned e = static_cast<unsigned>(a.size() - 1);
  TwistedBiForm form(R.field());
  for (unsigned i = 0; i < e; ++i) {
    for (unsigned j = 0; j + i < e; ++j) {
      // (a_i x^{p^i} y)^{p^j}
      form.add_term(k * (i + j), k * j, -a[i].frobenius(k * j));
    }
    for (unsigned l = 0; l <= e; ++l) {
      // (x R(y))^{p^i}
      form.add_term(k * i, k * (l + i), -a[l].frobenius(k * i));
    }
  }
  return form;
}

std::pair<TwistedBiForm, TwistedBiForm> bilinear_identity_sides(const AdditivePolynomial& R) {
  const TwistedBiForm f = make_fR(R);
  const TwistedBiForm lhs = f.frobenius_power(R.step_exp()) - f;
  const AdditivePolynomial E = make_ER(R);
  TwistedBiForm rhs(R.field());
  const unsigned top = R.step_exp() * R.e();
  for (unsigned j = 0; j < E.p0_coeffs().size(); ++j) rhs.add_term(top, j, -E.p0_coeffs()[j]);
  for (unsigned j = 0; j < R.p0_coeffs().size(); ++j) {
    rhs.add_term(0, j, R.p0_coeffs()[j]);
    rhs.add_term(j, 0, R.p0_coeffs()[j]);
  }
  return {lhs, rhs};
}

bool verify_bilinear_identity(const AdditivePolynomial& R) {
  auto [lhs, rhs] = bilinear_identity_sides(R);
  return lhs == rhs;
}

AdditivePolynomial compose(const AdditivePolynomial& g, const AdditivePolynomial& f) {
  check(g.field() == f.field(), ErrorKind::InvalidInput, "composition needs a common coefficient field");
  const Field fld = g.field();
  if (g.is_zero() || f.is_zero()) return AdditivePolynomial::from_p0_coeffs(fld, common_step(g, f), {});
  std::vector<FieldElement> c(g.degree_exp() + f.degree_exp() + 1, fld.zero());
  for (unsigned i = 0; i <= g.degree_exp(); ++i) {
    const FieldElement& gi = g.p0_coeffs()[i];
    if (gi.is_zero()) continue;
    for (unsigned j = 0; j <= f.degree_exp(); ++j) c[i + j] += gi * f.p0_coeffs()[j].frobenius(i);
  }
  return AdditivePolynomial::from_p0_coeffs(fld, common_step(g, f), std::move(c));
}

AdditivePolynomial outer_divide(const AdditivePolynomial& h, const AdditivePolynomial& f) {
  check(h.field() == f.field(), ErrorKind::InvalidInput, "division needs a common coefficient field");
  check(!f.is_zero(), ErrorKind::NoSuchFactor, "division by the zero polynomial");
  const Field fld = h.field();
  if (h.is_zero()) return AdditivePolynomial::from_p0_coeffs(fld, h.step_exp(), {});
  check(h.degree_exp() >= f.degree_exp(), ErrorKind::NoSuchFactor, "deg f does not divide deg h");
  const unsigned m = fld.degree();
  const std::size_t unknowns = h.degree_exp() - f.degree_exp() + 1;
  const std::size_t blocks = h.degree_exp() + 1;
  gf::Matrix sys(fld.p0(), blocks * m, unknowns * m);
  for (std::size_t i = 0; i < unknowns; ++i)
    for (unsigned j = 0; j <= f.degree_exp(); ++j) {
      const FieldElement c = f.p0_coeffs()[j].frobenius(static_cast<std::int64_t>(i));
      put_block(sys, (i + j) * m, i * m, fld.matrix_of([&](const FieldElement& y) { return y * c; }));
    }
  auto sol = gf::solve(sys, stacked_coords(h, blocks));
  check(sol.has_value(), ErrorKind::NoSuchFactor, "h is not of the form g o f");
  auto g = with_best_step(AdditivePolynomial::from_p0_coeffs(fld, 1, unstack(fld, sol->particular, unknowns)),
                          common_step(h, f));
  assert(compose(g, f).p0_coeffs() == h.p0_coeffs());
  return g;
}

AdditivePolynomial inner_divide(const AdditivePolynomial& h, const AdditivePolynomial& g) {
  check(h.field() == g.field(), ErrorKind::InvalidInput, "division needs a common coefficient field");
  check(!g.is_zero(), ErrorKind::NoSuchFactor, "division by the zero polynomial");
  const Field fld = h.field();
  if (h.is_zero()) return AdditivePolynomial::from_p0_coeffs(fld, h.step_exp(), {});
  check(h.degree_exp() >= g.degree_exp(), ErrorKind::NoSuchFactor, "deg g does not divide deg h");
  const unsigned m = fld.degree();
  const std::size_t unknowns = h.degree_exp() - g.degree_exp() + 1;
  const std::size_t blocks = h.degree_exp() + 1;
  gf::Matrix sys(fld.p0(), blocks * m, unknowns * m);
  for (unsigned i = 0; i <= g.degree_exp(); ++i) {
    if (g.p0_coeffs()[i].is_zero()) continue;
    const gf::Matrix block = twisted_mul_matrix(g.p0_coeffs()[i], i);
    for (std::size_t j = 0; j < unknowns; ++j) put_block(sys, (i + j) * m, j * m, block);
  }
  auto sol = gf::solve(sys, stacked_coords(h, blocks));
  check(sol.has_value(), ErrorKind::NoSuchFactor, "h is not of the form g o f");
  return with_best_step(AdditivePolynomial::from_p0_coeffs(fld, 1, unstack(fld, sol->particular, unknowns)),
                        common_step(h, g));
}

KernelInfo kernel(const AdditivePolynomial& f, Field ambient) {
  KernelInfo info;
  for (auto& v : f.matrix_on(ambient).kernel()) info.basis.emplace_back(ambient, std::move(v));
  info.full = !f.is_zero() && info.basis.size() == f.degree_exp();
  return info;
}

unsigned splitting_degree(const AdditivePolynomial& f) {
  check(f.is_separable(), ErrorKind::InvalidInput, "splitting degree needs a separable polynomial");
  const Field base = f.field();
  for (unsigned n = 1;; ++n) {
    const Field ambient = gf::build_field(base.p0(), base.degree() * n);
    if (kernel(f, ambient).full) return n;
  }
}

AdditivePolynomial validate_delta(const AdditivePolynomial& delta, unsigned p_exp) {
  check(!delta.is_zero(), ErrorKind::InvalidInput, "delta must be nonzero");
  check(delta.is_separable(), ErrorKind::NotReduced, "delta has no linear term");
  const Field fq = delta.field();
  check(fq.degree() % p_exp == 0, ErrorKind::InvalidInput, "F_p is not contained in the coefficient field");
  const KernelInfo ker = kernel(delta, fq);
  check(ker.full, ErrorKind::RootsNotInFp, "delta does not split over the coefficient field");
  for (const auto& r : ker.basis)
    check(r.frobenius(p_exp) == r, ErrorKind::RootsNotInFp, "root " + r.to_string() + " is not in F_p");
  const auto target = AdditivePolynomial::frobenius_minus_identity(fq, p_exp, 1);
  auto nu = inner_divide(target, delta.with_step(1));
  check(compose(delta.with_step(1), nu).p0_coeffs() == target.p0_coeffs(), ErrorKind::NoSuchFactor,
        "delta does not divide y^p - y");
  return nu;
}

}  // namespace vdgv::addpoly
