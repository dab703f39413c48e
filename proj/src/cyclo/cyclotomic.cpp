// Copyright 2026 The vdgv Authors.
// SPDX-License-Identifier: Apache-2.0

#include "vdgv/cyclo/cyclotomic.hpp"

#include <cassert>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>

#include "vdgv/error.hpp"

namespace vdgv::cyclo {

namespace {

void trim(std::vector<Int>& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Exact quotient of a by a monic divisor.
std::vector<Int> divide_monic(std::vector<Int> a, const std::vector<Int>& b) {
  const std::size_t db = b.size() - 1;
  if (a.size() <= db) return {};
  std::vector<Int> q(a.size() - db, 0);
  for (std::size_t i = a.size(); i-- > db;) {
    const Int c = a[i];
    q[i - db] = c;
    for (std::size_t j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
  }
  trim(a);
  assert(a.empty());
  return q;
}

// Reduce an arbitrary-length coefficient list modulo Phi_n.
std::vector<Int> reduce(std::vector<Int> a, const CyclotomicRing& ring) {
  const std::size_t d = ring.degree();
  for (std::size_t i = a.size(); i-- > d;) {
    if (a[i] == 0) continue;
    const Int c = a[i];
    for (std::size_t j = 0; j <= d; ++j) a[i - d + j] -= c * ring.phi[j];
  }
  a.resize(d, 0);
  return a;
}

struct RingCache {
  std::mutex mu;
  std::map<int, std::unique_ptr<CyclotomicRing>> rings;
};

RingCache& ring_cache() {
  static RingCache c;
  return c;
}

std::vector<Int> compute_phi(int n) {
  std::vector<Int> num(n + 1, 0);
  num[0] = -1;
  num[n] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d == 0) num = divide_monic(num, cyclo_ring(d).phi);
  }
  return num;
}

}  // namespace

const CyclotomicRing& cyclo_ring(int n) {
  check(n >= 1 && n <= kMaxOrder, ErrorKind::UnsupportedOrder, "cyclotomic order " + std::to_string(n));
  auto& cache = ring_cache();
  {
    std::lock_guard lock(cache.mu);
    if (auto it = cache.rings.find(n); it != cache.rings.end()) return *it->second;
  }
  auto ring = std::make_unique<CyclotomicRing>();
  ring->order = n;
  ring->phi = compute_phi(n);
  std::lock_guard lock(cache.mu);
  auto [it, inserted] = cache.rings.emplace(n, std::move(ring));
  return *it->second;
}

CyclotomicInteger::CyclotomicInteger(int n) : n_(n), c_(cyclo_ring(n).degree(), 0) {}

CyclotomicInteger::CyclotomicInteger(int n, std::vector<Int> coords)
    : n_(n), c_(reduce(std::move(coords), cyclo_ring(n))) {}

CyclotomicInteger CyclotomicInteger::from_int(int n, const Int& v) {
  CyclotomicInteger r(n);
  r.c_[0] = v;
  return r;
}

CyclotomicInteger CyclotomicInteger::zeta_power(int n, std::int64_t k) {
  k = ((k % n) + n) % n;
  std::vector<Int> c(k + 1, 0);
  c[k] = 1;
  return CyclotomicInteger(n, std::move(c));
}

CyclotomicInteger CyclotomicInteger::operator+(const CyclotomicInteger& o) const {
  CyclotomicInteger r = *this;
  r += o;
  return r;
}

CyclotomicInteger CyclotomicInteger::operator-(const CyclotomicInteger& o) const {
  CyclotomicInteger r = *this;
  r -= o;
  return r;
}

CyclotomicInteger CyclotomicInteger::operator-() const {
  CyclotomicInteger r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

CyclotomicInteger& CyclotomicInteger::operator+=(const CyclotomicInteger& o) {
  assert(n_ == o.n_);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

CyclotomicInteger& CyclotomicInteger::operator-=(const CyclotomicInteger& o) {
  assert(n_ == o.n_);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

CyclotomicInteger CyclotomicInteger::operator*(const CyclotomicInteger& o) const {
  assert(n_ == o.n_);
  std::vector<Int> prod(c_.size() + o.c_.size() - 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) prod[i + j] += c_[i] * o.c_[j];
  }
  return CyclotomicInteger(n_, std::move(prod));
}

CyclotomicInteger CyclotomicInteger::operator*(const Int& k) const {
  CyclotomicInteger r = *this;
  for (auto& x : r.c_) x *= k;
  return r;
}

CyclotomicInteger& CyclotomicInteger::operator*=(const CyclotomicInteger& o) {
  *this = *this * o;
  return *this;
}

CyclotomicInteger CyclotomicInteger::pow(std::uint64_t e) const {
  CyclotomicInteger result = from_int(n_, 1);
  CyclotomicInteger base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

CyclotomicInteger CyclotomicInteger::conj() const {
  std::vector<Int> c(n_, 0);
  for (std::size_t j = 0; j < c_.size(); ++j) c[(n_ - static_cast<int>(j)) % n_] += c_[j];
  return CyclotomicInteger(n_, std::move(c));
}

bool CyclotomicInteger::is_zero() const {
  for (const auto& x : c_)
    if (x != 0) return false;
  return true;
}

bool CyclotomicInteger::is_rational() const {
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

bool CyclotomicInteger::divide_exact(const Int& k, CyclotomicInteger& out) const {
  out = *this;
  for (auto& x : out.c_) {
    if (!mpz_divisible_p(x.get_mpz_t(), k.get_mpz_t())) return false;
    mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), k.get_mpz_t());
  }
  return true;
}

CyclotomicInteger CyclotomicInteger::lifted(int target) const {
  if (target == n_) return *this;
  check(target % n_ == 0, ErrorKind::UnsupportedOrder, "cannot lift order " + std::to_string(n_));
  const int step = target / n_;
  std::vector<Int> c(target, 0);
  for (std::size_t j = 0; j < c_.size(); ++j) c[(j * step) % target] += c_[j];
  return CyclotomicInteger(target, std::move(c));
}

std::string CyclotomicInteger::to_string() const {
  std::ostringstream os;
  os << "{n=" << n_ << ", [";
  for (std::size_t i = 0; i < c_.size(); ++i) os << (i ? "," : "") << c_[i].get_str();
  os << "]}";
  return os.str();
}

Int conj_norm(const CyclotomicInteger& tau) {
  const CyclotomicInteger n = tau * tau.conj();
  check(n.is_rational(), ErrorKind::NotRationalInteger, "norm " + n.to_string() + " is not rational");
  return n.coords()[0];
}

bool equals_q(const CyclotomicInteger& tau, const Int& q) { return conj_norm(tau) == q; }

bool is_q_times_root_of_unity(const CyclotomicInteger& tau, const Int& q, unsigned m) {
  check(m % 2 == 0, ErrorKind::InvalidInput, "root-of-unity test needs an even exponent");
  Int rhs;
  mpz_pow_ui(rhs.get_mpz_t(), q.get_mpz_t(), m / 2);
  return tau.pow(m) == CyclotomicInteger::from_int(tau.order(), rhs);
}

GaussianClassification classify_gaussian(const CyclotomicInteger& tau, unsigned n) {
  check(tau.order() == 4, ErrorKind::UnsupportedOrder, "classification is defined on Z[i]");
  Int two_n;
  mpz_ui_pow_ui(two_n.get_mpz_t(), 2, n);
  check(n >= 1 && conj_norm(tau) == two_n, ErrorKind::NormMismatch,
        "norm of " + tau.to_string() + " is not 2^" + std::to_string(n));
  // Strip (1+i)^n: (a+bi)/(1+i) = ((a+b) + (b-a)i)/2.
  Int a = tau.coords()[0], b = tau.coords()[1];
  for (unsigned k = 0; k < n; ++k) {
    Int s = a + b, t = b - a;
    check(mpz_even_p(s.get_mpz_t()) && mpz_even_p(t.get_mpz_t()), ErrorKind::NormMismatch, "not divisible by 1+i");
    a = s / 2;
    b = t / 2;
  }
  int unit_power = -1;
  if (a == 1 && b == 0) unit_power = 0;
  if (a == 0 && b == 1) unit_power = 1;
  if (a == -1 && b == 0) unit_power = 2;
  if (a == 0 && b == -1) unit_power = 3;
  check(unit_power >= 0, ErrorKind::NormMismatch, "cofactor is not a unit");
  // (1+i)/sqrt(2) = exp(pi i/4), i = exp(2 pi i/4).
  const int k = static_cast<int>((2 * unit_power + n) % 8);
  return {n % 2 == 1 ? GaussianClass::PrimitiveEighth : GaussianClass::FourthRoot, k};
}

IntPolynomial::IntPolynomial(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(c_); }

IntPolynomial IntPolynomial::operator*(const IntPolynomial& o) const {
  if (c_.empty() || o.c_.empty()) return IntPolynomial();
  std::vector<Int> r(c_.size() + o.c_.size() - 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  return IntPolynomial(std::move(r));
}

std::string IntPolynomial::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < c_.size(); ++i) os << (i ? "," : "") << c_[i].get_str();
  os << ']';
  return os.str();
}

CycloPolynomial::CycloPolynomial(int n, std::vector<CyclotomicInteger> coeffs) : n_(n), c_(std::move(coeffs)) {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

CycloPolynomial CycloPolynomial::operator*(const CycloPolynomial& o) const {
  assert(n_ == o.n_);
  if (c_.empty() || o.c_.empty()) return CycloPolynomial(n_);
  std::vector<CyclotomicInteger> r(c_.size() + o.c_.size() - 1, CyclotomicInteger(n_));
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  return CycloPolynomial(n_, std::move(r));
}

CycloPolynomial CycloPolynomial::conj() const {
  std::vector<CyclotomicInteger> r;
  for (const auto& c : c_) r.push_back(c.conj());
  return CycloPolynomial(n_, std::move(r));
}

bool CycloPolynomial::is_integral() const {
  for (const auto& c : c_)
    if (!c.is_rational()) return false;
  return true;
}

IntPolynomial CycloPolynomial::to_integer() const {
  std::vector<Int> r;
  for (const auto& c : c_) {
    check(c.is_rational(), ErrorKind::NonIntegralCoefficient, "coefficient " + c.to_string() + " is not rational");
    r.push_back(c.coords()[0]);
  }
  return IntPolynomial(std::move(r));
}

CycloPolynomial CycloPolynomial::from_integer(int n, const IntPolynomial& p) {
  std::vector<CyclotomicInteger> r;
  for (const auto& c : p.coeffs()) r.push_back(CyclotomicInteger::from_int(n, c));
  return CycloPolynomial(n, std::move(r));
}

CycloPolynomial CycloPolynomial::linear_factor(const CyclotomicInteger& tau) {
  return CycloPolynomial(tau.order(), {CyclotomicInteger::from_int(tau.order(), 1), -tau});
}

CycloPolynomial newton_from_power_sums(std::span<const CyclotomicInteger> sums, int d) {
  check(static_cast<int>(sums.size()) >= d, ErrorKind::InvalidInput, "not enough power sums");
  const int n = d > 0 ? sums[0].order() : 1;
  std::vector<CyclotomicInteger> e{CyclotomicInteger::from_int(n, 1)};
  for (int k = 1; k <= d; ++k) {
    CyclotomicInteger acc(n);
    for (int i = 1; i <= k; ++i) acc += sums[i - 1] * e[k - i];
    CyclotomicInteger ek(n);
    check(acc.divide_exact(Int(k), ek), ErrorKind::NonIntegralCoefficient,
          "coefficient of T^" + std::to_string(k) + " is not integral");
    e.push_back(-ek);
  }
  return CycloPolynomial(n, std::move(e));
}

IntPolynomial newton_from_power_sums(std::span<const Int> sums, int d) {
  std::vector<CyclotomicInteger> lifted;
  for (const auto& s : sums) lifted.push_back(CyclotomicInteger::from_int(1, s));
  return newton_from_power_sums(lifted, d).to_integer();
}

std::vector<CyclotomicInteger> power_sums(const CycloPolynomial& p, int count) {
  const int n = p.order();
  check(!p.coeffs().empty() && p.coeffs()[0] == CyclotomicInteger::from_int(n, 1), ErrorKind::InvalidInput,
        "power sums need constant term 1");
  std::vector<CyclotomicInteger> s;
  auto coeff = [&](int i) { return i <= p.degree() ? p.coeffs()[i] : CyclotomicInteger(n); };
  for (int k = 1; k <= count; ++k) {
    CyclotomicInteger acc = coeff(k) * Int(-k);
    for (int i = 1; i < k; ++i) acc -= coeff(i) * s[k - i - 1];
    s.push_back(acc);
  }
  return s;
}

std::vector<Int> power_sums(const IntPolynomial& p, int count) {
  std::vector<Int> out;
  for (const auto& s : power_sums(CycloPolynomial::from_integer(1, p), count)) out.push_back(s.coords()[0]);
  return out;
}

}  // namespace vdgv::cyclo
