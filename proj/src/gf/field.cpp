// Copyright 2026 The vdgv Authors.
// SPDX-License-Identifier: Apache-2.0

#include "vdgv/gf/field.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <tuple>

#include "vdgv/error.hpp"

namespace vdgv::gf {

namespace {

std::atomic<std::uint64_t> g_size_guard{kDefaultSizeGuard};

// Polynomials over Z/p, low-to-high, used only for the modulus search.
using PolyP = std::vector<std::uint64_t>;

void trim(PolyP& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

PolyP poly_mod(PolyP a, const PolyP& m, std::uint64_t p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  const std::uint64_t inv = mod_inverse(static_cast<std::uint32_t>(m.back()), static_cast<std::uint32_t>(p));
  while (a.size() > dm) {
    const std::uint64_t f = a.back() * inv % p;
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) a[shift + i] = (a[shift + i] + (p - f) * m[i]) % p;
    trim(a);
  }
  return a;
}

PolyP poly_mulmod(const PolyP& a, const PolyP& b, const PolyP& m, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  PolyP r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  return poly_mod(std::move(r), m, p);
}

PolyP poly_powmod(PolyP base, std::uint64_t e, const PolyP& m, std::uint64_t p) {
  PolyP result{1};
  base = poly_mod(std::move(base), m, p);
  while (e > 0) {
    if (e & 1) result = poly_mulmod(result, base, m, p);
    e >>= 1;
    if (e) base = poly_mulmod(base, base, m, p);
  }
  return result;
}

PolyP poly_gcd(PolyP a, PolyP b, std::uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    PolyP r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

PolyP poly_sub(PolyP a, const PolyP& b, std::uint64_t p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
  trim(a);
  return a;
}

std::vector<unsigned> prime_divisors(unsigned m) {
  std::vector<unsigned> out;
  for (unsigned d = 2; d * d <= m; ++d) {
    if (m % d == 0) {
      out.push_back(d);
      while (m % d == 0) m /= d;
    }
  }
  if (m > 1) out.push_back(m);
  return out;
}

// Rabin's irreducibility test.
bool is_irreducible(const PolyP& f, std::uint64_t p) {
  const unsigned m = static_cast<unsigned>(f.size() - 1);
  if (m == 1) return true;
  if (f[0] == 0) return false;
  // frob[k] = x^{p^k} mod f
  std::vector<PolyP> frob(m + 1);
  frob[0] = poly_mod({0, 1}, f, p);
  for (unsigned k = 1; k <= m; ++k) frob[k] = poly_powmod(frob[k - 1], p, f, p);
  PolyP x = poly_mod({0, 1}, f, p);
  if (poly_sub(frob[m], x, p) != PolyP{}) return false;
  for (unsigned r : prime_divisors(m)) {
    PolyP g = poly_gcd(f, poly_sub(frob[m / r], x, p), p);
    if (g.size() != 1) return false;
  }
  return true;
}

std::vector<Coord> smallest_irreducible(unsigned p0, unsigned m) {
  // Tuples (c_0, ..., c_{m-1}, 1) in lexicographic order: c_0 is the most
  // significant digit of the counter.
  std::vector<std::uint64_t> digits(m, 0);
  while (true) {
    PolyP f(digits.begin(), digits.end());
    f.push_back(1);
    if (is_irreducible(f, p0)) return std::vector<Coord>(f.begin(), f.end());
    int i = static_cast<int>(m) - 1;
    while (i >= 0 && ++digits[i] == p0) digits[i--] = 0;
    if (i < 0) fail(ErrorKind::InternalMismatch, "no irreducible polynomial found");
  }
}

struct Registry {
  std::mutex mu;
  std::map<std::pair<unsigned, unsigned>, std::unique_ptr<FieldCtx>> fields;
};

Registry& registry() {
  static Registry r;
  return r;
}

struct EmbeddingCache {
  std::recursive_mutex mu;
  std::map<std::tuple<unsigned, unsigned, unsigned>, Matrix> matrices;
};

EmbeddingCache& embedding_cache() {
  static EmbeddingCache c;
  return c;
}

std::vector<Coord> mul_coords(const FieldCtx& ctx, const std::vector<Coord>& a, const std::vector<Coord>& b) {
  const unsigned m = ctx.m;
  const std::uint64_t p = ctx.p0;
  std::vector<std::uint64_t> prod(2 * m - 1, 0);
  for (unsigned i = 0; i < m; ++i) {
    if (a[i] == 0) continue;
    for (unsigned j = 0; j < m; ++j) prod[i + j] += std::uint64_t{a[i]} * b[j];
  }
  for (auto& x : prod) x %= p;
  std::vector<std::uint64_t> low(prod.begin(), prod.begin() + m);
  for (unsigned j = m; j < 2 * m - 1; ++j) {
    const std::uint64_t c = prod[j];
    if (c == 0) continue;
    const auto& red = ctx.reduce[j - m];
    for (unsigned i = 0; i < m; ++i) low[i] += c * red[i];
  }
  std::vector<Coord> out(m);
  for (unsigned i = 0; i < m; ++i) out[i] = static_cast<Coord>(low[i] % p);
  return out;
}

std::unique_ptr<FieldCtx> make_ctx(unsigned p0, unsigned m) {
  auto ctx = std::make_unique<FieldCtx>();
  ctx->p0 = p0;
  ctx->m = m;
  ctx->order = 1;
  for (unsigned i = 0; i < m; ++i) ctx->order *= p0;
  ctx->modulus = smallest_irreducible(p0, m);
  // x^m = -(c_0 + ... + c_{m-1} x^{m-1})
  std::vector<Coord> cur(m);
  for (unsigned i = 0; i < m; ++i) cur[i] = (p0 - ctx->modulus[i]) % p0;
  for (unsigned j = 0; j + 1 < m; ++j) {
    ctx->reduce.push_back(cur);
    std::vector<Coord> next(m, 0);
    const Coord top = cur[m - 1];
    for (unsigned i = m - 1; i > 0; --i) next[i] = cur[i - 1];
    for (unsigned i = 0; i < m; ++i)
      next[i] = static_cast<Coord>((next[i] + std::uint64_t{top} * ((p0 - ctx->modulus[i]) % p0)) % p0);
    cur = std::move(next);
  }
  return ctx;
}

void finish_ctx(FieldCtx& ctx, Field field) {
  const unsigned m = ctx.m;
  ctx.frobenius = Matrix(ctx.p0, m, m);
  FieldElement power = field.one();
  const FieldElement g = field.gen();
  for (unsigned j = 0; j < m; ++j) {
    // Raise by repeated multiplication so the matrix is not used while built.
    FieldElement img = field.one();
    for (unsigned k = 0; k < ctx.p0; ++k) img = img * power;
    for (unsigned i = 0; i < m; ++i) ctx.frobenius.at(i, j) = img.coords()[i];
    power = power * g;
  }
  ctx.abs_trace.assign(m, 0);
  power = field.one();
  for (unsigned j = 0; j < m; ++j) {
    std::vector<Coord> v = power.coords();
    std::vector<std::uint64_t> sum(v.begin(), v.end());
    for (unsigned k = 1; k < m; ++k) {
      v = ctx.frobenius.apply(v);
      for (unsigned i = 0; i < m; ++i) sum[i] += v[i];
    }
    for (unsigned i = 1; i < m; ++i) assert(sum[i] % ctx.p0 == 0);
    ctx.abs_trace[j] = static_cast<Coord>(sum[0] % ctx.p0);
    power = power * g;
  }
}

std::vector<unsigned> proper_divisors(unsigned d) {
  std::vector<unsigned> out;
  for (unsigned j = 2; j < d; ++j)
    if (d % j == 0) out.push_back(j);
  return out;
}

// Image of sub.gen() under the compatible embedding sub -> target.
FieldElement generator_image(Field sub, Field target) {
  const unsigned d = sub.degree();
  const unsigned p0 = sub.p0();
  // Subfield of target with p0^d elements: kernel of Frob^d - 1.
  Matrix frob_d(p0, target.degree(), target.degree());
  for (unsigned i = 0; i < target.degree(); ++i) frob_d.at(i, i) = 1;
  for (unsigned k = 0; k < d; ++k) frob_d = target.ctx().frobenius * frob_d;
  for (unsigned i = 0; i < target.degree(); ++i) frob_d.at(i, i) = (frob_d.at(i, i) + p0 - 1) % p0;
  std::vector<FieldElement> kbasis;
  for (auto& v : frob_d.kernel()) kbasis.emplace_back(target, v);
  assert(kbasis.size() == d);
  std::vector<FieldElement> roots;
  for (const auto& s : span_elements(target, kbasis)) {
    FieldElement acc = target.zero();
    for (auto it = sub.modulus().rbegin(); it != sub.modulus().rend(); ++it) {
      acc = acc * s + target.from_int(*it);
    }
    if (acc.is_zero()) roots.push_back(s);
  }
  for (const auto& r : roots) {
    bool ok = true;
    for (unsigned j : proper_divisors(d)) {
      Field mid = build_field(p0, j);
      const FieldElement via_sub = embed(mid.gen(), sub);
      FieldElement img = target.zero();
      FieldElement rp = target.one();
      for (unsigned i = 0; i < d; ++i) {
        img += rp.scaled(via_sub.coords()[i]);
        rp *= r;
      }
      if (!(img == embed(mid.gen(), target))) {
        ok = false;
        break;
      }
    }
    if (ok) return r;
  }
  fail(ErrorKind::InternalMismatch, "no compatible embedding");
}

}  // namespace

std::uint64_t size_guard() { return g_size_guard.load(); }
void set_size_guard(std::uint64_t guard) { g_size_guard.store(guard); }

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

bool within_guard(unsigned p0, unsigned m, std::uint64_t guard) {
  std::uint64_t q = 1;
  for (unsigned i = 0; i < m; ++i) {
    if (q > guard / p0) return false;
    q *= p0;
  }
  return q <= guard;
}

Field build_field(unsigned p0, unsigned m) {
  check(is_prime(p0) && p0 < 65536, ErrorKind::NotPrime, std::to_string(p0) + " is not a supported prime");
  check(m >= 1, ErrorKind::InvalidInput, "field degree must be positive");
  check(within_guard(p0, m, size_guard()), ErrorKind::SizeGuardExceeded,
        "field " + std::to_string(p0) + "^" + std::to_string(m) + " exceeds the size guard");
  auto& reg = registry();
  std::unique_lock lock(reg.mu);
  auto it = reg.fields.find({p0, m});
  if (it != reg.fields.end()) return Field(it->second.get());
  auto ctx = make_ctx(p0, m);
  FieldCtx* raw = ctx.get();
  Field field(raw);
  finish_ctx(*raw, field);
  reg.fields.emplace(std::make_pair(p0, m), std::move(ctx));
  return field;
}

unsigned Field::p0() const { return ctx_->p0; }
unsigned Field::degree() const { return ctx_->m; }
std::uint64_t Field::order() const { return ctx_->order; }
const std::vector<Coord>& Field::modulus() const { return ctx_->modulus; }

FieldElement Field::zero() const { return FieldElement(*this, std::vector<Coord>(degree(), 0)); }

FieldElement Field::one() const {
  std::vector<Coord> c(degree(), 0);
  c[0] = 1;
  return FieldElement(*this, std::move(c));
}

FieldElement Field::gen() const {
  if (degree() == 1) {
    // The modulus is x, so the indeterminate reduces to 0.
    return zero();
  }
  std::vector<Coord> c(degree(), 0);
  c[1] = 1;
  return FieldElement(*this, std::move(c));
}

FieldElement Field::from_int(std::int64_t v) const {
  const std::int64_t p = p0();
  std::vector<Coord> c(degree(), 0);
  c[0] = static_cast<Coord>(((v % p) + p) % p);
  return FieldElement(*this, std::move(c));
}

FieldElement Field::from_coords(std::span<const std::int64_t> coords) const {
  check(coords.size() <= degree(), ErrorKind::InvalidInput,
        "coordinate vector of length " + std::to_string(coords.size()) + " for a field of degree " +
            std::to_string(degree()));
  const std::int64_t p = p0();
  std::vector<Coord> c(degree(), 0);
  for (std::size_t i = 0; i < coords.size(); ++i) c[i] = static_cast<Coord>(((coords[i] % p) + p) % p);
  return FieldElement(*this, std::move(c));
}

FieldElement Field::element(std::uint64_t index) const {
  std::vector<Coord> c(degree(), 0);
  for (unsigned i = 0; i < degree(); ++i) {
    c[i] = static_cast<Coord>(index % p0());
    index /= p0();
  }
  return FieldElement(*this, std::move(c));
}

std::vector<FieldElement> Field::basis() const {
  std::vector<FieldElement> out;
  for (unsigned j = 0; j < degree(); ++j) {
    std::vector<Coord> c(degree(), 0);
    c[j] = 1;
    out.emplace_back(*this, std::move(c));
  }
  return out;
}

Matrix Field::matrix_of(const std::function<FieldElement(const FieldElement&)>& map) const {
  Matrix mat(p0(), degree(), degree());
  const auto b = basis();
  for (unsigned j = 0; j < degree(); ++j) {
    const FieldElement img = map(b[j]);
    assert(img.field() == *this);
    for (unsigned i = 0; i < degree(); ++i) mat.at(i, j) = img.coords()[i];
  }
  return mat;
}

std::uint64_t FieldElement::index() const {
  std::uint64_t idx = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) idx = idx * field_.p0() + *it;
  return idx;
}

bool FieldElement::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](Coord x) { return x == 0; });
}

bool FieldElement::is_one() const {
  if (c_.empty() || c_[0] != 1) return false;
  return std::all_of(c_.begin() + 1, c_.end(), [](Coord x) { return x == 0; });
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  FieldElement r = *this;
  r += o;
  return r;
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
  FieldElement r = *this;
  r -= o;
  return r;
}

FieldElement FieldElement::operator-() const {
  FieldElement r = *this;
  const Coord p = field_.p0();
  for (auto& x : r.c_) x = (p - x) % p;
  return r;
}

FieldElement& FieldElement::operator+=(const FieldElement& o) {
  assert(field_ == o.field_);
  const Coord p = field_.p0();
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] = (c_[i] + o.c_[i]) % p;
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& o) {
  assert(field_ == o.field_);
  const Coord p = field_.p0();
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] = (c_[i] + p - o.c_[i]) % p;
  return *this;
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
  assert(field_ == o.field_);
  return FieldElement(field_, mul_coords(field_.ctx(), c_, o.c_));
}

FieldElement& FieldElement::operator*=(const FieldElement& o) {
  *this = *this * o;
  return *this;
}

FieldElement FieldElement::operator/(const FieldElement& o) const { return *this * o.inverse(); }

FieldElement FieldElement::scaled(std::uint32_t k) const {
  FieldElement r = *this;
  const std::uint64_t p = field_.p0();
  for (auto& x : r.c_) x = static_cast<Coord>(x * (k % p) % p);
  return r;
}

FieldElement FieldElement::pow(std::uint64_t e) const {
  FieldElement result = field_.one();
  FieldElement base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

FieldElement FieldElement::inverse() const {
  check(!is_zero(), ErrorKind::ZeroElement, "inverse of zero");
  return pow(field_.order() - 2);
}

FieldElement FieldElement::frobenius(std::int64_t k) const {
  const std::int64_t m = field_.degree();
  k = ((k % m) + m) % m;
  std::vector<Coord> v = c_;
  for (std::int64_t i = 0; i < k; ++i) v = field_.ctx().frobenius.apply(v);
  return FieldElement(field_, std::move(v));
}

std::string FieldElement::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < c_.size(); ++i) os << (i ? "," : "") << c_[i];
  os << ']';
  return os.str();
}

FieldElement frobenius(const FieldElement& x, std::int64_t k) { return x.frobenius(k); }

bool is_subfield(Field sub, Field sup) { return sub.p0() == sup.p0() && sup.degree() % sub.degree() == 0; }

const Matrix& embedding_matrix(Field sub, Field target) {
  check(is_subfield(sub, target), ErrorKind::NotASubfield,
        "F_" + std::to_string(sub.p0()) + "^" + std::to_string(sub.degree()) + " is not a subfield of F_" +
            std::to_string(target.p0()) + "^" + std::to_string(target.degree()));
  auto& cache = embedding_cache();
  std::lock_guard lock(cache.mu);
  const auto key = std::make_tuple(sub.p0(), sub.degree(), target.degree());
  if (auto it = cache.matrices.find(key); it != cache.matrices.end()) return it->second;
  Matrix mat(sub.p0(), target.degree(), sub.degree());
  if (sub == target) {
    for (unsigned i = 0; i < sub.degree(); ++i) mat.at(i, i) = 1;
  } else {
    const FieldElement r = sub.degree() == 1 ? target.zero() : generator_image(sub, target);
    FieldElement power = target.one();
    for (unsigned j = 0; j < sub.degree(); ++j) {
      for (unsigned i = 0; i < target.degree(); ++i) mat.at(i, j) = power.coords()[i];
      power *= r;
    }
  }
  return cache.matrices.emplace(key, std::move(mat)).first->second;
}

FieldElement embed(const FieldElement& x, Field target) {
  if (x.field() == target) return x;
  const Matrix& mat = embedding_matrix(x.field(), target);
  return FieldElement(target, mat.apply(x.coords()));
}

std::optional<FieldElement> try_restrict(const FieldElement& x, Field sub) {
  if (x.field() == sub) return x;
  const Matrix& mat = embedding_matrix(sub, x.field());
  auto sol = solve(mat, x.coords());
  if (!sol) return std::nullopt;
  return FieldElement(sub, sol->particular);
}

FieldElement restrict_to(const FieldElement& x, Field sub) {
  auto r = try_restrict(x, sub);
  check(r.has_value(), ErrorKind::NotASubfield, "element " + x.to_string() + " does not lie in the subfield");
  return *r;
}

FieldElement trace(const FieldElement& x, Field sub) {
  const Field f = x.field();
  check(is_subfield(sub, f), ErrorKind::NotASubfield, "trace target is not a subfield");
  const unsigned d = sub.degree();
  FieldElement sum = x;
  FieldElement cur = x;
  for (unsigned i = 1; i < f.degree() / d; ++i) {
    cur = cur.frobenius(d);
    sum += cur;
  }
  return restrict_to(sum, sub);
}

Coord absolute_trace(const FieldElement& x) {
  const auto& ctx = x.field().ctx();
  std::uint64_t acc = 0;
  for (unsigned j = 0; j < ctx.m; ++j) acc += std::uint64_t{x.coords()[j]} * ctx.abs_trace[j];
  return static_cast<Coord>(acc % ctx.p0);
}

int quadratic_character(const FieldElement& x) {
  check(x.field().p0() != 2, ErrorKind::EvenCharacteristic, "quadratic character needs odd characteristic");
  if (x.is_zero()) return 0;
  const FieldElement y = x.pow((x.field().order() - 1) / 2);
  if (y.is_one()) return 1;
  assert(y == -x.field().one());
  return -1;
}

SolutionSet linear_solve(const Matrix& map, const FieldElement& rhs) {
  const Field f = rhs.field();
  SolutionSet out;
  auto sol = solve(map, rhs.coords());
  if (!sol) return out;
  out.particular = FieldElement(f, sol->particular);
  for (auto& v : sol->kernel) out.kernel.emplace_back(f, std::move(v));
  return out;
}

std::vector<FieldElement> span_elements(Field field, std::span<const FieldElement> basis) {
  std::vector<FieldElement> out{field.zero()};
  for (const auto& b : basis) {
    const std::size_t n = out.size();
    for (unsigned k = 1; k < field.p0(); ++k) {
      const FieldElement kb = b.scaled(k);
      for (std::size_t i = 0; i < n; ++i) out.push_back(out[i] + kb);
    }
  }
  std::sort(out.begin(), out.end(), EnumerationLess{});
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace vdgv::gf
