#include "maxff/ffield.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

#include "maxff/arith.hpp"

namespace maxff {

namespace {

using Poly = std::vector<std::int64_t>;  // over F_p, constant term first

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::int64_t inv_mod_p(std::int64_t a, std::int64_t p) {
  std::int64_t r = 1, b = mod(a, p), e = p - 2;
  while (e > 0) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

Poly poly_mod(Poly a, const Poly& f, std::int64_t p) {
  trim(a);
  const std::size_t n = f.size() - 1;
  const std::int64_t lead_inv = inv_mod_p(f.back(), p);
  while (a.size() > n) {
    const std::int64_t c = a.back() * lead_inv % p;
    const std::size_t shift = a.size() - 1 - n;
    for (std::size_t k = 0; k <= n; ++k) a[shift + k] = mod(a[shift + k] - c * f[k], p);
    trim(a);
  }
  return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, std::int64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  return poly_mod(std::move(r), f, p);
}

Poly poly_powmod(Poly base, std::int64_t e, const Poly& f, std::int64_t p) {
  Poly r{1};
  base = poly_mod(std::move(base), f, p);
  while (e > 0) {
    if (e & 1) r = poly_mulmod(r, base, f, p);
    base = poly_mulmod(base, base, f, p);
    e >>= 1;
  }
  return r;
}

Poly poly_gcd(Poly a, Poly b, std::int64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// Ben-Or: f of degree n is irreducible iff gcd(x^{p^k} - x, f) = 1 for
// 1 <= k <= n/2.
bool is_irreducible(const Poly& f, std::int64_t p) {
  const std::size_t n = f.size() - 1;
  Poly xpk{0, 1};
  for (std::size_t k = 1; k <= n / 2; ++k) {
    xpk = poly_powmod(xpk, p, f, p);
    Poly d = xpk;
    d.resize(std::max<std::size_t>(d.size(), 2), 0);
    d[1] = mod(d[1] - 1, p);
    trim(d);
    if (d.empty()) return false;
    if (poly_gcd(f, d, p).size() != 1) return false;
  }
  return true;
}

Poly decode(std::uint32_t code, std::int64_t p, int n) {
  Poly a(static_cast<std::size_t>(n), 0);
  for (int k = 0; k < n; ++k) {
    a[k] = code % p;
    code = static_cast<std::uint32_t>(code / p);
  }
  trim(a);
  return a;
}

std::uint32_t encode(const Poly& a, std::int64_t p) {
  std::uint64_t code = 0;
  for (std::size_t k = a.size(); k-- > 0;) code = code * p + static_cast<std::uint64_t>(a[k]);
  return static_cast<std::uint32_t>(code);
}

}  // namespace

std::shared_ptr<const FieldCtx> FieldCtx::make(std::int64_t p, int h) {
  if (p < 3 || !is_prime(p)) throw FieldError("characteristic must be an odd prime, got " + std::to_string(p));
  if (h < 1) throw FieldError("extension degree h must be positive");
  std::int64_t order = 1;
  for (int k = 0; k < 2 * h; ++k) {
    order *= p;
    if (order > kMaxOrder)
      throw FieldError("field order " + std::to_string(p) + "^" + std::to_string(2 * h) +
                       " exceeds the supported bound");
  }

  std::shared_ptr<FieldCtx> ctx(new FieldCtx());
  ctx->p_ = p;
  ctx->h_ = h;
  ctx->q_ = checked_pow(p, static_cast<unsigned>(h));
  ctx->order_ = order;
  const int n = 2 * h;

  // Monic degree-n candidates ordered by sum c_k p^k.
  for (std::int64_t code = 0; code < order; ++code) {
    Poly f = decode(static_cast<std::uint32_t>(code), p, n);
    f.resize(static_cast<std::size_t>(n) + 1, 0);
    f[n] = 1;
    if (f[0] == 0) continue;
    if (is_irreducible(f, p)) {
      ctx->modulus_ = std::move(f);
      break;
    }
  }
  if (ctx->modulus_.empty()) throw FieldError("no irreducible polynomial found");

  const std::int64_t N = order - 1;
  const auto primes = factorize(N);
  const Poly& f = ctx->modulus_;
  std::uint32_t gen_code = 0;
  for (std::uint32_t c = 2; c < order; ++c) {
    const Poly g = decode(c, p, n);
    bool primitive = true;
    for (const auto& [r, e] : primes) {
      (void)e;
      if (poly_powmod(g, N / r, f, p) == Poly{1}) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      gen_code = c;
      break;
    }
  }
  if (gen_code == 0) throw FieldError("no primitive element found");

  ctx->exp_.assign(static_cast<std::size_t>(2 * N), 0);
  ctx->log_.assign(static_cast<std::size_t>(order), 0);
  {
    const Poly g = decode(gen_code, p, n);
    Poly cur{1};
    for (std::int64_t k = 0; k < N; ++k) {
      const std::uint32_t c = encode(cur, p);
      if (k > 0 && c == 1) throw FieldError("generator order check failed");
      ctx->exp_[k] = c;
      ctx->exp_[k + N] = c;
      ctx->log_[c] = static_cast<std::uint32_t>(k);
      cur = poly_mulmod(cur, g, f, p);
    }
  }
  ctx->half_ = N / 2;
  ctx->zech_.assign(static_cast<std::size_t>(N), -1);
  for (std::int64_t k = 0; k < N; ++k) {
    const std::uint32_t s = ctx->add_reference(ctx->one(), FieldElem(ctx.get(), ctx->exp_[k])).code();
    ctx->zech_[k] = (s == 0) ? std::int64_t{-1} : std::int64_t{ctx->log_[s]};
  }

  ctx->generator_ = FieldElem(ctx.get(), gen_code);
  const auto a = ctx->sqrt(-ctx->one());
  if (!a) throw FieldError("-1 is not a square");
  ctx->alpha_ = *a;
  const auto b = ctx->sqrt(ctx->alpha_);
  if (!b) throw FieldError("alpha is not a square");
  ctx->beta_ = *b;
  return ctx;
}

FieldElem FieldCtx::elem(std::uint32_t code) const {
  if (code >= order_) throw FieldError("element code out of range");
  return {this, code};
}

FieldElem FieldCtx::from_int(std::int64_t n) const {
  return {this, static_cast<std::uint32_t>(mod(n, p_))};
}

FieldElem FieldCtx::from_coeffs(const std::vector<std::int64_t>& coeffs) const {
  if (coeffs.size() > static_cast<std::size_t>(degree())) throw FieldError("too many coefficients");
  Poly a;
  for (auto c : coeffs) a.push_back(mod(c, p_));
  return {this, encode(a, p_)};
}

std::vector<std::int64_t> FieldCtx::coeffs(FieldElem a) const {
  Poly c = decode(a.code(), p_, degree());
  c.resize(static_cast<std::size_t>(degree()), 0);
  return c;
}

std::int64_t FieldCtx::log(FieldElem a) const {
  if (a.is_zero()) throw FieldError("log of zero");
  return log_[a.code()];
}

FieldElem FieldCtx::exp(std::int64_t k) const {
  return {this, exp_[static_cast<std::size_t>(mod(k, order_ - 1))]};
}

std::uint32_t FieldCtx::add_code(std::uint32_t a, std::uint32_t b) const {
  if (a == 0) return b;
  if (b == 0) return a;
  const std::int64_t la = log_[a];
  std::int64_t d = static_cast<std::int64_t>(log_[b]) - la;
  if (d < 0) d += order_ - 1;
  const std::int64_t z = zech_[d];
  if (z < 0) return 0;
  return exp_[la + z];
}

std::uint32_t FieldCtx::neg_code(std::uint32_t a) const {
  if (a == 0) return 0;
  return exp_[log_[a] + half_];
}

std::uint32_t FieldCtx::mul_code(std::uint32_t a, std::uint32_t b) const {
  if (a == 0 || b == 0) return 0;
  return exp_[static_cast<std::size_t>(log_[a]) + log_[b]];
}

std::uint32_t FieldCtx::inv_code(std::uint32_t a) const {
  if (a == 0) throw FieldError("division by zero");
  const std::int64_t la = log_[a];
  return exp_[la == 0 ? 0 : order_ - 1 - la];
}

std::uint32_t FieldCtx::pow_code(std::uint32_t a, std::int64_t e) const {
  if (a == 0) {
    if (e < 0) throw FieldError("negative power of zero");
    return e == 0 ? 1 : 0;
  }
  const std::int64_t N = order_ - 1;
  const std::int64_t k = mod(mod(e, N) * static_cast<std::int64_t>(log_[a]), N);
  return exp_[k];
}

bool FieldCtx::is_nth_power(FieldElem c, std::int64_t n) const {
  if (c.is_zero()) throw FieldError("is_nth_power: c must be nonzero");
  if (n <= 0 || (order_ - 1) % n != 0) throw FieldError("is_nth_power: n must divide q^2-1");
  return c.pow((order_ - 1) / n) == one();
}

std::vector<FieldElem> FieldCtx::nth_roots(FieldElem c, std::int64_t n) const {
  if (n <= 0) throw FieldError("nth_roots: n must be positive");
  if (c.is_zero()) return {zero()};
  const std::int64_t N = order_ - 1;
  const std::int64_t e = log_[c.code()];
  const std::int64_t d = gcd(n, N);
  if (e % d != 0) return {};
  const std::int64_t Nd = N / d;
  const std::int64_t nd = mod(n / d, Nd);
  // Solve nd * f = e/d (mod Nd).
  std::int64_t inv = 1;
  if (Nd > 1) {
    std::int64_t r0 = Nd, r1 = nd, t0 = 0, t1 = 1;
    while (r1 != 0) {
      const std::int64_t qq = r0 / r1;
      std::tie(r0, r1) = std::make_pair(r1, r0 - qq * r1);
      std::tie(t0, t1) = std::make_pair(t1, t0 - qq * t1);
    }
    inv = mod(t0, Nd);
  }
  const std::int64_t f0 = Nd > 1 ? mod((e / d) % Nd * inv, Nd) : 0;
  std::vector<FieldElem> out;
  for (std::int64_t j = 0; j < d; ++j) out.push_back(exp(f0 + j * Nd));
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<FieldElem> FieldCtx::sqrt(FieldElem c) const {
  if (c.is_zero()) return zero();
  if (order_ <= 10000) {
    for (std::uint32_t s = 0; s < order_; ++s) {
      const FieldElem x(this, s);
      if (x * x == c) return x;
    }
    return std::nullopt;
  }
  if (!is_nth_power(c, 2)) return std::nullopt;
  // Tonelli-Shanks in the cyclic group of order q^2 - 1 = 2^S T.
  std::int64_t T = order_ - 1;
  int S = 0;
  while (T % 2 == 0) {
    T /= 2;
    ++S;
  }
  FieldElem z = one();
  for (std::uint32_t s = 2; s < order_; ++s) {
    z = FieldElem(this, s);
    if (!is_nth_power(z, 2)) break;
  }
  int M = S;
  FieldElem cc = z.pow(T);
  FieldElem t = c.pow(T);
  FieldElem r = c.pow((T + 1) / 2);
  while (!(t == one())) {
    int i = 0;
    FieldElem t2 = t;
    while (!(t2 == one())) {
      t2 = t2 * t2;
      ++i;
    }
    FieldElem b = cc;
    for (int k = 0; k < M - i - 1; ++k) b = b * b;
    M = i;
    cc = b * b;
    t = t * cc;
    r = r * b;
  }
  const FieldElem other = -r;
  return other < r ? other : r;
}

FieldElem FieldCtx::mul_reference(FieldElem a, FieldElem b) const {
  const Poly pa = decode(a.code(), p_, degree());
  const Poly pb = decode(b.code(), p_, degree());
  return {this, encode(poly_mulmod(pa, pb, modulus_, p_), p_)};
}

FieldElem FieldCtx::add_reference(FieldElem a, FieldElem b) const {
  std::uint64_t x = a.code(), y = b.code(), out = 0, scale = 1;
  for (int k = 0; k < degree(); ++k) {
    out += ((x % p_ + y % p_) % p_) * scale;
    x /= p_;
    y /= p_;
    scale *= p_;
  }
  return {this, static_cast<std::uint32_t>(out)};
}

std::string FieldCtx::to_string(FieldElem a) const {
  std::ostringstream os;
  const auto c = coeffs(a);
  os << '[';
  for (std::size_t k = 0; k < c.size(); ++k) os << (k ? "," : "") << c[k];
  os << ']';
  return os.str();
}

FieldElem FieldElem::operator-() const { return {ctx_, ctx_->neg_code(code_)}; }
FieldElem FieldElem::inverse() const { return {ctx_, ctx_->inv_code(code_)}; }
FieldElem FieldElem::pow(std::int64_t e) const { return {ctx_, ctx_->pow_code(code_, e)}; }

FieldElem operator+(FieldElem a, FieldElem b) { return {a.ctx_, a.ctx_->add_code(a.code_, b.code_)}; }
FieldElem operator-(FieldElem a, FieldElem b) {
  return {a.ctx_, a.ctx_->add_code(a.code_, a.ctx_->neg_code(b.code_))};
}
FieldElem operator*(FieldElem a, FieldElem b) { return {a.ctx_, a.ctx_->mul_code(a.code_, b.code_)}; }
FieldElem operator/(FieldElem a, FieldElem b) {
  return {a.ctx_, a.ctx_->mul_code(a.code_, a.ctx_->inv_code(b.code_))};
}

}  // namespace maxff
