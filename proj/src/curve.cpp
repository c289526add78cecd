#include "maxff/curve.hpp"

#include <sstream>

namespace maxff {

void validate_index(std::int64_t m, std::int64_t i) {
  if (m < 2) throw InvalidIndex("m must be at least 2, got " + std::to_string(m));
  const std::int64_t r = mod(i, m);
  const std::int64_t g0 = gcd(r, m);
  if (g0 != 1) {
    std::ostringstream os;
    os << "invalid index i=" << i << " for m=" << m << ": gcd(i,m)=gcd(" << r << "," << m
       << ")=" << g0;
    throw InvalidIndex(os.str());
  }
  const std::int64_t g2 = gcd(r + 2, m);
  if (g2 != 1) {
    std::ostringstream os;
    os << "invalid index i=" << i << " for m=" << m << ": gcd(i+2,m)=gcd(" << r + 2 << "," << m
       << ")=" << g2;
    throw InvalidIndex(os.str());
  }
}

bool is_valid_index(std::int64_t m, std::int64_t i) {
  if (m < 2) return false;
  const std::int64_t r = mod(i, m);
  return gcd(r, m) == 1 && gcd(r + 2, m) == 1;
}

PrimePower split_odd_prime_power(std::int64_t q) {
  const auto pp = as_prime_power(q);
  if (!pp || pp->p == 2) throw std::invalid_argument("q=" + std::to_string(q) + " is not an odd prime power");
  return *pp;
}

CurveParams CurveParams::make(std::int64_t p, int h, std::int64_t i_raw) {
  if (p < 3 || !is_prime(p)) throw std::invalid_argument("p=" + std::to_string(p) + " is not an odd prime");
  if (h < 1) throw std::invalid_argument("h must be positive");
  CurveParams c;
  c.p = p;
  c.h = h;
  c.q = checked_pow(p, static_cast<unsigned>(h));
  c.m = (c.q + 1) / 2;
  c.i_raw = i_raw;
  c.i = mod(i_raw, c.m);
  validate_index(c.m, i_raw);
  c.genus = c.m - 1;
  return c;
}

CurveParams CurveParams::from_q(std::int64_t q, std::int64_t i_raw) {
  const auto pp = split_odd_prime_power(q);
  return make(pp.p, pp.h, i_raw);
}

std::string_view place_name(PlaceTag t) {
  switch (t) {
    case PlaceTag::P0: return "P0";
    case PlaceTag::PInf: return "Pinf";
    case PlaceTag::PAlphaPlus: return "Palpha";
    case PlaceTag::PAlphaMinus: return "P-alpha";
    case PlaceTag::Affine: return "affine";
  }
  return "?";
}

void Divisor::add(const Place& p, std::int64_t c) {
  if (c == 0) return;
  auto it = terms_.find(p);
  if (it == terms_.end()) {
    terms_.emplace(p, c);
    return;
  }
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

std::int64_t Divisor::coefficient(const Place& p) const {
  auto it = terms_.find(p);
  return it == terms_.end() ? 0 : it->second;
}

std::int64_t Divisor::degree() const {
  std::int64_t d = 0;
  for (const auto& [p, c] : terms_) d += c;
  return d;
}

bool Divisor::effective() const {
  for (const auto& [p, c] : terms_)
    if (c < 0) return false;
  return true;
}

Divisor operator+(Divisor a, const Divisor& b) {
  for (const auto& [p, c] : b.terms_) a.add(p, c);
  return a;
}

Divisor operator*(std::int64_t k, Divisor d) {
  Divisor out;
  for (const auto& [p, c] : d.terms_) out.add(p, k * c);
  return out;
}

Symbol parse_symbol(std::string_view s) {
  if (s == "x") return Symbol::X;
  if (s == "y") return Symbol::Y;
  if (s == "dx") return Symbol::DX;
  throw std::invalid_argument("unknown symbol '" + std::string(s) + "'");
}

Divisor divisor_of(std::int64_t m, std::int64_t i, Symbol f) {
  validate_index(m, i);
  const auto P0 = Place::distinguished(PlaceTag::P0);
  const auto Pinf = Place::distinguished(PlaceTag::PInf);
  const auto Pa = Place::distinguished(PlaceTag::PAlphaPlus);
  const auto Pma = Place::distinguished(PlaceTag::PAlphaMinus);
  Divisor d;
  switch (f) {
    case Symbol::X:
      d.add(P0, m);
      d.add(Pinf, -m);
      break;
    case Symbol::Y:
      d.add(P0, i);
      d.add(Pa, 1);
      d.add(Pma, 1);
      d.add(Pinf, -(i + 2));
      break;
    case Symbol::DX:
      d.add(Pinf, -(m + 1));
      d.add(P0, m - 1);
      d.add(Pa, m - 1);
      d.add(Pma, m - 1);
      break;
  }
  return d;
}

std::int64_t monomial_valuation(std::int64_t m, std::int64_t i, PlaceTag place, std::int64_t k,
                                std::int64_t l) {
  switch (place) {
    case PlaceTag::P0: return checked_add(checked_mul(k, m), checked_mul(l, i));
    case PlaceTag::PInf: return -checked_add(checked_mul(k, m), checked_mul(l, i + 2));
    case PlaceTag::PAlphaPlus:
    case PlaceTag::PAlphaMinus: return l;
    case PlaceTag::Affine: break;
  }
  throw std::invalid_argument("monomial_valuation: place must be distinguished");
}

Divisor monomial_divisor(std::int64_t m, std::int64_t i, std::int64_t k, std::int64_t l) {
  Divisor d;
  for (auto t : {PlaceTag::P0, PlaceTag::PInf, PlaceTag::PAlphaPlus, PlaceTag::PAlphaMinus})
    d.add(Place::distinguished(t), monomial_valuation(m, i, t, k, l));
  return d;
}

std::vector<std::pair<std::int64_t, std::int64_t>> holomorphic_basis(std::int64_t m, std::int64_t i) {
  validate_index(m, i);
  std::vector<std::pair<std::int64_t, std::int64_t>> out;
  // The two strict inequalities force 0 < l < m.
  for (std::int64_t l = 1; l < m; ++l) {
    for (std::int64_t k = floor_div(i * (m - l), m) + 1; k * m < (m - l) * (i + 2); ++k)
      if (k * m + l * i > m * i) out.emplace_back(k, l);
  }
  return out;
}

bool KummerModel::contains(FieldElem x, FieldElem y) const {
  if (x.is_zero() && e < 0) return false;
  const FieldElem rhs = x.pow(e) * (x * x + x.ctx().one());
  return y.pow(m) == rhs;
}

void visit_affine_points(const KummerModel& model, const FieldCtx& ctx,
                         const std::function<bool(FieldElem, FieldElem)>& fn) {
  const FieldElem a = ctx.alpha();
  for (std::uint32_t c = 1; c < ctx.order(); ++c) {
    const FieldElem x = ctx.elem(c);
    if (x == a || x == -a) continue;
    const FieldElem rhs = x.pow(model.e) * (x * x + ctx.one());
    for (const FieldElem y : ctx.nth_roots(rhs, model.m))
      if (!fn(x, y)) return;
  }
}

std::vector<Place> affine_points(const KummerModel& model, const FieldCtx& ctx, std::size_t limit) {
  std::vector<Place> out;
  if (limit == 0) return out;
  visit_affine_points(model, ctx, [&](FieldElem x, FieldElem y) {
    out.push_back(Place{PlaceTag::Affine, x, y});
    return out.size() < limit;
  });
  return out;
}

std::int64_t rational_place_count(const CurveParams& params, const FieldCtx& ctx) {
  if (ctx.q() != params.q)
    throw std::invalid_argument("field F_{" + std::to_string(ctx.q()) + "^2} does not match q=" +
                                std::to_string(params.q));
  const FieldElem a = ctx.alpha();
  std::int64_t n = 4;
  for (std::uint32_t c = 1; c < ctx.order(); ++c) {
    const FieldElem x = ctx.elem(c);
    if (x == a || x == -a) continue;
    const FieldElem rhs = x.pow(params.i) * (x * x + ctx.one());
    if (ctx.is_nth_power(rhs, params.m)) n += params.m;
  }
  return n;
}

std::int64_t hasse_weil_bound(std::int64_t q, std::int64_t genus) {
  return checked_add(checked_add(checked_mul(q, q), 1), checked_mul(checked_mul(2, genus), q));
}

}  // namespace maxff
