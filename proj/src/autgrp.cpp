#include "maxff/autgrp.hpp"

#include <numeric>
#include <sstream>

#include "maxff/arith.hpp"
#include "maxff/classify.hpp"

namespace maxff {

struct Expr::Node {
  enum class Op { Const, X, Y, Add, Sub, Mul, Div, Pow };
  Op op;
  FieldElem c;
  std::int64_t e = 0;
  std::shared_ptr<const Node> a, b;
};

namespace {

using NodeP = std::shared_ptr<const Expr::Node>;

NodeP make_node(Expr::Node::Op op, NodeP a = nullptr, NodeP b = nullptr, std::int64_t e = 0) {
  auto n = std::make_shared<Expr::Node>();
  n->op = op;
  n->a = std::move(a);
  n->b = std::move(b);
  n->e = e;
  return n;
}

std::optional<FieldElem> eval_node(const Expr::Node& n, FieldElem x, FieldElem y) {
  using Op = Expr::Node::Op;
  switch (n.op) {
    case Op::Const: return n.c;
    case Op::X: return x;
    case Op::Y: return y;
    case Op::Pow: {
      const auto v = eval_node(*n.a, x, y);
      if (!v || (v->is_zero() && n.e < 0)) return std::nullopt;
      return v->pow(n.e);
    }
    default: break;
  }
  const auto l = eval_node(*n.a, x, y);
  if (!l) return std::nullopt;
  const auto r = eval_node(*n.b, x, y);
  if (!r) return std::nullopt;
  switch (n.op) {
    case Op::Add: return *l + *r;
    case Op::Sub: return *l - *r;
    case Op::Mul: return *l * *r;
    case Op::Div:
      if (r->is_zero()) return std::nullopt;
      return *l / *r;
    default: return std::nullopt;
  }
}

void print_node(const Expr::Node& n, std::ostream& os) {
  using Op = Expr::Node::Op;
  switch (n.op) {
    case Op::Const: os << n.c.ctx().to_string(n.c); return;
    case Op::X: os << 'x'; return;
    case Op::Y: os << 'y'; return;
    case Op::Pow:
      os << '(';
      print_node(*n.a, os);
      os << ")^" << n.e;
      return;
    default: break;
  }
  const char sym = n.op == Op::Add ? '+' : n.op == Op::Sub ? '-' : n.op == Op::Mul ? '*' : '/';
  os << '(';
  print_node(*n.a, os);
  os << ' ' << sym << ' ';
  print_node(*n.b, os);
  os << ')';
}

std::string point_string(FieldElem x, FieldElem y) {
  const auto& ctx = x.ctx();
  return "(" + ctx.to_string(x) + ", " + ctx.to_string(y) + ")";
}

std::int64_t element_order(const FieldCtx& ctx, FieldElem a) {
  const std::int64_t N = ctx.order() - 1;
  return N / gcd(ctx.log(a), N);
}

}  // namespace

Expr Expr::constant(FieldElem c) {
  auto n = std::make_shared<Node>();
  n->op = Node::Op::Const;
  n->c = c;
  return Expr(std::move(n));
}
Expr Expr::x() { return Expr(make_node(Node::Op::X)); }
Expr Expr::y() { return Expr(make_node(Node::Op::Y)); }

std::optional<FieldElem> Expr::eval(FieldElem x, FieldElem y) const { return eval_node(*node_, x, y); }

std::string Expr::to_string() const {
  std::ostringstream os;
  print_node(*node_, os);
  return os.str();
}

Expr operator+(const Expr& a, const Expr& b) { return Expr(make_node(Expr::Node::Op::Add, a.node_, b.node_)); }
Expr operator-(const Expr& a, const Expr& b) { return Expr(make_node(Expr::Node::Op::Sub, a.node_, b.node_)); }
Expr operator*(const Expr& a, const Expr& b) { return Expr(make_node(Expr::Node::Op::Mul, a.node_, b.node_)); }
Expr operator/(const Expr& a, const Expr& b) { return Expr(make_node(Expr::Node::Op::Div, a.node_, b.node_)); }
Expr pow(const Expr& a, std::int64_t e) { return Expr(make_node(Expr::Node::Op::Pow, a.node_, nullptr, e)); }

bool TargetCurve::contains(FieldElem x, FieldElem y) const {
  if (kind == Kind::Roquette) return y * y == x.pow(q) + x;
  return KummerModel{m, e}.contains(x, y);
}

std::string TargetCurve::to_string() const {
  std::ostringstream os;
  if (kind == Kind::Roquette)
    os << "y^2 = x^" << q << " + x";
  else
    os << "y^" << m << " = x^" << e << "(x^2 + 1)";
  return os.str();
}

std::optional<std::pair<FieldElem, FieldElem>> RationalMap::operator()(FieldElem x, FieldElem y) const {
  const auto u = fx.eval(x, y);
  if (!u) return std::nullopt;
  const auto v = fy.eval(x, y);
  if (!v) return std::nullopt;
  return std::make_pair(*u, *v);
}

bool VerificationReport::ok() const {
  if (!failures.empty() || points_checked == 0) return false;
  for (const auto& c : order_checks)
    if (!c.passed) return false;
  return true;
}

void VerificationReport::merge(const VerificationReport& other) {
  points_checked += other.points_checked;
  points_skipped += other.points_skipped;
  failures.insert(failures.end(), other.failures.begin(), other.failures.end());
  order_checks.insert(order_checks.end(), other.order_checks.begin(), other.order_checks.end());
}

RationalMap phi_reduce(std::int64_t m, std::int64_t i_raw, const FieldCtx& ctx) {
  validate_index(m, i_raw);
  (void)ctx;
  const std::int64_t a = floor_div(i_raw, m), r = mod(i_raw, m);
  return {"phi_{" + std::to_string(i_raw) + "," + std::to_string(r) + "}", KummerModel{m, i_raw},
          TargetCurve::kummer(m, r), Expr::x(), Expr::y() / pow(Expr::x(), a)};
}

RationalMap phi_reduce_inverse(std::int64_t m, std::int64_t i_raw, const FieldCtx& ctx) {
  validate_index(m, i_raw);
  (void)ctx;
  const std::int64_t a = floor_div(i_raw, m), r = mod(i_raw, m);
  return {"phi_{" + std::to_string(i_raw) + "," + std::to_string(r) + "}^-1", KummerModel{m, r},
          TargetCurve::kummer(m, i_raw), Expr::x(), Expr::y() * pow(Expr::x(), a)};
}

RationalMap phi_pair(std::int64_t m, std::int64_t i, const FieldCtx& ctx) {
  validate_index(m, i);
  // Kept unreduced: for i = m-1 the source exponent is -1.
  const std::int64_t src = m - 2 - mod(i, m);
  return {"phi_{" + std::to_string(src) + "," + std::to_string(mod(i, m)) + "}", KummerModel{m, src},
          TargetCurve::kummer(m, mod(i, m)), Expr::constant(ctx.one()) / Expr::x(), Expr::y() / Expr::x()};
}

RationalMap gi_element(std::int64_t m, std::int64_t i, FieldElem a, FieldElem b) {
  const auto& ctx = a.ctx();
  return {"(x,y)->(" + ctx.to_string(a) + "x, " + ctx.to_string(b) + "y)", KummerModel{m, i},
          TargetCurve::kummer(m, i), Expr::constant(a) * Expr::x(), Expr::constant(b) * Expr::y()};
}

RationalMap gamma_map(std::int64_t m, const FieldCtx& ctx) {
  validate_index(m, 1);
  return {"gamma", KummerModel{m, 1}, TargetCurve::kummer(m, 1), Expr::x() + Expr::constant(ctx.alpha()),
          Expr::y()};
}

RationalMap sigma4_map(std::int64_t m, const FieldCtx& ctx) {
  if (m % 4 != 0) throw std::invalid_argument("sigma_4 needs 4 | m");
  const std::int64_t i = (m - 2) / 2;
  validate_index(m, i);
  const Expr X = Expr::x(), Y = Expr::y();
  const Expr a = Expr::constant(ctx.alpha());
  const Expr fx = a * (X - a) / (X + a);
  const Expr fy = Expr::constant(ctx.from_int(4) * ctx.beta()) * pow(Y, (m - 2) / 2) /
                  (pow(X, (m - 4) / 4) * (X + a));
  return {"sigma_4", KummerModel{m, i}, TargetCurve::kummer(m, i), fx, fy};
}

RationalMap roquette_map(std::int64_t m, const FieldCtx& ctx) {
  validate_index(m, m - 1);
  const std::int64_t q = 2 * m - 1;
  if (ctx.q() != q) throw std::invalid_argument("roquette_map: field does not match q = 2m - 1");
  const Expr X = Expr::x(), Y = Expr::y();
  const Expr two = Expr::constant(ctx.from_int(2));
  const Expr fx = (Y + two * X) / (two * (Y - two * X));
  const Expr fy = (pow(X, m + 1) - pow(X, m - 1)) / pow(Y - two * X, m);
  return {"roquette", KummerModel{m, m - 1}, TargetCurve::roquette(q), fx, fy};
}

VerificationReport verify_map(const RationalMap& map, const FieldCtx& ctx, std::int64_t samples) {
  if (samples < 1) throw std::invalid_argument("samples must be positive");
  VerificationReport rep;
  rep.map = map.name;
  visit_affine_points(map.source, ctx, [&](FieldElem x, FieldElem y) {
    const auto img = map(x, y);
    if (!img) {
      ++rep.points_skipped;
      return true;
    }
    ++rep.points_checked;
    if (!map.target.contains(img->first, img->second))
      rep.failures.push_back(map.name + ": " + point_string(x, y) + " -> " +
                             point_string(img->first, img->second) + " is not on " + map.target.to_string());
    return rep.points_checked < samples;
  });
  if (rep.points_checked == 0) throw VerificationError(map.name + ": no evaluable sample points");
  return rep;
}

VerificationReport verify_inverse_pair(const RationalMap& map, const RationalMap& inverse, const FieldCtx& ctx,
                                       std::int64_t samples) {
  VerificationReport rep = verify_map(map, ctx, samples);
  rep.merge(verify_map(inverse, ctx, samples));
  OrderCheck c{map.name + " then inverse is the identity", true, {}};
  std::int64_t seen = 0;
  visit_affine_points(map.source, ctx, [&](FieldElem x, FieldElem y) {
    const auto img = map(x, y);
    if (!img) return true;
    const auto back = inverse(img->first, img->second);
    ++seen;
    if (!back || !(back->first == x) || !(back->second == y)) {
      c.passed = false;
      c.detail = "fails at " + point_string(x, y);
      return false;
    }
    return seen < samples;
  });
  if (c.passed) c.detail = std::to_string(seen) + " points";
  rep.order_checks.push_back(c);
  return rep;
}

std::optional<std::int64_t> map_order(const RationalMap& map, const FieldCtx& ctx, std::int64_t samples,
                                      std::int64_t max_order) {
  std::int64_t order = 1, seen = 0;
  bool bad = false;
  visit_affine_points(map.source, ctx, [&](FieldElem x, FieldElem y) {
    std::pair<FieldElem, FieldElem> cur{x, y};
    std::int64_t k = 0;
    bool defined = true;
    do {
      const auto nxt = map(cur.first, cur.second);
      if (!nxt) {
        defined = false;
        break;
      }
      cur = *nxt;
      ++k;
    } while (!(cur.first == x && cur.second == y) && k < max_order);
    if (!defined) return true;
    if (!(cur.first == x && cur.second == y)) {
      bad = true;
      return false;
    }
    order = std::lcm(order, k);
    ++seen;
    return seen < samples;
  });
  if (bad || seen == 0 || order > max_order) return std::nullopt;
  return order;
}

std::vector<PlaceTag> sigma4_omega_orbit(const FieldCtx& ctx) {
  const FieldElem al = ctx.alpha();
  // Projective point (u : w); w = 0 is infinity.
  auto tag = [&](FieldElem u, FieldElem w) {
    if (w.is_zero()) return PlaceTag::PInf;
    const FieldElem v = u / w;
    if (v.is_zero()) return PlaceTag::P0;
    if (v == al) return PlaceTag::PAlphaPlus;
    if (v == -al) return PlaceTag::PAlphaMinus;
    return PlaceTag::Affine;
  };
  std::vector<PlaceTag> orbit{PlaceTag::P0};
  FieldElem u = ctx.zero(), w = ctx.one();
  for (int step = 0; step < 4; ++step) {
    const FieldElem nu = al * (u - al * w), nw = u + al * w;
    u = nu;
    w = nw;
    orbit.push_back(tag(u, w));
  }
  return orbit;
}

VerificationReport verify_sigma4(const CurveParams& params, const FieldCtx& ctx, std::int64_t samples) {
  if (params.m % 4 != 0 || 2 * params.i != params.m - 2)
    throw std::invalid_argument("verify_sigma4 needs 4 | m and i = (m-2)/2");
  const RationalMap s = sigma4_map(params.m, ctx);
  VerificationReport rep = verify_map(s, ctx, samples);

  const auto ord = map_order(s, ctx, samples, 8);
  rep.order_checks.push_back({"sigma_4 has order 4", ord && *ord == 4,
                              ord ? "order " + std::to_string(*ord) : "no finite order found"});

  bool square_moves = false;
  visit_affine_points(s.source, ctx, [&](FieldElem x, FieldElem y) {
    const auto a = s(x, y);
    if (!a) return true;
    const auto b = s(a->first, a->second);
    if (b && !(b->first == x && b->second == y)) square_moves = true;
    return !square_moves;
  });
  rep.order_checks.push_back({"sigma_4^2 is not the identity", square_moves, {}});

  const auto orbit = sigma4_omega_orbit(ctx);
  const std::vector<PlaceTag> want{PlaceTag::P0, PlaceTag::PAlphaMinus, PlaceTag::PInf, PlaceTag::PAlphaPlus,
                                   PlaceTag::P0};
  std::string cyc;
  for (auto t : orbit) cyc += (cyc.empty() ? "" : " -> ") + std::string(place_name(t));
  rep.order_checks.push_back({"4-cycle on Omega", orbit == want, cyc});
  return rep;
}

VerificationReport gi_action_check(const CurveParams& params, const FieldCtx& ctx, std::int64_t samples) {
  if (ctx.q() != params.q) throw std::invalid_argument("gi_action_check: field does not match q");
  const std::int64_t m = params.m, i = params.i;
  VerificationReport rep;
  rep.map = "G_" + std::to_string(i);
  std::int64_t count = 0, h_count = 0, max_order = 0;
  for (const FieldElem a : {ctx.one(), -ctx.one()}) {
    const FieldElem target = (i % 2 == 0) ? ctx.one() : a;
    for (const FieldElem b : ctx.nth_roots(target, m)) {
      ++count;
      if (a == ctx.one()) ++h_count;
      auto r = verify_map(gi_element(m, i, a, b), ctx, samples);
      r.map.clear();
      rep.merge(r);
      max_order = std::max(max_order, std::lcm(element_order(ctx, a), element_order(ctx, b)));
    }
  }
  const std::int64_t want = gi_order(params.q);
  rep.order_checks.push_back({"|G_i| = q+1", count == want, std::to_string(count) + " elements"});
  rep.order_checks.push_back(
      {"H_i has index 2", h_count * 2 == count, "|H_i| = " + std::to_string(h_count)});
  rep.order_checks.push_back(
      {"G_i is cyclic", max_order == want, "largest element order " + std::to_string(max_order)});
  return rep;
}

VerificationReport verify_gamma(const CurveParams& params, const FieldCtx& ctx, std::int64_t samples) {
  if (params.p != 3 || params.i != 1) throw std::invalid_argument("verify_gamma needs p = 3 and i = 1");
  const RationalMap g = gamma_map(params.m, ctx);
  VerificationReport rep = verify_map(g, ctx, samples);
  const auto ord = map_order(g, ctx, samples, 6);
  rep.order_checks.push_back(
      {"gamma has order 3", ord && *ord == 3, ord ? "order " + std::to_string(*ord) : "no finite order found"});
  return rep;
}

std::int64_t gi_order(std::int64_t q) {
  split_odd_prime_power(q);
  return q + 1;
}

std::string AutDescriptor::label() const {
  switch (kind) {
    case Kind::Cyclic: return "G_i cyclic of order q+1";
    case Kind::C3SemidirectGi: return "C3 semidirect G_i";
    case Kind::Order96: return "solvable(48) semidirect C2";
    case Kind::ContainsGiC4: return "contains G_i semidirect C4";
    case Kind::Roquette: return "Roquette: PGL(2,q) extended by C2";
    case Kind::Infinite: return "infinite";
  }
  return "?";
}

AutDescriptor aut_descriptor(std::int64_t i, std::int64_t q) {
  const auto pp = split_odd_prime_power(q);
  const std::int64_t m = (q + 1) / 2;
  const std::int64_t c = canonical_index(i, m);
  using K = AutDescriptor::Kind;
  if (c == 1 && q == 3) return {K::Infinite, std::nullopt, false, false};
  if (c == m - 1) return {K::Roquette, checked_mul(2 * q, checked_mul(q, q) - 1), false, false};
  if (c == 1 && q == 7) return {K::Order96, 96, false, false};
  if (c == 1 && pp.p == 3) return {K::C3SemidirectGi, 3 * (q + 1), false, false};
  if (m % 4 == 0 && 2 * c == m - 2) return {K::ContainsGiC4, 4 * (q + 1), true, true};
  return {K::Cyclic, q + 1, false, false};
}

}  // namespace maxff
