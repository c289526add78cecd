// Explicit isomorphisms and automorphisms of the F_i as rational maps, checked
// by evaluation at curve points, plus the automorphism-group lookup table.
#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "maxff/curve.hpp"
#include "maxff/ffield.hpp"

namespace maxff {

/// Rational expression in x and y with coefficients in a fixed F_{q^2}.
class Expr {
public:
  static Expr constant(FieldElem c);
  static Expr x();
  static Expr y();

  /// nullopt when a denominator (or a negative power of zero) vanishes.
  std::optional<FieldElem> eval(FieldElem x, FieldElem y) const;
  std::string to_string() const;

  friend Expr operator+(const Expr& a, const Expr& b);
  friend Expr operator-(const Expr& a, const Expr& b);
  friend Expr operator*(const Expr& a, const Expr& b);
  friend Expr operator/(const Expr& a, const Expr& b);
  /// Integer power; negative exponents divide.
  friend Expr pow(const Expr& a, std::int64_t e);

  struct Node;

private:
  explicit Expr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

/// The equation a map's image must satisfy.
struct TargetCurve {
  enum class Kind { Kummer, Roquette };
  Kind kind = Kind::Kummer;
  /// Kummer: y^m = x^e (x^2 + 1).
  std::int64_t m = 0;
  std::int64_t e = 0;
  /// Roquette: y^2 = x^q + x.
  std::int64_t q = 0;

  static TargetCurve kummer(std::int64_t m, std::int64_t e) { return {Kind::Kummer, m, e, 0}; }
  static TargetCurve roquette(std::int64_t q) { return {Kind::Roquette, 0, 0, q}; }
  bool contains(FieldElem x, FieldElem y) const;
  std::string to_string() const;
};

struct RationalMap {
  std::string name;
  KummerModel source;
  TargetCurve target;
  Expr fx, fy;

  /// Image of (x, y), nullopt where a component is undefined.
  std::optional<std::pair<FieldElem, FieldElem>> operator()(FieldElem x, FieldElem y) const;
};

struct OrderCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Outcome of evaluating one map (or a group of maps) at sample points.
struct VerificationReport {
  std::string map;
  std::int64_t points_checked = 0;
  /// Sample points where some component of the map was undefined.
  std::int64_t points_skipped = 0;
  std::vector<std::string> failures;
  std::vector<OrderCheck> order_checks;

  bool ok() const;
  void merge(const VerificationReport& other);
};

class VerificationError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// F_{i_raw} -> F_{i_raw mod m}: (x, y) -> (x, y / x^a) with i_raw = a m + r.
RationalMap phi_reduce(std::int64_t m, std::int64_t i_raw, const FieldCtx& ctx);
/// The inverse (x, y) -> (x, y x^a).
RationalMap phi_reduce_inverse(std::int64_t m, std::int64_t i_raw, const FieldCtx& ctx);
/// F_{m-2-i} -> F_i: (x, y) -> (1/x, y/x).
RationalMap phi_pair(std::int64_t m, std::int64_t i, const FieldCtx& ctx);
/// (x, y) -> (a x, b y) on F_i.
RationalMap gi_element(std::int64_t m, std::int64_t i, FieldElem a, FieldElem b);
/// (x, y) -> (x + alpha, y) on F_1; an automorphism in characteristic 3.
RationalMap gamma_map(std::int64_t m, const FieldCtx& ctx);
/// sigma_4 on F_{(m-2)/2}, 4 | m.
RationalMap sigma4_map(std::int64_t m, const FieldCtx& ctx);
/// F_{m-1} -> y^2 = x^q + x.
RationalMap roquette_map(std::int64_t m, const FieldCtx& ctx);

/// Evaluates `map` on the first `samples` points of its source where it is
/// defined and checks that each image lies on the target. Throws
/// VerificationError if no point is evaluable.
VerificationReport verify_map(const RationalMap& map, const FieldCtx& ctx, std::int64_t samples);

/// verify_map for both maps plus the check that `inverse` after `map` is the
/// identity on the sampled points.
VerificationReport verify_inverse_pair(const RationalMap& map, const RationalMap& inverse,
                                       const FieldCtx& ctx, std::int64_t samples);

/// Smallest k <= max_order with map^k = id on every sampled point where all
/// iterates are defined, or nullopt. The source must equal the target.
std::optional<std::int64_t> map_order(const RationalMap& map, const FieldCtx& ctx, std::int64_t samples,
                                      std::int64_t max_order);

/// Image of {0, alpha, -alpha, infinity} under x -> alpha (x - alpha)/(x + alpha),
/// as the cycle starting at P0 (place tags of the successive images).
std::vector<PlaceTag> sigma4_omega_orbit(const FieldCtx& ctx);

/// Checks order 4, sigma_4^2 != id, the 4-cycle P0 -> P-alpha -> Pinf -> Palpha
/// on the distinguished places, and that sampled images lie on the curve.
VerificationReport verify_sigma4(const CurveParams& params, const FieldCtx& ctx, std::int64_t samples);

/// Enumerates the q+1 pairs (a, b) of G_i, verifies each on sampled points,
/// and checks |H_i| = m (index 2) and that G_i is cyclic.
VerificationReport gi_action_check(const CurveParams& params, const FieldCtx& ctx, std::int64_t samples);

/// gamma is an automorphism of F_1 of order 3 (p = 3).
VerificationReport verify_gamma(const CurveParams& params, const FieldCtx& ctx, std::int64_t samples);

/// q + 1.
std::int64_t gi_order(std::int64_t q);

struct AutDescriptor {
  enum class Kind { Cyclic, C3SemidirectGi, Order96, ContainsGiC4, Roquette, Infinite };
  Kind kind = Kind::Cyclic;
  /// Absent for Infinite. For ContainsGiC4 this is the order of the exhibited
  /// subgroup, i.e. a lower bound.
  std::optional<std::int64_t> order;
  bool lower_bound = false;
  /// The value 4(q+1) is conjectured, not proven, for ContainsGiC4.
  bool conjectural = false;

  std::string label() const;
};

/// Automorphism group of F_i over the algebraic closure, by case split on the
/// canonical representative of i.
AutDescriptor aut_descriptor(std::int64_t i, std::int64_t q);

}  // namespace maxff
