// The family F_i : y^m = x^i (x^2 + 1) over F_{q^2}, m = (q+1)/2.
#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "maxff/arith.hpp"
#include "maxff/ffield.hpp"

namespace maxff {

/// An index i failing gcd(i,m) = 1 or gcd(i+2,m) = 1.
class InvalidIndex : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Throws InvalidIndex naming the failing gcd condition (checked on i mod m).
void validate_index(std::int64_t m, std::int64_t i);
bool is_valid_index(std::int64_t m, std::int64_t i);

struct CurveParams {
  std::int64_t p = 0;
  int h = 0;
  std::int64_t q = 0;
  std::int64_t m = 0;
  /// Normalized to [0, m).
  std::int64_t i = 0;
  /// The index as supplied, before reduction mod m.
  std::int64_t i_raw = 0;
  std::int64_t genus = 0;

  static CurveParams make(std::int64_t p, int h, std::int64_t i_raw);
  /// q must be an odd prime power.
  static CurveParams from_q(std::int64_t q, std::int64_t i_raw);
};

/// Odd prime power decomposition of q, or throws std::invalid_argument.
PrimePower split_odd_prime_power(std::int64_t q);

enum class PlaceTag { P0, PInf, PAlphaPlus, PAlphaMinus, Affine };

std::string_view place_name(PlaceTag t);

struct Place {
  PlaceTag tag = PlaceTag::P0;
  std::optional<FieldElem> a, b;

  static Place distinguished(PlaceTag t) { return Place{t, std::nullopt, std::nullopt}; }
  friend bool operator<(const Place& l, const Place& r) {
    auto key = [](const Place& p) {
      return std::make_tuple(static_cast<int>(p.tag), p.a ? p.a->code() : 0u, p.b ? p.b->code() : 0u);
    };
    return key(l) < key(r);
  }
  friend bool operator==(const Place& l, const Place& r) { return !(l < r) && !(r < l); }
};

/// Finite formal sum of places with integer coefficients; zero coefficients
/// are not stored.
class Divisor {
public:
  void add(const Place& p, std::int64_t c);
  std::int64_t coefficient(const Place& p) const;
  std::int64_t coefficient(PlaceTag t) const { return coefficient(Place::distinguished(t)); }
  std::int64_t degree() const;
  bool effective() const;
  const std::map<Place, std::int64_t>& terms() const { return terms_; }

  friend Divisor operator+(Divisor a, const Divisor& b);
  friend Divisor operator*(std::int64_t k, Divisor d);
  friend bool operator==(const Divisor& a, const Divisor& b) { return a.terms_ == b.terms_; }

private:
  std::map<Place, std::int64_t> terms_;
};

enum class Symbol { X, Y, DX };
/// "x", "y" or "dx"; throws std::invalid_argument otherwise.
Symbol parse_symbol(std::string_view s);

/// (x) = m(P0 - PInf), (y) = i P0 + Pa + P-a - (i+2) PInf,
/// (dx) = -(m+1) PInf + (m-1)(P0 + Pa + P-a).
Divisor divisor_of(std::int64_t m, std::int64_t i, Symbol f);

/// Valuation of x^k y^l at a distinguished place.
std::int64_t monomial_valuation(std::int64_t m, std::int64_t i, PlaceTag place, std::int64_t k,
                                std::int64_t l);

/// Divisor of x^k y^l (supported on the four distinguished places).
Divisor monomial_divisor(std::int64_t m, std::int64_t i, std::int64_t k, std::int64_t l);

/// Pairs (k, l) with l > 0, km + li > mi, km + l(i+2) < m(i+2): exponents of
/// the holomorphic differentials x^{k-1} y^{l-m} dx. Ordered by l, then k.
std::vector<std::pair<std::int64_t, std::int64_t>> holomorphic_basis(std::int64_t m, std::int64_t i);

/// A plane model y^m = x^e (x^2 + 1) with an arbitrary integer exponent e.
struct KummerModel {
  std::int64_t m;
  std::int64_t e;
  /// Affine point test; x = 0 with e < 0 is never on the model.
  bool contains(FieldElem x, FieldElem y) const;
};

/// Calls `fn(x, y)` for affine points with x outside {0, alpha, -alpha}, x in
/// field order and y over the roots in field order, until `fn` returns false.
void visit_affine_points(const KummerModel& model, const FieldCtx& ctx,
                         const std::function<bool(FieldElem, FieldElem)>& fn);

/// First `limit` affine points with x outside {0, alpha, -alpha}, iterating x
/// in field order and y over all roots in field order.
std::vector<Place> affine_points(const KummerModel& model, const FieldCtx& ctx, std::size_t limit);

/// 4 + sum over x not in {0, +-alpha} of (m if x^i(x^2+1) is an m-th power).
/// Throws if ctx.q() != params.q.
std::int64_t rational_place_count(const CurveParams& params, const FieldCtx& ctx);

/// q^2 + 1 + 2 g q.
std::int64_t hasse_weil_bound(std::int64_t q, std::int64_t genus);

}  // namespace maxff
