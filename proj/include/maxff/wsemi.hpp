// Weierstrass semigroups and gap sequences of F_i at P0, Pinf and P(+-alpha).
#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "maxff/curve.hpp"
#include "maxff/ffield.hpp"
#include "maxff/numsg.hpp"

namespace maxff {

struct GapSequence {
  PlaceTag place = PlaceTag::P0;
  std::int64_t m = 0;
  std::int64_t i = 0;
  std::vector<std::int64_t> gaps;  // sorted

  friend bool operator==(const GapSequence& a, const GapSequence& b) { return a.gaps == b.gaps; }
};

/// H(P0) = < m, ceil(l(i+2)/m) m - l i : 1 <= l <= m-1 >.
NumericalSemigroup h_p0_generators(std::int64_t m, std::int64_t i);
/// H(Pinf) = < m, -floor(l i/m) m + l(i+2) : 1 <= l <= m-1 >.
NumericalSemigroup h_pinf_generators(std::int64_t m, std::int64_t i);
/// H(Pinf) = < m, i+2, m l - (i+2) floor((l-2) m / i) : 3 <= l <= i+1 >.
NumericalSemigroup h_pinf_compact_generators(std::int64_t m, std::int64_t i);

/// The non-m generators listed by h_p0_generators / h_pinf_generators, in l order.
std::vector<std::int64_t> p0_generator_list(std::int64_t m, std::int64_t i);
std::vector<std::int64_t> pinf_generator_list(std::int64_t m, std::int64_t i);

/// Gaps read off the holomorphic-differential lattice. `place` is P0 or PInf.
GapSequence gaps_closed_form(std::int64_t m, std::int64_t i, PlaceTag place);

/// The l in (0, m) admitting an integer k strictly between i(m-l)/m and
/// (i+2)(m-l)/m. A subset of the gaps at P(+-alpha).
std::vector<std::int64_t> gaps_interval_subset_palpha(std::int64_t m, std::int64_t i);

class PrecisionError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct SeriesOracleOptions {
  /// Number of coefficient columns in the differential matrix; 0 means 2m.
  std::int64_t columns = 0;
  int max_retries = 3;
};

/// Gaps at P(+alpha) (sign > 0) or P(-alpha) (sign < 0) computed from local
/// expansions in the uniformizer t = y: x is solved from
/// x = +-alpha + t^m / (x^i (x +- alpha)), each basis differential
/// x^{k-1} t^{l-m} (dx/dt) dt is expanded, and the pivot columns of the exact
/// echelon form give the valuations v, i.e. the gaps v+1.
///
/// Only needs a field of characteristic prime to m; params.q is not required
/// to match ctx. Throws PrecisionError if the pivot count is still short of
/// m-1 after the allowed retries.
GapSequence gaps_series_oracle_palpha(std::int64_t m, std::int64_t i, const FieldCtx& ctx, int sign,
                                      SeriesOracleOptions opts = {});

/// Truncated expansion of x at P(+-alpha) in t = y, precision n coefficients.
std::vector<FieldElem> local_expansion_x(std::int64_t m, std::int64_t i, const FieldCtx& ctx, int sign,
                                         std::size_t n);

/// Pole orders <= bound of monomials x^k y^l (0 <= l < m) whose only pole is at
/// `place` (P0 or PInf). Throws if bound < 2m.
std::vector<std::int64_t> monomial_semigroup_oracle(std::int64_t m, std::int64_t i, PlaceTag place,
                                                    std::int64_t bound);

/// Closed-form semigroups for the two special indices.
struct SpecialSemigroups {
  std::optional<NumericalSemigroup> p0, pinf, palpha;
};

/// i = 1: H(Pinf) = <3, m>, G(P0) = G(P+-alpha) = {1..floor(2m/3)} u {m+1..m+floor(m/3)}.
/// i = (m-2)/2, 4 | m, m >= 8: <m/2+1, m/2+3, ..., m-3, m-1, m> (all odd
/// numbers from m/2+1 to m-1, plus m) at all four places; for m <= 16 this is
/// <m/2+1, m/2+3, m-3, m-1, m>. Otherwise everything is empty. For m = 4 only
/// the i = 1 rule applies.
SpecialSemigroups special_semigroups(std::int64_t m, std::int64_t i);

}  // namespace maxff
