#include <doctest.h>

#include "maxff/classify.hpp"
#include "maxff/wsemi.hpp"

using namespace maxff;
using Ints = std::vector<std::int64_t>;
using P = PlaceTag;

namespace {

Ints range(std::int64_t a, std::int64_t b) {
  Ints v;
  for (auto n = a; n <= b; ++n) v.push_back(n);
  return v;
}

Ints cat(Ints a, const Ints& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

bool subset(const Ints& sub, const Ints& super) {
  return std::includes(super.begin(), super.end(), sub.begin(), sub.end());
}

}  // namespace

TEST_CASE("H(P0) examples") {
  CHECK(h_p0_generators(13, 6).gaps() == Ints{1, 2, 3, 4, 5, 6, 9, 10, 11, 12, 18, 19});
  CHECK(h_p0_generators(13, 12).gaps() == range(1, 12));
  CHECK(h_p0_generators(13, 1).gaps() == cat(range(1, 8), range(14, 17)));
  CHECK(h_p0_generators(13, 6).apery_wrt(13) == Ints{0, 14, 15, 16, 17, 31, 32, 7, 8, 22, 23, 24, 25});
}

TEST_CASE("H(Pinf) examples") {
  CHECK(h_pinf_generators(13, 6).gaps() == Ints{1, 2, 3, 4, 5, 6, 7, 9, 10, 12, 15, 18});
  const Ints g{3, 13};
  CHECK(h_pinf_generators(13, 1) == NumericalSemigroup::from_generators(g, 13));
  CHECK(h_pinf_generators(13, 10).gaps() == Ints{1, 2, 3, 4, 5, 6, 7, 8, 14, 15, 16, 17});
  CHECK(h_pinf_compact_generators(13, 1) == NumericalSemigroup::from_generators(g, 13));
  CHECK(h_pinf_compact_generators(13, 6) == h_pinf_generators(13, 6));
  CHECK(h_pinf_compact_generators(13, 12) == h_pinf_generators(13, 12));
}

TEST_CASE("closed-form gap sequences") {
  CHECK(gaps_closed_form(13, 6, P::PInf).gaps == Ints{1, 2, 3, 4, 5, 6, 7, 9, 10, 12, 15, 18});
  CHECK(gaps_closed_form(13, 8, P::P0).gaps == Ints{1, 2, 3, 4, 6, 7, 8, 9, 11, 14, 16, 21});
  CHECK(gaps_closed_form(13, 9, P::PInf).gaps == Ints{1, 2, 3, 4, 5, 6, 8, 10, 12, 15, 17, 19});
  CHECK_THROWS_AS(gaps_closed_form(13, 11, P::P0), InvalidIndex);
  CHECK_THROWS_AS(gaps_closed_form(13, 6, P::PAlphaPlus), std::invalid_argument);
  // Raw indices are reduced mod m.
  CHECK(gaps_closed_form(13, 19, P::P0) == gaps_closed_form(13, 6, P::P0));
}

TEST_CASE("interval subset at P(+-alpha)") {
  CHECK(subset(range(1, 7), gaps_interval_subset_palpha(13, 6)));
  CHECK(subset(Ints{8}, gaps_interval_subset_palpha(13, 2)));
  CHECK(subset(Ints{8}, gaps_interval_subset_palpha(13, 5)));
}

TEST_CASE("series oracle at P(+-alpha)") {
  const auto f25 = FieldCtx::make(5, 2);
  const auto g6 = gaps_series_oracle_palpha(13, 6, *f25, +1).gaps;
  CHECK(g6.size() == 12);
  CHECK(subset(gaps_interval_subset_palpha(13, 6), g6));
  CHECK(g6 == gaps_series_oracle_palpha(13, 6, *f25, -1).gaps);
  CHECK(gaps_series_oracle_palpha(13, 1, *f25, +1).gaps == cat(range(1, 8), range(14, 17)));
  // q = 23 for m = 12.
  const auto f23 = FieldCtx::make(23, 1);
  const Ints g{7, 9, 11, 12};
  CHECK(gaps_series_oracle_palpha(12, 5, *f23, +1).gaps == NumericalSemigroup::from_generators(g, 12).gaps());
}

TEST_CASE("series oracle is independent of the field") {
  const auto f25 = FieldCtx::make(5, 2);
  const auto f3 = FieldCtx::make(3, 1);
  const auto f7 = FieldCtx::make(7, 1);
  for (auto i : valid_indices(13)) {
    const auto ref = gaps_series_oracle_palpha(13, i, *f25, +1).gaps;
    CHECK(gaps_series_oracle_palpha(13, i, *f3, +1).gaps == ref);
    CHECK(gaps_series_oracle_palpha(13, i, *f7, -1).gaps == ref);
  }
  CHECK_THROWS(gaps_series_oracle_palpha(13, 6, *FieldCtx::make(13, 1), +1));
}

TEST_CASE("local expansion of x satisfies the curve equation") {
  const auto ctx = FieldCtx::make(5, 2);
  const std::int64_t m = 13, i = 6;
  const std::size_t n = 60;
  for (int sign : {+1, -1}) {
    const auto xs = local_expansion_x(m, i, *ctx, sign, n);
    REQUIRE(xs.size() == n);
    CHECK(xs[0] == (sign > 0 ? ctx->alpha() : -ctx->alpha()));
    // x^i (x^2+1) as a series must equal t^m.
    auto mul = [&](const std::vector<FieldElem>& a, const std::vector<FieldElem>& b) {
      std::vector<FieldElem> c(n, ctx->zero());
      for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = 0; u + v < n; ++v) c[u + v] += a[u] * b[v];
      return c;
    };
    std::vector<FieldElem> f(n, ctx->zero());
    f[0] = ctx->one();
    for (std::int64_t k = 0; k < i; ++k) f = mul(f, xs);
    auto sq = mul(xs, xs);
    sq[0] += ctx->one();
    f = mul(f, sq);
    for (std::size_t k = 0; k < n; ++k) CHECK(f[k] == (k == static_cast<std::size_t>(m) ? ctx->one() : ctx->zero()));
  }
}

TEST_CASE("monomial oracle") {
  auto members = [](const NumericalSemigroup& s, std::int64_t bound) {
    Ints v;
    for (std::int64_t n = 0; n <= bound; ++n)
      if (s.contains(n)) v.push_back(n);
    return v;
  };
  CHECK(monomial_semigroup_oracle(13, 6, P::P0, 40) == members(h_p0_generators(13, 6), 40));
  const Ints g{3, 13};
  CHECK(monomial_semigroup_oracle(13, 1, P::PInf, 40) == members(NumericalSemigroup::from_generators(g, 13), 40));
  CHECK(monomial_semigroup_oracle(4, 1, P::P0, 20) == members(h_p0_generators(4, 1), 20));
  CHECK_THROWS(monomial_semigroup_oracle(13, 6, P::P0, 25));
}

TEST_CASE("special semigroups") {
  const auto s12 = special_semigroups(12, 5);
  REQUIRE(s12.palpha);
  const Ints g{7, 9, 11, 12};
  CHECK(*s12.palpha == NumericalSemigroup::from_generators(g, 12));
  CHECK(s12.palpha->genus() == 11);
  CHECK(s12.p0 == s12.palpha);
  CHECK(s12.pinf == s12.palpha);
  const auto s13 = special_semigroups(13, 1);
  REQUIRE(s13.pinf);
  const Ints g3{3, 13};
  CHECK(*s13.pinf == NumericalSemigroup::from_generators(g3, 13));
  const auto none = special_semigroups(13, 6);
  CHECK_FALSE(none.p0);
  CHECK_FALSE(none.pinf);
  CHECK_FALSE(none.palpha);
  // For m >= 20 the odd progression has more than five generators.
  const auto s20 = special_semigroups(20, 9);
  REQUIRE(s20.pinf);
  CHECK(s20.pinf->minimal_generators() == Ints{11, 13, 15, 17, 19, 20});
  CHECK(*s20.pinf == h_pinf_generators(20, 9));
  CHECK(*s20.pinf == h_p0_generators(20, 9));
}

TEST_CASE("property: closed forms agree with generator semigroups") {
  for (std::int64_t m = 2; m <= 120; ++m) {
    for (auto i : valid_indices(m)) {
      CAPTURE(m);
      CAPTURE(i);
      const auto h0 = h_p0_generators(m, i), hi = h_pinf_generators(m, i);
      CHECK(gaps_closed_form(m, i, P::P0).gaps == h0.gaps());
      CHECK(gaps_closed_form(m, i, P::PInf).gaps == hi.gaps());
      CHECK(h0.genus() == m - 1);
      CHECK(hi.genus() == m - 1);
      CHECK(hi.contains(i + 2));
      for (std::int64_t d = 1; d < m; ++d)
        if (m % d == 0) CHECK_FALSE(hi.contains(d));
      // The pairing i <-> m-2-i swaps P0 and Pinf.
      if (i != m - 1) CHECK(h_p0_generators(m, paired_index(i, m)) == hi);
    }
  }
}

TEST_CASE("property: distinguishing at P(+-alpha) for m = 13") {
  const auto ctx = FieldCtx::make(5, 2);
  for (auto i : valid_indices(13)) {
    if (!(1 < i && 2 * i < 11)) continue;
    CAPTURE(i);
    const auto pa = gaps_series_oracle_palpha(13, i, *ctx, +1).gaps;
    CHECK(pa != gaps_closed_form(13, i, P::P0).gaps);
    CHECK(pa != gaps_closed_form(13, i, P::PInf).gaps);
    CHECK(std::binary_search(pa.begin(), pa.end(), i + 2));
  }
  CHECK(gaps_series_oracle_palpha(13, 1, *ctx, +1).gaps == gaps_closed_form(13, 1, P::P0).gaps);
}
