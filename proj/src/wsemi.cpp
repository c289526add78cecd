#include "maxff/wsemi.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "maxff/arith.hpp"

namespace maxff {

std::vector<std::int64_t> p0_generator_list(std::int64_t m, std::int64_t i) {
  validate_index(m, i);
  i = mod(i, m);
  std::vector<std::int64_t> out;
  for (std::int64_t l = 1; l < m; ++l) out.push_back(ceil_div(l * (i + 2), m) * m - l * i);
  return out;
}

std::vector<std::int64_t> pinf_generator_list(std::int64_t m, std::int64_t i) {
  validate_index(m, i);
  i = mod(i, m);
  std::vector<std::int64_t> out;
  for (std::int64_t l = 1; l < m; ++l) out.push_back(-floor_div(l * i, m) * m + l * (i + 2));
  return out;
}

namespace {

NumericalSemigroup with_m(std::vector<std::int64_t> gens, std::int64_t m) {
  gens.push_back(m);
  return NumericalSemigroup::from_generators(gens, m);
}

}  // namespace

NumericalSemigroup h_p0_generators(std::int64_t m, std::int64_t i) {
  return with_m(p0_generator_list(m, i), m);
}

NumericalSemigroup h_pinf_generators(std::int64_t m, std::int64_t i) {
  return with_m(pinf_generator_list(m, i), m);
}

NumericalSemigroup h_pinf_compact_generators(std::int64_t m, std::int64_t i) {
  validate_index(m, i);
  i = mod(i, m);
  std::vector<std::int64_t> gens{i + 2};
  for (std::int64_t l = 3; l <= i + 1; ++l) gens.push_back(m * l - (i + 2) * floor_div((l - 2) * m, i));
  return with_m(std::move(gens), m);
}

GapSequence gaps_closed_form(std::int64_t m, std::int64_t i, PlaceTag place) {
  validate_index(m, i);
  i = mod(i, m);
  GapSequence g{place, m, i, {}};
  for (const auto& [k, l] : holomorphic_basis(m, i)) {
    if (place == PlaceTag::P0)
      g.gaps.push_back(k * m + l * i - m * i);
    else if (place == PlaceTag::PInf)
      g.gaps.push_back(-k * m - l * (i + 2) + m * (i + 2));
    else
      throw std::invalid_argument("gaps_closed_form: place must be P0 or Pinf");
  }
  std::sort(g.gaps.begin(), g.gaps.end());
  return g;
}

std::vector<std::int64_t> gaps_interval_subset_palpha(std::int64_t m, std::int64_t i) {
  validate_index(m, i);
  i = mod(i, m);
  std::vector<std::int64_t> out;
  for (std::int64_t l = 1; l < m; ++l) {
    const std::int64_t lo = i * (m - l), hi = (i + 2) * (m - l);
    if (lo % m == 0 || hi % m == 0)
      throw std::logic_error("interval endpoint is an integer for m=" + std::to_string(m) +
                             " i=" + std::to_string(i) + " l=" + std::to_string(l));
    const std::int64_t k = floor_div(lo, m) + 1;
    if (k * m < hi) out.push_back(l);
  }
  return out;
}

namespace {

using Series = std::vector<FieldElem>;

Series mul_trunc(const Series& a, const Series& b, std::size_t n, const FieldCtx& ctx) {
  Series r(n, ctx.zero());
  for (std::size_t j = 0; j < a.size() && j < n; ++j) {
    if (a[j].is_zero()) continue;
    const std::size_t lim = std::min(b.size(), n - j);
    for (std::size_t k = 0; k < lim; ++k) r[j + k] += a[j] * b[k];
  }
  return r;
}

Series inv_trunc(const Series& u, std::size_t n, const FieldCtx& ctx) {
  const FieldElem u0inv = u.at(0).inverse();
  Series r(n, ctx.zero());
  r[0] = u0inv;
  for (std::size_t k = 1; k < n; ++k) {
    FieldElem s = ctx.zero();
    for (std::size_t j = 1; j <= k && j < u.size(); ++j) s += u[j] * r[k - j];
    r[k] = -(u0inv * s);
  }
  return r;
}

Series pow_trunc(Series base, std::int64_t e, std::size_t n, const FieldCtx& ctx) {
  Series r(n, ctx.zero());
  r[0] = ctx.one();
  base.resize(n, ctx.zero());
  while (e > 0) {
    if (e & 1) r = mul_trunc(r, base, n, ctx);
    e >>= 1;
    if (e > 0) base = mul_trunc(base, base, n, ctx);
  }
  return r;
}

}  // namespace

std::vector<FieldElem> local_expansion_x(std::int64_t m, std::int64_t i, const FieldCtx& ctx, int sign,
                                         std::size_t n) {
  validate_index(m, i);
  i = mod(i, m);
  if (m % ctx.p() == 0)
    throw std::invalid_argument("characteristic divides m; t = y is not a uniformizer");
  const FieldElem a0 = sign > 0 ? ctx.alpha() : -ctx.alpha();
  const auto um = static_cast<std::size_t>(m);
  Series x(n, ctx.zero());
  x[0] = a0;
  // Each round fixes m more coefficients.
  const std::size_t rounds = (n + um - 1) / um + 1;
  for (std::size_t r = 0; r < rounds && n > um; ++r) {
    const std::size_t nu = n - um;
    Series shifted = x;
    shifted[0] += a0;
    const Series u = mul_trunc(pow_trunc(x, i, nu, ctx), shifted, nu, ctx);
    const Series w = inv_trunc(u, nu, ctx);
    Series next(n, ctx.zero());
    next[0] = a0;
    for (std::size_t k = 0; k < nu; ++k) next[k + um] += w[k];
    x = std::move(next);
  }

  // t^m - x^i (x^2 + 1) = 0 mod t^n.
  Series x2p1 = mul_trunc(x, x, n, ctx);
  x2p1[0] += ctx.one();
  const Series rhs = mul_trunc(pow_trunc(x, i, n, ctx), x2p1, n, ctx);
  for (std::size_t k = 0; k < n; ++k) {
    const FieldElem lhs = (k == um) ? ctx.one() : ctx.zero();
    if (!(rhs[k] == lhs)) throw std::logic_error("local expansion does not satisfy the curve equation");
  }
  return x;
}

GapSequence gaps_series_oracle_palpha(std::int64_t m, std::int64_t i, const FieldCtx& ctx, int sign,
                                      SeriesOracleOptions opts) {
  validate_index(m, i);
  i = mod(i, m);
  const auto basis = holomorphic_basis(m, i);
  std::int64_t cols = opts.columns > 0 ? opts.columns : 2 * m;
  const std::size_t want = static_cast<std::size_t>(m - 1);

  for (int attempt = 0; attempt <= opts.max_retries; ++attempt, cols *= 2) {
    const auto C = static_cast<std::size_t>(cols);
    const std::size_t n = C + static_cast<std::size_t>(m);
    const Series x = local_expansion_x(m, i, ctx, sign, n + 1);
    Series dx(n, ctx.zero());
    for (std::size_t k = 1; k <= n; ++k) dx[k - 1] = ctx.from_int(static_cast<std::int64_t>(k % ctx.p())) * x[k];

    std::int64_t kmax = 0;
    for (const auto& [k, l] : basis) kmax = std::max(kmax, k);
    // pk[k-1] = x^{k-1} dx/dt
    std::vector<Series> pk;
    pk.push_back(dx);
    for (std::int64_t k = 2; k <= kmax; ++k) pk.push_back(mul_trunc(pk.back(), x, n, ctx));

    std::vector<Series> rows;
    for (const auto& [k, l] : basis) {
      const Series& s = pk[static_cast<std::size_t>(k - 1)];
      const auto shift = static_cast<std::size_t>(m - l);
      for (std::size_t j = 0; j < shift; ++j)
        if (!s[j].is_zero()) throw std::logic_error("basis differential has a pole at P(+-alpha)");
      rows.emplace_back(s.begin() + static_cast<std::ptrdiff_t>(shift),
                        s.begin() + static_cast<std::ptrdiff_t>(shift + C));
    }

    std::vector<std::int64_t> pivots;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < C && rank < rows.size(); ++c) {
      std::size_t r = rank;
      while (r < rows.size() && rows[r][c].is_zero()) ++r;
      if (r == rows.size()) continue;
      std::swap(rows[r], rows[rank]);
      const FieldElem inv = rows[rank][c].inverse();
      for (std::size_t rr = rank + 1; rr < rows.size(); ++rr) {
        if (rows[rr][c].is_zero()) continue;
        const FieldElem f = rows[rr][c] * inv;
        for (std::size_t cc = c; cc < C; ++cc) rows[rr][cc] -= f * rows[rank][cc];
      }
      pivots.push_back(static_cast<std::int64_t>(c));
      ++rank;
    }
    if (pivots.size() == want) {
      const PlaceTag place = sign > 0 ? PlaceTag::PAlphaPlus : PlaceTag::PAlphaMinus;
      GapSequence g{place, m, i, {}};
      for (auto c : pivots) g.gaps.push_back(c + 1);
      return g;
    }
  }
  throw PrecisionError("series oracle did not reach full rank for m=" + std::to_string(m) +
                       " i=" + std::to_string(i));
}

std::vector<std::int64_t> monomial_semigroup_oracle(std::int64_t m, std::int64_t i, PlaceTag place,
                                                    std::int64_t bound) {
  validate_index(m, i);
  i = mod(i, m);
  if (bound < 2 * m) throw std::invalid_argument("bound must be at least 2m");
  std::set<std::int64_t> orders;
  for (std::int64_t l = 0; l < m; ++l) {
    if (place == PlaceTag::P0) {
      // no pole at Pinf: km + l(i+2) <= 0; pole order -(km + li) in [0, bound]
      const std::int64_t kmax = floor_div(-l * (i + 2), m);
      const std::int64_t kmin = ceil_div(-(bound + l * i), m);
      for (std::int64_t k = kmin; k <= kmax; ++k) {
        const std::int64_t n = -(k * m + l * i);
        if (n >= 0 && n <= bound) orders.insert(n);
      }
    } else if (place == PlaceTag::PInf) {
      // no pole at P0: km + li >= 0; pole order km + l(i+2) in [0, bound]
      const std::int64_t kmin = ceil_div(-l * i, m);
      const std::int64_t kmax = floor_div(bound - l * (i + 2), m);
      for (std::int64_t k = kmin; k <= kmax; ++k) {
        const std::int64_t n = k * m + l * (i + 2);
        if (n >= 0 && n <= bound) orders.insert(n);
      }
    } else {
      throw std::invalid_argument("monomial_semigroup_oracle: place must be P0 or Pinf");
    }
  }
  return {orders.begin(), orders.end()};
}

SpecialSemigroups special_semigroups(std::int64_t m, std::int64_t i) {
  validate_index(m, i);
  i = mod(i, m);
  SpecialSemigroups out;
  if (i == 1) {
    const std::vector<std::int64_t> g{3, m};
    out.pinf = NumericalSemigroup::from_generators(g, m);
    std::vector<std::int64_t> gaps;
    for (std::int64_t n = 1; n <= 2 * m / 3; ++n) gaps.push_back(n);
    for (std::int64_t n = m + 1; n <= m + m / 3; ++n) gaps.push_back(n);
    out.p0 = NumericalSemigroup::from_gaps(gaps, m);
    out.palpha = out.p0;
  } else if (m % 4 == 0 && m >= 8 && 2 * i == m - 2) {
    std::vector<std::int64_t> g;
    for (std::int64_t v = m / 2 + 1; v < m; v += 2) g.push_back(v);
    g.push_back(m);
    const auto s = NumericalSemigroup::from_generators(g, m);
    out.p0 = out.pinf = out.palpha = s;
  }
  return out;
}

}  // namespace maxff
