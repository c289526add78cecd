#include "maxff/classify.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <map>

#include "maxff/arith.hpp"
#include "maxff/wsemi.hpp"

namespace maxff {

std::vector<std::int64_t> valid_indices(std::int64_t m) {
  if (m < 2) throw std::invalid_argument("m must be at least 2, got " + std::to_string(m));
  std::vector<std::int64_t> out;
  for (std::int64_t i = 0; i < m; ++i)
    if (gcd(i, m) == 1 && gcd(i + 2, m) == 1) out.push_back(i);
  return out;
}

std::vector<std::int64_t> valid_index_counts(std::int64_t m_max) {
  if (m_max < 0) throw std::invalid_argument("m_max must be non-negative");
  const auto n = static_cast<std::size_t>(m_max) + 1;
  std::vector<std::int64_t> spf(n, 0);
  for (std::size_t k = 2; k < n; ++k)
    if (spf[k] == 0)
      for (std::size_t j = k; j < n; j += k)
        if (spf[j] == 0) spf[j] = static_cast<std::int64_t>(k);

  // For p < 64 the marked residues {0, -2 mod p} repeat with a period of p
  // 64-bit words.
  constexpr int kSmall = 64;
  std::array<std::vector<std::uint64_t>, kSmall> pattern;
  for (int p = 2; p < kSmall; ++p) {
    if (!is_prime(p)) continue;
    pattern[p].assign(static_cast<std::size_t>(p), 0);
    for (int w = 0; w < p; ++w)
      for (int j = 0; j < 64; ++j) {
        const int r = (64 * w + j) % p;
        if (r == 0 || r == (p - 2) % p) pattern[p][w] |= std::uint64_t{1} << j;
      }
  }

  std::vector<std::int64_t> counts(n, 0);
  std::vector<std::uint64_t> bad;
  for (std::int64_t m = 2; m <= m_max; ++m) {
    const auto words = static_cast<std::size_t>(m + 63) / 64;
    bad.assign(words, 0);
    for (std::int64_t rest = m; rest > 1;) {
      const std::int64_t p = spf[static_cast<std::size_t>(rest)];
      while (rest % p == 0) rest /= p;
      if (p < kSmall) {
        const auto& pat = pattern[static_cast<std::size_t>(p)];
        std::size_t k = 0;
        for (std::size_t w = 0; w < words; ++w) {
          bad[w] |= pat[k];
          if (++k == pat.size()) k = 0;
        }
      } else {
        for (std::int64_t i = 0; i < m; i += p) bad[i >> 6] |= std::uint64_t{1} << (i & 63);
        for (std::int64_t i = p - 2; i < m; i += p) bad[i >> 6] |= std::uint64_t{1} << (i & 63);
      }
    }
    if (m % 64 != 0) bad.back() &= (std::uint64_t{1} << (m % 64)) - 1;
    std::int64_t marked = 0;
    for (auto w : bad) marked += std::popcount(w);
    counts[static_cast<std::size_t>(m)] = m - marked;
  }
  return counts;
}

std::int64_t canonical_index(std::int64_t i_raw, std::int64_t m) {
  validate_index(m, i_raw);
  const std::int64_t r = mod(i_raw, m);
  if (r == m - 1) return r;
  return std::min(r, m - 2 - r);
}

std::int64_t paired_index(std::int64_t i, std::int64_t m) {
  validate_index(m, i);
  const std::int64_t r = mod(i, m);
  return r == m - 1 ? r : m - 2 - r;
}

std::int64_t phi2(std::int64_t m) {
  if (m < 2) throw std::invalid_argument("m must be at least 2, got " + std::to_string(m));
  if (m > 1'000'000) throw std::invalid_argument("m > 10^6 is outside the trial-division range");
  std::int64_t out = 1;
  for (const auto& [p, a] : factorize(m)) {
    if (p == 2) {
      out *= checked_pow(2, static_cast<unsigned>(std::max(0, a - 1)));
    } else {
      out *= checked_pow(p, static_cast<unsigned>(a - 1)) * (p - 2);
    }
  }
  return out;
}

std::int64_t class_count(std::int64_t m) {
  const std::int64_t f = phi2(m);
  return m % 4 == 0 ? (f + 2) / 2 : (f + 1) / 2;
}

std::optional<std::int64_t> matching_q(std::int64_t m) {
  if (m < 2) return std::nullopt;
  const std::int64_t q = 2 * m - 1;
  const auto pp = as_prime_power(q);
  if (!pp || pp->p == 2) return std::nullopt;
  return q;
}

std::int64_t auxiliary_prime(std::int64_t m) {
  for (std::int64_t p = 3;; p += 2)
    if (is_prime(p) && m % p != 0) return p;
}

bool same_profile(const ClassReport& a, const ClassReport& b) {
  auto key = [](const ClassReport& r) {
    auto lo = r.gaps.p0, hi = r.gaps.pinf;
    if (hi < lo) std::swap(lo, hi);
    return std::make_tuple(lo, hi, r.gaps.palpha, r.two_nongap_somewhere);
  };
  return key(a) == key(b);
}

Classification classify(std::int64_t m, const ClassifyOptions& opts) {
  Classification out;
  out.m = m;
  out.q = matching_q(m);
  if (opts.with_field_checks && !out.q)
    throw std::invalid_argument("field checks need 2m-1 to be an odd prime power; m=" + std::to_string(m));
  out.phi2 = phi2(m);
  out.class_count = class_count(m);

  // The P(+-alpha) expansions only need characteristic prime to m; when the
  // natural field is unavailable or too large a small auxiliary field is used.
  std::shared_ptr<const FieldCtx> ctx;
  if (out.q && *out.q <= opts.max_field_q) {
    const auto pp = split_odd_prime_power(*out.q);
    ctx = FieldCtx::make(pp.p, pp.h);
  } else {
    ctx = FieldCtx::make(auxiliary_prime(m), 1);
    out.palpha_field_auxiliary = true;
  }
  out.palpha_field = {ctx->p(), ctx->h(), ctx->irreducible()};
  if (opts.with_field_checks && out.palpha_field_auxiliary)
    throw std::invalid_argument("q=" + std::to_string(*out.q) + " exceeds the field enumeration bound");

  std::map<std::int64_t, std::vector<std::int64_t>> members;
  for (auto i : valid_indices(m)) members[canonical_index(i, m)].push_back(i);

  for (auto& [c, mem] : members) {
    ClassReport r;
    r.canonical = c;
    r.members = mem;
    r.label = opts.paper_labels ? mem.back() : c;
    r.gaps.p0 = gaps_closed_form(m, r.label, PlaceTag::P0).gaps;
    r.gaps.pinf = gaps_closed_form(m, r.label, PlaceTag::PInf).gaps;
    r.gaps.palpha = gaps_series_oracle_palpha(m, r.label, *ctx, +1).gaps;
    r.two_nongap_somewhere = (c == m - 1);
    if (out.q) r.aut = aut_descriptor(c, *out.q);
    if (opts.with_field_checks) {
      const auto params = CurveParams::from_q(*out.q, r.label);
      r.rational_places = rational_place_count(params, *ctx);
      r.maximal = *r.rational_places == hasse_weil_bound(params.q, params.genus);
    }
    out.classes.push_back(std::move(r));
  }

  for (auto& r : out.classes) {
    for (const auto& o : out.classes)
      if (o.canonical != r.canonical && same_profile(r, o)) r.collides_with.push_back(o.canonical);
    r.distinctness = r.collides_with.empty() ? "profile-distinct" : "profile-colliding";
  }
  return out;
}

}  // namespace maxff
