#include "maxff/suites.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <set>

#include "maxff/arith.hpp"
#include "maxff/autgrp.hpp"
#include "maxff/classify.hpp"
#include "maxff/wsemi.hpp"

namespace maxff {

namespace {

using Ints = std::vector<std::int64_t>;

std::string pair_tag(std::int64_t m, std::int64_t i) {
  return "(m=" + std::to_string(m) + ", i=" + std::to_string(i) + ")";
}

std::string ints(const Ints& v) {
  std::string s = "{";
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + std::to_string(v[k]);
  return s + "}";
}

class FieldCache {
public:
  const FieldCtx& for_q(std::int64_t q) {
    auto& slot = fields_[q];
    if (!slot) {
      const auto pp = split_odd_prime_power(q);
      slot = FieldCtx::make(pp.p, pp.h);
    }
    return *slot;
  }
  /// Natural field when 2m-1 is a prime power, else F_{p^2} with p the
  /// smallest odd prime not dividing m.
  const FieldCtx& for_m(std::int64_t m) {
    if (const auto q = matching_q(m)) return for_q(*q);
    const std::int64_t p = auxiliary_prime(m);
    return for_q(p);  // F_{p^2}
  }

private:
  std::map<std::int64_t, std::shared_ptr<const FieldCtx>> fields_;
};

bool contains_all(const Ints& super, const Ints& sub) {
  return std::includes(super.begin(), super.end(), sub.begin(), sub.end());
}

}  // namespace

void SuiteResult::expect(bool cond, const std::function<std::string()>& witness) {
  ++checks;
  if (cond) {
    ++passed;
  } else if (!first_failure) {
    first_failure = witness();
  }
}

void SuiteResult::absorb(const SuiteResult& other) {
  checks += other.checks;
  passed += other.passed;
  if (!first_failure && other.first_failure) first_failure = other.name + ": " + *other.first_failure;
  for (const auto& n : other.notes) notes.push_back(other.name + ": " + n);
}

std::vector<std::int64_t> odd_prime_powers(std::int64_t lo, std::int64_t hi) {
  Ints out;
  for (std::int64_t q = std::max<std::int64_t>(lo, 3); q <= hi; ++q) {
    const auto pp = as_prime_power(q);
    if (pp && pp->p != 2) out.push_back(q);
  }
  return out;
}

SuiteResult check_tables25() {
  struct Row {
    std::int64_t i;
    Ints pinf, p0;
  };
  static const std::vector<Row> kTables{
      {6, {1, 2, 3, 4, 5, 6, 7, 9, 10, 12, 15, 18}, {1, 2, 3, 4, 5, 6, 9, 10, 11, 12, 18, 19}},
      {7, {1, 2, 3, 4, 6, 7, 8, 11, 12, 16, 17, 21}, {1, 2, 3, 4, 5, 7, 8, 9, 10, 14, 15, 20}},
      {8, {1, 2, 3, 4, 5, 6, 8, 9, 12, 15, 16, 19}, {1, 2, 3, 4, 6, 7, 8, 9, 11, 14, 16, 21}},
      {9, {1, 2, 3, 4, 5, 6, 8, 10, 12, 15, 17, 19}, {1, 2, 3, 5, 6, 7, 9, 10, 11, 14, 18, 22}},
      {10, {1, 2, 3, 4, 5, 6, 7, 8, 14, 15, 16, 17}, {1, 2, 4, 5, 7, 8, 10, 11, 14, 17, 20, 23}},
      {12, {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12}, {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12}},
  };
  SuiteResult r{"tables25"};
  const auto params = CurveParams::from_q(25, 6);
  for (const auto& row : kTables) {
    const auto pinf = gaps_closed_form(params.m, row.i, PlaceTag::PInf).gaps;
    const auto p0 = gaps_closed_form(params.m, row.i, PlaceTag::P0).gaps;
    r.expect(pinf == row.pinf, [&] { return "G(Pinf) i=" + std::to_string(row.i) + " got " + ints(pinf); });
    r.expect(p0 == row.p0, [&] { return "G(P0) i=" + std::to_string(row.i) + " got " + ints(p0); });
  }
  r.notes.push_back(std::to_string(r.checks) + " gap sequences compared, " + std::to_string(r.passed) + " match");
  return r;
}

SuiteResult check_genus_consistency(std::int64_t m_closed, std::int64_t m_series) {
  SuiteResult r{"genus"};
  for (std::int64_t m = 2; m <= m_closed; ++m) {
    for (auto i : valid_indices(m)) {
      const auto g0 = gaps_closed_form(m, i, PlaceTag::P0).gaps;
      const auto gi = gaps_closed_form(m, i, PlaceTag::PInf).gaps;
      r.expect(static_cast<std::int64_t>(g0.size()) == m - 1 && static_cast<std::int64_t>(gi.size()) == m - 1,
               [&] { return pair_tag(m, i) + " closed-form gap count"; });
      r.expect(static_cast<std::int64_t>(holomorphic_basis(m, i).size()) == m - 1,
               [&] { return pair_tag(m, i) + " holomorphic basis size"; });
    }
  }
  FieldCache fields;
  std::int64_t series_runs = 0, subset_equal = 0;
  for (std::int64_t m = 2; m <= m_series; ++m) {
    const auto q = matching_q(m);
    if (!q) continue;
    const FieldCtx& ctx = fields.for_q(*q);
    for (auto i : valid_indices(m)) {
      const auto plus = gaps_series_oracle_palpha(m, i, ctx, +1).gaps;
      const auto minus = gaps_series_oracle_palpha(m, i, ctx, -1).gaps;
      const auto sub = gaps_interval_subset_palpha(m, i);
      series_runs += 2;
      if (sub == plus) ++subset_equal;
      r.expect(static_cast<std::int64_t>(plus.size()) == m - 1,
               [&] { return pair_tag(m, i) + " P(+alpha) gap count " + std::to_string(plus.size()); });
      r.expect(plus == minus, [&] { return pair_tag(m, i) + " P(+alpha) and P(-alpha) differ"; });
      r.expect(contains_all(plus, sub), [&] { return pair_tag(m, i) + " interval gaps not contained"; });
    }
  }
  r.notes.push_back(std::to_string(series_runs) + " series expansions; interval subset was the full set in " +
                    std::to_string(subset_equal) + " of " + std::to_string(series_runs / 2) + " cases");
  return r;
}

SuiteResult check_oracle_equivalence(std::int64_t m_max) {
  SuiteResult r{"oracles"};
  for (std::int64_t m = 2; m <= m_max; ++m) {
    for (auto i : valid_indices(m)) {
      const std::int64_t bound = 4 * m;
      for (auto [place, s] : {std::pair{PlaceTag::P0, h_p0_generators(m, i)},
                              std::pair{PlaceTag::PInf, h_pinf_generators(m, i)}}) {
        const auto got = monomial_semigroup_oracle(m, i, place, bound);
        Ints want;
        for (std::int64_t n = 0; n <= bound; ++n)
          if (s.contains(n)) want.push_back(n);
        r.expect(got == want, [&] { return pair_tag(m, i) + " " + std::string(place_name(place)); });
        const auto cf = gaps_closed_form(m, i, place).gaps;
        r.expect(cf == s.gaps(),
                 [&] { return pair_tag(m, i) + " closed-form gaps vs generators at " + std::string(place_name(place)); });
      }
    }
  }
  return r;
}

SuiteResult check_apery_minimality(std::int64_t m_max) {
  SuiteResult r{"apery"};
  for (std::int64_t m = 2; m <= m_max; ++m) {
    for (auto i : valid_indices(m)) {
      for (auto [list, s] : {std::pair{p0_generator_list(m, i), h_p0_generators(m, i)},
                             std::pair{pinf_generator_list(m, i), h_pinf_generators(m, i)}}) {
        const auto ap = s.apery_wrt(m);
        std::set<std::int64_t> residues;
        bool ok = true;
        for (auto g : list) {
          residues.insert(g % m);
          if (ap[static_cast<std::size_t>(g % m)] != g) ok = false;
        }
        ok = ok && static_cast<std::int64_t>(residues.size()) == m - 1 && !residues.count(0);
        r.expect(ok, [&] { return pair_tag(m, i) + " generator list is not an Apery set"; });
      }
    }
  }
  return r;
}

SuiteResult check_divisor_gaps(std::int64_t m_max) {
  SuiteResult r{"divisors"};
  for (std::int64_t m = 2; m <= m_max; ++m) {
    Ints divisors;
    for (std::int64_t d = 1; d < m; ++d)
      if (m % d == 0) divisors.push_back(d);
    for (auto i : valid_indices(m)) {
      const auto s = h_pinf_generators(m, i);
      for (auto d : divisors)
        r.expect(!s.contains(d), [&] { return pair_tag(m, i) + " divisor " + std::to_string(d) + " in H(Pinf)"; });
      r.expect(s.contains(i + 2), [&] { return pair_tag(m, i) + " i+2 not in H(Pinf)"; });
    }
  }
  return r;
}

SuiteResult check_compact_generators(std::int64_t m_max) {
  SuiteResult r{"compact"};
  for (std::int64_t m = 2; m <= m_max; ++m)
    for (auto i : valid_indices(m))
      r.expect(h_pinf_compact_generators(m, i) == h_pinf_generators(m, i),
               [&] { return pair_tag(m, i) + " compact generators differ"; });
  return r;
}

SuiteResult check_special_semigroups(std::int64_t m_max) {
  SuiteResult r{"special"};
  FieldCache fields;
  std::int64_t aux = 0, five_match = 0;
  Ints five_miss;
  for (std::int64_t m = 2; m <= m_max; ++m) {
    const FieldCtx& ctx = fields.for_m(m);
    if (!matching_q(m)) ++aux;
    if (is_valid_index(m, 1)) {
      const auto sp = special_semigroups(m, 1);
      const Ints g{3, m};
      const auto want_inf = NumericalSemigroup::from_generators(g, m);
      Ints want;
      for (std::int64_t n = 1; n <= 2 * m / 3; ++n) want.push_back(n);
      for (std::int64_t n = m + 1; n <= m + m / 3; ++n) want.push_back(n);
      r.expect(h_pinf_generators(m, 1) == want_inf, [&] { return pair_tag(m, 1) + " H(Pinf) != <3,m>"; });
      r.expect(gaps_closed_form(m, 1, PlaceTag::P0).gaps == want, [&] { return pair_tag(m, 1) + " G(P0)"; });
      for (int sign : {+1, -1})
        r.expect(gaps_series_oracle_palpha(m, 1, ctx, sign).gaps == want,
                 [&] { return pair_tag(m, 1) + " G(P+-alpha)"; });
      r.expect(sp.pinf && *sp.pinf == want_inf && sp.p0 && sp.p0->gaps() == want,
               [&] { return pair_tag(m, 1) + " special_semigroups"; });
    }
    if (m % 4 == 0 && m >= 8) {
      const std::int64_t i = (m - 2) / 2;
      Ints g;
      for (std::int64_t v = m / 2 + 1; v < m; v += 2) g.push_back(v);
      g.push_back(m);
      const auto s = NumericalSemigroup::from_generators(g, m);
      const auto p0 = h_p0_generators(m, i), pinf = h_pinf_generators(m, i);
      r.expect(p0 == pinf, [&] { return pair_tag(m, i) + " H(P0) != H(Pinf)"; });
      r.expect(pinf == s, [&] { return pair_tag(m, i) + " H(Pinf) is not the odd progression"; });
      for (int sign : {+1, -1})
        r.expect(gaps_series_oracle_palpha(m, i, ctx, sign).gaps == pinf.gaps(),
                 [&] { return pair_tag(m, i) + " G(P+-alpha) != G(Pinf)"; });
      const auto spc = special_semigroups(m, i);
      r.expect(spc.palpha && *spc.palpha == s, [&] { return pair_tag(m, i) + " special_semigroups"; });
      const Ints five{m / 2 + 1, m / 2 + 3, m - 3, m - 1, m};
      if (NumericalSemigroup::from_generators(five, m) == s)
        ++five_match;
      else
        five_miss.push_back(m);
    }
  }
  r.notes.push_back("five-generator form <m/2+1, m/2+3, m-3, m-1, m> agrees for " + std::to_string(five_match) +
                    " values of m; differs (genus too large) for m in " + ints(five_miss));
  r.notes.push_back(std::to_string(aux) + " values of m used an auxiliary field for P(+-alpha)");
  return r;
}

SuiteResult check_maximality(const std::vector<std::int64_t>& qs) {
  SuiteResult r{"maximality"};
  std::int64_t curves = 0;
  for (auto q : qs) {
    const auto pp = split_odd_prime_power(q);
    const auto ctx = FieldCtx::make(pp.p, pp.h);
    const std::int64_t m = (q + 1) / 2;
    for (auto i : valid_indices(m)) {
      const auto params = CurveParams::make(pp.p, pp.h, i);
      const auto n = rational_place_count(params, *ctx);
      const auto want = hasse_weil_bound(q, params.genus);
      ++curves;
      r.expect(n == want, [&] {
        return "q=" + std::to_string(q) + " i=" + std::to_string(i) + ": " + std::to_string(n) +
               " places, bound " + std::to_string(want);
      });
    }
  }
  r.notes.push_back(std::to_string(curves) + " curves over " + std::to_string(qs.size()) + " fields");
  return r;
}

SuiteResult check_counting(std::int64_t phi_max, std::int64_t class_max) {
  SuiteResult r{"counting"};
  const auto counts = valid_index_counts(phi_max);
  for (std::int64_t m = 2; m <= phi_max; ++m)
    r.expect(counts[static_cast<std::size_t>(m)] == phi2(m), [&] { return "phi2(" + std::to_string(m) + ")"; });
  for (std::int64_t m = 2; m <= class_max; ++m) {
    const auto vi = valid_indices(m);
    std::set<std::int64_t> canon, members(vi.begin(), vi.end());
    bool closed = true;
    for (auto i : vi) {
      canon.insert(canonical_index(i, m));
      if (!members.count(mod(m - 2 - i, m))) closed = false;
    }
    if (m <= phi_max)
      r.expect(static_cast<std::int64_t>(vi.size()) == counts[static_cast<std::size_t>(m)],
               [&] { return "valid_indices(" + std::to_string(m) + ") size vs sieve"; });
    r.expect(static_cast<std::int64_t>(canon.size()) == class_count(m),
             [&] { return "class_count(" + std::to_string(m) + ")"; });
    r.expect(closed, [&] { return "pairing closure m=" + std::to_string(m); });
  }
  for (auto [m, n] : {std::pair<std::int64_t, std::int64_t>{13, 6}, {16, 5}, {15, 2}})
    r.expect(class_count(m) == n, [&] { return "N(" + std::to_string(m) + ")"; });
  return r;
}

MapSuiteOptions MapSuiteOptions::capped(std::int64_t qmax) const {
  MapSuiteOptions o = *this;
  for (auto* v : {&o.phi_qs, &o.gamma_qs, &o.sigma_qs, &o.roquette_qs})
    v->erase(std::remove_if(v->begin(), v->end(), [&](std::int64_t q) { return q > qmax; }), v->end());
  return o;
}

SuiteResult check_maps(const MapSuiteOptions& opts) {
  SuiteResult r{"maps"};
  FieldCache fields;
  std::int64_t points = 0, maps = 0;
  auto record = [&](const VerificationReport& rep, const std::string& where) {
    points += rep.points_checked;
    ++maps;
    std::string why;
    if (!rep.failures.empty()) why = rep.failures.front();
    for (const auto& c : rep.order_checks)
      if (!c.passed && why.empty()) why = c.name + " (" + c.detail + ")";
    r.expect(rep.ok(), [&] { return where + ": " + (why.empty() ? rep.map : why); });
  };
  for (auto q : opts.phi_qs) {
    const FieldCtx& ctx = fields.for_q(q);
    const std::int64_t m = (q + 1) / 2;
    const std::string at = "q=" + std::to_string(q);
    for (auto i : valid_indices(m)) {
      for (std::int64_t lift : {m, -m, 3 * m})
        record(verify_inverse_pair(phi_reduce(m, i + lift, ctx), phi_reduce_inverse(m, i + lift, ctx), ctx,
                                   opts.samples),
               at);
      record(verify_map(phi_pair(m, i, ctx), ctx, opts.samples), at);
      record(gi_action_check(CurveParams::from_q(q, i), ctx, opts.samples), at);
    }
  }
  for (auto q : opts.gamma_qs) record(verify_gamma(CurveParams::from_q(q, 1), fields.for_q(q), opts.samples), "q=" + std::to_string(q));
  for (auto q : opts.sigma_qs) {
    const std::int64_t m = (q + 1) / 2;
    record(verify_sigma4(CurveParams::from_q(q, (m - 2) / 2), fields.for_q(q), opts.samples), "q=" + std::to_string(q));
  }
  for (auto q : opts.roquette_qs) {
    const FieldCtx& ctx = fields.for_q(q);
    record(verify_map(roquette_map((q + 1) / 2, ctx), ctx, opts.samples), "q=" + std::to_string(q));
  }
  r.notes.push_back(std::to_string(maps) + " map checks over " + std::to_string(points) + " point evaluations");
  return r;
}

SuiteResult check_distinguishing(std::int64_t m_max) {
  SuiteResult r{"distinguishing"};
  FieldCache fields;
  for (std::int64_t m = 2; m <= m_max; ++m) {
    const auto q = matching_q(m);
    if (!q) continue;
    const FieldCtx& ctx = fields.for_q(*q);
    for (auto i : valid_indices(m)) {
      if (!(1 < i && 2 * i < m - 2)) continue;
      const auto pa = gaps_series_oracle_palpha(m, i, ctx, +1).gaps;
      const auto p0 = gaps_closed_form(m, i, PlaceTag::P0).gaps;
      const auto pinf = gaps_closed_form(m, i, PlaceTag::PInf).gaps;
      r.expect(p0 != pa, [&] { return pair_tag(m, i) + " G(P0) = G(Palpha)"; });
      r.expect(pinf != pa, [&] { return pair_tag(m, i) + " G(Pinf) = G(Palpha)"; });
      const bool in_inf = h_pinf_generators(m, i).contains(i + 2);
      const bool gap_pa = std::binary_search(pa.begin(), pa.end(), i + 2);
      r.expect(in_inf && gap_pa, [&] { return pair_tag(m, i) + " i+2 not in H(Pinf) \\ H(Palpha)"; });
    }
  }
  const auto cl = classify(13);
  bool distinct = cl.classes.size() == 6;
  for (std::size_t a = 0; a < cl.classes.size(); ++a)
    for (std::size_t b = a + 1; b < cl.classes.size(); ++b)
      if (same_profile(cl.classes[a], cl.classes[b])) distinct = false;
  r.expect(distinct, [] { return "m=13 class profiles are not pairwise distinct"; });
  return r;
}

}  // namespace maxff
