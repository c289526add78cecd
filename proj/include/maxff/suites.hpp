// Property sweeps over the family, shared by the CLI verify command and the
// acceptance test.
#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace maxff {

struct SuiteResult {
  explicit SuiteResult(std::string n = {}) : name(std::move(n)) {}

  std::string name;
  std::int64_t checks = 0;
  std::int64_t passed = 0;
  std::optional<std::string> first_failure;
  /// Free-form counts reported next to the pass/fail line.
  std::vector<std::string> notes;

  bool ok() const { return checks > 0 && passed == checks; }
  /// Records one check; the witness is only built on failure.
  void expect(bool cond, const std::function<std::string()>& witness);
  void absorb(const SuiteResult& other);
};

/// Odd prime powers q with lo <= q <= hi.
std::vector<std::int64_t> odd_prime_powers(std::int64_t lo, std::int64_t hi);

/// G(Pinf), G(P0) for q = 25 and i in {6,7,8,9,10,12} against the reference tables.
SuiteResult check_tables25();
/// Gap counts m-1 at P0, Pinf for m <= m_closed; P(+-alpha) by the series
/// oracle (both signs) for m <= m_series with q = 2m-1 a prime power.
SuiteResult check_genus_consistency(std::int64_t m_closed, std::int64_t m_series);
/// Monomial pole orders = semigroup members up to 4m at P0 and Pinf.
SuiteResult check_oracle_equivalence(std::int64_t m_max);
/// Every listed generator is the least member of its class mod m.
SuiteResult check_apery_minimality(std::int64_t m_max);
/// Proper divisors of m are gaps at Pinf.
SuiteResult check_divisor_gaps(std::int64_t m_max);
SuiteResult check_compact_generators(std::int64_t m_max);
/// The closed forms for i = 1 and i = (m-2)/2.
SuiteResult check_special_semigroups(std::int64_t m_max);
/// rational_place_count = q^2 + 1 + 2(m-1)q for every valid i.
SuiteResult check_maximality(const std::vector<std::int64_t>& qs);
/// phi2 against the sieve count up to phi_max, class_count against the
/// canonical-index count up to class_max.
SuiteResult check_counting(std::int64_t phi_max, std::int64_t class_max);

struct MapSuiteOptions {
  std::vector<std::int64_t> phi_qs{5, 7, 9, 11, 13, 23, 25, 27, 31};
  std::vector<std::int64_t> gamma_qs{9, 27};
  std::vector<std::int64_t> sigma_qs{7, 23, 31};
  std::vector<std::int64_t> roquette_qs{5, 7, 9, 13};
  std::int64_t samples = 100;

  /// Drops every q above qmax.
  MapSuiteOptions capped(std::int64_t qmax) const;
};
SuiteResult check_maps(const MapSuiteOptions& opts);

/// For 1 < i < (m-2)/2 and m <= m_max with q = 2m-1: G(P0), G(Pinf) differ
/// from G(P+-alpha) and i+2 lies in H(Pinf) but not H(P+-alpha). Also the six
/// class profiles for m = 13 are pairwise distinct.
SuiteResult check_distinguishing(std::int64_t m_max);

}  // namespace maxff
