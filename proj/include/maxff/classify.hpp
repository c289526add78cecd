// Valid indices, canonical representatives and per-class reports for a fixed m.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "maxff/autgrp.hpp"

namespace maxff {

/// All i in [0, m) with gcd(i, m) = gcd(i+2, m) = 1. Throws for m < 2.
std::vector<std::int64_t> valid_indices(std::int64_t m);

/// counts[m] = |valid_indices(m)| for 0 <= m <= m_max (entries below 2 are 0),
/// by marking the residues 0 and -2 modulo each prime factor of m.
std::vector<std::int64_t> valid_index_counts(std::int64_t m_max);

/// r = i_raw mod m; m-1 if r = m-1, else min(r, m-2-r). Throws InvalidIndex.
std::int64_t canonical_index(std::int64_t i_raw, std::int64_t m);

/// The other member of the class of i under i <-> m-2-i (m-1 is alone).
std::int64_t paired_index(std::int64_t i, std::int64_t m);

/// 2^{max(0, a0-1)} prod p^{a-1}(p-2) over m = 2^{a0} prod p^a. Rejects m > 10^6.
std::int64_t phi2(std::int64_t m);

/// (phi2+1)/2 if 4 does not divide m, (phi2+2)/2 otherwise.
std::int64_t class_count(std::int64_t m);

/// q = 2m - 1 when that is an odd prime power.
std::optional<std::int64_t> matching_q(std::int64_t m);

/// Smallest odd prime not dividing m.
std::int64_t auxiliary_prime(std::int64_t m);

struct Profile {
  std::vector<std::int64_t> p0, pinf, palpha;
};

struct ClassReport {
  std::int64_t canonical = 0;
  /// The member whose gap sequences are listed (canonical member, or the larger one with paper_labels).
  std::int64_t label = 0;
  std::vector<std::int64_t> members;
  Profile gaps;
  /// Some place with 2 as a non-gap (only the Roquette class).
  bool two_nongap_somewhere = false;
  std::optional<AutDescriptor> aut;
  std::optional<std::int64_t> rational_places;
  std::optional<bool> maximal;
  /// "profile-distinct" or "profile-colliding".
  std::string distinctness;
  std::vector<std::int64_t> collides_with;
};

struct FieldInfo {
  std::int64_t p = 0;
  int h = 0;
  std::vector<std::int64_t> irreducible;
};

struct Classification {
  std::int64_t m = 0;
  std::optional<std::int64_t> q;
  std::int64_t phi2 = 0;
  std::int64_t class_count = 0;
  /// Field used for the P(+-alpha) expansions.
  FieldInfo palpha_field;
  bool palpha_field_auxiliary = false;
  std::vector<ClassReport> classes;
};

struct ClassifyOptions {
  /// Count rational places of each class representative; requires q.
  bool with_field_checks = false;
  /// List the larger member of each pair, as in the q = 25 tables.
  bool paper_labels = false;
  /// Largest q for which field checks enumerate F_{q^2}.
  std::int64_t max_field_q = 2000;
};

/// One report per class, in increasing canonical order. Throws
/// std::invalid_argument if field checks are requested and 2m-1 is not an odd
/// prime power.
Classification classify(std::int64_t m, const ClassifyOptions& opts = {});

/// Key used for profile comparison: the unordered pair {G(P0), G(Pinf)},
/// then G(P+-alpha), then the 2-non-gap flag.
bool same_profile(const ClassReport& a, const ClassReport& b);

}  // namespace maxff
