#include <doctest.h>

#include <set>

#include "maxff/arith.hpp"
#include "maxff/classify.hpp"

using namespace maxff;
using Ints = std::vector<std::int64_t>;

TEST_CASE("valid indices") {
  CHECK(valid_indices(13) == Ints{1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12});
  CHECK(valid_indices(15) == Ints{2, 11, 14});
  CHECK(valid_indices(4) == Ints{1, 3});
  CHECK(valid_indices(2) == Ints{1});
  CHECK_THROWS(valid_indices(1));
}

TEST_CASE("canonical index") {
  CHECK(canonical_index(20, 13) == 4);
  CHECK(canonical_index(6, 13) == 5);
  CHECK(canonical_index(-1, 13) == 12);
  CHECK(canonical_index(12, 13) == 12);
  CHECK_THROWS_AS(canonical_index(11, 13), InvalidIndex);
  CHECK(paired_index(6, 13) == 5);
  CHECK(paired_index(12, 13) == 12);
  CHECK(paired_index(7, 16) == 7);
}

TEST_CASE("phi2 and class counts") {
  CHECK(phi2(13) == 11);
  CHECK(phi2(15) == 3);
  CHECK(phi2(16) == 8);
  CHECK(phi2(2) == 1);
  CHECK_THROWS(phi2(1'000'001));
  CHECK(class_count(13) == 6);
  CHECK(class_count(16) == 5);
  CHECK(class_count(15) == 2);
  CHECK(class_count(2) == 1);
}

TEST_CASE("matching q and auxiliary prime") {
  CHECK(matching_q(13) == 25);
  CHECK(matching_q(2) == 3);
  CHECK_FALSE(matching_q(8));
  CHECK(auxiliary_prime(8) == 3);
  CHECK(auxiliary_prime(15) == 7);
  CHECK(auxiliary_prime(105) == 11);
}

TEST_CASE("property: counting up to 10^4 by brute force, sieve up to 10^5") {
  const auto counts = valid_index_counts(100'000);
  for (std::int64_t m = 2; m <= 100'000; ++m) REQUIRE(counts[m] == phi2(m));
  for (std::int64_t m = 2; m <= 2'000; ++m) {
    const auto v = valid_indices(m);
    REQUIRE(static_cast<std::int64_t>(v.size()) == phi2(m));
    std::set<std::int64_t> canon;
    for (auto i : v) {
      canon.insert(canonical_index(i, m));
      REQUIRE(is_valid_index(m, mod(m - 2 - i, m)));
    }
    REQUIRE(static_cast<std::int64_t>(canon.size()) == class_count(m));
  }
}

TEST_CASE("classify m = 13") {
  const auto c = classify(13, {true, true});
  CHECK(c.q == 25);
  CHECK(c.class_count == 6);
  REQUIRE(c.classes.size() == 6);
  Ints labels;
  for (const auto& r : c.classes) {
    labels.push_back(r.label);
    CHECK(r.distinctness == "profile-distinct");
    CHECK(r.collides_with.empty());
    CHECK(r.maximal == true);
    CHECK(r.rational_places == 1226);
    CHECK(r.two_nongap_somewhere == (r.canonical == 12));
  }
  std::sort(labels.begin(), labels.end());
  CHECK(labels == Ints{6, 7, 8, 9, 10, 12});
  for (std::size_t a = 0; a < c.classes.size(); ++a)
    for (std::size_t b = a + 1; b < c.classes.size(); ++b) CHECK_FALSE(same_profile(c.classes[a], c.classes[b]));
  CHECK_FALSE(c.palpha_field_auxiliary);
}

TEST_CASE("classify small m") {
  const auto c4 = classify(4);
  REQUIRE(c4.classes.size() == 2);
  CHECK(c4.classes[0].members == Ints{1});
  CHECK(c4.classes[1].members == Ints{3});
  REQUIRE(c4.classes[0].aut);
  CHECK(c4.classes[0].aut->order == 96);
  const auto c15 = classify(15);
  REQUIRE(c15.classes.size() == 2);
  CHECK(c15.classes[0].members == Ints{2, 11});
  CHECK(c15.classes[1].members == Ints{14});
  CHECK(classify(16).classes.size() == 5);
  const auto c2 = classify(2);
  REQUIRE(c2.classes.size() == 1);
  CHECK(c2.classes[0].aut->kind == AutDescriptor::Kind::Infinite);
  const auto c8 = classify(8);
  CHECK(c8.palpha_field_auxiliary);
  CHECK(c8.palpha_field.p == 3);
  CHECK_FALSE(c8.classes[0].aut);
  CHECK_THROWS_AS(classify(8, {true, false}), std::invalid_argument);
}

TEST_CASE("canonical vs paper labels") {
  const auto c = classify(13);
  Ints labels;
  for (const auto& r : c.classes) labels.push_back(r.label);
  CHECK(labels == Ints{1, 2, 3, 4, 5, 12});
}
