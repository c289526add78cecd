#include <doctest.h>

#include <random>

#include "maxff/arith.hpp"
#include "maxff/numsg.hpp"

using namespace maxff;
using Ints = std::vector<std::int64_t>;

namespace {

NumericalSemigroup sg(Ints gens, std::int64_t m) { return NumericalSemigroup::from_generators(gens, m); }

}  // namespace

TEST_CASE("arith helpers") {
  CHECK(mod(-1, 13) == 12);
  CHECK(mod(26, 13) == 0);
  CHECK(floor_div(-7, 2) == -4);
  CHECK(floor_div(7, 2) == 3);
  CHECK(ceil_div(7, 2) == 4);
  CHECK(ceil_div(-7, 2) == -3);
  CHECK(gcd(12, 18) == 6);
  CHECK(gcd(0, 5) == 5);
  CHECK(is_prime(2));
  CHECK_FALSE(is_prime(1));
  CHECK(is_prime(1'000'003));
  const auto pp = as_prime_power(625);
  REQUIRE(pp);
  CHECK(pp->p == 5);
  CHECK(pp->h == 4);
  CHECK_FALSE(as_prime_power(15));
  CHECK_THROWS_AS(checked_mul(std::int64_t{1} << 40, std::int64_t{1} << 40), OverflowError);
  CHECK(factorize(360) == std::vector<std::pair<std::int64_t, int>>{{2, 3}, {3, 2}, {5, 1}});
}

TEST_CASE("semigroup <2,3>") {
  const auto s = sg({2, 3}, 2);
  CHECK(s.gaps() == Ints{1});
  CHECK(s.genus() == 1);
  CHECK(s.apery_wrt(2) == Ints{0, 3});
  CHECK(s.frobenius() == 1);
}

TEST_CASE("semigroup <3,13>") {
  const auto s = sg({3, 13}, 13);
  CHECK(s.gaps() == Ints{1, 2, 4, 5, 7, 8, 10, 11, 14, 17, 20, 23});
  CHECK(s.genus() == 12);
  CHECK_FALSE(s.contains(7));
  CHECK(s.contains(0));
  CHECK_FALSE(s.contains(-1));
  CHECK(s.apery_wrt(3) == Ints{0, 13, 26});
  CHECK(s.minimal_generators() == Ints{3, 13});
}

TEST_CASE("semigroup from the i=6 Apery set") {
  const Ints gens{13, 7, 14, 8, 15, 22, 16, 23, 17, 24, 31, 25, 32};
  const auto s = sg(gens, 13);
  CHECK(s.gaps() == Ints{1, 2, 3, 4, 5, 6, 9, 10, 11, 12, 18, 19});
  CHECK(s.apery_wrt(13) == Ints{0, 14, 15, 16, 17, 31, 32, 7, 8, 22, 23, 24, 25});
}

TEST_CASE("from_generators rejects bad input") {
  CHECK_THROWS_AS(sg({}, 3), SemigroupError);
  CHECK_THROWS_AS(sg({0, 3}, 3), SemigroupError);
  CHECK_THROWS_AS(sg({2, 4}, 2), SemigroupError);
  CHECK_THROWS_AS(sg({3, 5}, 4), SemigroupError);
  CHECK_THROWS_AS(sg({3, 5}, 0), SemigroupError);
  CHECK_NOTHROW(sg({3, 5}, 5));
}

TEST_CASE("from_gaps round trip and rejection") {
  const auto s = sg({5, 7, 8}, 8);
  const auto g = s.gaps();
  CHECK(NumericalSemigroup::from_gaps(g, 8) == s);
  // 1 would be a member, forcing 2 in as well.
  CHECK_THROWS_AS(NumericalSemigroup::from_gaps(Ints{2}, 3), SemigroupError);
  CHECK_THROWS_AS(NumericalSemigroup::from_gaps(Ints{0}, 3), SemigroupError);
}

TEST_CASE("equality across different bases") {
  CHECK(sg({3, 13}, 13) == sg({3, 13}, 3));
  CHECK_FALSE(sg({3, 13}, 13) == sg({3, 14}, 14));
  CHECK(sg({7, 9, 9, 11, 12}, 12) == sg({7, 9, 11, 12}, 12));
}

TEST_CASE("property: random semigroups satisfy the Apery invariants") {
  std::mt19937_64 rng(20261014);
  for (int trial = 0; trial < 300; ++trial) {
    const std::int64_t m = 2 + static_cast<std::int64_t>(rng() % 40);
    Ints gens{m};
    const int extra = 1 + static_cast<int>(rng() % 5);
    for (int k = 0; k < extra; ++k) gens.push_back(1 + static_cast<std::int64_t>(rng() % (3 * m)));
    std::int64_t g = 0;
    for (auto v : gens) g = gcd(g, v);
    if (g != 1) gens.push_back(m + 1);
    const auto s = sg(gens, m);
    CAPTURE(m);
    const auto gaps = s.gaps();
    std::int64_t sum = 0;
    for (auto a : s.apery()) sum += a / m;
    CHECK(static_cast<std::int64_t>(gaps.size()) == sum);
    CHECK(s.genus() == sum);
    for (std::int64_t n = 1; n <= s.frobenius() + 1; ++n) {
      const bool gap = std::binary_search(gaps.begin(), gaps.end(), n);
      CHECK(s.contains(n) != gap);
    }
    for (std::int64_t r = 0; r < m; ++r)
      for (std::int64_t x = r; x < s.apery()[r]; x += m) CHECK_FALSE(s.contains(x));
    const Ints ap(s.apery().begin(), s.apery().end());
    Ints rebuilt = ap;
    rebuilt[0] = m;
    CHECK(sg(rebuilt, m) == s);
    CHECK(sg(s.minimal_generators(), m) == s);
  }
}
