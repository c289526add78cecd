#include <doctest.h>

#include <random>

#include "maxff/ffield.hpp"

using namespace maxff;

TEST_CASE("field sizes") {
  // |F_{q^2}| = p^{2h}.
  CHECK(FieldCtx::make(5, 1)->order() == 25);
  CHECK(FieldCtx::make(3, 1)->order() == 9);
  CHECK(FieldCtx::make(5, 2)->order() == 625);
  CHECK(FieldCtx::make(3, 2)->order() == 81);
  CHECK(FieldCtx::make(5, 2)->q() == 25);
}

TEST_CASE("field_make rejects bad characteristic and size") {
  CHECK_THROWS_AS(FieldCtx::make(2, 1), FieldError);
  CHECK_THROWS_AS(FieldCtx::make(9, 1), FieldError);
  CHECK_THROWS_AS(FieldCtx::make(1009, 2), FieldError);
}

TEST_CASE("alpha and beta") {
  for (auto [p, h] : {std::pair{3, 1}, {5, 1}, {7, 1}, {3, 2}, {5, 2}}) {
    const auto ctx = FieldCtx::make(p, h);
    const auto a = ctx->alpha();
    CHECK(a * a == -ctx->one());
    CHECK(ctx->beta() * ctx->beta() == a);
    CHECK(ctx->beta().pow(4) == -ctx->one());
    const auto again = FieldCtx::make(p, h);
    CHECK(again->alpha().code() == a.code());
    CHECK(again->beta().code() == ctx->beta().code());
  }
}

TEST_CASE("nth powers") {
  const auto f25 = FieldCtx::make(5, 2);
  CHECK(f25->is_nth_power(f25->one(), 13));
  CHECK_FALSE(f25->is_nth_power(f25->generator(), 13));
  CHECK_THROWS(f25->is_nth_power(f25->zero(), 13));
  CHECK_THROWS(f25->is_nth_power(f25->one(), 7));
  const auto f3 = FieldCtx::make(3, 1);
  // alpha^((9-1)/2) = alpha^4 = 1, so alpha is a square in F_9.
  CHECK(f3->is_nth_power(f3->alpha(), 2) == (f3->alpha().pow(4) == f3->one()));
  CHECK(f3->is_nth_power(f3->alpha(), 2));
}

TEST_CASE("sqrt") {
  const auto ctx = FieldCtx::make(5, 2);
  CHECK(ctx->sqrt(ctx->zero()) == ctx->zero());
  CHECK(ctx->sqrt(ctx->one()) == ctx->one());
  const auto b = ctx->sqrt(ctx->alpha());
  REQUIRE(b);
  CHECK(b->pow(4) == -ctx->one());
  const auto f5 = FieldCtx::make(5, 1);
  // Every element of F_q is a square in F_{q^2}.
  for (std::int64_t n = 0; n < 5; ++n) CHECK(f5->sqrt(f5->from_int(n)));
  CHECK_FALSE(f5->sqrt(f5->generator()));
}

TEST_CASE("tables agree with reference arithmetic") {
  for (auto [p, h] : {std::pair{3, 1}, {5, 1}, {3, 2}, {7, 1}}) {
    const auto ctx = FieldCtx::make(p, h);
    for (std::uint32_t a = 0; a < ctx->order(); ++a)
      for (std::uint32_t b = 0; b < ctx->order(); b += 3) {
        const auto x = ctx->elem(a), y = ctx->elem(b);
        CHECK(x * y == ctx->mul_reference(x, y));
        CHECK(x + y == ctx->add_reference(x, y));
        CHECK((x - y) + y == x);
        if (!y.is_zero()) CHECK((x / y) * y == x);
      }
  }
}

TEST_CASE("property: Frobenius is additive") {
  std::mt19937 rng(7);
  for (auto [p, h] : {std::pair{3, 2}, {5, 2}, {7, 2}, {23, 1}}) {
    const auto ctx = FieldCtx::make(p, h);
    for (int k = 0; k < 500; ++k) {
      const auto a = ctx->elem(rng() % ctx->order()), b = ctx->elem(rng() % ctx->order());
      CHECK((a + b).pow(p) == a.pow(p) + b.pow(p));
      CHECK(ctx->frobenius(a * b) == ctx->frobenius(a) * ctx->frobenius(b));
    }
  }
}

TEST_CASE("property: is_nth_power agrees with root search") {
  for (auto [p, h] : {std::pair{3, 1}, {5, 1}, {7, 1}, {3, 2}, {11, 1}}) {
    const auto ctx = FieldCtx::make(p, h);
    const std::int64_t n1 = ctx->order() - 1;
    for (std::int64_t n = 1; n <= n1; ++n) {
      if (n1 % n) continue;
      std::vector<bool> is_power(ctx->order(), false);
      for (std::uint32_t y = 1; y < ctx->order(); ++y) is_power[ctx->elem(y).pow(n).code()] = true;
      for (std::uint32_t c = 1; c < ctx->order(); ++c) {
        const auto e = ctx->elem(c);
        CHECK(ctx->is_nth_power(e, n) == is_power[c]);
        const auto roots = ctx->nth_roots(e, n);
        CHECK(roots.empty() != is_power[c]);
        for (auto r : roots) CHECK(r.pow(n) == e);
      }
    }
  }
}

TEST_CASE("log and exp are inverse") {
  const auto ctx = FieldCtx::make(3, 2);
  for (std::uint32_t c = 1; c < ctx->order(); ++c) CHECK(ctx->exp(ctx->log(ctx->elem(c))) == ctx->elem(c));
  CHECK(ctx->from_coeffs(ctx->coeffs(ctx->alpha())) == ctx->alpha());
  CHECK(ctx->from_int(-1) == -ctx->one());
}
