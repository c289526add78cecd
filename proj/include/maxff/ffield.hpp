// Exact arithmetic in F_{q^2}, q = p^h with p an odd prime.
#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace maxff {

class FieldError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

class FieldCtx;

/// Element of F_{q^2}. The value is the coefficient vector (c_0, ..., c_{2h-1})
/// over F_p packed as sum c_k p^k; iteration order is numeric order of the code.
class FieldElem {
public:
  FieldElem() = default;
  FieldElem(const FieldCtx* ctx, std::uint32_t code) : ctx_(ctx), code_(code) {}

  std::uint32_t code() const { return code_; }
  const FieldCtx& ctx() const { return *ctx_; }
  bool is_zero() const { return code_ == 0; }

  FieldElem operator-() const;
  FieldElem inverse() const;
  FieldElem pow(std::int64_t e) const;

  friend FieldElem operator+(FieldElem a, FieldElem b);
  friend FieldElem operator-(FieldElem a, FieldElem b);
  friend FieldElem operator*(FieldElem a, FieldElem b);
  friend FieldElem operator/(FieldElem a, FieldElem b);
  FieldElem& operator+=(FieldElem b) { return *this = *this + b; }
  FieldElem& operator-=(FieldElem b) { return *this = *this - b; }
  FieldElem& operator*=(FieldElem b) { return *this = *this * b; }

  friend bool operator==(FieldElem a, FieldElem b) { return a.code_ == b.code_; }
  friend bool operator<(FieldElem a, FieldElem b) { return a.code_ < b.code_; }

private:
  const FieldCtx* ctx_ = nullptr;
  std::uint32_t code_ = 0;
};

/// F_{q^2} = F_p[t]/(f) with f the smallest monic irreducible of degree 2h.
///
/// Multiplication, inversion and addition are table driven (discrete log,
/// antilog and Zech tables built from a primitive element); the tables are
/// derived from plain polynomial arithmetic mod f, which stays available as
/// `mul_reference` for cross-checks. Held by shared_ptr because elements keep a
/// pointer to their context.
class FieldCtx {
public:
  static constexpr std::int64_t kMaxOrder = std::int64_t{1} << 22;

  /// Throws FieldError if p is not an odd prime or p^{2h} exceeds kMaxOrder.
  static std::shared_ptr<const FieldCtx> make(std::int64_t p, int h);

  FieldCtx(const FieldCtx&) = delete;
  FieldCtx& operator=(const FieldCtx&) = delete;

  std::int64_t p() const { return p_; }
  int h() const { return h_; }
  std::int64_t q() const { return q_; }
  /// q^2.
  std::int64_t order() const { return order_; }
  int degree() const { return 2 * h_; }
  /// Coefficients of the monic modulus, constant term first, leading 1 included.
  const std::vector<std::int64_t>& irreducible() const { return modulus_; }

  FieldElem zero() const { return {this, 0}; }
  FieldElem one() const { return {this, 1}; }
  FieldElem elem(std::uint32_t code) const;
  /// Image of an integer under Z -> F_p.
  FieldElem from_int(std::int64_t n) const;
  FieldElem from_coeffs(const std::vector<std::int64_t>& coeffs) const;
  std::vector<std::int64_t> coeffs(FieldElem a) const;

  /// First element in iteration order with alpha^2 = -1.
  FieldElem alpha() const { return alpha_; }
  /// First element in iteration order with beta^2 = alpha.
  FieldElem beta() const { return beta_; }
  /// First primitive element in iteration order.
  FieldElem generator() const { return generator_; }

  /// Discrete log with respect to generator(); a must be nonzero.
  std::int64_t log(FieldElem a) const;
  FieldElem exp(std::int64_t k) const;

  /// c^((q^2-1)/n) == 1. Throws if c == 0 or n does not divide q^2-1.
  bool is_nth_power(FieldElem c, std::int64_t n) const;
  /// All y with y^n = c, in iteration order.
  std::vector<FieldElem> nth_roots(FieldElem c, std::int64_t n) const;
  /// Square root that comes first in iteration order, or nullopt.
  std::optional<FieldElem> sqrt(FieldElem c) const;
  FieldElem frobenius(FieldElem a) const { return a.pow(p_); }

  /// Schoolbook product modulo the irreducible polynomial (no tables).
  FieldElem mul_reference(FieldElem a, FieldElem b) const;
  /// Coefficient-wise sum, no tables.
  FieldElem add_reference(FieldElem a, FieldElem b) const;

  std::string to_string(FieldElem a) const;

private:
  FieldCtx() = default;
  friend class FieldElem;
  friend FieldElem operator+(FieldElem a, FieldElem b);
  friend FieldElem operator-(FieldElem a, FieldElem b);
  friend FieldElem operator*(FieldElem a, FieldElem b);
  friend FieldElem operator/(FieldElem a, FieldElem b);

  std::uint32_t add_code(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t neg_code(std::uint32_t a) const;
  std::uint32_t mul_code(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t inv_code(std::uint32_t a) const;
  std::uint32_t pow_code(std::uint32_t a, std::int64_t e) const;

  std::int64_t p_ = 0;
  int h_ = 0;
  std::int64_t q_ = 0;
  std::int64_t order_ = 0;
  std::vector<std::int64_t> modulus_;
  std::vector<std::uint32_t> exp_;   // length 2(order-1)
  std::vector<std::uint32_t> log_;   // log_[0] unused
  std::vector<std::int64_t> zech_;   // log(1 + g^k), -1 when 1 + g^k = 0
  std::int64_t half_ = 0;            // log(-1)
  FieldElem alpha_, beta_, generator_;
};

}  // namespace maxff
