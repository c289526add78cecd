#include "maxff/numsg.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "maxff/arith.hpp"

namespace maxff {

namespace {

constexpr std::int64_t kUnreached = std::numeric_limits<std::int64_t>::max();

// Round-robin relaxation: for each generator g the residues split into
// gcd(g, M) cycles r -> r + g (mod M). Starting each cycle at its current
// minimum and walking it once is enough to settle every entry for g.
// Generators are processed in increasing order, so one that is already
// representable changes nothing and is skipped.
std::vector<std::int64_t> apery_by_round_robin(std::span<const std::int64_t> gens,
                                               std::int64_t M) {
  std::vector<std::int64_t> n(static_cast<std::size_t>(M), kUnreached);
  n[0] = 0;
  for (const std::int64_t g : gens) {
    const std::int64_t step = g % M;
    if (step == 0 || n[step] <= g) continue;
    const std::int64_t d = gcd(step, M);
    const std::int64_t len = M / d;
    auto advance = [&](std::int64_t r) { return r + step >= M ? r + step - M : r + step; };
    for (std::int64_t p = 0; p < d; ++p) {
      std::int64_t best = p;
      for (std::int64_t k = 0, r = p; k < len; ++k, r = advance(r))
        if (n[r] < n[best]) best = r;
      if (n[best] == kUnreached) continue;
      std::int64_t cur = best;
      for (std::int64_t k = 1; k < len; ++k) {
        const std::int64_t next = advance(cur);
        const std::int64_t cand = checked_add(n[cur], g);
        if (cand < n[next]) n[next] = cand;
        cur = next;
      }
    }
  }
  return n;
}

}  // namespace

NumericalSemigroup NumericalSemigroup::from_generators(std::span<const std::int64_t> gens,
                                                       std::int64_t modulus) {
  if (gens.empty()) throw SemigroupError("empty generator list");
  if (modulus <= 0) throw SemigroupError("modulus must be positive");
  std::vector<std::int64_t> sorted(gens.begin(), gens.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  if (sorted.front() <= 0) throw SemigroupError("generators must be positive");
  std::int64_t g = 0;
  for (auto v : sorted) g = gcd(g, v);
  if (g != 1) throw SemigroupError("gcd of generators is " + std::to_string(g) + ", not 1");

  auto apery = apery_by_round_robin(sorted, modulus);

  // modulus is a member iff the least positive representable multiple of it
  // is the modulus itself.
  std::int64_t least_multiple = kUnreached;
  for (auto v : sorted) {
    const auto from = static_cast<std::size_t>(mod(-v, modulus));
    if (apery[from] != kUnreached)
      least_multiple = std::min(least_multiple, checked_add(apery[from], v));
  }
  if (least_multiple != modulus)
    throw SemigroupError("modulus " + std::to_string(modulus) + " is not in the semigroup");
  return NumericalSemigroup(modulus, std::move(apery), std::move(sorted));
}

NumericalSemigroup NumericalSemigroup::from_gaps(std::span<const std::int64_t> gaps,
                                                 std::int64_t modulus) {
  std::int64_t top = 0;
  for (auto v : gaps) {
    if (v <= 0) throw SemigroupError("gaps must be positive");
    top = std::max(top, v);
  }
  std::vector<bool> is_gap(static_cast<std::size_t>(top + 1), false);
  for (auto v : gaps) is_gap[v] = true;
  std::vector<std::int64_t> gens;
  // Every integer above the largest gap is a member; one full residue system
  // beyond it suffices.
  for (std::int64_t n = 1; n <= top + modulus; ++n)
    if (n > top || !is_gap[n]) gens.push_back(n);
  gens.push_back(modulus);
  auto s = from_generators(gens, modulus);
  if (s.gaps() != std::vector<std::int64_t>(gaps.begin(), gaps.end()))
    throw SemigroupError("gap list is not the complement of a numerical semigroup");
  return s;
}

std::vector<std::int64_t> NumericalSemigroup::gaps() const {
  std::vector<std::int64_t> out;
  for (std::int64_t r = 1; r < base_; ++r)
    for (std::int64_t x = r; x < apery_[r]; x += base_) out.push_back(x);
  std::sort(out.begin(), out.end());
  return out;
}

std::int64_t NumericalSemigroup::genus() const {
  std::int64_t g = 0;
  for (auto a : apery_) g += a / base_;
  return g;
}

std::int64_t NumericalSemigroup::frobenius() const {
  return *std::max_element(apery_.begin(), apery_.end()) - base_;
}

std::vector<std::int64_t> NumericalSemigroup::apery_wrt(std::int64_t base) const {
  if (base <= 0 || !contains(base))
    throw SemigroupError("Apery base " + std::to_string(base) + " is not a positive member");
  if (base == base_) return apery_;
  std::vector<std::int64_t> out(static_cast<std::size_t>(base), -1);
  std::int64_t missing = base;
  for (std::int64_t n = 0; missing > 0; ++n) {
    if (!contains(n)) continue;
    auto& slot = out[static_cast<std::size_t>(n % base)];
    if (slot < 0) {
      slot = n;
      --missing;
    }
  }
  return out;
}

std::vector<std::int64_t> NumericalSemigroup::minimal_generators() const {
  std::vector<std::int64_t> out;
  // Every minimal generator other than the base lies in the Apery set.
  auto decomposes = [&](std::int64_t x) {
    for (std::int64_t y = 1; y <= x / 2; ++y)
      if (contains(y) && contains(x - y)) return true;
    return false;
  };
  if (!decomposes(base_)) out.push_back(base_);
  for (std::int64_t r = 1; r < base_; ++r) {
    const std::int64_t w = apery_[r];
    bool minimal = true;
    for (std::int64_t s = 1; s < base_ && minimal; ++s)
      if (s != r && apery_[s] < w && contains(w - apery_[s])) minimal = false;
    if (minimal) out.push_back(w);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool operator==(const NumericalSemigroup& a, const NumericalSemigroup& b) {
  if (a.base_ == b.base_) return a.apery_ == b.apery_;
  if (!a.contains(b.base_)) return false;
  return a.apery_wrt(b.base_) == b.apery_;
}

}  // namespace maxff
