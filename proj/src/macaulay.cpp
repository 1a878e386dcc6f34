#include "socle/macaulay.hpp"

#include <limits>

namespace socle {

Int binom(const Int& n, unsigned long k) {
  if (n < 0) throw std::invalid_argument("binom: n must be non-negative");
  Int out;
  mpz_bin_ui(out.get_mpz_t(), n.get_mpz_t(), k);
  return out;
}

Int monomial_count(int r, int d) {
  if (r < 1) throw std::invalid_argument("monomial_count: need at least one variable");
  if (d < 0) throw std::invalid_argument("monomial_count: negative degree");
  return binom(Int(r - 1 + d), static_cast<unsigned long>(d));
}

std::size_t monomial_count_checked(int r, int d) {
  static constexpr unsigned long kMaxMaterialized = 8'000'000ul;
  Int n = monomial_count(r, d);
  if (!n.fits_ulong_p() || n.get_ui() > kMaxMaterialized)
    throw std::invalid_argument("monomial space of degree " + std::to_string(d) + " in " +
                                std::to_string(r) + " variables is too large to materialize");
  return static_cast<std::size_t>(n.get_ui());
}

Int BinomialExpansion::value() const {
  Int sum = 0;
  for (const auto& [top, bottom] : terms) sum += binom(top, static_cast<unsigned long>(bottom));
  return sum;
}

namespace {

// Largest m with C(m, k) <= target, for k >= 1, target >= 1.
Int largest_top(const Int& target, int k) {
  const auto uk = static_cast<unsigned long>(k);
  if (k == 1) return target;
  Int lo = k;  // C(k, k) = 1 <= target
  Int hi = Int(k) + 1;
  while (binom(hi, uk) <= target) {
    lo = hi;
    hi *= 2;
  }
  while (lo + 1 < hi) {
    Int mid = (lo + hi) / 2;
    if (binom(mid, uk) <= target)
      lo = mid;
    else
      hi = mid;
  }
  return lo;
}

}  // namespace

BinomialExpansion expand(const Int& n, int i) {
  if (n < 0) throw std::invalid_argument("expand: n must be non-negative");
  if (i < 1) throw std::invalid_argument("expand: expansion index must be positive");

  BinomialExpansion out;
  out.index = i;
  Int rem = n;
  int k = i;
  while (rem > 0) {
    internal_check(k >= 1, "binomial expansion ran out of bottom indices");
    Int top = largest_top(rem, k);
    if (!out.terms.empty())
      internal_check(top < out.terms.back().first, "expansion tops must strictly decrease");
    rem -= binom(top, static_cast<unsigned long>(k));
    out.terms.emplace_back(std::move(top), k);
    --k;
  }
  return out;
}

Int shift(const BinomialExpansion& expansion, int a) {
  if (expansion.terms.empty()) return 0;
  const int j = expansion.terms.back().second;
  if (a < -j)
    throw std::invalid_argument("shift: a = " + std::to_string(a) +
                                " drops below the smallest bottom index " + std::to_string(j));
  Int sum = 0;
  for (const auto& [top, bottom] : expansion.terms)
    sum += binom(top + a, static_cast<unsigned long>(bottom + a));
  return sum;
}

Int macaulay_bound(const Int& h_d, int d) {
  if (h_d < 1) throw std::invalid_argument("macaulay_bound: entry must be positive");
  if (d < 1) throw std::invalid_argument("macaulay_bound: degree must be positive");
  return shift(expand(h_d, d), +1);
}

Int min_prev(const Int& a, int b) {
  if (a < 1) throw std::invalid_argument("min_prev: value must be positive");
  if (b < 2) throw std::invalid_argument("min_prev: index must be at least 2");
  return shift(expand(a, b), -1);
}

}  // namespace socle
