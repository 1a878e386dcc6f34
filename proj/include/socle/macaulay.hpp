#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace socle {

using Int = mpz_class;
using Rat = mpq_class;

inline void internal_check(bool ok, const char* what) {
  if (!ok) throw std::logic_error(std::string("internal invariant violated: ") + what);
}

/// C(n, k), exact; C(n, k) = 0 for k > n and C(n, 0) = 1. Requires n >= 0.
Int binom(const Int& n, unsigned long k);

/// dim_k R_d for R = k[x_1..x_r], i.e. C(r - 1 + d, d).
Int monomial_count(int r, int d);

/// Same, but as a container size; throws when the count is too large to materialize.
std::size_t monomial_count_checked(int r, int d);

/// Greedy decomposition n = C(n_i, i) + C(n_{i-1}, i-1) + ... + C(n_j, j)
/// with n_i > n_{i-1} > ... > n_j >= j >= 1.  Unique for n >= 1; the
/// expansion of 0 is the empty term list.
struct BinomialExpansion {
  int index = 0;                            // the i the expansion was taken at
  std::vector<std::pair<Int, int>> terms;   // (top, bottom), bottoms i, i-1, ...

  Int value() const;
};

BinomialExpansion expand(const Int& n, int i);

/// Sum of C(top + a, bottom + a) over the terms; 0 for the empty expansion.
/// Rejects a < -j where j is the smallest bottom.
Int shift(const BinomialExpansion& expansion, int a);

/// Largest admissible next entry after h_d in degree d of an O-sequence.
Int macaulay_bound(const Int& h_d, int d);

/// Smallest c with a <= macaulay_bound(c, b - 1), for a >= 1, b >= 2.
Int min_prev(const Int& a, int b);

}  // namespace socle
