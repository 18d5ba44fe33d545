#pragma once

#include "peuler/padic.hpp"

namespace peuler {

// Largest n for which every C(n, k) fits in a u64.
inline constexpr int kMaxBinomialRow = 66;

// Exact C(n, k) by Pascal's rule in integer arithmetic; the caller embeds
// the result mod p^prec, avoiding p-adic precision loss from factorial
// division.  Throws DomainError for n > kMaxBinomialRow.
u64 binomial_u64(int n, int k);

}  // namespace peuler
