#include "peuler/binomial.hpp"

#include <array>

namespace peuler {

namespace {

constexpr int kRows = kMaxBinomialRow + 1;

std::array<std::array<u64, kRows>, kRows> build_pascal() {
    std::array<std::array<u64, kRows>, kRows> t{};
    for (int n = 0; n < kRows; ++n) {
        t[n][0] = t[n][n] = 1;
        for (int k = 1; k < n; ++k) t[n][k] = t[n - 1][k - 1] + t[n - 1][k];
    }
    return t;
}

}  // namespace

u64 binomial_u64(int n, int k) {
    static const auto table = build_pascal();
    if (n < 0 || k < 0 || k > n) return 0;
    if (n > kMaxBinomialRow)
        throw DomainError("binomial_u64: row exceeds exact 64-bit range");
    return table[n][k];
}

}  // namespace peuler
