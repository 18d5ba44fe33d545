#pragma once

#include <vector>

#include "peuler/udfunction.hpp"

namespace peuler {

// Bounded random-term options for verification trials.  Twist bases are
// drawn from 1 + pZ_p (principal units), the class for which the
// translation identities provably hold; scalars are small rationals whose
// denominators avoid p, so every term is Z_p-valued.
struct CorpusOptions {
    int max_degree = 6;
    int max_twists = 2;
    int max_terms = 3;
    bool allow_shift = true;
};

// Deterministic: the same (seed, p, prec, count) yields the same terms on
// every platform (raw mt19937_64 outputs, no library distributions).
std::vector<UDFunction> random_corpus(u64 seed, i64 p, int prec, int count,
                                      const CorpusOptions& opt = {});

}  // namespace peuler
