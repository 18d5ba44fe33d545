#include "peuler/corpus.hpp"

#include <random>

namespace peuler {

namespace {

struct Rng {
    std::mt19937_64 engine;
    explicit Rng(u64 seed) : engine(seed) {}
    u64 next(u64 bound) { return engine() % bound; }  // slight bias is irrelevant here
    i64 signed_small(i64 half_range) { return i64(next(u64(2 * half_range + 1))) - half_range; }
};

}  // namespace

std::vector<UDFunction> random_corpus(u64 seed, i64 p, int prec, int count,
                                      const CorpusOptions& opt) {
    Rng rng(seed);
    std::vector<UDFunction> out;
    out.reserve(size_t(count));
    for (int i = 0; i < count; ++i) {
        int terms = 1 + int(rng.next(u64(opt.max_terms)));
        int twists_left = opt.max_twists;
        UDFunction f = UDFunction::constant(PadicNumber::zero(p, prec));
        for (int t = 0; t < terms; ++t) {
            i64 c = rng.signed_small(9);
            if (c == 0) c = 1;
            i64 den = rng.next(3) == 0 ? 2 : 1;  // odd p: 2 is always a unit
            UDFunction term = UDFunction::constant(PadicNumber::make(p, prec, c, den));
            int deg = int(rng.next(u64(opt.max_degree + 1)));
            if (deg > 0)
                term = UDFunction::product(term, UDFunction::monomial(p, prec, deg));
            if (twists_left > 0 && rng.next(2) == 0) {
                --twists_left;
                i64 lam = 1 + p * i64(1 + rng.next(3));
                term = UDFunction::product(term, UDFunction::twist(PadicNumber::make(p, prec, lam)));
            }
            if (opt.allow_shift && rng.next(4) == 0) term = shift(term, i64(1 + rng.next(3)));
            f = (t == 0) ? term : UDFunction::sum(f, term);
        }
        out.push_back(f);
    }
    return out;
}

}  // namespace peuler
