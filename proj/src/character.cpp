#include "peuler/character.hpp"

#include <algorithm>

namespace peuler {

namespace {

constexpr i64 kMaxModulusF = 100000;

i64 gcd_i64(i64 a, i64 b) {
    while (b) {
        i64 t = a % b;
        a = b;
        b = t;
    }
    return a < 0 ? -a : a;
}

i64 powmod_i64(i64 b, i64 e, i64 m) {
    i64 r = 1 % m;
    b %= m;
    while (e) {
        if (e & 1) r = r * b % m;
        b = b * b % m;
        e >>= 1;
    }
    return r;
}

std::vector<i64> prime_factors(i64 n) {
    std::vector<i64> fs;
    for (i64 d = 2; d * d <= n; ++d)
        if (n % d == 0) {
            fs.push_back(d);
            while (n % d == 0) n /= d;
        }
    if (n > 1) fs.push_back(n);
    return fs;
}

i64 primitive_root(i64 q) {
    auto fs = prime_factors(q - 1);
    for (i64 g = 2; g < q; ++g) {
        bool ok = true;
        for (i64 f : fs)
            if (powmod_i64(g, (q - 1) / f, q) == 1) {
                ok = false;
                break;
            }
        if (ok) return g;
    }
    throw DomainError("primitive_root: modulus is not prime");
}

void check_modulus(i64 modulus, i64 p) {
    if (modulus < 1 || modulus % 2 == 0)
        throw DomainError("character modulus must be an odd positive integer");
    if (modulus > kMaxModulusF) throw DomainError("character modulus too large");
    if (gcd_i64(modulus, p) != 1) throw DomainError("character modulus must be coprime to p");
}

}  // namespace

DirichletCharacter make_character(CharacterKind kind, i64 modulus, i64 p, int prec, int power) {
    if (!detail::is_odd_prime(p)) throw DomainError("p must be an odd prime >= 3");
    if (prec < 1) throw PrecisionError("precision must be >= 1");
    check_modulus(modulus, p);

    PadicNumber one = PadicNumber::one(p, prec);
    PadicNumber zero = PadicNumber::zero(p, prec);

    switch (kind) {
        case CharacterKind::trivial: {
            std::vector<PadicNumber> vals;
            vals.reserve(size_t(modulus));
            for (i64 a = 0; a < modulus; ++a)
                vals.push_back(gcd_i64(a, modulus) == 1 ? one : zero);
            return DirichletCharacter(modulus, p, prec, "trivial:" + std::to_string(modulus),
                                      std::move(vals));
        }
        case CharacterKind::quadratic: {
            if (!detail::is_odd_prime(modulus))
                throw DomainError("quadratic kind requires an odd prime modulus");
            std::vector<PadicNumber> vals;
            vals.reserve(size_t(modulus));
            vals.push_back(zero);
            for (i64 a = 1; a < modulus; ++a) {
                i64 ls = powmod_i64(a, (modulus - 1) / 2, modulus);  // Euler criterion
                vals.push_back(ls == 1 ? one : one.neg());
            }
            return DirichletCharacter(modulus, p, prec, "quad:" + std::to_string(modulus),
                                      std::move(vals));
        }
        case CharacterKind::teichmuller_power: {
            if (!detail::is_odd_prime(modulus))
                throw DomainError("teichmuller_power kind requires an odd prime modulus");
            i64 order = gcd_i64(modulus - 1, p - 1);
            // zeta: a primitive order-th root of unity in Z_p, as a power of
            // the Teichmuller lift of a primitive root mod p
            PadicNumber zeta = teichmuller(primitive_root(p), p, prec).pow_int(u64((p - 1) / order));
            i64 j = ((power % order) + order) % order;
            std::vector<PadicNumber> zpow;
            zpow.reserve(size_t(order));
            zpow.push_back(one);
            for (i64 k = 1; k < order; ++k) zpow.push_back(zpow.back().mul(zeta));

            std::vector<PadicNumber> vals(size_t(modulus), zero);
            i64 g = primitive_root(modulus);
            i64 idx = 1, e = 0;
            for (i64 k = 0; k < modulus - 1; ++k) {
                vals[size_t(idx)] = zpow[size_t(e)];
                idx = idx * g % modulus;
                e = (e + j) % order;
            }
            return DirichletCharacter(
                modulus, p, prec,
                "teich^" + std::to_string(j) + ":" + std::to_string(modulus), std::move(vals));
        }
    }
    throw DomainError("unknown character kind");
}

DirichletCharacter compose(const DirichletCharacter& a, const DirichletCharacter& b) {
    if (a.prime() != b.prime()) throw DomainError("mixed primes in character composition");
    if (gcd_i64(a.modulus(), b.modulus()) != 1)
        throw DomainError("character composition requires coprime moduli");
    i64 modulus = a.modulus() * b.modulus();
    check_modulus(modulus, a.prime());
    int prec = std::min(a.prec(), b.prec());
    std::vector<PadicNumber> vals;
    vals.reserve(size_t(modulus));
    for (i64 x = 0; x < modulus; ++x) vals.push_back(a.at(x).mul(b.at(x)).reduce_prec(prec));
    return DirichletCharacter(modulus, a.prime(), prec, a.label() + "*" + b.label(),
                              std::move(vals));
}

}  // namespace peuler
