#include "peuler/padic.hpp"

#include <algorithm>

namespace peuler {
namespace detail {

bool is_odd_prime(i64 p) {
    if (p < 3 || p % 2 == 0) return false;
    for (i64 d = 3; d * d <= p; d += 2)
        if (p % d == 0) return false;
    return true;
}

u64 mulmod(u64 a, u64 b, u64 m) {
    return u64((u128(a) * b) % m);
}

u64 powmod(u64 base, u64 exp, u64 m) {
    u64 r = 1 % m;
    base %= m;
    while (exp) {
        if (exp & 1) r = mulmod(r, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return r;
}

u64 invmod(u64 a, u64 m) {
    // extended Euclid on (a, m), tracking only the a-coefficient
    i64 old_r = i64(a % m), r = i64(m);
    i64 old_s = 1, s = 0;
    while (r != 0) {
        i64 q = old_r / r;
        i64 t = old_r - q * r;
        old_r = r;
        r = t;
        t = old_s - q * s;
        old_s = s;
        s = t;
    }
    if (old_r != 1) throw NotInvertible("invmod: element not coprime to modulus");
    i64 res = old_s % i64(m);
    if (res < 0) res += i64(m);
    return u64(res);
}

u64 pow_checked(i64 p, int e) {
    u64 r = 1;
    for (int i = 0; i < e; ++i) {
        if (r > kMaxModulus / u64(p))
            throw PrecisionError("requested precision exceeds the 64-bit-backed modulus range");
        r *= u64(p);
    }
    return r;
}

int max_digits(i64 p) {
    int e = 0;
    u64 r = 1;
    while (r <= kMaxModulus / u64(p)) {
        r *= u64(p);
        ++e;
    }
    return e;
}

namespace {

int strip_p(i64& n, i64 p) {
    int v = 0;
    while (n != 0 && n % p == 0) {
        n /= p;
        ++v;
    }
    return v;
}

}  // namespace
}  // namespace detail

using detail::mulmod;
using detail::pow_checked;

void PadicNumber::check_same_prime(const PadicNumber& b) const {
    if (p_ != b.p_) throw DomainError("mixed primes in p-adic arithmetic");
}

PadicNumber PadicNumber::zero(i64 p, int prec) {
    if (!detail::is_odd_prime(p)) throw DomainError("p must be an odd prime >= 3");
    if (prec < 1) throw PrecisionError("precision must be >= 1");
    return PadicNumber(p, prec, 0, 0, true);
}

PadicNumber PadicNumber::one(i64 p, int prec) {
    return make(p, prec, 1);
}

PadicNumber PadicNumber::from_parts(i64 p, int prec, int val, u64 residue) {
    if (!detail::is_odd_prime(p)) throw DomainError("p must be an odd prime >= 3");
    if (prec < 1) throw PrecisionError("precision must be >= 1");
    if (val >= prec) return PadicNumber(p, prec, 0, 0, true);
    u64 m = pow_checked(p, prec - val);
    u64 u = residue % m;
    if (u == 0) return PadicNumber(p, prec, 0, 0, true);
    while (u % u64(p) == 0) {
        u /= u64(p);
        ++val;
        if (val >= prec) return PadicNumber(p, prec, 0, 0, true);
    }
    u %= pow_checked(p, prec - val);
    return PadicNumber(p, prec, val, u, false);
}

PadicNumber PadicNumber::make(i64 p, int prec, i64 num, i64 den) {
    if (!detail::is_odd_prime(p)) throw DomainError("p must be an odd prime >= 3");
    if (prec < 1) throw PrecisionError("precision must be >= 1");
    if (den == 0) throw DomainError("zero denominator");
    if (num == 0) return PadicNumber(p, prec, 0, 0, true);

    int val = detail::strip_p(num, p) - detail::strip_p(den, p);
    if (val >= prec) return PadicNumber(p, prec, 0, 0, true);

    u64 m = pow_checked(p, prec - val);
    u64 n = num >= 0 ? u64(num) % m : m - (u64(-(num + 1)) + 1) % m;
    n %= m;
    u64 d = den >= 0 ? u64(den) % m : m - (u64(-(den + 1)) + 1) % m;
    d %= m;
    u64 u = mulmod(n, detail::invmod(d, m), m);
    return from_parts(p, prec, val, u);
}

PadicNumber PadicNumber::add(const PadicNumber& b) const {
    check_same_prime(b);
    int prec = std::min(prec_, b.prec_);
    if (zero_ && b.zero_) return PadicNumber(p_, prec, 0, 0, true);
    if (zero_) return b.reduce_prec(prec);
    if (b.zero_) return reduce_prec(prec);

    int v = std::min(val_, b.val_);
    if (prec <= v) return PadicNumber(p_, prec, 0, 0, true);
    u64 m = pow_checked(p_, prec - v);
    u64 ra = mulmod(unit_ % m, detail::powmod(u64(p_), u64(val_ - v), m), m);
    u64 rb = mulmod(b.unit_ % m, detail::powmod(u64(p_), u64(b.val_ - v), m), m);
    u64 r = ra + rb >= m ? ra + rb - m : ra + rb;
    return from_parts(p_, prec, v, r);
}

PadicNumber PadicNumber::neg() const {
    if (zero_) return *this;
    u64 m = pow_checked(p_, prec_ - val_);
    return PadicNumber(p_, prec_, val_, m - unit_, false);
}

PadicNumber PadicNumber::sub(const PadicNumber& b) const {
    return add(b.neg());
}

PadicNumber PadicNumber::mul(const PadicNumber& b) const {
    check_same_prime(b);
    // valuation lower bound of the zero state is its precision
    i64 va = zero_ ? prec_ : val_;
    i64 vb = b.zero_ ? b.prec_ : b.val_;
    i64 prec64 = std::min(i64(prec_) + vb, i64(b.prec_) + va);
    int prec = int(std::min<i64>(prec64, detail::max_digits(p_)));
    if (prec < 1) throw PrecisionError("product has no significant digits at this precision");
    if (zero_ || b.zero_) return PadicNumber(p_, prec, 0, 0, true);

    int val = val_ + b.val_;
    if (val >= prec) return PadicNumber(p_, prec, 0, 0, true);
    u64 m = pow_checked(p_, prec - val);
    return PadicNumber(p_, prec, val, mulmod(unit_ % m, b.unit_ % m, m), false);
}

PadicNumber PadicNumber::inv() const {
    if (zero_) throw DivisionByZero("inverse of zero");
    int digits = prec_ - val_;
    int prec = prec_ - 2 * val_;
    if (prec < 1) throw PrecisionError("inverse has no significant digits at this precision");
    u64 m = pow_checked(p_, digits);
    return PadicNumber(p_, prec, -val_, detail::invmod(unit_, m), false);
}

PadicNumber PadicNumber::pow_int(u64 n) const {
    if (n == 0) return one(p_, prec_);  // empty product, also for 0^0
    PadicNumber base = *this;
    PadicNumber r = one(p_, prec_);
    while (n) {
        if (n & 1) r = r.mul(base);
        if (n >>= 1) base = base.mul(base);
    }
    return r;
}

PadicNumber PadicNumber::reduce_prec(int m) const {
    if (m < 1) throw PrecisionError("precision must be >= 1");
    if (m >= prec_) return *this;
    if (zero_ || val_ >= m) return PadicNumber(p_, m, 0, 0, true);
    u64 w = pow_checked(p_, m - val_);
    return PadicNumber(p_, m, val_, unit_ % w, false);
}

u64 PadicNumber::residue(int k) const {
    if (k < 1 || k > prec_) throw PrecisionError("residue request beyond known precision");
    if (zero_) return 0;
    if (val_ < 0) throw DomainError("residue of a non-integral p-adic number");
    if (val_ >= k) return 0;
    u64 m = pow_checked(p_, k);
    return mulmod(unit_ % m, detail::powmod(u64(p_), u64(val_), m), m);
}

bool PadicNumber::equal_mod(const PadicNumber& b, int k) const {
    check_same_prime(b);
    if (k < 1) throw PrecisionError("congruence modulus exponent must be >= 1");
    if (prec_ < k || b.prec_ < k)
        throw PrecisionError("cannot certify congruence beyond known precision");
    PadicNumber d = sub(b);
    return d.is_zero() || d.valuation() >= k;
}

std::string PadicNumber::str() const {
    if (zero_)
        return "0 + O(" + std::to_string(p_) + "^" + std::to_string(prec_) + ")";
    return std::to_string(p_) + "^" + std::to_string(val_) + " * " + std::to_string(unit_) +
           " + O(" + std::to_string(p_) + "^" + std::to_string(prec_) + ")";
}

PadicNumber teichmuller(i64 a, i64 p, int prec) {
    if (!detail::is_odd_prime(p)) throw DomainError("p must be an odd prime >= 3");
    if (prec < 1) throw PrecisionError("precision must be >= 1");
    u64 m = pow_checked(p, prec);
    i64 r = a % i64(m);
    if (r < 0) r += i64(m);
    u64 x = u64(r);
    if (x % u64(p) == 0) throw DomainError("teichmuller: argument not a unit mod p");
    for (int i = 0; i <= prec + 1; ++i) {
        u64 y = detail::powmod(x, u64(p), m);
        if (y == x) return PadicNumber::from_parts(p, prec, 0, x);
        x = y;
    }
    throw ConvergenceError("teichmuller iteration failed to stabilize");
}

}  // namespace peuler
