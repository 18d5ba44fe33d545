#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace peuler {

// Error taxonomy shared by the whole library.  The CLI maps these onto
// distinct exit codes, so keep the hierarchy flat and the names stable.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DomainError : Error {
    using Error::Error;
};
struct PrecisionError : Error {
    using Error::Error;
};
struct DivisionByZero : Error {
    using Error::Error;
};
struct NotInvertible : Error {
    using Error::Error;
};
struct ConvergenceError : Error {
    using Error::Error;
};

using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;

namespace detail {

// Every residue modulus p^k handled by the library must stay below this
// bound so that a*b fits in a u128 and p^k itself fits in an i64.
inline constexpr u64 kMaxModulus = u64(1) << 62;

bool is_odd_prime(i64 p);
u64 mulmod(u64 a, u64 b, u64 m);
u64 powmod(u64 base, u64 exp, u64 m);
u64 invmod(u64 a, u64 m);  // throws NotInvertible when gcd(a, m) != 1
u64 pow_checked(i64 p, int e);  // p^e, throws PrecisionError past kMaxModulus
int max_digits(i64 p);          // largest e with p^e < kMaxModulus

}  // namespace detail

// An element of Q_p known modulo p^prec (absolute precision model).
//
// Canonical form of a non-zero value: p^val * unit with
//   unit in [0, p^(prec-val)),  unit % p != 0,  val < prec.
// A value whose residue vanishes at the stated precision collapses to the
// distinguished zero state, so identities can be asserted exactly: x - x
// is zero(prec), not an un-normalized residue.  Instances are immutable;
// all operations return the provably correct precision, never optimistic.
class PadicNumber {
public:
    static constexpr int kInfValuation = std::numeric_limits<int>::max();

    // Canonical embedding of num/den into Q_p.  The p-part of the fraction
    // moves into the valuation; the denominator must otherwise be coprime
    // to p (it always is after stripping).  A rational whose valuation is
    // >= prec is invisible at this precision and yields zero(prec).
    static PadicNumber make(i64 p, int prec, i64 num, i64 den = 1);
    static PadicNumber zero(i64 p, int prec);
    static PadicNumber one(i64 p, int prec);
    // Normalizing constructor from raw parts: value = p^val * residue where
    // residue is interpreted modulo p^(prec - val).
    static PadicNumber from_parts(i64 p, int prec, int val, u64 residue);

    i64 prime() const { return p_; }
    int prec() const { return prec_; }
    bool is_zero() const { return zero_; }
    // unit part in [0, p^(prec-val)); 0 for the zero state
    u64 unit() const { return unit_; }
    // p-adic valuation; kInfValuation for the zero state
    int valuation() const { return zero_ ? kInfValuation : val_; }
    bool is_padic_integer() const { return zero_ || val_ >= 0; }
    bool is_unit() const { return !zero_ && val_ == 0; }

    PadicNumber add(const PadicNumber& b) const;
    PadicNumber sub(const PadicNumber& b) const;
    PadicNumber neg() const;
    // Result precision is min(a.prec + b.val, b.prec + a.val): the honest
    // absolute precision of a product of approximate values.
    PadicNumber mul(const PadicNumber& b) const;
    PadicNumber inv() const;        // throws DivisionByZero on zero
    PadicNumber pow_int(u64 n) const;  // x^0 == 1, also for x == 0
    // Forget digits beyond absolute precision m (no-op when m >= prec).
    PadicNumber reduce_prec(int m) const;

    // Integer representative of the value mod p^k, for 1 <= k <= prec.
    // Requires val >= 0 (a p-adic integer).
    u64 residue(int k) const;
    // Congruence a == b (mod p^k); both operands must carry >= k digits.
    bool equal_mod(const PadicNumber& b, int k) const;

    // Exact tuple equality (same prime, precision, canonical parts).
    friend bool operator==(const PadicNumber& a, const PadicNumber& b) {
        return a.p_ == b.p_ && a.zero_ == b.zero_ && a.val_ == b.val_ &&
               a.unit_ == b.unit_ && a.prec_ == b.prec_;
    }
    friend bool operator!=(const PadicNumber& a, const PadicNumber& b) { return !(a == b); }

    friend PadicNumber operator+(const PadicNumber& a, const PadicNumber& b) { return a.add(b); }
    friend PadicNumber operator-(const PadicNumber& a, const PadicNumber& b) { return a.sub(b); }
    friend PadicNumber operator*(const PadicNumber& a, const PadicNumber& b) { return a.mul(b); }
    friend PadicNumber operator-(const PadicNumber& a) { return a.neg(); }

    // "p^val * unit + O(p^prec)", or "0 + O(p^prec)" for the zero state.
    std::string str() const;

private:
    PadicNumber(i64 p, int prec, int val, u64 unit, bool zero)
        : p_(p), prec_(prec), val_(val), unit_(unit), zero_(zero) {}

    void check_same_prime(const PadicNumber& b) const;

    i64 p_;
    int prec_;
    int val_;
    u64 unit_;
    bool zero_;
};

inline PadicNumber inv(const PadicNumber& a) { return a.inv(); }
inline PadicNumber pow_int(const PadicNumber& a, u64 n) { return a.pow_int(n); }
inline int valuation(const PadicNumber& a) { return a.valuation(); }

// The Teichmuller lift: the unique (p-1)-th root of unity congruent to a
// mod p, computed by iterating x <- x^p until stable mod p^prec.
PadicNumber teichmuller(i64 a, i64 p, int prec);

// Target precision for a computation: results are reported mod
// p^working_prec; guard_digits only widens internal truncation levels
// (summation lengths), never the reported precision.
struct PrecisionPolicy {
    int working_prec = 6;
    int guard_digits = 2;

    void validate() const {
        if (working_prec < 1) throw PrecisionError("working_prec must be >= 1");
        if (guard_digits < 0) throw PrecisionError("guard_digits must be >= 0");
    }
};

}  // namespace peuler
