#include "peuler/measure.hpp"

#include <algorithm>
#include <cstdlib>
#include <future>
#include <numeric>
#include <optional>
#include <thread>
#include <vector>

#include "peuler/binomial.hpp"

namespace peuler {
namespace {

constexpr u64 kMaxSumTerms = u64(1) << 33;
constexpr int kMaxStabilitySteps = 4;
constexpr size_t kMaxComponents = 256;
constexpr i64 kMaxTablePeriod = 100000;

// Modular residue arithmetic with a Barrett fast path for moduli < 2^32
// (all desk-scale sums); wider moduli fall back to u128 division.
struct Mod {
    u64 m = 1;
    bool wide = false;
    u64 im = 0;  // floor(2^64 / m)

    explicit Mod(u64 modulus) : m(modulus) {
        wide = m >= (u64(1) << 32);
        if (!wide) im = u64((u128(1) << 64) / m);
    }
    u64 add(u64 a, u64 b) const {
        u64 s = a + b;
        return s >= m ? s - m : s;
    }
    u64 sub(u64 a, u64 b) const { return a >= b ? a - b : a + m - b; }
    u64 reduce(u64 x) const {
        u64 q = u64((u128(x) * im) >> 64);
        u64 r = x - q * m;
        while (r >= m) r -= m;
        return r;
    }
    u64 mul(u64 a, u64 b) const {
        if (!wide) return reduce(a * b);
        return u64((u128(a) * b) % m);
    }
    u64 pow(u64 b, u64 e) const {
        u64 r = 1 % m;
        b %= m;
        while (e) {
            if (e & 1) r = mul(r, b);
            b = mul(b, b);
            e >>= 1;
        }
        return r;
    }
};

// ---------------------------------------------------------------------
// Normal form: f(x) = sum over components of P(x) * lambda^x * T(x),
// with P a polynomial, lambda a twist base and T a periodic table (the
// character factors, offsets folded in).  Shifts were already pushed to
// the leaves by the DSL, products multiply out pairwise.
// ---------------------------------------------------------------------

struct PeriodicPart {
    i64 period = 1;
    std::vector<PadicNumber> values;
};

struct Component {
    std::vector<PadicNumber> poly;  // coefficients c0..cD of P
    std::optional<PadicNumber> twist;
    std::optional<PeriodicPart> table;
};

using NormalForm = std::vector<Component>;

std::vector<PadicNumber> poly_mul(const std::vector<PadicNumber>& a,
                                  const std::vector<PadicNumber>& b, i64 p, int prec) {
    if (a.size() + b.size() - 1 > 65)
        throw DomainError("compiled polynomial degree exceeds the supported cap");
    std::vector<PadicNumber> c(a.size() + b.size() - 1, PadicNumber::zero(p, prec));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) c[i + j] = c[i + j].add(a[i].mul(b[j]));
    return c;
}

i64 lcm_period(i64 a, i64 b) {
    i64 g = std::gcd(a, b);
    i64 l = a / g * b;
    if (l > kMaxTablePeriod) throw DomainError("combined character period too large");
    return l;
}

bool same_twist(const std::optional<PadicNumber>& a, const std::optional<PadicNumber>& b) {
    if (a.has_value() != b.has_value()) return false;
    return !a.has_value() || *a == *b;
}

bool same_table(const std::optional<PeriodicPart>& a, const std::optional<PeriodicPart>& b) {
    if (a.has_value() != b.has_value()) return false;
    if (!a.has_value()) return true;
    return a->period == b->period && a->values == b->values;
}

void append_merged(NormalForm& out, Component c, i64 p, int prec) {
    for (Component& e : out) {
        if (!same_twist(e.twist, c.twist) || !same_table(e.table, c.table)) continue;
        if (e.poly.size() < c.poly.size()) e.poly.resize(c.poly.size(), PadicNumber::zero(p, prec));
        for (size_t i = 0; i < c.poly.size(); ++i) e.poly[i] = e.poly[i].add(c.poly[i]);
        return;
    }
    out.push_back(std::move(c));
    if (out.size() > kMaxComponents) throw DomainError("DSL term too large to compile");
}

Component mul_components(const Component& a, const Component& b, i64 p, int prec) {
    Component r;
    r.poly = poly_mul(a.poly, b.poly, p, prec);
    if (a.twist && b.twist)
        r.twist = a.twist->mul(*b.twist);
    else
        r.twist = a.twist ? a.twist : b.twist;
    if (a.table && b.table) {
        PeriodicPart t;
        t.period = lcm_period(a.table->period, b.table->period);
        t.values.reserve(size_t(t.period));
        for (i64 x = 0; x < t.period; ++x)
            t.values.push_back(a.table->values[size_t(x % a.table->period)].mul(
                b.table->values[size_t(x % b.table->period)]));
        r.table = std::move(t);
    } else {
        r.table = a.table ? a.table : b.table;
    }
    return r;
}

NormalForm normalize(const UDFunction::Node& n, i64 p, int prec) {
    using Kind = UDFunction::Kind;
    switch (n.kind) {
        case Kind::kConst: {
            Component c;
            c.poly = {*n.scalar};
            return {std::move(c)};
        }
        case Kind::kMonomial: {
            // (x + off)^d expanded in the monomial basis
            Component c;
            PadicNumber off = PadicNumber::make(p, prec, n.offset);
            c.poly.assign(size_t(n.degree) + 1, PadicNumber::zero(p, prec));
            PadicNumber opow = PadicNumber::one(p, prec);  // off^(d-k), built downward
            for (int k = n.degree; k >= 0; --k) {
                c.poly[size_t(k)] =
                    PadicNumber::make(p, prec, i64(binomial_u64(n.degree, k))).mul(opow);
                if (k > 0) opow = opow.mul(off);
            }
            return {std::move(c)};
        }
        case Kind::kTwist: {
            Component c;
            c.poly = {PadicNumber::one(p, prec)};
            c.twist = *n.scalar;
            return {std::move(c)};
        }
        case Kind::kCharacter: {
            Component c;
            c.poly = {PadicNumber::one(p, prec)};
            PeriodicPart t;
            t.period = n.chi->modulus();
            t.values.reserve(size_t(t.period));
            for (i64 i = 0; i < t.period; ++i) t.values.push_back(n.chi->at(i + n.offset));
            c.table = std::move(t);
            return {std::move(c)};
        }
        case Kind::kSum: {
            NormalForm l = normalize(*n.lhs, p, prec);
            NormalForm r = normalize(*n.rhs, p, prec);
            for (Component& c : r) append_merged(l, std::move(c), p, prec);
            return l;
        }
        case Kind::kProduct: {
            NormalForm l = normalize(*n.lhs, p, prec);
            NormalForm r = normalize(*n.rhs, p, prec);
            NormalForm out;
            for (const Component& a : l)
                for (const Component& b : r) append_merged(out, mul_components(a, b, p, prec), p, prec);
            return out;
        }
        case Kind::kScale: {
            NormalForm l = normalize(*n.lhs, p, prec);
            for (Component& c : l)
                for (PadicNumber& coeff : c.poly) coeff = n.scalar->mul(coeff);
            return l;
        }
    }
    throw DomainError("corrupt DSL term");
}

bool fast_eligible(const NormalForm& nf, const std::optional<PadicNumber>& q) {
    if (q && !q->is_padic_integer()) return false;
    for (const Component& c : nf) {
        for (const PadicNumber& a : c.poly)
            if (!a.is_padic_integer()) return false;
        if (c.twist && !c.twist->is_padic_integer()) return false;
        if (c.table)
            for (const PadicNumber& a : c.table->values)
                if (!a.is_padic_integer()) return false;
    }
    return true;
}

// ---------------------------------------------------------------------
// Fast path: residues mod p^E.  Polynomials advance by forward-difference
// tables (degree many additions per point), twists and the q-weight by one
// multiplication, tables by a rotating index.
// ---------------------------------------------------------------------

struct FastComponent {
    std::vector<u64> poly;  // coefficient residues
    std::optional<u64> twist;
    std::vector<u64> table;
};

u64 gcd_u64(u64 a, u64 b) {
    while (b) {
        u64 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

std::vector<u64> small_prime_factors(u64 n) {
    std::vector<u64> fs;
    for (u64 d = 2; d * d <= n; ++d)
        if (n % d == 0) {
            fs.push_back(d);
            while (n % d == 0) n /= d;
        }
    if (n > 1) fs.push_back(n);
    return fs;
}

struct FastSum {
    Mod mod;
    i64 p;
    std::vector<FastComponent> comps;
    std::optional<u64> qbase;

    FastSum(const NormalForm& nf, const std::optional<PadicNumber>& q, u64 modulus, int prec,
            i64 prime)
        : mod(modulus), p(prime) {
        comps.reserve(nf.size());
        for (const Component& c : nf) {
            FastComponent fc;
            fc.poly.reserve(c.poly.size());
            for (const PadicNumber& a : c.poly) fc.poly.push_back(a.residue(prec) % modulus);
            if (c.twist) fc.twist = c.twist->residue(prec) % modulus;
            if (c.table) {
                fc.table.reserve(c.table->values.size());
                for (const PadicNumber& a : c.table->values)
                    fc.table.push_back(a.residue(prec) % modulus);
            }
            comps.push_back(std::move(fc));
        }
        if (q) qbase = q->residue(prec) % modulus;
    }

    u64 horner(const std::vector<u64>& poly, u64 xr) const {
        u64 v = 0;
        for (size_t i = poly.size(); i-- > 0;) v = mod.add(mod.mul(v, xr), poly[i]);
        return v;
    }

    // multiplicative order of a unit b mod p^E, a divisor of (p-1) p^(E-1)
    u64 unit_order(u64 b) const {
        u64 phi = u64(p) - 1;
        u64 pk = u64(p);
        while (pk < mod.m) {
            phi *= u64(p);
            pk *= u64(p);
        }
        std::vector<u64> fs = small_prime_factors(u64(p) - 1);
        if (phi > u64(p) - 1) fs.push_back(u64(p));
        u64 ord = phi;
        for (u64 f : fs)
            while (ord % f == 0 && mod.pow(b, ord / f) == 1) ord /= f;
        return ord;
    }

    // Residues of (-1)^x f(x) repeat with this even period: the polynomial
    // part has period p^E, unit twists their multiplicative order, tables
    // their own period.  Returns 0 when no finite period applies (a twist
    // base divisible by p is eventually zero, not periodic).
    u64 block_period() const {
        u64 lcm = mod.m;
        auto fold = [&](u64 t) {
            u64 g = gcd_u64(lcm, t);
            lcm = lcm / g * t;
        };
        for (const FastComponent& c : comps) {
            if (c.twist) {
                if (*c.twist % u64(p) == 0) return 0;
                fold(unit_order(*c.twist));
            }
            if (!c.table.empty()) fold(u64(c.table.size()));
        }
        if (qbase) {
            if (*qbase % u64(p) == 0) return 0;
            fold(unit_order(*qbase));
        }
        return 2 * lcm;
    }

    // sum_{x in [begin, end)} (-1)^x q^x f(x) as a residue
    u64 run(u64 begin, u64 end) const {
        struct State {
            std::vector<u64> diff;
            u64 treg = 1, tbase = 1;
            bool has_twist = false;
            const u64* table = nullptr;
            size_t tlen = 0, tidx = 0;
        };
        std::vector<State> st(comps.size());
        for (size_t i = 0; i < comps.size(); ++i) {
            const FastComponent& c = comps[i];
            State& s = st[i];
            // difference table: P(x0), dP(x0), d^2 P(x0), ...
            size_t d = c.poly.size();
            std::vector<u64> row(d);
            for (size_t j = 0; j < d; ++j) row[j] = horner(c.poly, (begin + j) % mod.m);
            s.diff.resize(d);
            for (size_t lvl = 0; lvl < d; ++lvl) {
                s.diff[lvl] = row[0];
                for (size_t j = 0; j + 1 < d - lvl; ++j) row[j] = mod.sub(row[j + 1], row[j]);
            }
            if (c.twist) {
                s.has_twist = true;
                s.tbase = *c.twist;
                s.treg = mod.pow(s.tbase, begin);
            }
            if (!c.table.empty()) {
                s.table = c.table.data();
                s.tlen = c.table.size();
                s.tidx = size_t(begin % s.tlen);
            }
        }
        u64 qreg = 1, qb = 1;
        bool has_q = qbase.has_value();
        if (has_q) {
            qb = *qbase;
            qreg = mod.pow(qb, begin);
        }

        u64 acc = 0;
        bool odd = (begin & 1) != 0;
        for (u64 x = begin; x < end; ++x) {
            u64 v = 0;
            for (State& s : st) {
                u64 t = s.diff[0];
                for (size_t k = 0; k + 1 < s.diff.size(); ++k)
                    s.diff[k] = mod.add(s.diff[k], s.diff[k + 1]);
                if (s.has_twist) {
                    t = mod.mul(t, s.treg);
                    s.treg = mod.mul(s.treg, s.tbase);
                }
                if (s.table) {
                    t = mod.mul(t, s.table[s.tidx]);
                    if (++s.tidx == s.tlen) s.tidx = 0;
                }
                v = mod.add(v, t);
            }
            if (has_q) {
                v = mod.mul(v, qreg);
                qreg = mod.mul(qreg, qb);
            }
            acc = odd ? mod.sub(acc, v) : mod.add(acc, v);
            odd = !odd;
        }
        return acc;
    }
};

unsigned sum_threads() {
    if (const char* env = std::getenv("PEULER_THREADS")) {
        long n = std::strtol(env, nullptr, 10);
        if (n >= 1 && n <= 64) return unsigned(n);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return std::clamp(hw, 1u, 8u);
}

// ---------------------------------------------------------------------
// Accumulator over growing ranges; chunks are combined by exact modular
// addition, so any split yields bit-identical totals.
// ---------------------------------------------------------------------

class AlternatingSummer {
public:
    AlternatingSummer(const UDFunction& f, const std::optional<PadicNumber>& q)
        : f_(f), q_(q), prec_(f.prec()), p_(f.prime()) {
        if (q_) {
            if (q_->prime() != p_) throw DomainError("q must share the term's prime");
            prec_ = std::min(prec_, q_->prec());
        }
        nf_ = normalize(*f.root().get(), p_, prec_);
        int maxd = detail::max_digits(p_);
        fast_ = prec_ <= maxd && fast_eligible(nf_, q_);
        if (fast_) {
            modulus_ = detail::pow_checked(p_, prec_);
            fs_.emplace(nf_, q_, modulus_, prec_, p_);
            block_ = fs_->block_period();
            acc_fast_ = 0;
        } else {
            acc_slow_ = PadicNumber::zero(p_, prec_);
        }
    }

    void extend(u64 begin, u64 end) {
        if (end <= begin) return;
        if (fast_) {
            // residues repeat every block_ points, so a long range is k
            // identical blocks plus a tail; k * block is exact mod p^E
            if (block_ != 0 && end - begin >= 2 * block_) {
                u64 k = (end - begin) / block_;
                u64 blocksum = run_fast(begin, begin + block_);
                acc_fast_ = fs_->mod.add(acc_fast_, fs_->mod.mul(k % fs_->mod.m, blocksum));
                begin += k * block_;
                if (begin >= end) return;
            }
            acc_fast_ = fs_->mod.add(acc_fast_, run_fast(begin, end));
        } else {
            std::optional<PadicNumber> qreg;
            if (q_) qreg = q_->pow_int(begin);
            PadicNumber acc = *acc_slow_;
            for (u64 x = begin; x < end; ++x) {
                PadicNumber v = f_.eval(i64(x));
                if (qreg) {
                    v = v.mul(*qreg);
                    qreg = qreg->mul(*q_);
                }
                acc = (x & 1) ? acc.sub(v) : acc.add(v);
            }
            acc_slow_ = acc;
        }
    }

    PadicNumber total() const {
        if (fast_) return PadicNumber::from_parts(p_, prec_, 0, acc_fast_);
        return *acc_slow_;
    }

private:
    u64 run_fast(u64 begin, u64 end) const {
        u64 len = end - begin;
        unsigned nt = len >= (u64(1) << 18) ? sum_threads() : 1;
        if (nt <= 1) return fs_->run(begin, end);
        u64 chunk = len / nt;
        std::vector<std::future<u64>> parts;
        parts.reserve(nt);
        for (unsigned t = 0; t < nt; ++t) {
            u64 b = begin + t * chunk;
            u64 e = t + 1 == nt ? end : b + chunk;
            parts.push_back(
                std::async(std::launch::async, [this, b, e] { return fs_->run(b, e); }));
        }
        u64 acc = 0;
        for (auto& part : parts) acc = fs_->mod.add(acc, part.get());
        return acc;
    }
    const UDFunction& f_;
    std::optional<PadicNumber> q_;
    int prec_;
    i64 p_;
    NormalForm nf_;
    bool fast_ = false;
    u64 modulus_ = 0;
    u64 block_ = 0;
    std::optional<FastSum> fs_;
    u64 acc_fast_ = 0;
    std::optional<PadicNumber> acc_slow_;
};

u64 checked_length(i64 p, i64 d, int N) {
    u64 len = u64(d);
    for (int i = 0; i < N; ++i) {
        if (len > kMaxSumTerms / u64(p))
            throw DomainError("summation length exceeds the supported budget");
        len *= u64(p);
    }
    return len;
}

void check_extension_degree(i64 d, i64 p) {
    if (d < 1 || d % 2 == 0) throw DomainError("d must be an odd positive integer");
    if (std::gcd(d, p) != 1) throw DomainError("d must be coprime to p");
}

}  // namespace

PadicNumber fermionic_sum(const UDFunction& f, int N) {
    return fermionic_sum_X(f, 1, N);
}

PadicNumber fermionic_sum_X(const UDFunction& f, i64 d, int N) {
    check_extension_degree(d, f.prime());
    if (N < 1) throw DomainError("N must be >= 1");
    u64 len = checked_length(f.prime(), d, N);
    AlternatingSummer s(f, std::nullopt);
    s.extend(0, len);
    return s.total();
}

PadicNumber fermionic_q_sum(const UDFunction& f, const PadicNumber& q, int N) {
    if (N < 1) throw DomainError("N must be >= 1");
    if (q.prime() != f.prime()) throw DomainError("q must share the term's prime");
    PadicNumber qm1 = q.sub(PadicNumber::one(q.prime(), q.prec()));
    if (!qm1.is_zero() && qm1.valuation() < 1)
        throw DomainError("q outside the region |q-1|_p < 1");
    u64 len = checked_length(f.prime(), 1, N);

    AlternatingSummer s(f, q);
    s.extend(0, len);
    PadicNumber w = s.total();

    // [p^N]_{-q} = (1 + q^{p^N}) / (1 + q); both factors are units near 2
    PadicNumber one = PadicNumber::one(q.prime(), q.prec());
    PadicNumber bracket = one.add(q.pow_int(len)).mul(one.add(q).inv());
    return w.mul(bracket.inv());
}

namespace {

IntegralResult integral_driver(const UDFunction& f, i64 d, const PrecisionPolicy& policy) {
    policy.validate();
    check_extension_degree(d, f.prime());
    int achieved = std::min(policy.working_prec, f.prec());
    int N = std::max(1, policy.working_prec + policy.guard_digits);

    AlternatingSummer s(f, std::nullopt);
    u64 len = checked_length(f.prime(), d, N);
    s.extend(0, len);
    PadicNumber prev = s.total();

    for (int step = 0; step <= kMaxStabilitySteps; ++step) {
        u64 next_len = checked_length(f.prime(), d, N + 1);
        s.extend(len, next_len);
        PadicNumber next = s.total();
        if (prev.equal_mod(next, achieved))
            return {prev.reduce_prec(achieved), {N, achieved, true}};
        prev = next;
        len = next_len;
        ++N;
    }
    throw ConvergenceError(
        "truncated sums failed to stabilize at the working precision; the term is outside "
        "the supported class or the precision budget is too small");
}

}  // namespace

IntegralResult fermionic_integral(const UDFunction& f, const PrecisionPolicy& policy) {
    return integral_driver(f, 1, policy);
}

IntegralResult fermionic_integral_X(const UDFunction& f, i64 d, const PrecisionPolicy& policy) {
    return integral_driver(f, d, policy);
}

PadicNumber q_bracket(u64 x, const PadicNumber& q) {
    // bit-by-bit: [2v]_q = [v]_q (1 + q^v), [2v+1]_q = [2v]_q + q^{2v}
    PadicNumber one = PadicNumber::one(q.prime(), q.prec());
    PadicNumber s = PadicNumber::zero(q.prime(), q.prec());
    PadicNumber qp = one;  // q^v for the prefix v
    if (x == 0) return s;
    int bits = 63;
    while (bits > 0 && !((x >> bits) & 1)) --bits;
    for (int b = bits; b >= 0; --b) {
        s = s.mul(one.add(qp));
        qp = qp.mul(qp);
        if ((x >> b) & 1) {
            s = s.add(qp);
            qp = qp.mul(q);
        }
    }
    return s;
}

}  // namespace peuler
